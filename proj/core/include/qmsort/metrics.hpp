#ifndef QMSORT_METRICS_HPP
#define QMSORT_METRICS_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

namespace qmsort {

/// Per-invocation instrumentation counters. A sort owns exactly one Metrics
/// object; nothing in the library touches global state, so concurrent sorts
/// on distinct sequences never contend.
struct Metrics {
    std::uint64_t comparisons = 0;
    std::uint64_t moves = 0;       // one per element assignment; a swap is 3
    std::uint64_t max_depth = 0;   // peak auxiliary stack frames/words
    std::uint64_t elapsed_ns = 0;

    // live frame counter backing max_depth; not part of the reported record
    std::uint64_t depth = 0;

    void reset() { *this = Metrics{}; }
};

/// Value snapshot of the counters (reset/snapshot pair for phase accounting).
inline Metrics snapshot(const Metrics& m) { return m; }

/// Thrown when an armed comparator sees a comparison touching a marked
/// dummy element. Displaced elements must be moved, never compared.
class SentinelViolation : public std::logic_error {
  public:
    SentinelViolation() : std::logic_error("comparison touched a marked dummy element") {}
};

/// RAII depth accounting: one frame (or a given number of words) per scope.
class FrameGuard {
  public:
    explicit FrameGuard(Metrics& m, std::uint64_t words = 1) : m_(&m), words_(words) {
        m_->depth += words_;
        if (m_->depth > m_->max_depth) m_->max_depth = m_->depth;
    }
    ~FrameGuard() { m_->depth -= words_; }
    FrameGuard(const FrameGuard&) = delete;
    FrameGuard& operator=(const FrameGuard&) = delete;

  private:
    Metrics* m_;
    std::uint64_t words_;
};

template <class It>
inline void iter_swap_counted(It a, It b, Metrics& m) {
    using std::swap;
    swap(*a, *b);
    m.moves += 3;
}

struct NoSentinel {
    template <class T>
    constexpr bool operator()(const T&) const noexcept { return false; }
};

/// Comparator adaptor: every call increments the counter by exactly one.
/// When armed with a sentinel predicate, a comparison involving a marked
/// element raises SentinelViolation instead of returning an ordering.
template <class Less = std::less<>, class Sentinel = NoSentinel>
class CountingComparator {
  public:
    explicit CountingComparator(Metrics& m, Less less = Less{}, Sentinel sentinel = Sentinel{})
        : m_(&m), less_(std::move(less)), sentinel_(std::move(sentinel)) {}

    template <class T, class U>
    bool operator()(const T& a, const U& b) {
        ++m_->comparisons;
        if (sentinel_(a) || sentinel_(b)) throw SentinelViolation{};
        return less_(a, b);
    }

    Metrics& metrics() { return *m_; }
    const Metrics& metrics() const { return *m_; }

  private:
    Metrics* m_;
    Less less_;
    Sentinel sentinel_;
};

} // namespace qmsort

#endif // QMSORT_METRICS_HPP
