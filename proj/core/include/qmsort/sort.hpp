#ifndef QMSORT_SORT_HPP
#define QMSORT_SORT_HPP

#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>

#include "qmsort/merge.hpp"
#include "qmsort/metrics.hpp"
#include "qmsort/partition.hpp"
#include "qmsort/selection.hpp"

namespace qmsort {

enum class Variant { qms, qmqs, momqms, hqms };

enum class PivotStrategy { median_of_3, median_of_sqrt_n, mom_of_thirds, hybrid };

enum class MergesortSide { smaller_always, larger_when_feasible };

enum class Side { left, right };

struct SortConfig {
    Variant variant = Variant::qms;
    PivotStrategy pivot = PivotStrategy::median_of_3;
    BaseCasePolicy base_case{};
    double beta = 0.5;         // block-size exponent for the level rule
    double delta = 1.0 / 16.0; // central-band half-width for the hybrid rule
    MergesortSide side = MergesortSide::larger_when_feasible;
    bool three_way = false;
    std::size_t block = kDefaultBlock;
};

/// Median-of-3 pivots, merge recursion down to hard-coded blocks below 10.
inline SortConfig qms() { return SortConfig{}; }

/// Median-of-3 pivots; the merge recursion switches to the quicksort
/// finisher after enough levels that its blocks hold about n^beta elements.
inline SortConfig qmqs() {
    SortConfig c;
    c.variant = Variant::qmqs;
    c.base_case.kind = BaseCase::clever_quicksort;
    c.base_case.size_threshold = 16;
    c.base_case.use_levels = true;
    return c;
}

/// Worst-case variant: every pivot is the median of the floor(n/3) triple
/// medians, so both sides hold at least 2*floor(n/6) - 2 elements.
inline SortConfig momqms() {
    SortConfig c;
    c.variant = Variant::momqms;
    c.pivot = PivotStrategy::mom_of_thirds;
    return c;
}

/// Median-of-3 pivots with a single median-guided step after every pivot
/// whose rank fell outside [delta*n, (1-delta)*n].
inline SortConfig hqms() {
    SortConfig c;
    c.variant = Variant::hqms;
    c.pivot = PivotStrategy::hybrid;
    return c;
}

/// Step-level inspection hooks (tests, the verifier). Offsets are element
/// indices relative to the start of the full range being sorted.
struct SortObserver {
    virtual ~SortObserver() = default;
    virtual void on_partition(std::size_t range_offset, std::size_t range_size,
                              const PartitionResult& pr, bool mom_pivot) {
        (void)range_offset;
        (void)range_size;
        (void)pr;
        (void)mom_pivot;
    }
    virtual void on_merge_begin(std::size_t temp_offset, std::size_t temp_size) {
        (void)temp_offset;
        (void)temp_size;
    }
    virtual void on_merge_end(std::size_t lo_offset, std::size_t hi_offset) {
        (void)lo_offset;
        (void)hi_offset;
    }
};

/// Merge levels consumed before the level rule hands blocks to X; the blocks
/// come out within a factor of two of n^beta.
inline int base_case_levels(std::size_t n, double beta) {
    if (n <= 1) return 0;
    const double raw = (1.0 - beta) * std::log2(static_cast<double>(n));
    int levels = static_cast<int>(std::ceil(raw - 1e-12));
    return levels < 0 ? 0 : levels;
}

/// Side handed to the merge sorter. Under larger_when_feasible the larger
/// side is chosen whenever the other one provides the ceil(size/2) scratch
/// slots; the smaller side is always feasible.
inline Side choose_mergesort_side(std::size_t left_size, std::size_t right_size,
                                  MergesortSide policy) {
    const bool left_smaller = left_size <= right_size;
    const Side smaller = left_smaller ? Side::left : Side::right;
    if (policy == MergesortSide::smaller_always) return smaller;
    const std::size_t larger_n = left_smaller ? right_size : left_size;
    const std::size_t temp_n = left_smaller ? left_size : right_size;
    if (temp_n >= larger_n - larger_n / 2) return left_smaller ? Side::right : Side::left;
    return smaller;
}

/// Hybrid pivot rule: exactly one worst-case step after a pivot whose rank
/// (split position) fell outside the central band.
inline bool pivot_outside_band(std::size_t rank, std::size_t n, double delta) {
    const double r = static_cast<double>(rank);
    const double dn = delta * static_cast<double>(n);
    return r < dn || r > static_cast<double>(n) - dn;
}

namespace detail {

inline std::size_t driver_cutoff(const SortConfig& cfg) {
    if (cfg.base_case.kind == BaseCase::clever_quicksort)
        return static_cast<std::size_t>(kCleverCutoff);
    return cfg.base_case.size_threshold < 4 ? 4 : cfg.base_case.size_threshold;
}

template <class It, class Cmp>
void quickmergesort_impl(It first, It last, const SortConfig& cfg, Cmp& cmp, Metrics& m,
                         SortObserver* obs) {
    const It base = first;
    It begin = first, end = last;
    FrameGuard frame(m);
    const std::size_t cutoff = driver_cutoff(cfg);
    bool mom_next = false;
    for (;;) {
        const std::size_t n = static_cast<std::size_t>(end - begin);
        if (n <= 1) return;
        if (n < cutoff) {
            detail::base_case_sort(begin, end, cfg.base_case, cmp, m);
            return;
        }

        PartitionResult pr;
        bool used_mom = false;
        PivotStrategy step = cfg.pivot;
        if (step == PivotStrategy::hybrid)
            step = mom_next ? PivotStrategy::mom_of_thirds : PivotStrategy::median_of_3;
        switch (step) {
            case PivotStrategy::median_of_3: {
                const std::size_t piv = median_of_3_index(begin, 0, n / 2, n - 1, cmp);
                pr = block_partition(begin, end, piv, cfg.block, cmp, m);
                break;
            }
            case PivotStrategy::median_of_sqrt_n: {
                const std::size_t piv = median_of_sqrt_pivot(begin, end, cmp, m);
                pr = block_partition(begin, end, piv, cfg.block, cmp, m);
                break;
            }
            case PivotStrategy::mom_of_thirds: {
                used_mom = true;
                const std::size_t piv = triple_median_pivot(begin, end, cmp, m);
                pr = cfg.three_way ? three_way_partition(begin, end, piv, cmp, m)
                                   : partition_after_triple_pivot(begin, end, piv, cmp, m);
                break;
            }
            case PivotStrategy::hybrid:
                return; // unreachable; resolved above
        }
        if (obs) obs->on_partition(static_cast<std::size_t>(begin - base), n, pr, used_mom);
        if (cfg.pivot == PivotStrategy::hybrid)
            mom_next = pivot_outside_band(pr.lt_end, n, cfg.delta);

        const std::size_t left_n = pr.lt_end;
        const std::size_t right_n = n - pr.gt_begin;
        const Side ms = choose_mergesort_side(left_n, right_n, cfg.side);
        if (ms == Side::left) {
            const std::size_t need = left_n - left_n / 2;
            const int lvl = cfg.base_case.use_levels ? base_case_levels(left_n, cfg.beta) : -1;
            if (obs)
                obs->on_merge_begin(static_cast<std::size_t>(begin - base) + pr.gt_begin, need);
            mergesort_with_temp(begin, begin + static_cast<std::ptrdiff_t>(left_n),
                                begin + static_cast<std::ptrdiff_t>(pr.gt_begin), cfg.base_case,
                                lvl, cmp, m);
            if (obs)
                obs->on_merge_end(static_cast<std::size_t>(begin - base),
                                  static_cast<std::size_t>(begin - base) + pr.gt_begin + need);
            begin += static_cast<std::ptrdiff_t>(pr.gt_begin);
        } else {
            const std::size_t need = right_n - right_n / 2;
            const int lvl = cfg.base_case.use_levels ? base_case_levels(right_n, cfg.beta) : -1;
            if (obs) obs->on_merge_begin(static_cast<std::size_t>(begin - base), need);
            mergesort_with_temp(begin + static_cast<std::ptrdiff_t>(pr.gt_begin), end, begin,
                                cfg.base_case, lvl, cmp, m);
            if (obs)
                obs->on_merge_end(static_cast<std::size_t>(begin - base),
                                  static_cast<std::size_t>(end - base));
            end = begin + static_cast<std::ptrdiff_t>(pr.lt_end);
        }
    }
}

} // namespace detail

/// Sort through a caller-supplied counting comparator (tests arm sentinel
/// checking this way); counters accumulate into m.
template <class It, class Cmp>
void sort_range_counted(It first, It last, const SortConfig& cfg, Cmp& cmp, Metrics& m,
                        SortObserver* obs = nullptr) {
    detail::quickmergesort_impl(first, last, cfg, cmp, m, obs);
}

/// Sorts [first, last) ascending with O(log n) auxiliary space and returns
/// the instrumentation record for the run.
template <class It, class Less = std::less<>>
Metrics sort(It first, It last, const SortConfig& cfg = SortConfig{}, Less less = Less{},
             SortObserver* obs = nullptr) {
    Metrics m;
    CountingComparator<Less> cmp(m, std::move(less));
    const auto t0 = std::chrono::steady_clock::now();
    detail::quickmergesort_impl(first, last, cfg, cmp, m, obs);
    const auto t1 = std::chrono::steady_clock::now();
    m.elapsed_ns =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return m;
}

} // namespace qmsort

#endif // QMSORT_SORT_HPP
