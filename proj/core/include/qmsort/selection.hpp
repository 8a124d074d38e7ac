#ifndef QMSORT_SELECTION_HPP
#define QMSORT_SELECTION_HPP

#include <cassert>
#include <cstddef>
#include <utility>

#include "qmsort/metrics.hpp"
#include "qmsort/partition_result.hpp"

namespace qmsort {

/// Optional trace for selection runs: records subproblem sizes so tests can
/// check the geometric-shrink guarantee (child <= 0.7 * parent + 5).
struct SelectAudit {
    std::size_t subproblems = 0;
    std::size_t violations = 0;
    double worst_ratio = 0.0;

    void note(std::size_t parent, std::size_t child) {
        ++subproblems;
        if (10 * child > 7 * parent + 50) ++violations;
        if (parent != 0) {
            const double r = static_cast<double>(child) / static_cast<double>(parent);
            if (r > worst_ratio) worst_ratio = r;
        }
    }
};

/// Plain indexable window over consecutive elements.
template <class It>
struct RangeView {
    It first;
    std::size_t count;

    std::size_t size() const { return count; }
    decltype(auto) operator[](std::size_t i) const { return first[static_cast<std::ptrdiff_t>(i)]; }
    void swap_elems(std::size_t i, std::size_t j, Metrics& m) const {
        if (i != j) iter_swap_counted(first + static_cast<std::ptrdiff_t>(i), first + static_cast<std::ptrdiff_t>(j), m);
    }
};

/// View of the median slots of consecutive ordered triples: logical element i
/// lives at physical position 3i + 1. Swapping logical elements exchanges the
/// whole triples, so triple association survives selection.
template <class It>
struct TripleMedianView {
    It first;
    std::size_t triples;

    std::size_t size() const { return triples; }
    decltype(auto) operator[](std::size_t i) const { return first[static_cast<std::ptrdiff_t>(3 * i + 1)]; }
    void swap_elems(std::size_t i, std::size_t j, Metrics& m) const {
        if (i == j) return;
        It a = first + static_cast<std::ptrdiff_t>(3 * i);
        It b = first + static_cast<std::ptrdiff_t>(3 * j);
        iter_swap_counted(a, b, m);
        iter_swap_counted(a + 1, b + 1, m);
        iter_swap_counted(a + 2, b + 2, m);
    }
};

/// Index of the 3rd order statistic of five view positions; six comparisons
/// worst case, no element moves.
template <class View, class Cmp>
std::size_t median_of_5(const View& v, std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                        std::size_t e, Cmp& cmp) {
    using std::swap;
    if (cmp(v[b], v[a])) swap(a, b);
    if (cmp(v[d], v[c])) swap(c, d);
    if (cmp(v[c], v[a])) {
        swap(a, c);
        swap(b, d);
    }
    // v[a] <= v[b], v[c] <= v[d], v[a] <= v[c]: a is one of the two smallest,
    // so the median is the 2nd smallest of {b, c, d, e}.
    if (cmp(v[e], v[b])) swap(b, e);
    if (cmp(v[c], v[b])) return cmp(v[d], v[b]) ? d : b;
    return cmp(v[e], v[c]) ? e : c;
}

template <class It, class Cmp>
std::size_t median_of_5_index(It first, std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                              std::size_t e, Cmp& cmp) {
    RangeView<It> v{first, 0};
    return median_of_5(v, a, b, c, d, e, cmp);
}

/// Arranges each of `triples` consecutive triples as (min, median, max);
/// at most three comparisons per triple.
template <class It, class Cmp>
void sort_triples(It first, std::size_t triples, Cmp& cmp, Metrics& m) {
    for (std::size_t i = 0; i < triples; ++i) {
        It a = first + static_cast<std::ptrdiff_t>(3 * i);
        if (cmp(*(a + 1), *a)) iter_swap_counted(a, a + 1, m);
        if (cmp(*(a + 2), *(a + 1))) {
            iter_swap_counted(a + 1, a + 2, m);
            if (cmp(*(a + 1), *a)) iter_swap_counted(a, a + 1, m);
        }
    }
}

namespace detail {

// Insertion sort through view swaps; used for selection windows of at most
// kSelectCutoff elements.
template <class View, class Cmp>
void view_insertion_sort(const View& v, std::size_t lo, std::size_t hi, Cmp& cmp, Metrics& m) {
    for (std::size_t i = lo + 1; i < hi; ++i)
        for (std::size_t j = i; j > lo && cmp(v[j], v[j - 1]); --j) v.swap_elems(j - 1, j, m);
}

inline constexpr std::size_t kSelectCutoff = 20;

inline std::size_t ceil_div3(std::size_t x) { return (x + 2) / 3; }

inline std::size_t clamp_rank(std::size_t p, std::size_t groups) {
    if (p < 1) return 1;
    if (p > groups) return groups;
    return p;
}

} // namespace detail

/// Deterministic selection of the k-th smallest (k is 1-based) within the
/// logical window [lo, hi) of a view. The window ends up partitioned around
/// the returned position: everything left of it is <=, everything right >=.
/// Pivots are medians of medians of groups of five, with the pivot rank
/// adapted towards k when k is far from the middle; every subproblem shrinks
/// to at most 0.7n + 5 and the comparison budget stays within 22n.
template <class View, class Cmp>
std::size_t select_kth(const View& v, std::size_t lo, std::size_t hi, std::size_t k, Cmp& cmp,
                       Metrics& m, SelectAudit* audit = nullptr) {
    assert(lo < hi && k >= 1 && k <= hi - lo);
    FrameGuard frame(m);
    for (;;) {
        const std::size_t n = hi - lo;
        if (n <= detail::kSelectCutoff) {
            detail::view_insertion_sort(v, lo, hi, cmp, m);
            return lo + k - 1;
        }

        // Gather group-of-five medians to the window front. Targets lo + g
        // stay strictly left of group g's slots, so unprocessed groups are
        // never disturbed. The <= 4 leftover elements carry no median and
        // simply take part in the partition.
        const std::size_t groups = n / 5;
        for (std::size_t g = 0; g < groups; ++g) {
            const std::size_t base = lo + 5 * g;
            const std::size_t mi =
                median_of_5(v, base, base + 1, base + 2, base + 3, base + 4, cmp);
            v.swap_elems(lo + g, mi, m);
        }

        // Pivot rank among the medians, adapted when k is extreme. In the
        // high band the rank sits one median lower than the mirror image of
        // the low band: that forces at least n - k + 3 elements >= pivot, so
        // the search can never fall into the near-full left block.
        std::size_t p;
        if (10 * k <= 3 * n) {
            p = detail::clamp_rank(detail::ceil_div3(k), groups);
        } else if (10 * k >= 7 * n) {
            const std::size_t down = std::max<std::size_t>(detail::ceil_div3(n - k), 1);
            p = groups > down ? groups - down : 1;
        } else {
            p = (groups + 1) / 2;
        }

        const std::size_t pm = select_kth(v, lo, lo + groups, p, cmp, m, audit);
        if (audit) audit->note(n, groups);

        // Three-way partition around the pivot value. Equal elements collect
        // in the middle so duplicate-heavy windows cannot stall the shrink.
        auto pv = v[pm];
        ++m.moves;
        std::size_t lt = lo, i = lo, gt = hi;
        while (i < gt) {
            if (cmp(v[i], pv)) {
                v.swap_elems(lt, i, m);
                ++lt;
                ++i;
            } else if (cmp(pv, v[i])) {
                --gt;
                v.swap_elems(i, gt, m);
            } else {
                ++i;
            }
        }

        const std::size_t less = lt - lo;
        const std::size_t less_eq = gt - lo;
        if (k <= less) {
            hi = lt;
            if (audit) audit->note(n, less);
        } else if (k <= less_eq) {
            return lo + k - 1;
        } else {
            k -= less_eq;
            lo = gt;
            if (audit) audit->note(n, n - less_eq);
        }
    }
}

/// Rank selection over a plain range; returns the iterator offset of the
/// k-th smallest element (k is 1-based).
template <class It, class Cmp>
std::size_t select_nth(It first, It last, std::size_t k, Cmp& cmp, Metrics& m,
                       SelectAudit* audit = nullptr) {
    RangeView<It> v{first, static_cast<std::size_t>(last - first)};
    return select_kth(v, 0, v.count, k, cmp, m, audit);
}

/// Pivot for the worst-case sort step: orders floor(n/3) leading triples,
/// then locates the lower median of the triple medians via select_kth on the
/// strided view. Returns the physical pivot position (the median slot of its
/// triple). Afterwards triples left of the pivot's have medians <= pivot and
/// triples right of it have medians >= pivot.
template <class It, class Cmp>
std::size_t triple_median_pivot(It first, It last, Cmp& cmp, Metrics& m,
                                SelectAudit* audit = nullptr) {
    const std::size_t n = static_cast<std::size_t>(last - first);
    assert(n >= 3);
    const std::size_t t = n / 3;
    sort_triples(first, t, cmp, m);
    TripleMedianView<It> view{first, t};
    const std::size_t pm = select_kth(view, 0, t, (t + 1) / 2, cmp, m, audit);
    return 3 * pm + 1;
}

/// Two-way partition exploiting the triple structure left by
/// triple_median_pivot: the side of two elements per triple is already known,
/// so only one extreme per triple (plus the <= 2 trailing leftovers) is
/// compared against the pivot. Costs at most t + 1 comparisons for t triples.
template <class It, class Cmp>
PartitionResult partition_after_triple_pivot(It first, It last, std::size_t pivot_slot, Cmp& cmp,
                                             Metrics& m) {
    const std::size_t n = static_cast<std::size_t>(last - first);
    const std::size_t t = n / 3;
    const std::size_t pm = (pivot_slot - 1) / 3;
    assert(pivot_slot % 3 == 1 && pm < t);

    // Classify triples by their undetermined extreme and compact the fully
    // resolved ones, so afterwards the side of every slot follows from its
    // position alone.
    std::size_t a = 0; // triples entirely <= pivot, compacted to the front
    {
        const auto& pv = first[static_cast<std::ptrdiff_t>(pivot_slot)];
        for (std::size_t i = 0; i < pm; ++i) {
            if (!cmp(pv, first[static_cast<std::ptrdiff_t>(3 * i + 2)])) {
                TripleMedianView<It>{first, t}.swap_elems(a, i, m);
                ++a;
            }
        }
    }
    std::size_t c = 0; // triples right of pm whose min still belongs left
    {
        const auto& pv = first[static_cast<std::ptrdiff_t>(pivot_slot)];
        for (std::size_t j = pm + 1; j < t; ++j) {
            if (!cmp(pv, first[static_cast<std::ptrdiff_t>(3 * j)])) {
                TripleMedianView<It>{first, t}.swap_elems(pm + 1 + c, j, m);
                ++c;
            }
        }
    }

    const std::size_t b = pm - a;
    const std::size_t left_count = 3 * a + 2 * b + 1 + c;

    enum : int { L = 0, R = 1 };
    auto slot_class = [&](std::size_t s) -> int {
        const std::size_t tr = s / 3, r = s % 3;
        if (tr < a) return L;
        if (tr < pm) return r <= 1 ? L : R;
        if (tr == pm) return r == 0 ? L : R;
        if (tr < pm + 1 + c) return r == 0 ? L : R;
        return R;
    };

    // Move the pivot to its final slot, remembering the class of the element
    // it displaced; then fix misplaced elements pairwise without comparisons.
    std::size_t exc_slot = static_cast<std::size_t>(-1);
    int exc_class = L;
    if (pivot_slot != left_count) {
        exc_slot = pivot_slot;
        exc_class = slot_class(left_count);
        iter_swap_counted(first + static_cast<std::ptrdiff_t>(pivot_slot),
                          first + static_cast<std::ptrdiff_t>(left_count), m);
    }
    auto classify = [&](std::size_t s) { return s == exc_slot ? exc_class : slot_class(s); };

    if (t > 0) {
        std::size_t loI = 0, hiI = 3 * t - 1;
        for (;;) {
            while (loI < left_count && classify(loI) == L) ++loI;
            while (hiI > left_count && classify(hiI) == R) --hiI;
            if (loI >= left_count || hiI <= left_count) break;
            iter_swap_counted(first + static_cast<std::ptrdiff_t>(loI),
                              first + static_cast<std::ptrdiff_t>(hiI), m);
            ++loI;
            --hiI;
        }
    }

    // Trailing elements outside the triple structure: one comparison each,
    // rotated into the left side when they belong there.
    std::size_t pivot_idx = left_count;
    for (std::size_t s = 3 * t; s < n; ++s) {
        It ps = first + static_cast<std::ptrdiff_t>(pivot_idx);
        It es = first + static_cast<std::ptrdiff_t>(s);
        if (!cmp(*ps, *es)) {
            if (pivot_idx + 1 == s) {
                iter_swap_counted(ps, es, m);
            } else {
                auto tmp = std::move(*es);
                *es = std::move(*(ps + 1));
                *(ps + 1) = std::move(*ps);
                *ps = std::move(tmp);
                m.moves += 4;
            }
            ++pivot_idx;
        }
    }

    PartitionResult pr;
    pr.lt_end = pivot_idx;
    pr.gt_begin = pivot_idx + 1;
    pr.left_size = pivot_idx;
    pr.right_size = n - pivot_idx - 1;
    return pr;
}

} // namespace qmsort

#endif // QMSORT_SELECTION_HPP
