#ifndef QMSORT_MERGE_HPP
#define QMSORT_MERGE_HPP

#include <cassert>
#include <cstddef>
#include <utility>

#include "qmsort/clever.hpp"
#include "qmsort/metrics.hpp"
#include "qmsort/small_sort.hpp"

namespace qmsort {

enum class BaseCase { insertion, hardcoded_small, clever_quicksort };

/// Test hook reporting the size of every block handed to the finishing
/// sorter X.
struct BaseCaseProbe {
    virtual ~BaseCaseProbe() = default;
    virtual void on_base_case(std::size_t n) = 0;
};

/// When the merge recursion hands a block to X: below a size threshold, or,
/// with the level rule, once a fixed number of recursion levels has been
/// consumed, which makes all X blocks nearly the same size.
struct BaseCasePolicy {
    BaseCase kind = BaseCase::hardcoded_small;
    std::size_t size_threshold = 10;
    bool use_levels = false;
    BaseCaseProbe* probe = nullptr;
};

namespace detail {

template <class It, class Cmp>
void base_case_sort(It first, It last, const BaseCasePolicy& pol, Cmp& cmp, Metrics& m) {
    switch (pol.kind) {
        case BaseCase::insertion:
            insertion_sort(first, last, cmp, m);
            break;
        case BaseCase::hardcoded_small:
            small_sort(first, last, cmp, m);
            break;
        case BaseCase::clever_quicksort:
            clever_quicksort(first, last, cmp, m);
            break;
    }
    if (pol.probe) pol.probe->on_base_case(static_cast<std::size_t>(last - first));
}

inline bool base_case_reached(const BaseCasePolicy& pol, std::size_t n, int level) {
    if (n <= 1) return true;
    if (pol.use_levels) return level <= 0;
    return n < pol.size_threshold;
}

} // namespace detail

/// Merges sorted run1 = [begin1, end1) with a sorted run2 occupying the
/// trailing |out| - |run1| slots of out = [target, endtarget). The merged
/// sequence fills out; the elements displaced from out's leading slots end
/// up in run1's region in unspecified order, moved but never compared.
/// At most |out| - 1 comparisons and two element moves per emitted element.
template <class It, class Cmp>
void swap_merge(It begin1, It end1, It target, It endtarget, Cmp& cmp, Metrics& m) {
    const auto n1 = end1 - begin1;
    assert(n1 >= 0 && n1 <= endtarget - target);
    assert(end1 <= target || endtarget <= begin1);
    if (n1 == 0) return; // run2 already fills out
    It i1 = begin1;
    It i2 = target + n1;
    It ires = target;
    auto first_displaced = std::move(*target);
    ++m.moves;
    while (i1 != end1 && i2 != endtarget) {
        It src = cmp(*i2, *i1) ? i2++ : i1++;
        *ires = std::move(*src);
        ++ires;
        // Park the value under the advancing output head in the vacated
        // slot. The chronologically last park copies a value that is still
        // live; the patch below overwrites it with the saved first dummy.
        *src = std::move(*ires);
        m.moves += 2;
    }
    while (i1 != end1) {
        *ires = std::move(*i1);
        ++ires;
        ++m.moves;
        if (ires != endtarget) {
            *i1 = std::move(*ires);
            ++m.moves;
        }
        ++i1;
    }
    *(end1 - 1) = std::move(first_displaced);
    ++m.moves;
}

/// Sorts [begin, end) while relocating the result to the same-size window at
/// target; the source slots end up holding the former target contents in
/// unspecified order. target must not overlap the source (adjacency is
/// fine). A base-case block is sorted in place by X and swapped over.
template <class It, class Cmp>
void mergesort_into(It begin, It end, It target, const BaseCasePolicy& pol, int level, Cmp& cmp,
                    Metrics& m) {
    const auto n = end - begin;
    assert(end <= target || target + n <= begin);
    if (n == 0) return;
    FrameGuard frame(m);
    if (detail::base_case_reached(pol, static_cast<std::size_t>(n), level)) {
        detail::base_case_sort(begin, end, pol, cmp, m);
        for (std::ptrdiff_t i = 0; i < n; ++i) iter_swap_counted(begin + i, target + i, m);
        return;
    }
    const auto q = n / 2;
    mergesort_into(begin + q, end, target + q, pol, level - 1, cmp, m);
    mergesort_into(begin, begin + q, begin + q, pol, level - 1, cmp, m);
    swap_merge(begin + q, begin + 2 * q, target, target + n, cmp, m);
}

/// Sorts [begin, end) in place using at least ceil(n/2) scratch slots at
/// temp; the scratch contents are permuted but the multiset over range plus
/// scratch is preserved.
template <class It, class Cmp>
void mergesort_with_temp(It begin, It end, It temp, const BaseCasePolicy& pol, int level, Cmp& cmp,
                         Metrics& m) {
    const auto n = end - begin;
    if (n < 2) return;
    FrameGuard frame(m);
    const auto q = n / 2, r = n - q;
    assert(temp + r <= begin || end <= temp);
    mergesort_into(begin + q, end, temp, pol, level - 1, cmp, m);
    mergesort_into(begin, begin + q, begin + r, pol, level - 1, cmp, m);
    swap_merge(temp, temp + r, begin, end, cmp, m);
}

} // namespace qmsort

#endif // QMSORT_MERGE_HPP
