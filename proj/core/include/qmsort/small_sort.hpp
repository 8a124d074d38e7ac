#ifndef QMSORT_SMALL_SORT_HPP
#define QMSORT_SMALL_SORT_HPP

#include <iterator>
#include <utility>

#include "qmsort/metrics.hpp"

namespace qmsort {

/// Stable linear insertion sort; at most n(n-1)/2 comparisons, exactly n-1
/// on presorted input.
template <class It, class Cmp>
void insertion_sort(It first, It last, Cmp& cmp, Metrics& m) {
    if (first == last) return;
    for (It i = first + 1; i != last; ++i) {
        if (!cmp(*i, *(i - 1))) continue;
        auto val = std::move(*i);
        ++m.moves;
        It j = i;
        do {
            *j = std::move(*(j - 1));
            ++m.moves;
            --j;
        } while (j != first && cmp(val, *(j - 1)));
        *j = std::move(val);
        ++m.moves;
    }
}

/// Stable insertion sort locating the slot by binary search. Keeps the
/// comparison count near the information bound for small blocks.
template <class It, class Cmp>
void binary_insertion_sort(It first, It last, Cmp& cmp, Metrics& m) {
    const std::ptrdiff_t n = last - first;
    for (std::ptrdiff_t i = 1; i < n; ++i) {
        std::ptrdiff_t lo = 0, hi = i;
        while (lo < hi) {
            const std::ptrdiff_t mid = lo + (hi - lo) / 2;
            if (cmp(first[i], first[mid]))
                hi = mid;
            else
                lo = mid + 1;
        }
        if (lo == i) continue;
        auto val = std::move(first[i]);
        ++m.moves;
        for (std::ptrdiff_t j = i; j > lo; --j) {
            first[j] = std::move(first[j - 1]);
            ++m.moves;
        }
        first[lo] = std::move(val);
        ++m.moves;
    }
}

namespace detail {

template <class It, class Cmp>
inline void sort2(It a, It b, Cmp& cmp, Metrics& m) {
    if (cmp(*b, *a)) iter_swap_counted(a, b, m);
}

template <class It, class Cmp>
inline void sort3(It a, It b, It c, Cmp& cmp, Metrics& m) {
    sort2(a, b, cmp, m);
    if (cmp(*c, *b)) {
        iter_swap_counted(b, c, m);
        if (cmp(*b, *a)) iter_swap_counted(a, b, m);
    }
}

template <class It, class Cmp>
inline void sort4(It a, It b, It c, It d, Cmp& cmp, Metrics& m) {
    sort2(a, b, cmp, m);
    sort2(c, d, cmp, m);
    if (cmp(*c, *a)) {
        iter_swap_counted(a, c, m);
        iter_swap_counted(b, d, m);
    }
    // *a is the minimum; merge *b into *c <= *d
    if (cmp(*c, *b)) {
        iter_swap_counted(b, c, m);
        if (cmp(*d, *c)) iter_swap_counted(c, d, m);
    }
}

} // namespace detail

/// Straight-line sorter for tiny blocks: dedicated code for 2..4 elements,
/// binary insertion above that.
template <class It, class Cmp>
void small_sort(It first, It last, Cmp& cmp, Metrics& m) {
    switch (last - first) {
        case 0:
        case 1:
            return;
        case 2:
            detail::sort2(first, first + 1, cmp, m);
            return;
        case 3:
            detail::sort3(first, first + 1, first + 2, cmp, m);
            return;
        case 4:
            detail::sort4(first, first + 1, first + 2, first + 3, cmp, m);
            return;
        default:
            binary_insertion_sort(first, last, cmp, m);
            return;
    }
}

} // namespace qmsort

#endif // QMSORT_SMALL_SORT_HPP
