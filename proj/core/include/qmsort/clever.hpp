#ifndef QMSORT_CLEVER_HPP
#define QMSORT_CLEVER_HPP

#include <array>
#include <cassert>
#include <cstddef>

#include "qmsort/metrics.hpp"
#include "qmsort/partition.hpp"
#include "qmsort/small_sort.hpp"

namespace qmsort {

inline constexpr std::ptrdiff_t kCleverCutoff = 16;

/// Median-of-3 quicksort on an explicit interval stack. Recursion stops
/// below 16 elements; the skipped blocks are finished by a single insertion
/// pass over the whole range. The larger side of every split is stacked
/// while the smaller is processed, which keeps the stack within log2(n)
/// entries.
template <class It, class Cmp>
void clever_quicksort(It first, It last, Cmp& cmp, Metrics& m) {
    if (last - first >= kCleverCutoff) {
        struct Interval {
            It b, e;
        };
        std::array<Interval, 96> stack;
        std::size_t top = 0;
        It b = first, e = last;
        for (;;) {
            while (e - b >= kCleverCutoff) {
                const PartitionResult pr = lomuto_mo3_partition(b, e, cmp, m);
                It p = b + static_cast<std::ptrdiff_t>(pr.lt_end);
                assert(top < stack.size());
                if (pr.left_size >= pr.right_size) {
                    stack[top++] = {b, p};
                    b = p + 1;
                } else {
                    stack[top++] = {p + 1, e};
                    e = p;
                }
                ++m.depth;
                if (m.depth > m.max_depth) m.max_depth = m.depth;
            }
            if (top == 0) break;
            --top;
            --m.depth;
            b = stack[top].b;
            e = stack[top].e;
        }
    }
    insertion_sort(first, last, cmp, m);
}

} // namespace qmsort

#endif // QMSORT_CLEVER_HPP
