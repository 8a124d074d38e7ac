#ifndef QMSORT_PARTITION_HPP
#define QMSORT_PARTITION_HPP

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "qmsort/metrics.hpp"
#include "qmsort/partition_result.hpp"
#include "qmsort/selection.hpp"

namespace qmsort {

inline constexpr std::size_t kDefaultBlock = 128;
inline constexpr std::size_t kMaxBlock = 512;

/// Index of the median of a[i], a[j], a[k]; at most three comparisons and no
/// element moves.
template <class It, class Cmp>
std::size_t median_of_3_index(It a, std::size_t i, std::size_t j, std::size_t k, Cmp& cmp) {
    using std::swap;
    if (cmp(a[static_cast<std::ptrdiff_t>(j)], a[static_cast<std::ptrdiff_t>(i)])) swap(i, j);
    if (cmp(a[static_cast<std::ptrdiff_t>(k)], a[static_cast<std::ptrdiff_t>(j)])) {
        swap(j, k);
        if (cmp(a[static_cast<std::ptrdiff_t>(j)], a[static_cast<std::ptrdiff_t>(i)])) swap(i, j);
    }
    return j;
}

/// Hoare-style partition that defers swaps: scan results are buffered as
/// offsets in two fixed blocks which are then exchanged in batches, so the
/// comparison loops carry no data-movement branches. Exactly n - 1
/// comparisons (each non-pivot element is compared once); the pivot ends at
/// the returned split position.
template <class It, class Cmp>
PartitionResult block_partition(It first, It last, std::size_t pivot_pos, std::size_t block,
                                Cmp& cmp, Metrics& m) {
    const std::size_t n = static_cast<std::size_t>(last - first);
    assert(pivot_pos < n);
    if (block < 1) block = 1;
    if (block > kMaxBlock) block = kMaxBlock;

    if (pivot_pos != 0) iter_swap_counted(first, first + static_cast<std::ptrdiff_t>(pivot_pos), m);
    PartitionResult pr;
    if (n <= 1) {
        pr.lt_end = 0;
        pr.gt_begin = 1;
        pr.left_size = 0;
        pr.right_size = 0;
        return pr;
    }
    const auto& pivot = *first; // stays put: all swaps below stay right of it

    It L = first + 1;
    It R = last - 1; // inclusive window [L, R] of unexamined elements
    std::array<std::uint16_t, kMaxBlock> offs_l, offs_r;
    std::size_t nl = 0, nr = 0, sl = 0, sr = 0;

    auto window = [&]() -> std::size_t { return L > R ? 0 : static_cast<std::size_t>(R - L) + 1; };

    while (window() > 2 * block) {
        if (nl == 0) {
            sl = 0;
            for (std::size_t i = 0; i < block; ++i) {
                offs_l[nl] = static_cast<std::uint16_t>(i);
                nl += !cmp(L[static_cast<std::ptrdiff_t>(i)], pivot);
            }
        }
        if (nr == 0) {
            sr = 0;
            for (std::size_t i = 0; i < block; ++i) {
                offs_r[nr] = static_cast<std::uint16_t>(i);
                nr += !cmp(pivot, *(R - static_cast<std::ptrdiff_t>(i)));
            }
        }
        const std::size_t num = nl < nr ? nl : nr;
        for (std::size_t j = 0; j < num; ++j)
            iter_swap_counted(L + offs_l[sl + j], R - offs_r[sr + j], m);
        nl -= num;
        nr -= num;
        sl += num;
        sr += num;
        if (nl == 0) L += static_cast<std::ptrdiff_t>(block);
        if (nr == 0) R -= static_cast<std::ptrdiff_t>(block);
    }

    // Tail: at most 2*block unexamined elements remain and at most one buffer
    // still holds offsets from a fully examined block.
    const std::size_t win = window();
    std::size_t l_size, r_size;
    if (nl != 0) {
        l_size = block;
        r_size = win - block;
    } else if (nr != 0) {
        l_size = win - block;
        r_size = block;
    } else {
        l_size = win / 2;
        r_size = win - l_size;
    }
    if (nl == 0) {
        sl = 0;
        for (std::size_t i = 0; i < l_size; ++i) {
            offs_l[nl] = static_cast<std::uint16_t>(i);
            nl += !cmp(L[static_cast<std::ptrdiff_t>(i)], pivot);
        }
    }
    if (nr == 0) {
        sr = 0;
        for (std::size_t i = 0; i < r_size; ++i) {
            offs_r[nr] = static_cast<std::uint16_t>(i);
            nr += !cmp(pivot, *(R - static_cast<std::ptrdiff_t>(i)));
        }
    }
    {
        const std::size_t num = nl < nr ? nl : nr;
        for (std::size_t j = 0; j < num; ++j)
            iter_swap_counted(L + offs_l[sl + j], R - offs_r[sr + j], m);
        nl -= num;
        nr -= num;
        sl += num;
        sr += num;
    }

    // Leftovers now sit in exactly one buffer: elements of one block that
    // still face the wrong way. Compact them against their block's inner
    // edge (offsets are ascending, so walking them backwards keeps the
    // target slot unflagged), which pins the split point.
    std::size_t boundary; // offset of the first >= pivot slot
    if (nl > 0) {
        std::size_t hole = l_size;
        for (std::size_t k = nl; k > 0; --k) {
            --hole;
            const std::size_t f = offs_l[sl + k - 1];
            if (f != hole)
                iter_swap_counted(L + static_cast<std::ptrdiff_t>(f),
                                  L + static_cast<std::ptrdiff_t>(hole), m);
        }
        boundary = static_cast<std::size_t>(L - first) + l_size - nl;
    } else if (nr > 0) {
        std::size_t hole = r_size; // distances from R, mirrored
        for (std::size_t k = nr; k > 0; --k) {
            --hole;
            const std::size_t f = offs_r[sr + k - 1];
            if (f != hole)
                iter_swap_counted(R - static_cast<std::ptrdiff_t>(f),
                                  R - static_cast<std::ptrdiff_t>(hole), m);
        }
        boundary = static_cast<std::size_t>(R - first) - r_size + nr + 1;
    } else {
        boundary = static_cast<std::size_t>(L - first) + l_size;
    }

    // Place the pivot just left of the boundary.
    const std::size_t split = boundary - 1;
    if (split != 0) iter_swap_counted(first, first + static_cast<std::ptrdiff_t>(split), m);
    pr.lt_end = split;
    pr.gt_begin = split + 1;
    pr.left_size = split;
    pr.right_size = n - split - 1;
    return pr;
}

/// Lomuto's uni-directional partition with Median-of-3 pivot selection.
/// n - 1 + (<= 3) comparisons. Well suited to random subarrays; degenerates
/// quadratically inside a quicksort on presorted or duplicate-heavy data, so
/// callers keep it on randomly partitioned ranges.
template <class It, class Cmp>
PartitionResult lomuto_mo3_partition(It first, It last, Cmp& cmp, Metrics& m) {
    const std::size_t n = static_cast<std::size_t>(last - first);
    assert(n >= 3);
    const std::size_t med = median_of_3_index(first, 0, n / 2, n - 1, cmp);
    if (med != 0) iter_swap_counted(first, first + static_cast<std::ptrdiff_t>(med), m);
    const auto& pivot = *first;
    It store = first;
    for (It i = first + 1; i != last; ++i) {
        if (cmp(*i, pivot)) {
            ++store;
            if (store != i) iter_swap_counted(store, i, m);
        }
    }
    if (store != first) iter_swap_counted(first, store, m);
    const std::size_t split = static_cast<std::size_t>(store - first);
    PartitionResult pr;
    pr.lt_end = split;
    pr.gt_begin = split + 1;
    pr.left_size = split;
    pr.right_size = n - split - 1;
    return pr;
}

/// Dijkstra three-way partition: < pivot, == pivot, > pivot in consecutive
/// blocks. The equal block takes no further part in sorting.
template <class It, class Cmp>
PartitionResult three_way_partition(It first, It last, std::size_t pivot_pos, Cmp& cmp,
                                    Metrics& m) {
    const std::size_t n = static_cast<std::size_t>(last - first);
    PartitionResult pr;
    if (n == 0) {
        pr.gt_begin = 0;
        return pr;
    }
    assert(pivot_pos < n);
    auto pv = first[static_cast<std::ptrdiff_t>(pivot_pos)];
    ++m.moves;
    std::size_t lt = 0, i = 0, gt = n;
    while (i < gt) {
        if (cmp(first[static_cast<std::ptrdiff_t>(i)], pv)) {
            if (lt != i)
                iter_swap_counted(first + static_cast<std::ptrdiff_t>(lt),
                                  first + static_cast<std::ptrdiff_t>(i), m);
            ++lt;
            ++i;
        } else if (cmp(pv, first[static_cast<std::ptrdiff_t>(i)])) {
            --gt;
            if (i != gt)
                iter_swap_counted(first + static_cast<std::ptrdiff_t>(i),
                                  first + static_cast<std::ptrdiff_t>(gt), m);
        } else {
            ++i;
        }
    }
    pr.lt_end = lt;
    pr.gt_begin = gt;
    pr.left_size = lt;
    pr.right_size = n - gt;
    return pr;
}

/// Pivot position for Median-of-sqrt(n) selection: an odd-size sample of
/// s = 2*floor(sqrt(n)/2) + 1 evenly strided elements is gathered to the
/// range front by swaps and its exact median located with select_kth.
template <class It, class Cmp>
std::size_t median_of_sqrt_pivot(It first, It last, Cmp& cmp, Metrics& m) {
    const std::size_t n = static_cast<std::size_t>(last - first);
    assert(n >= 4);
    std::size_t root = 1;
    while ((root + 1) * (root + 1) <= n) ++root;
    const std::size_t s = 2 * (root / 2) + 1;
    const std::size_t stride = n / s;
    for (std::size_t i = 0; i < s; ++i) {
        const std::size_t src = i * stride;
        if (src != i)
            iter_swap_counted(first + static_cast<std::ptrdiff_t>(i),
                              first + static_cast<std::ptrdiff_t>(src), m);
    }
    RangeView<It> v{first, s};
    return select_kth(v, 0, s, (s + 1) / 2, cmp, m);
}

} // namespace qmsort

#endif // QMSORT_PARTITION_HPP
