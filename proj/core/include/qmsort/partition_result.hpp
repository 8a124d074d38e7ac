#ifndef QMSORT_PARTITION_RESULT_HPP
#define QMSORT_PARTITION_RESULT_HPP

#include <cstddef>

namespace qmsort {

/// Outcome of a partitioning pass, as offsets into the partitioned range.
/// Elements in [0, lt_end) are <= pivot, elements in [lt_end, gt_begin)
/// equal the pivot, elements in [gt_begin, n) are >= pivot. A two-way
/// partition has gt_begin == lt_end + 1 with the pivot sitting at lt_end.
struct PartitionResult {
    std::size_t lt_end = 0;
    std::size_t gt_begin = 0;
    std::size_t left_size = 0;
    std::size_t right_size = 0;
};

} // namespace qmsort

#endif // QMSORT_PARTITION_RESULT_HPP
