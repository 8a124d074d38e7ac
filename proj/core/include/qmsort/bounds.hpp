#ifndef QMSORT_BOUNDS_HPP
#define QMSORT_BOUNDS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace qmsort {

/// Average-case leading constant of Median-of-3 quicksort: (12/7) ln 2.
inline double median_of_3_quicksort_constant() { return (12.0 / 7.0) * std::log(2.0); }

/// Linear-term penalty the pivot-then-X scheme adds over X itself when X
/// costs alpha * n lg n + c n + o(n) on average: (4/15) * (12 - 7 alpha/ln 2).
inline double kappa(double alpha) {
    return (4.0 / 15.0) * (12.0 - 7.0 * alpha / std::log(2.0));
}

/// Analytic constants of the finishing sorter X.
struct BoundParams {
    double alpha = 1.0; // leading comparison constant, >= 1
    double c = 0.0;     // linear constant
    double beta = 1.0;  // block-size exponent when X is invoked at ~n^beta
};

/// Predicted average comparison budget alpha * n lg n + (c + kappa) * n.
/// The o(n) slack is reported by callers as a band around this value.
inline double average_case_bound(const BoundParams& p, std::size_t n) {
    if (n < 2) return 0.0;
    const double nn = static_cast<double>(n);
    return p.alpha * nn * std::log2(nn) + (p.c + kappa(p.alpha)) * nn;
}

/// Leading constant when the merge recursion hands ~n^beta blocks to X:
/// alpha * beta + (1 - beta).
inline double switched_leading_constant(double alpha, double beta) {
    return alpha * beta + (1.0 - beta);
}

/// Worst-case comparison budget of the median-guided variant.
inline double worst_case_bound(std::size_t n) {
    if (n < 2) return 0.0;
    const double nn = static_cast<double>(n);
    return nn * std::log2(nn) + 16.1 * nn;
}

/// Worst case of pure top-down merging: n ceil(lg n) - 2^ceil(lg n) + 1.
inline std::uint64_t mergesort_worst_bound(std::size_t n) {
    if (n <= 1) return 0;
    std::uint64_t ceil_lg = 0;
    while ((std::uint64_t{1} << ceil_lg) < n) ++ceil_lg;
    return static_cast<std::uint64_t>(n) * ceil_lg - (std::uint64_t{1} << ceil_lg) + 1;
}

/// Information-theoretic floor log2(n!) for comparison sorting.
inline double comparison_lower_bound(std::size_t n) {
    return std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
}

} // namespace qmsort

#endif // QMSORT_BOUNDS_HPP
