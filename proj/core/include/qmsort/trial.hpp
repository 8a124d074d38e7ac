#ifndef QMSORT_TRIAL_HPP
#define QMSORT_TRIAL_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmsort/dataset.hpp"
#include "qmsort/metrics.hpp"
#include "qmsort/sort.hpp"

namespace qmsort {

enum class AlgoId { qms, qmqs, momqms, hqms, std_sort };

inline const char* algo_name(AlgoId a) {
    switch (a) {
        case AlgoId::qms: return "qms";
        case AlgoId::qmqs: return "qmqs";
        case AlgoId::momqms: return "momqms";
        case AlgoId::hqms: return "hqms";
        case AlgoId::std_sort: return "std";
    }
    return "unknown";
}

inline std::optional<AlgoId> parse_algo(const std::string& s) {
    if (s == "qms") return AlgoId::qms;
    if (s == "qmqs") return AlgoId::qmqs;
    if (s == "momqms") return AlgoId::momqms;
    if (s == "hqms") return AlgoId::hqms;
    if (s == "std") return AlgoId::std_sort;
    return std::nullopt;
}

inline SortConfig preset_for(AlgoId a) {
    switch (a) {
        case AlgoId::qmqs: return qmqs();
        case AlgoId::momqms: return momqms();
        case AlgoId::hqms: return hqms();
        default: return qms();
    }
}

struct TrialRecord {
    std::string algorithm;
    std::size_t n = 0;
    std::string distribution;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    Metrics metrics;
    double cmp_norm_linear = 0.0; // (comparisons - n lg n) / n
    double cmp_over_nlogn = 0.0;  // comparisons / (n lg n)
};

inline constexpr const char* kCsvHeader =
    "algorithm,n,distribution,seed,trial,comparisons,moves,time_ns,max_depth,"
    "cmp_norm_linear,cmp_over_nlogn";

inline std::string to_csv(const TrialRecord& r) {
    char buf[384];
    std::snprintf(buf, sizeof buf, "%s,%zu,%s,%llu,%llu,%llu,%llu,%llu,%llu,%.6f,%.6f",
                  r.algorithm.c_str(), r.n, r.distribution.c_str(),
                  static_cast<unsigned long long>(r.seed), static_cast<unsigned long long>(r.trial),
                  static_cast<unsigned long long>(r.metrics.comparisons),
                  static_cast<unsigned long long>(r.metrics.moves),
                  static_cast<unsigned long long>(r.metrics.elapsed_ns),
                  static_cast<unsigned long long>(r.metrics.max_depth), r.cmp_norm_linear,
                  r.cmp_over_nlogn);
    return buf;
}

/// Output check used after every trial: ascending order plus multiset
/// equality against the original input.
inline bool verify_sort_outcome(std::vector<std::int64_t> original,
                                const std::vector<std::int64_t>& output) {
    if (!std::is_sorted(output.begin(), output.end())) return false;
    std::sort(original.begin(), original.end());
    return original == output;
}

/// Runs one algorithm over a copy of the input, verifies the outcome and
/// fills a record. The input itself stays untouched so all algorithms can
/// sort the same arrays. Timing covers the sort only.
inline TrialRecord run_trial(AlgoId algo, const SortConfig& cfg,
                             const std::vector<std::int64_t>& input, const std::string& dist_name,
                             std::uint64_t seed, std::uint64_t trial) {
    TrialRecord rec;
    rec.algorithm = algo_name(algo);
    rec.n = input.size();
    rec.distribution = dist_name;
    rec.seed = seed;
    rec.trial = trial;

    std::vector<std::int64_t> work = input;
    if (algo == AlgoId::std_sort) {
        Metrics m;
        CountingComparator<std::less<>> cmp(m);
        const auto t0 = std::chrono::steady_clock::now();
        std::sort(work.begin(), work.end(), std::ref(cmp));
        const auto t1 = std::chrono::steady_clock::now();
        m.elapsed_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        rec.metrics = m;
    } else {
        rec.metrics = sort(work.begin(), work.end(), cfg);
    }

    if (!verify_sort_outcome(input, work))
        throw std::runtime_error("sort failure: output of " + rec.algorithm + " on " + dist_name +
                                 " n=" + std::to_string(rec.n) + " is not a sorted permutation");

    if (rec.n >= 2) {
        const double nn = static_cast<double>(rec.n);
        const double nlogn = nn * std::log2(nn);
        const double c = static_cast<double>(rec.metrics.comparisons);
        rec.cmp_norm_linear = (c - nlogn) / nn;
        rec.cmp_over_nlogn = c / nlogn;
    }
    return rec;
}

} // namespace qmsort

#endif // QMSORT_TRIAL_HPP
