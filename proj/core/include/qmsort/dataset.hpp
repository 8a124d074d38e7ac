#ifndef QMSORT_DATASET_HPP
#define QMSORT_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmsort/rng.hpp"

namespace qmsort {

enum class Distribution {
    random_perm,  // uniform permutation of {1..n}
    sorted,       // 1..n
    reverse,      // n..1
    organ_pipe,   // 1..ceil(n/2) followed by its mirror image
    few_distinct, // position i holds (i mod k) + 1
    random_dup    // independent uniform draws from {1..m}
};

struct DataSpec {
    Distribution kind = Distribution::random_perm;
    std::size_t param = 0; // k for few_distinct, modulus for random_dup
};

inline std::string dataset_name(const DataSpec& d) {
    switch (d.kind) {
        case Distribution::random_perm: return "random";
        case Distribution::sorted: return "sorted";
        case Distribution::reverse: return "reverse";
        case Distribution::organ_pipe: return "organpipe";
        case Distribution::few_distinct: return "fewdistinct:" + std::to_string(d.param);
        case Distribution::random_dup: return "randomdup:" + std::to_string(d.param);
    }
    return "unknown";
}

inline std::optional<DataSpec> parse_dataset(const std::string& s) {
    if (s == "random") return DataSpec{Distribution::random_perm, 0};
    if (s == "sorted") return DataSpec{Distribution::sorted, 0};
    if (s == "reverse") return DataSpec{Distribution::reverse, 0};
    if (s == "organpipe") return DataSpec{Distribution::organ_pipe, 0};
    const auto colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string head = s.substr(0, colon);
        const std::string tail = s.substr(colon + 1);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        const auto v = static_cast<std::size_t>(std::stoull(tail));
        if (v == 0) return std::nullopt;
        if (head == "fewdistinct") return DataSpec{Distribution::few_distinct, v};
        if (head == "randomdup") return DataSpec{Distribution::random_dup, v};
    }
    return std::nullopt;
}

/// Deterministic input generation: splitmix64 plus a Fisher-Yates shuffle
/// for permutations. The same (spec, n, seed) always reproduces the same
/// sequence, independent of platform.
inline std::vector<std::int64_t> generate_input(const DataSpec& d, std::size_t n,
                                                std::uint64_t seed) {
    std::vector<std::int64_t> v(n);
    switch (d.kind) {
        case Distribution::random_perm: {
            for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i + 1);
            SplitMix64 rng(seed);
            for (std::size_t i = n; i > 1; --i) {
                const std::size_t j = static_cast<std::size_t>(bounded(rng, i));
                std::swap(v[i - 1], v[j]);
            }
            break;
        }
        case Distribution::sorted:
            for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i + 1);
            break;
        case Distribution::reverse:
            for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(n - i);
            break;
        case Distribution::organ_pipe:
            for (std::size_t i = 0; i < n; ++i)
                v[i] = static_cast<std::int64_t>(std::min(i + 1, n - i));
            break;
        case Distribution::few_distinct: {
            const std::size_t k = d.param == 0 ? 1 : d.param;
            for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i % k + 1);
            break;
        }
        case Distribution::random_dup: {
            const std::uint64_t mod = d.param == 0 ? 1 : d.param;
            SplitMix64 rng(seed);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = static_cast<std::int64_t>(bounded(rng, mod) + 1);
            break;
        }
    }
    return v;
}

} // namespace qmsort

#endif // QMSORT_DATASET_HPP
