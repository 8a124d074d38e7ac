#ifndef QMSORT_RNG_HPP
#define QMSORT_RNG_HPP

#include <cstdint>

namespace qmsort {

/// splitmix64: a 64-bit splittable generator with a fixed, platform-stable
/// output sequence, so seeded inputs replay byte-identically everywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

/// Unbiased draw from [0, n) by widening multiplication with rejection.
inline std::uint64_t bounded(SplitMix64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    unsigned __int128 mul = static_cast<unsigned __int128>(rng.next()) * n;
    auto low = static_cast<std::uint64_t>(mul);
    if (low < n) {
        const std::uint64_t threshold = (0 - n) % n;
        while (low < threshold) {
            mul = static_cast<unsigned __int128>(rng.next()) * n;
            low = static_cast<std::uint64_t>(mul);
        }
    }
    return static_cast<std::uint64_t>(mul >> 64);
}

/// Stream-splitting mix for deriving independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0xD1B54A32D192ED03ull * (stream + 1)));
    return g.next();
}

} // namespace qmsort

#endif // QMSORT_RNG_HPP
