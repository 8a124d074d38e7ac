#ifndef QMSORT_ELEMENT_HPP
#define QMSORT_ELEMENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>

namespace qmsort {

/// Keyed element with an opaque payload, for move-cost experiments.
/// Ordering is on the key alone: equal keys compare equal regardless of
/// payload contents.
template <std::size_t PayloadBytes = 0>
struct Element {
    std::int64_t key = 0;
    std::array<std::byte, PayloadBytes> payload{};

    friend bool operator<(const Element& a, const Element& b) { return a.key < b.key; }
    friend bool operator==(const Element& a, const Element& b) { return a.key == b.key; }
};

using PlainElement = Element<0>;

} // namespace qmsort

#endif // QMSORT_ELEMENT_HPP
