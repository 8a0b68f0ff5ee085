#ifndef WHEELER_NFA_TYPES_HPP
#define WHEELER_NFA_TYPES_HPP

#include <cstdint>
#include <tuple>

#include "wheeler/alphabet.hpp"

namespace wheeler {

/// A state is identified with its 0-based position in the Wheeler order.
/// Position 0 is the initial state. Text formats use 1-based positions.
using State = std::uint32_t;

struct Edge {
    State source = 0;
    State target = 0;
    Symbol label = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Canonical edge order: (source, label, target).
inline bool source_label_target_less(const Edge& a, const Edge& b) {
    return std::tie(a.source, a.label, a.target) < std::tie(b.source, b.label, b.target);
}

} // namespace wheeler

#endif // WHEELER_NFA_TYPES_HPP
