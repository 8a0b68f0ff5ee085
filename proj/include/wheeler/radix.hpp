#ifndef WHEELER_RADIX_HPP
#define WHEELER_RADIX_HPP

#include <cstddef>
#include <vector>

#include "wheeler/nfa_types.hpp"

namespace wheeler {

/**
 * Stable counting sort of `items` by an integer key in [0, key_bound).
 *
 * O(items.size() + key_bound) time and one scratch buffer.
 */
template <typename T, typename KeyFn>
void counting_sort(std::vector<T>& items, std::size_t key_bound, KeyFn key) {
    std::vector<std::size_t> start(key_bound + 1, 0);
    for (const T& x : items) ++start[static_cast<std::size_t>(key(x)) + 1];
    for (std::size_t k = 1; k <= key_bound; ++k) start[k] += start[k - 1];
    std::vector<T> out(items.size());
    for (T& x : items) out[start[static_cast<std::size_t>(key(x))]++] = std::move(x);
    items = std::move(out);
}

// LSD radix sorts over the three edge fields. Keys are bounded by the state
// count and the alphabet size, so each is linear in |E| + n + sigma.

inline void sort_by_source_label_target(std::vector<Edge>& edges, std::size_t num_states, std::size_t num_symbols) {
    counting_sort(edges, num_states, [](const Edge& e) { return e.target; });
    counting_sort(edges, num_symbols, [](const Edge& e) { return e.label; });
    counting_sort(edges, num_states, [](const Edge& e) { return e.source; });
}

inline void sort_by_target_label_source(std::vector<Edge>& edges, std::size_t num_states, std::size_t num_symbols) {
    counting_sort(edges, num_states, [](const Edge& e) { return e.source; });
    counting_sort(edges, num_symbols, [](const Edge& e) { return e.label; });
    counting_sort(edges, num_states, [](const Edge& e) { return e.target; });
}

inline void sort_by_label_target_source(std::vector<Edge>& edges, std::size_t num_states, std::size_t num_symbols) {
    counting_sort(edges, num_states, [](const Edge& e) { return e.source; });
    counting_sort(edges, num_states, [](const Edge& e) { return e.target; });
    counting_sort(edges, num_symbols, [](const Edge& e) { return e.label; });
}

} // namespace wheeler

#endif // WHEELER_RADIX_HPP
