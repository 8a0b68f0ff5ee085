#ifndef WHEELER_STANDARD_BISIMULATION_HPP
#define WHEELER_STANDARD_BISIMULATION_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "wheeler/nfa.hpp"
#include "wheeler/partition.hpp"

namespace wheeler {

/**
 * Coarsest partition whose class relation is a bisimulation from `a` to
 * itself, ignoring the Wheeler order.
 *
 * Naive signature refinement: start from final / non-final, then repeatedly
 * split classes by the set of (label, successor class) pairs until the class
 * count stops growing. O(n * |E| log |E|) worst case; a differential baseline,
 * not a production minimizer.
 */
inline Partition max_standard_autobisimulation(const WheelerNfa& a) {
    const std::size_t n = a.num_states();
    std::vector<std::uint32_t> cls(n);
    for (State u = 0; u < n; ++u) cls[u] = a.is_final(u) ? 1 : 0;
    std::size_t num_classes = Partition(cls).num_classes();

    using Signature = std::pair<std::uint32_t, std::vector<std::pair<Symbol, std::uint32_t>>>;
    while (true) {
        std::map<Signature, std::uint32_t> ids;
        std::vector<std::uint32_t> next(n);
        for (State u = 0; u < n; ++u) {
            Signature sig{cls[u], {}};
            for (const Edge& e : a.out_edges(u)) sig.second.emplace_back(e.label, cls[e.target]);
            std::sort(sig.second.begin(), sig.second.end());
            sig.second.erase(std::unique(sig.second.begin(), sig.second.end()), sig.second.end());
            next[u] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
        }
        cls = std::move(next);
        if (ids.size() == num_classes) break;
        num_classes = ids.size();
    }
    return Partition(std::move(cls));
}

} // namespace wheeler

#endif // WHEELER_STANDARD_BISIMULATION_HPP
