#ifndef WHEELER_ORACLE_HPP
#define WHEELER_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wheeler/bisimulation.hpp"
#include "wheeler/partition.hpp"

namespace wheeler {

/**
 * Brute-force maximum Wheeler autobisimulation.
 *
 * Enumerates all 2^(n-1) convex equivalences, keeps those accepted by
 * is_wheeler_bisimulation(a, a, .), and returns the AND of their boundary
 * arrays (the union of the accepted equivalences). The result is re-checked
 * before returning. Exponential; refuses inputs above `max_states`.
 */
inline BoundaryBits oracle_max_wheeler_autobisimulation(const WheelerNfa& a, std::size_t max_states = 16) {
    const std::size_t n = a.num_states();
    if (n > max_states) {
        throw std::invalid_argument("oracle: " + std::to_string(n) + " states exceeds cap " + std::to_string(max_states));
    }
    BoundaryBits best(n, true);
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        BoundaryBits candidate(n);
        for (State k = 1; k < n; ++k) candidate.set_split_before(k, (mask >> (k - 1)) & 1U);
        if (is_wheeler_bisimulation(a, a, equivalence_from_bits(candidate).to_relation()).ok()) {
            best = best & candidate;
        }
    }
    if (!is_wheeler_bisimulation(a, a, equivalence_from_bits(best).to_relation()).ok()) {
        throw std::logic_error("oracle: union of Wheeler autobisimulations was rejected");
    }
    return best;
}

} // namespace wheeler

#endif // WHEELER_ORACLE_HPP
