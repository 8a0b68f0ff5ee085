#ifndef WHEELER_EQUIVALENCE_HPP
#define WHEELER_EQUIVALENCE_HPP

#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wheeler/bisimulation.hpp"
#include "wheeler/minimize.hpp"
#include "wheeler/radix.hpp"

namespace wheeler {

/**
 * Whether the identity on positions is an isomorphism from `a` to `b`. For
 * Wheeler NFAs this is the only order-respecting bijection, so it decides
 * isomorphism up to the orders. Labels are compared by token.
 */
inline bool order_respecting_iso(const WheelerNfa& a, const WheelerNfa& b) {
    if (a.num_states() != b.num_states() || a.num_edges() != b.num_edges()) return false;
    for (State u = 0; u < a.num_states(); ++u) {
        if (a.is_final(u) != b.is_final(u)) return false;
    }
    const auto to_b = detail::translate_labels(a.alphabet(), b.alphabet());
    std::vector<Edge> mapped;
    mapped.reserve(a.num_edges());
    for (const Edge& e : a.edges()) {
        if (!to_b[e.label]) return false;
        mapped.push_back({e.source, e.target, *to_b[e.label]});
    }
    sort_by_source_label_target(mapped, b.num_states(), b.alphabet().size());
    return std::equal(mapped.begin(), mapped.end(), b.edges().begin(), b.edges().end());
}

enum class EquivalenceReason { SizeMismatch, NotIsomorphic, Isomorphic };

inline const char* to_string(EquivalenceReason r) {
    switch (r) {
    case EquivalenceReason::SizeMismatch: return "SizeMismatch";
    case EquivalenceReason::NotIsomorphic: return "NotIsomorphic";
    case EquivalenceReason::Isomorphic: return "Isomorphic";
    }
    return "?";
}

struct EquivalenceVerdict {
    bool bisimilar = false;
    std::optional<Relation> witness;  ///< present iff bisimilar
    EquivalenceReason reason = EquivalenceReason::NotIsomorphic;
};

/**
 * Decides whether a Wheeler bisimulation from `a` to `b` exists, in
 * O(|E_a| + |E_b|): both are minimized and the quotients compared. When they
 * are isomorphic the witness is R_b^{-1} ∘ iso ∘ R_a, where R_x maps a state to
 * its class.
 */
inline EquivalenceVerdict wheeler_bisimilar(const WheelerNfa& a, const WheelerNfa& b) {
    const QuotientResult qa = minimize(a);
    const QuotientResult qb = minimize(b);
    EquivalenceVerdict v;
    if (qa.quotient.num_states() != qb.quotient.num_states()) {
        v.reason = EquivalenceReason::SizeMismatch;
        return v;
    }
    if (!order_respecting_iso(qa.quotient, qb.quotient)) {
        v.reason = EquivalenceReason::NotIsomorphic;
        return v;
    }
    v.bisimilar = true;
    v.reason = EquivalenceReason::Isomorphic;
    const Relation iso = Relation::identity(qa.quotient.num_states());
    v.witness = compose(inverse(qb.as_relation()), compose(iso, qa.as_relation()));
    return v;
}

/**
 * For two Wheeler DFAs, the pairs (u, u') reachable from (initial, initial) in
 * the synchronous product, i.e. those whose incoming string sets intersect.
 * When the languages are equal this is a Wheeler bisimulation; callers check
 * it with is_wheeler_bisimulation, and a failure signals unequal languages.
 */
inline Relation dfa_language_bisimulation(const WheelerNfa& a, const WheelerNfa& b) {
    if (!a.is_deterministic() || !b.is_deterministic()) {
        throw std::invalid_argument("dfa_language_bisimulation: both automata must be deterministic");
    }
    const auto to_b = detail::translate_labels(a.alphabet(), b.alphabet());
    const std::size_t nb = b.num_states();
    std::vector<char> seen(a.num_states() * nb, 0);
    std::vector<StatePair> pairs;
    std::vector<StatePair> stack{{0, 0}};
    seen[0] = 1;
    while (!stack.empty()) {
        auto [u, v] = stack.back();
        stack.pop_back();
        pairs.emplace_back(u, v);
        for (const Edge& e : a.out_edges(u)) {
            if (!to_b[e.label]) continue;
            for (const Edge& f : b.out_edges(v, *to_b[e.label])) {
                char& s = seen[std::size_t{e.target} * nb + f.target];
                if (!s) {
                    s = 1;
                    stack.emplace_back(e.target, f.target);
                }
            }
        }
    }
    return Relation(a.num_states(), nb, std::move(pairs));
}

/**
 * Whether `a` and `b` agree on every word of length <= max_len over the union
 * of their alphabets. Explores pairs of reachable state subsets breadth-first;
 * a subset pair already seen at a smaller depth is not expanded again.
 */
inline bool language_sample_equal(const WheelerNfa& a, const WheelerNfa& b, std::size_t max_len) {
    std::vector<std::string> tokens = a.alphabet().tokens();
    for (const auto& t : b.alphabet().tokens()) {
        if (!a.alphabet().find(t)) tokens.push_back(t);
    }

    using Subset = std::vector<State>;
    auto step = [](const WheelerNfa& x, const Subset& s, std::optional<Symbol> c) {
        Subset out;
        if (!c) return out;
        for (State u : s) {
            for (const Edge& e : x.out_edges(u, *c)) out.push_back(e.target);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    auto accepting = [](const WheelerNfa& x, const Subset& s) {
        for (State u : s) {
            if (x.is_final(u)) return true;
        }
        return false;
    };

    std::set<std::pair<Subset, Subset>> seen;
    std::queue<std::pair<std::pair<Subset, Subset>, std::size_t>> frontier;
    frontier.push({{Subset{0}, Subset{0}}, 0});
    seen.insert({Subset{0}, Subset{0}});
    while (!frontier.empty()) {
        auto [sets, depth] = std::move(frontier.front());
        frontier.pop();
        if (accepting(a, sets.first) != accepting(b, sets.second)) return false;
        if (depth == max_len) continue;
        for (const auto& tok : tokens) {
            std::pair<Subset, Subset> next{step(a, sets.first, a.alphabet().find(tok)),
                                           step(b, sets.second, b.alphabet().find(tok))};
            if (next.first.empty() && next.second.empty()) continue;
            if (seen.insert(next).second) frontier.push({std::move(next), depth + 1});
        }
    }
    return true;
}

} // namespace wheeler

#endif // WHEELER_EQUIVALENCE_HPP
