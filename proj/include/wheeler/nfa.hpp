#ifndef WHEELER_NFA_HPP
#define WHEELER_NFA_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wheeler/alphabet.hpp"
#include "wheeler/nfa_types.hpp"
#include "wheeler/radix.hpp"

namespace wheeler {

/**
 * An NFA whose states are numbered by a Wheeler order.
 *
 * State 0 is the initial state and the least state, so the first axiom holds
 * by construction. The remaining axioms, reachability and co-reachability are
 * checked by validate(), not here. Edges are stored sorted by
 * (source, label, target) and are duplicate-free.
 *
 * Instances are immutable after construction.
 */
class WheelerNfa {
public:
    WheelerNfa(OrderedAlphabet alphabet, std::size_t num_states, std::vector<Edge> edges, std::vector<State> finals)
        : alphabet_(std::move(alphabet)), num_states_(num_states), edges_(std::move(edges)),
          final_(num_states, false) {
        if (num_states_ == 0) throw std::invalid_argument("an automaton needs at least one state");
        for (const Edge& e : edges_) {
            if (e.source >= num_states_ || e.target >= num_states_) {
                throw std::invalid_argument("edge endpoint out of range");
            }
            if (e.label >= alphabet_.size()) throw std::invalid_argument("edge label out of range");
        }
        for (State f : finals) {
            if (f >= num_states_) throw std::invalid_argument("final state out of range");
            final_[f] = true;
        }
        sort_by_source_label_target(edges_, num_states_, alphabet_.size());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
            throw std::invalid_argument("duplicate edge");
        }
        out_begin_.assign(num_states_ + 1, 0);
        for (const Edge& e : edges_) ++out_begin_[e.source + 1];
        for (std::size_t i = 1; i <= num_states_; ++i) out_begin_[i] += out_begin_[i - 1];
    }

    std::size_t num_states() const noexcept { return num_states_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const OrderedAlphabet& alphabet() const noexcept { return alphabet_; }

    /// All edges in (source, label, target) order.
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Edge> out_edges(State u) const {
        return std::span<const Edge>(edges_).subspan(out_begin_[u], out_begin_[u + 1] - out_begin_[u]);
    }

    /// Edges leaving `u` labeled `a`, sorted by target.
    std::span<const Edge> out_edges(State u, Symbol a) const {
        auto out = out_edges(u);
        auto lo = std::lower_bound(out.begin(), out.end(), a, [](const Edge& e, Symbol s) { return e.label < s; });
        auto hi = std::upper_bound(lo, out.end(), a, [](Symbol s, const Edge& e) { return s < e.label; });
        return std::span<const Edge>(lo, hi);
    }

    bool is_final(State u) const { return final_.at(u); }

    std::vector<State> finals() const {
        std::vector<State> out;
        for (State u = 0; u < num_states_; ++u) {
            if (final_[u]) out.push_back(u);
        }
        return out;
    }

    bool is_deterministic() const {
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (edges_[i].source == edges_[i - 1].source && edges_[i].label == edges_[i - 1].label) return false;
        }
        return true;
    }

    friend bool operator==(const WheelerNfa& a, const WheelerNfa& b) {
        return a.num_states_ == b.num_states_ && a.alphabet_ == b.alphabet_ && a.edges_ == b.edges_ &&
               a.final_ == b.final_;
    }

private:
    OrderedAlphabet alphabet_;
    std::size_t num_states_;
    std::vector<Edge> edges_;
    std::vector<bool> final_;
    std::vector<std::size_t> out_begin_;
};

/// Membership test by forward subset simulation.
inline bool accepts(const WheelerNfa& a, std::span<const Symbol> word) {
    std::vector<char> current(a.num_states(), 0), next(a.num_states(), 0);
    current[0] = 1;
    for (Symbol c : word) {
        if (c >= a.alphabet().size()) throw std::out_of_range("symbol outside the alphabet");
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (State u = 0; u < a.num_states(); ++u) {
            if (!current[u]) continue;
            for (const Edge& e : a.out_edges(u, c)) {
                next[e.target] = 1;
                any = true;
            }
        }
        if (!any) return false;
        current.swap(next);
    }
    for (State u = 0; u < a.num_states(); ++u) {
        if (current[u] && a.is_final(u)) return true;
    }
    return false;
}

/// Same as above, with the word given as alphabet tokens.
inline bool accepts(const WheelerNfa& a, std::span<const std::string> word) {
    std::vector<Symbol> ranks;
    ranks.reserve(word.size());
    for (const std::string& tok : word) ranks.push_back(a.alphabet().rank(tok));
    return accepts(a, std::span<const Symbol>(ranks));
}

} // namespace wheeler

#endif // WHEELER_NFA_HPP
