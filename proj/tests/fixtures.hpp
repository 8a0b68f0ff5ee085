// Hand-built automata and brute-force oracles shared by the test suites.
// Nothing here calls into the algorithms under test.
#ifndef WHEELER_TESTS_FIXTURES_HPP
#define WHEELER_TESTS_FIXTURES_HPP

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wheeler/wheeler.hpp"

namespace fixtures {

using namespace wheeler;

/// Builds from 1-based (source, target, token) triples.
inline WheelerNfa build(std::vector<std::string> alphabet, std::size_t n,
                        std::vector<std::tuple<State, State, std::string>> edges, std::vector<State> finals) {
    OrderedAlphabet sigma(std::move(alphabet));
    std::vector<Edge> es;
    for (const auto& [u, v, a] : edges) es.push_back({u - 1, v - 1, sigma.rank(a)});
    for (State& f : finals) f -= 1;
    return WheelerNfa(std::move(sigma), n, std::move(es), std::move(finals));
}

/// Four states, labels a < b < c, finals {3, 4}; a valid Wheeler NFA.
inline WheelerNfa four_state() {
    return build({"a", "b", "c"}, 4,
                 {{1, 2, "a"}, {2, 3, "a"}, {1, 3, "a"}, {3, 3, "b"}, {1, 4, "c"}, {4, 3, "a"}, {2, 4, "c"}, {4, 4, "c"}},
                 {3, 4});
}

/// aa* with the loop on the initial state.
inline WheelerNfa loop_first() { return build({"a"}, 2, {{1, 1, "a"}, {1, 2, "a"}}, {2}); }

/// aa* with the loop on the final state.
inline WheelerNfa loop_last() { return build({"a"}, 2, {{1, 2, "a"}, {2, 2, "a"}}, {2}); }

/// Left automaton of the bisimulation-is-not-enough pair; all states final.
inline WheelerNfa convex_left() {
    return build({"a", "b", "c", "d"}, 4,
                 {{1, 2, "a"}, {1, 2, "b"}, {1, 3, "b"}, {1, 4, "b"}, {1, 4, "c"}, {2, 4, "d"}, {4, 4, "d"}},
                 {1, 2, 3, 4});
}

/// Right automaton of the pair: like the left one without the b-edge into 4.
inline WheelerNfa convex_right() {
    return build({"a", "b", "c", "d"}, 4,
                 {{1, 2, "a"}, {1, 2, "b"}, {1, 3, "b"}, {1, 4, "c"}, {2, 4, "d"}, {4, 4, "d"}}, {1, 2, 3, 4});
}

/// (1,1) (2,2) (3,3) (4,4) (4,2), 0-based.
inline Relation convex_pairs() { return Relation(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {3, 1}}); }

/// The three-state bisimulation quotient of convex_left, states u, v, w.
/// `v_before_w` picks which of the two orders after u is used.
inline WheelerNfa collapsed(bool v_before_w) {
    const State v = v_before_w ? 2 : 3, w = v_before_w ? 3 : 2;
    return build({"a", "b", "c", "d"}, 3, {{1, v, "a"}, {1, v, "b"}, {1, v, "c"}, {1, w, "b"}, {v, v, "d"}}, {1, 2, 3});
}

/// Eight states: 1 -a-> {2,3}, 2 -b-> {4,5}, 3 -b-> {6,7}, {4..7} -c-> 8; finals {4, 6, 8}.
inline WheelerNfa two_diamonds() {
    return build({"a", "b", "c"}, 8,
                 {{1, 2, "a"}, {1, 3, "a"}, {2, 4, "b"}, {2, 5, "b"}, {3, 6, "b"}, {3, 7, "b"}, {4, 8, "c"},
                  {5, 8, "c"}, {6, 8, "c"}, {7, 8, "c"}},
                 {4, 6, 8});
}

inline WheelerNfa single_state() { return WheelerNfa(OrderedAlphabet({"a"}), 1, {}, {0}); }

// ---------------------------------------------------------------------------
// Oracles

/// Membership by depth-first enumeration of walks.
inline bool accepts_by_paths(const WheelerNfa& a, const std::vector<Symbol>& word) {
    std::function<bool(State, std::size_t)> walk = [&](State u, std::size_t pos) {
        if (pos == word.size()) return a.is_final(u);
        for (const Edge& e : a.edges()) {
            if (e.source == u && e.label == word[pos] && walk(e.target, pos + 1)) return true;
        }
        return false;
    };
    return walk(0, 0);
}

/// Calls f on every word over sigma symbols with length <= max_len.
inline void for_each_word(std::size_t sigma, std::size_t max_len, const std::function<void(const std::vector<Symbol>&)>& f) {
    std::vector<Symbol> w;
    std::function<void()> rec = [&] {
        f(w);
        if (w.size() == max_len) return;
        for (Symbol c = 0; c < sigma; ++c) {
            w.push_back(c);
            rec();
            w.pop_back();
        }
    };
    rec();
}

/// Wheeler axioms 2 and 3 over all edge pairs.
inline bool axioms_by_pairs(const WheelerNfa& a) {
    for (const Edge& e : a.edges()) {
        for (const Edge& f : a.edges()) {
            if (e.target < f.target && e.label > f.label) return false;
            if (e.target < f.target && e.label == f.label && e.source > f.source) return false;
        }
    }
    return true;
}

/// Bisimulation by the definition, quantifying over all states and edges.
inline bool bisimulation_by_definition(const WheelerNfa& a, const WheelerNfa& b, const Relation& r) {
    for (const auto& [u, ub] : r.pairs()) {
        for (const Edge& e : a.edges()) {
            if (e.source != u) continue;
            bool ok = false;
            for (const Edge& f : b.edges()) {
                if (f.source == ub && a.alphabet().token(e.label) == b.alphabet().token(f.label) && r.contains(e.target, f.target)) ok = true;
            }
            if (!ok) return false;
        }
        for (const Edge& f : b.edges()) {
            if (f.source != ub) continue;
            bool ok = false;
            for (const Edge& e : a.edges()) {
                if (e.source == u && a.alphabet().token(e.label) == b.alphabet().token(f.label) && r.contains(e.target, f.target)) ok = true;
            }
            if (!ok) return false;
        }
        if (a.is_final(u) != b.is_final(ub)) return false;
    }
    return r.contains(0, 0);
}

/// Convexity of images over every subset that is an interval, checked set-theoretically.
inline bool images_convex_by_subsets(const Relation& r) {
    for (State i = 0; i < r.left_size(); ++i) {
        for (State j = i; j < r.left_size(); ++j) {
            std::vector<State> c;
            for (State k = i; k <= j; ++k) c.push_back(k);
            std::set<State> img;
            for (const auto& [x, y] : r.pairs()) {
                if (x >= i && x <= j) img.insert(y);
            }
            if (!img.empty() && *img.rbegin() - *img.begin() + 1 != img.size()) return false;
        }
    }
    return true;
}

inline bool wheeler_bisimulation_by_definition(const WheelerNfa& a, const WheelerNfa& b, const Relation& r) {
    return bisimulation_by_definition(a, b, r) && images_convex_by_subsets(r) && images_convex_by_subsets(inverse(r));
}

inline Relation random_relation(std::mt19937_64& rng, std::size_t left, std::size_t right, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<StatePair> p;
    for (State i = 0; i < left; ++i) {
        for (State j = 0; j < right; ++j) {
            if (coin(rng)) p.emplace_back(i, j);
        }
    }
    return Relation(left, right, std::move(p));
}

inline std::vector<Symbol> as_symbols(const WheelerNfa& a, std::string_view word) {
    std::vector<Symbol> w;
    for (char c : word) w.push_back(a.alphabet().rank(std::string(1, c)));
    return w;
}

} // namespace fixtures

#endif // WHEELER_TESTS_FIXTURES_HPP
