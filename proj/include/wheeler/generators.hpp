#ifndef WHEELER_GENERATORS_HPP
#define WHEELER_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "wheeler/nfa.hpp"
#include "wheeler/validate.hpp"

namespace wheeler {

/**
 * The k-state unary automaton for a*: a self-loop on the initial state, a
 * chain 1 -> 2 -> ... -> k, and finals {1, k} (1-based).
 */
inline WheelerNfa gen_chain(std::size_t k) {
    if (k < 3) throw std::invalid_argument("gen_chain: k must be at least 3");
    std::vector<Edge> edges{{0, 0, 0}};
    for (State i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1, 0});
    return WheelerNfa(OrderedAlphabet({"a"}), k, std::move(edges), {0, static_cast<State>(k - 1)});
}

/// Token of the i-th fresh separator symbol (1-based) used by gen_distinctness.
inline std::string separator_token(std::size_t i) { return "$" + std::to_string(i); }

/**
 * The (n+2)-state Wheeler DFA encoding text T = t_1 ... t_n: edges
 * (s, u_i, $i) and (u_i, t, t_i), final {t}, order s < u_1 < ... < u_n < t.
 * The separators $1 < ... < $n precede every symbol of `base`.
 */
inline WheelerNfa gen_distinctness(const std::vector<std::string>& text, const OrderedAlphabet& base) {
    const std::size_t n = text.size();
    if (n == 0) throw std::invalid_argument("gen_distinctness: empty text");
    std::vector<std::string> tokens;
    tokens.reserve(n + base.size());
    for (std::size_t i = 1; i <= n; ++i) {
        tokens.push_back(separator_token(i));
        if (base.find(tokens.back())) throw std::invalid_argument("gen_distinctness: base alphabet clashes with separators");
    }
    tokens.insert(tokens.end(), base.tokens().begin(), base.tokens().end());
    OrderedAlphabet alphabet(std::move(tokens));

    const State sink = static_cast<State>(n + 1);
    std::vector<Edge> edges;
    for (State i = 1; i <= n; ++i) {
        edges.push_back({0, i, i - 1});
        edges.push_back({i, sink, static_cast<Symbol>(n + base.rank(text[i - 1]))});
    }
    return WheelerNfa(std::move(alphabet), n + 2, std::move(edges), {sink});
}

/// Character overload: each character is a symbol; the base alphabet is the sorted distinct characters.
inline WheelerNfa gen_distinctness(std::string_view text) {
    std::vector<std::string> syms;
    for (char c : text) syms.emplace_back(1, c);
    std::vector<std::string> base = syms;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return gen_distinctness(syms, OrderedAlphabet(std::move(base)));
}

namespace detail {

/// Marks extra finals until every state reaches a final state. Linear.
inline void repair_co_reachability(std::size_t n, const std::vector<Edge>& edges, std::vector<char>& final) {
    std::vector<std::size_t> begin(n + 1, 0);
    for (const Edge& e : edges) ++begin[e.target + 1];
    for (std::size_t i = 1; i <= n; ++i) begin[i] += begin[i - 1];
    std::vector<State> preds(edges.size());
    {
        std::vector<std::size_t> fill(begin.begin(), begin.end() - 1);
        for (const Edge& e : edges) preds[fill[e.target]++] = e.source;
    }
    std::vector<char> co(n, 0);
    std::vector<State> stack;
    auto flood = [&](State root) {
        co[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            State v = stack.back();
            stack.pop_back();
            for (std::size_t k = begin[v]; k < begin[v + 1]; ++k) {
                if (!co[preds[k]]) {
                    co[preds[k]] = 1;
                    stack.push_back(preds[k]);
                }
            }
        }
    };
    for (State u = 0; u < n; ++u) {
        if (final[u] && !co[u]) flood(u);
    }
    for (State u = static_cast<State>(n); u-- > 0;) {
        if (!co[u]) {
            final[u] = 1;
            flood(u);
        }
    }
}

/**
 * Shared construction of random Wheeler automata.
 *
 * Targets 1..n-1 are cut into consecutive runs, one per label, with labels
 * increasing along the order (adjacent runs may share a boundary target).
 * Within a run the targets receive source sets whose ranges are
 * non-decreasing (disjoint for DFAs) and always contain an "anchor" source
 * smaller than the target, which makes every state reachable.
 */
inline WheelerNfa random_wheeler(std::size_t n, std::size_t density, std::size_t sigma, std::uint64_t seed,
                                 bool deterministic, std::vector<std::string>* notes) {
    auto note = [&](const std::string& s) {
        if (notes) notes->push_back(s);
    };
    if (n < 1) {
        note("n clamped to 1");
        n = 1;
    }
    if (sigma < 1) {
        note("sigma clamped to 1");
        sigma = 1;
    }
    if (density < 1) {
        note("edges_per_label_target clamped to 1");
        density = 1;
    }
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::size_t lo, std::size_t hi) {  // inclusive
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

    OrderedAlphabet alphabet = OrderedAlphabet::letters(sigma);
    std::vector<Edge> edges;
    std::vector<char> final(n, 0);

    if (n > 1) {
        const std::size_t targets = n - 1;
        const std::size_t runs = uniform(1, std::min(sigma, targets));

        // Run boundaries: runs-1 distinct cut points among targets 2..n-1.
        std::vector<State> cuts;
        {
            std::vector<State> candidates;
            for (State t = 2; t < n; ++t) candidates.push_back(t);
            std::shuffle(candidates.begin(), candidates.end(), rng);
            cuts.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(runs - 1));
            std::sort(cuts.begin(), cuts.end());
        }
        std::vector<Symbol> labels(sigma);
        for (Symbol a = 0; a < sigma; ++a) labels[a] = a;
        std::shuffle(labels.begin(), labels.end(), rng);
        labels.resize(runs);
        std::sort(labels.begin(), labels.end());

        const bool initial_loop = coin(0.25);
        for (std::size_t r = 0; r < runs; ++r) {
            State first = r == 0 ? 1 : cuts[r - 1];
            State last = r + 1 == runs ? static_cast<State>(n - 1) : cuts[r] - 1;
            if (r > 0 && coin(0.3)) first -= 1;  // share the boundary target with the previous run
            const Symbol label = labels[r];

            // Smallest source still allowed for the next target of this label.
            std::size_t floor = 0;
            if (r == 0 && initial_loop && (!deterministic || first >= 2)) {
                edges.push_back({0, 0, label});
                if (deterministic) floor = 1;
            }
            for (State t = first; t <= last; ++t) {
                const std::size_t upper = t < last ? (deterministic ? t : t + 1) - 1 : n - 1;
                const std::size_t anchor = uniform(floor, t - 1);
                const std::size_t spread = density > 1 ? density : 1;
                const std::size_t lo = anchor - std::min(anchor - floor, uniform(0, spread - 1));
                const std::size_t hi = anchor + std::min(upper - anchor, uniform(0, spread));
                const double p = hi > lo ? std::min(1.0, double(density - 1) / double(hi - lo)) : 0.0;
                std::size_t max_source = anchor;
                for (std::size_t s = lo; s <= hi; ++s) {
                    if (s == anchor || coin(p)) {
                        edges.push_back({static_cast<State>(s), t, label});
                        max_source = std::max(max_source, s);
                    }
                }
                floor = deterministic ? max_source + 1 : max_source;
            }
        }
    }

    for (State u = 0; u < n; ++u) final[u] = coin(1.0 / 3.0) ? 1 : 0;
    final[n - 1] = 1;
    detail::repair_co_reachability(n, edges, final);
    std::vector<State> finals;
    for (State u = 0; u < n; ++u) {
        if (final[u]) finals.push_back(u);
    }
    return WheelerNfa(std::move(alphabet), n, std::move(edges), std::move(finals));
}

} // namespace detail

/**
 * A random valid Wheeler NFA with `n` states over the first `sigma` letters,
 * with on average about `edges_per_label_target` incoming edges per state.
 * Deterministic for a fixed seed. Out-of-range parameters are clamped and,
 * when `notes` is given, each clamp is reported there.
 */
inline WheelerNfa gen_random_wheeler(std::size_t n, std::size_t edges_per_label_target, std::size_t sigma,
                                     std::uint64_t seed, std::vector<std::string>* notes = nullptr) {
    return detail::random_wheeler(n, edges_per_label_target, sigma, seed, false, notes);
}

/// A random valid Wheeler DFA.
inline WheelerNfa gen_random_wheeler_dfa(std::size_t n, std::size_t sigma, std::uint64_t seed,
                                         std::vector<std::string>* notes = nullptr) {
    return detail::random_wheeler(n, 2, sigma, seed, true, notes);
}

/**
 * Splits state `v` of a Wheeler DFA into two adjacent copies v < v'. The
 * incoming edges of v (with v's own self-edges counted once per copy) are
 * sorted by (label, source); the first `cut` go to v, the rest to v'. Both
 * copies keep v's outgoing edges and finality.
 *
 * The result is a Wheeler DFA with the same language, one state larger.
 */
inline WheelerNfa split_state(const WheelerNfa& a, State v, std::size_t cut) {
    if (!a.is_deterministic()) throw std::invalid_argument("split_state: input must be deterministic");
    if (v == 0 || v >= a.num_states()) throw std::invalid_argument("split_state: state out of range");
    auto shift = [v](State x) { return x > v ? x + 1 : x; };

    std::vector<std::tuple<Symbol, State, Edge>> incoming;  // (label, new source, original)
    std::vector<Edge> edges;
    for (const Edge& e : a.edges()) {
        if (e.target == v) {
            if (e.source == v) {
                incoming.emplace_back(e.label, v, e);
                incoming.emplace_back(e.label, v + 1, e);
            } else {
                incoming.emplace_back(e.label, shift(e.source), e);
            }
        } else if (e.source == v) {
            edges.push_back({v, shift(e.target), e.label});
            edges.push_back({v + 1, shift(e.target), e.label});
        } else {
            edges.push_back({shift(e.source), shift(e.target), e.label});
        }
    }
    if (cut == 0 || cut >= incoming.size()) throw std::invalid_argument("split_state: cut must leave both copies reachable");
    std::sort(incoming.begin(), incoming.end(),
              [](const auto& x, const auto& y) { return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y)); });
    for (std::size_t k = 0; k < incoming.size(); ++k) {
        edges.push_back({std::get<1>(incoming[k]), k < cut ? v : v + 1, std::get<0>(incoming[k])});
    }

    std::vector<State> finals;
    for (State u = 0; u < a.num_states(); ++u) {
        if (!a.is_final(u)) continue;
        finals.push_back(shift(u));
        if (u == v) finals.push_back(v + 1);
    }
    WheelerNfa out(a.alphabet(), a.num_states() + 1, std::move(edges), std::move(finals));
    // A copy whose only incoming edges are its own self-loops is unreachable.
    const auto reach = detail::forward_reachable(out);
    if (!reach[v] || !reach[v + 1]) throw std::invalid_argument("split_state: cut leaves a copy unreachable");
    return out;
}

/// Applies up to `count` random state splits; equal language, deterministic for a fixed seed.
inline WheelerNfa random_splits(WheelerNfa a, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t step = 0; step < count; ++step) {
        std::vector<std::size_t> in_degree(a.num_states(), 0);
        for (const Edge& e : a.edges()) in_degree[e.target] += e.source == e.target ? 2 : 1;
        std::vector<std::pair<State, std::size_t>> options;
        for (State u = 1; u < a.num_states(); ++u) {
            for (std::size_t cut = 1; cut < in_degree[u]; ++cut) options.emplace_back(u, cut);
        }
        std::shuffle(options.begin(), options.end(), rng);
        bool split = false;
        for (const auto& [v, cut] : options) {
            try {
                a = split_state(a, v, cut);
                split = true;
                break;
            } catch (const std::invalid_argument&) {
            }
        }
        if (!split) break;
    }
    return a;
}

} // namespace wheeler

#endif // WHEELER_GENERATORS_HPP
