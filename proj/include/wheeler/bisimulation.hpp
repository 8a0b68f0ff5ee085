#ifndef WHEELER_BISIMULATION_HPP
#define WHEELER_BISIMULATION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wheeler/nfa.hpp"
#include "wheeler/relation.hpp"

namespace wheeler {

enum class BisimFailure {
    Forward,           ///< an edge of the left automaton has no related match on the right
    Backward,          ///< an edge of the right automaton has no related match on the left
    Initial,           ///< the initial states are not related
    Finality,          ///< a related pair disagrees on finality
    ImageNotConvex,    ///< R(C) is not an interval for some interval C
    PreimageNotConvex, ///< R^{-1}(C') is not an interval for some interval C'
};

inline const char* to_string(BisimFailure f) {
    switch (f) {
    case BisimFailure::Forward: return "forward";
    case BisimFailure::Backward: return "backward";
    case BisimFailure::Initial: return "initial";
    case BisimFailure::Finality: return "finality";
    case BisimFailure::ImageNotConvex: return "image-not-convex";
    case BisimFailure::PreimageNotConvex: return "preimage-not-convex";
    }
    return "?";
}

struct BisimWitness {
    BisimFailure kind;
    std::optional<StatePair> pair;      ///< offending related pair (left, right)
    std::optional<Edge> edge;           ///< unmatched edge, in its own automaton's numbering
    std::optional<StatePair> interval;  ///< [lo, hi] on the side whose image failed
    std::vector<State> image;           ///< the non-convex image
};

/// Outcome of a relation check: ok, or the first violation in scan order.
struct BisimVerdict {
    std::optional<BisimWitness> witness;

    bool ok() const noexcept { return !witness.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
};

namespace detail {

/// Maps each symbol of `from` to the symbol with the same token in `to`.
inline std::vector<std::optional<Symbol>> translate_labels(const OrderedAlphabet& from, const OrderedAlphabet& to) {
    std::vector<std::optional<Symbol>> map(from.size());
    for (Symbol a = 0; a < from.size(); ++a) map[a] = to.find(from.token(a));
    return map;
}

inline std::vector<std::size_t> successor_offsets(const Relation& r) {
    std::vector<std::size_t> begin(r.left_size() + 1, 0);
    for (const auto& pr : r.pairs()) ++begin[pr.first + 1];
    for (std::size_t k = 1; k < begin.size(); ++k) begin[k] += begin[k - 1];
    return begin;
}

/// First interval [i, j] (lexicographic) of the left side whose image is not an interval.
inline std::optional<BisimWitness> first_nonconvex_image(const Relation& r, BisimFailure kind) {
    const auto begin = successor_offsets(r);
    std::vector<std::uint32_t> hits(r.right_size(), 0);
    for (State i = 0; i < r.left_size(); ++i) {
        std::fill(hits.begin(), hits.end(), 0);
        std::size_t distinct = 0;
        State lo = UINT32_MAX, hi = 0;
        for (State j = i; j < r.left_size(); ++j) {
            for (std::size_t k = begin[j]; k < begin[j + 1]; ++k) {
                State t = r.pairs()[k].second;
                if (hits[t]++ == 0) {
                    ++distinct;
                    lo = std::min(lo, t);
                    hi = std::max(hi, t);
                }
            }
            if (distinct > 0 && hi - lo + 1 != distinct) {
                BisimWitness w{kind, {}, {}, StatePair{i, j}, {}};
                for (State t = lo; t <= hi; ++t) {
                    if (hits[t]) w.image.push_back(t);
                }
                return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/**
 * Checks the four conditions of a (standard) bisimulation from `a` to `b`,
 * in definition order: forward transfer, backward transfer, related initial
 * states, finality agreement. Labels are matched by token.
 */
inline BisimVerdict is_bisimulation(const WheelerNfa& a, const WheelerNfa& b, const Relation& r) {
    if (r.left_size() != a.num_states() || r.right_size() != b.num_states()) {
        throw std::invalid_argument("relation does not match automaton sizes");
    }
    const auto to_b = detail::translate_labels(a.alphabet(), b.alphabet());
    const auto to_a = detail::translate_labels(b.alphabet(), a.alphabet());

    for (const auto& [u, ub] : r.pairs()) {
        for (const Edge& e : a.out_edges(u)) {
            bool matched = false;
            if (auto lb = to_b[e.label]) {
                for (const Edge& f : b.out_edges(ub, *lb)) {
                    if (r.contains(e.target, f.target)) {
                        matched = true;
                        break;
                    }
                }
            }
            if (!matched) return {BisimWitness{BisimFailure::Forward, StatePair{u, ub}, e, {}, {}}};
        }
    }
    for (const auto& [u, ub] : r.pairs()) {
        for (const Edge& f : b.out_edges(ub)) {
            bool matched = false;
            if (auto la = to_a[f.label]) {
                for (const Edge& e : a.out_edges(u, *la)) {
                    if (r.contains(e.target, f.target)) {
                        matched = true;
                        break;
                    }
                }
            }
            if (!matched) return {BisimWitness{BisimFailure::Backward, StatePair{u, ub}, f, {}, {}}};
        }
    }
    if (!r.contains(0, 0)) return {BisimWitness{BisimFailure::Initial, StatePair{0, 0}, {}, {}, {}}};
    for (const auto& [u, ub] : r.pairs()) {
        if (a.is_final(u) != b.is_final(ub)) {
            return {BisimWitness{BisimFailure::Finality, StatePair{u, ub}, {}, {}, {}}};
        }
    }
    return {};
}

/**
 * Checks that `r` is a Wheeler bisimulation: a bisimulation whose images of
 * convex sets are convex, in both directions. Convex sets of positions are
 * exactly intervals, so the check enumerates all O(n^2) intervals of each side
 * with an incrementally maintained image.
 */
inline BisimVerdict is_wheeler_bisimulation(const WheelerNfa& a, const WheelerNfa& b, const Relation& r) {
    if (auto v = is_bisimulation(a, b, r); !v.ok()) return v;
    if (auto w = detail::first_nonconvex_image(r, BisimFailure::ImageNotConvex)) return {std::move(w)};
    if (auto w = detail::first_nonconvex_image(inverse(r), BisimFailure::PreimageNotConvex)) return {std::move(w)};
    return {};
}

/// Human-readable witness, 1-based states. `a`/`b` give label tokens.
inline std::string describe(const WheelerNfa& a, const WheelerNfa& b, const BisimWitness& w) {
    std::string s = to_string(w.kind);
    if (w.pair) s += " pair (" + std::to_string(w.pair->first + 1) + "," + std::to_string(w.pair->second + 1) + ")";
    if (w.edge) {
        const WheelerNfa& owner = w.kind == BisimFailure::Backward ? b : a;
        s += " edge (" + std::to_string(w.edge->source + 1) + "," + std::to_string(w.edge->target + 1) + "," +
             owner.alphabet().token(w.edge->label) + ")";
    }
    if (w.interval) {
        s += " interval [" + std::to_string(w.interval->first + 1) + "," + std::to_string(w.interval->second + 1) +
             "] image {";
        for (std::size_t k = 0; k < w.image.size(); ++k) s += (k ? "," : "") + std::to_string(w.image[k] + 1);
        s += "}";
    }
    return s;
}

} // namespace wheeler

#endif // WHEELER_BISIMULATION_HPP
