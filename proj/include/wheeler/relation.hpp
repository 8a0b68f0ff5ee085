#ifndef WHEELER_RELATION_HPP
#define WHEELER_RELATION_HPP

#include <algorithm>
#include <iterator>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wheeler/nfa_types.hpp"

namespace wheeler {

using StatePair = std::pair<State, State>;

/**
 * A finite relation between the states of two automata with `left_size` and
 * `right_size` states. Pairs are kept sorted and duplicate-free.
 */
class Relation {
public:
    Relation(std::size_t left_size, std::size_t right_size, std::vector<StatePair> pairs = {})
        : left_size_(left_size), right_size_(right_size), pairs_(std::move(pairs)) {
        for (const auto& [i, j] : pairs_) {
            if (i >= left_size_ || j >= right_size_) throw std::invalid_argument("relation pair out of range");
        }
        std::sort(pairs_.begin(), pairs_.end());
        pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    }

    static Relation identity(std::size_t n) {
        std::vector<StatePair> p;
        p.reserve(n);
        for (State i = 0; i < n; ++i) p.emplace_back(i, i);
        return Relation(n, n, std::move(p));
    }

    /// The graph {(i, map[i])} of a function.
    static Relation from_map(std::span<const State> map, std::size_t right_size) {
        std::vector<StatePair> p;
        p.reserve(map.size());
        for (State i = 0; i < map.size(); ++i) p.emplace_back(i, map[i]);
        return Relation(map.size(), right_size, std::move(p));
    }

    std::size_t left_size() const noexcept { return left_size_; }
    std::size_t right_size() const noexcept { return right_size_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    const std::vector<StatePair>& pairs() const noexcept { return pairs_; }

    bool contains(State i, State j) const { return std::binary_search(pairs_.begin(), pairs_.end(), StatePair{i, j}); }

    /// R(U), sorted.
    std::vector<State> image(std::span<const State> u) const {
        std::vector<char> in(left_size_, 0);
        for (State x : u) in.at(x) = 1;
        std::vector<char> hit(right_size_, 0);
        for (const auto& [i, j] : pairs_) {
            if (in[i]) hit[j] = 1;
        }
        return collect(hit);
    }

    /// R^{-1}(U'), sorted.
    std::vector<State> preimage(std::span<const State> u) const {
        std::vector<char> in(right_size_, 0);
        for (State x : u) in.at(x) = 1;
        std::vector<char> hit(left_size_, 0);
        for (const auto& [i, j] : pairs_) {
            if (in[j]) hit[i] = 1;
        }
        return collect(hit);
    }

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    static std::vector<State> collect(const std::vector<char>& hit) {
        std::vector<State> out;
        for (State k = 0; k < hit.size(); ++k) {
            if (hit[k]) out.push_back(k);
        }
        return out;
    }

    std::size_t left_size_;
    std::size_t right_size_;
    std::vector<StatePair> pairs_;
};

inline Relation inverse(const Relation& r) {
    std::vector<StatePair> p;
    p.reserve(r.size());
    for (const auto& [i, j] : r.pairs()) p.emplace_back(j, i);
    return Relation(r.right_size(), r.left_size(), std::move(p));
}

/// r2 ∘ r1: (i, k) such that (i, j) ∈ r1 and (j, k) ∈ r2 for some j.
inline Relation compose(const Relation& r2, const Relation& r1) {
    if (r1.right_size() != r2.left_size()) throw std::invalid_argument("compose: size mismatch");
    // Successor lists of r2, indexed by its left state.
    std::vector<std::size_t> begin(r2.left_size() + 1, 0);
    for (const auto& pr : r2.pairs()) ++begin[pr.first + 1];
    for (std::size_t k = 1; k < begin.size(); ++k) begin[k] += begin[k - 1];
    std::vector<StatePair> out;
    for (const auto& [i, j] : r1.pairs()) {
        for (std::size_t k = begin[j]; k < begin[j + 1]; ++k) out.emplace_back(i, r2.pairs()[k].second);
    }
    return Relation(r1.left_size(), r2.right_size(), std::move(out));
}

inline Relation unite(const Relation& r1, const Relation& r2) {
    if (r1.left_size() != r2.left_size() || r1.right_size() != r2.right_size()) {
        throw std::invalid_argument("unite: size mismatch");
    }
    std::vector<StatePair> p;
    std::set_union(r1.pairs().begin(), r1.pairs().end(), r2.pairs().begin(), r2.pairs().end(), std::back_inserter(p));
    return Relation(r1.left_size(), r1.right_size(), std::move(p));
}

/// A sorted duplicate-free set of positions is convex iff it is an interval.
inline bool is_convex(std::span<const State> sorted_set) {
    return sorted_set.empty() || sorted_set.back() - sorted_set.front() + 1 == sorted_set.size();
}

} // namespace wheeler

#endif // WHEELER_RELATION_HPP
