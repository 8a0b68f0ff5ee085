#ifndef WHEELER_MINIMIZE_HPP
#define WHEELER_MINIMIZE_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wheeler/nfa.hpp"
#include "wheeler/partition.hpp"
#include "wheeler/radix.hpp"
#include "wheeler/relation.hpp"

namespace wheeler {

/**
 * Per-state incoming-edge extrema and outgoing label sets.
 *
 * For a state v with incoming edges, a_min[v] is the smallest label entering v
 * and j_min[v] the smallest source of an edge entering v with that label;
 * a_max / j_max are symmetric with "largest". Only the initial state may lack
 * incoming edges, in which case all four are empty.
 *
 * out_set(u) is the sorted set of labels leaving u, and out_differs(k) for
 * k >= 1 tells whether out_set(k-1) != out_set(k).
 */
struct IncidenceExtrema {
    std::vector<std::optional<Symbol>> a_min, a_max;
    std::vector<std::optional<State>> j_min, j_max;
    std::vector<Symbol> out_labels;
    std::vector<std::size_t> out_begin;
    std::vector<bool> out_differs;

    std::span<const Symbol> out_set(State u) const {
        return std::span<const Symbol>(out_labels).subspan(out_begin[u], out_begin[u + 1] - out_begin[u]);
    }
};

/// O(|E| + n + sigma) via counting sorts.
inline IncidenceExtrema compute_extrema(const WheelerNfa& a) {
    const std::size_t n = a.num_states();
    IncidenceExtrema x;
    x.a_min.assign(n, std::nullopt);
    x.a_max.assign(n, std::nullopt);
    x.j_min.assign(n, std::nullopt);
    x.j_max.assign(n, std::nullopt);

    std::vector<Edge> in(a.edges().begin(), a.edges().end());
    sort_by_target_label_source(in, n, a.alphabet().size());
    for (std::size_t k = 0; k < in.size(); ++k) {
        const Edge& e = in[k];
        if (k == 0 || in[k - 1].target != e.target) {
            x.a_min[e.target] = e.label;
            x.j_min[e.target] = e.source;
        }
        if (k + 1 == in.size() || in[k + 1].target != e.target) {
            x.a_max[e.target] = e.label;
            x.j_max[e.target] = e.source;
        }
    }

    // a.edges() is already in (source, label, target) order.
    x.out_begin.assign(n + 1, 0);
    const auto edges = a.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (k == 0 || edges[k - 1].source != edges[k].source || edges[k - 1].label != edges[k].label) {
            x.out_labels.push_back(edges[k].label);
            ++x.out_begin[edges[k].source + 1];
        }
    }
    for (std::size_t u = 1; u <= n; ++u) x.out_begin[u] += x.out_begin[u - 1];

    x.out_differs.assign(n, false);
    for (State k = 1; k < n; ++k) {
        auto prev = x.out_set(k - 1), cur = x.out_set(k);
        x.out_differs[k] = !std::equal(prev.begin(), prev.end(), cur.begin(), cur.end());
    }
    return x;
}

enum class TraceEvent { Seed, Dequeue, SetFromJmin, SetFromJmax };

inline const char* to_string(TraceEvent e) {
    switch (e) {
    case TraceEvent::Seed: return "SEED";
    case TraceEvent::Dequeue: return "DEQUEUE";
    case TraceEvent::SetFromJmin: return "SET-from-jmin";
    case TraceEvent::SetFromJmax: return "SET-from-jmax";
    }
    return "?";
}

/// `boundary` is the 0-based state k of split_before(k); printed as k+1.
struct TraceRecord {
    TraceEvent event;
    State boundary;
};

struct BoundaryRun {
    BoundaryBits bits;
    std::size_t enqueues = 0;
    std::vector<TraceRecord> trace;
};

/**
 * Boundary array of the maximum Wheeler autobisimulation.
 *
 * Seeds every boundary between states that disagree on finality or on their
 * outgoing label sets, then propagates splits through a FIFO queue: a split
 * before state i forces a split before j_min[i] (when that is not the initial
 * state) and after j_max[i-1] (when that is not the last state). Each boundary
 * is enqueued at most once, so the whole run is O(|E|).
 */
inline BoundaryRun compute_boundary_bits(const WheelerNfa& a, bool record_trace = false) {
    const std::size_t n = a.num_states();
    const IncidenceExtrema x = compute_extrema(a);
    BoundaryRun run{BoundaryBits(n), 0, {}};
    std::deque<State> queue;

    auto log = [&](TraceEvent ev, State k) {
        if (record_trace) run.trace.push_back({ev, k});
    };
    auto split = [&](State k, TraceEvent ev) {
        run.bits.set_split_before(k);
        queue.push_back(k);
        ++run.enqueues;
        log(ev, k);
    };

    for (State k = 1; k < n; ++k) {
        if (a.is_final(k - 1) != a.is_final(k) || x.out_differs[k]) split(k, TraceEvent::Seed);
    }
    while (!queue.empty()) {
        const State i = queue.front();
        queue.pop_front();
        log(TraceEvent::Dequeue, i);
        // Defined for every non-initial state of a valid input.
        const State jmin = x.j_min[i].value_or(0);
        if (jmin >= 1 && !run.bits.split_before(jmin)) split(jmin, TraceEvent::SetFromJmin);
        if (const auto jmax = x.j_max[i - 1]; jmax && *jmax + 1 < n && !run.bits.split_before(*jmax + 1)) {
            split(*jmax + 1, TraceEvent::SetFromJmax);
        }
    }
    return run;
}

inline BoundaryBits boundary_bits(const WheelerNfa& a) { return compute_boundary_bits(a).bits; }

/// A quotient automaton and the monotone surjective map from input states to its states.
struct QuotientResult {
    WheelerNfa quotient;
    std::vector<State> class_map;

    /// {(u, class_map[u])}: the relation from the input to the quotient.
    Relation as_relation() const { return Relation::from_map(class_map, quotient.num_states()); }
};

/**
 * Collapses each maximal run of states not separated by a boundary into one
 * state. Edges and finals are the deduplicated images of the input's. `b` must
 * encode a Wheeler autobisimulation of `a` (e.g. from boundary_bits).
 */
inline QuotientResult quotient(const WheelerNfa& a, const BoundaryBits& b) {
    const std::size_t n = a.num_states();
    if (b.num_states() != n) throw std::invalid_argument("quotient: boundary array size mismatch");

    std::vector<State> class_map(n, 0);
    for (State k = 1; k < n; ++k) class_map[k] = class_map[k - 1] + (b.split_before(k) ? 1 : 0);
    const std::size_t m = static_cast<std::size_t>(class_map.back()) + 1;

    std::vector<Edge> edges;
    edges.reserve(a.num_edges());
    for (const Edge& e : a.edges()) edges.push_back({class_map[e.source], class_map[e.target], e.label});
    sort_by_source_label_target(edges, m, a.alphabet().size());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<bool> final_class(m, false);
    for (State u = 0; u < n; ++u) {
        if (a.is_final(u)) final_class[class_map[u]] = true;
    }
    std::vector<State> finals;
    for (State c = 0; c < m; ++c) {
        if (final_class[c]) finals.push_back(c);
    }

    QuotientResult r{WheelerNfa(a.alphabet(), m, std::move(edges), std::move(finals)), std::move(class_map)};
    if (a.is_deterministic() && !r.quotient.is_deterministic()) {
        throw std::logic_error("quotient of a DFA is not deterministic; boundary array is not an autobisimulation");
    }
    return r;
}

/// The minimal Wheeler NFA Wheeler-bisimilar to `a`, in O(|E|) time.
inline QuotientResult minimize(const WheelerNfa& a) { return quotient(a, boundary_bits(a)); }

} // namespace wheeler

#endif // WHEELER_MINIMIZE_HPP
