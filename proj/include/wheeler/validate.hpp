#ifndef WHEELER_VALIDATE_HPP
#define WHEELER_VALIDATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "wheeler/nfa.hpp"
#include "wheeler/radix.hpp"

namespace wheeler {

enum class ViolationKind { NotReachable, NotCoReachable, Axiom2, Axiom3, DuplicateEdge, BadInitial };

inline const char* to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::NotReachable: return "NotReachable";
    case ViolationKind::NotCoReachable: return "NotCoReachable";
    case ViolationKind::Axiom2: return "Axiom2";
    case ViolationKind::Axiom3: return "Axiom3";
    case ViolationKind::DuplicateEdge: return "DuplicateEdge";
    case ViolationKind::BadInitial: return "BadInitial";
    }
    return "?";
}

/// A single problem. Reachability kinds carry `state`; axiom kinds carry the
/// edge pair with `first.target < second.target`.
struct Violation {
    ViolationKind kind;
    std::optional<State> state;
    std::optional<Edge> first;
    std::optional<Edge> second;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ViolationKind k) const {
        for (const Violation& v : violations) {
            if (v.kind == k) return true;
        }
        return false;
    }
};

namespace detail {

inline std::vector<char> forward_reachable(const WheelerNfa& a) {
    std::vector<char> seen(a.num_states(), 0);
    std::vector<State> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        State u = stack.back();
        stack.pop_back();
        for (const Edge& e : a.out_edges(u)) {
            if (!seen[e.target]) {
                seen[e.target] = 1;
                stack.push_back(e.target);
            }
        }
    }
    return seen;
}

inline std::vector<char> co_reachable(const WheelerNfa& a) {
    const std::size_t n = a.num_states();
    std::vector<std::size_t> in_begin(n + 1, 0);
    for (const Edge& e : a.edges()) ++in_begin[e.target + 1];
    for (std::size_t i = 1; i <= n; ++i) in_begin[i] += in_begin[i - 1];
    std::vector<State> preds(a.num_edges());
    {
        std::vector<std::size_t> fill(in_begin.begin(), in_begin.end() - 1);
        for (const Edge& e : a.edges()) preds[fill[e.target]++] = e.source;
    }
    std::vector<char> seen(n, 0);
    std::vector<State> stack;
    for (State u = 0; u < n; ++u) {
        if (a.is_final(u)) {
            seen[u] = 1;
            stack.push_back(u);
        }
    }
    while (!stack.empty()) {
        State v = stack.back();
        stack.pop_back();
        for (std::size_t k = in_begin[v]; k < in_begin[v + 1]; ++k) {
            if (!seen[preds[k]]) {
                seen[preds[k]] = 1;
                stack.push_back(preds[k]);
            }
        }
    }
    return seen;
}

} // namespace detail

/**
 * Checks that the position order is a Wheeler order and that every state is
 * reachable and co-reachable.
 *
 * Axiom checks work on sorted edge lists: for each target (resp. each label and
 * target) the smallest incoming label (resp. source) is compared against the
 * running maximum over all smaller targets. One witness is reported per
 * offending target, so the report is empty iff no violating pair exists.
 */
inline ValidationReport validate(const WheelerNfa& a) {
    ValidationReport report;
    const std::size_t n = a.num_states();
    const std::size_t sigma = a.alphabet().size();

    auto reach = detail::forward_reachable(a);
    for (State u = 0; u < n; ++u) {
        if (!reach[u]) report.violations.push_back({ViolationKind::NotReachable, u, {}, {}});
    }
    auto coreach = detail::co_reachable(a);
    for (State u = 0; u < n; ++u) {
        if (!coreach[u]) report.violations.push_back({ViolationKind::NotCoReachable, u, {}, {}});
    }

    std::vector<Edge> edges(a.edges().begin(), a.edges().end());

    // Axiom 2: v < v' implies label(v) <= label(v').
    sort_by_target_label_source(edges, n, sigma);
    {
        std::optional<Edge> max_before;  // largest label entering a strictly smaller target
        std::optional<Edge> max_current;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const Edge& e = edges[k];
            bool first_of_target = k == 0 || edges[k - 1].target != e.target;
            if (first_of_target) {
                if (max_current && (!max_before || max_current->label > max_before->label)) max_before = max_current;
                max_current.reset();
                if (max_before && max_before->label > e.label) {
                    report.violations.push_back({ViolationKind::Axiom2, {}, *max_before, e});
                }
            }
            if (!max_current || e.label >= max_current->label) max_current = e;
        }
    }

    // Axiom 3: equal labels and v < v' implies u <= u'.
    sort_by_label_target_source(edges, n, sigma);
    {
        std::optional<Edge> max_before;
        std::optional<Edge> max_current;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const Edge& e = edges[k];
            if (k == 0 || edges[k - 1].label != e.label) {
                max_before.reset();
                max_current.reset();
            }
            bool first_of_target = k == 0 || edges[k - 1].target != e.target || edges[k - 1].label != e.label;
            if (first_of_target) {
                if (max_current && (!max_before || max_current->source > max_before->source)) max_before = max_current;
                max_current.reset();
                if (max_before && max_before->source > e.source) {
                    report.violations.push_back({ViolationKind::Axiom3, {}, *max_before, e});
                }
            }
            if (!max_current || e.source >= max_current->source) max_current = e;
        }
    }
    return report;
}

/// One line per violation, 1-based states, e.g. `Axiom2 (1,3,c) (1,2,b)`.
inline std::string describe(const WheelerNfa& a, const Violation& v) {
    auto edge = [&](const Edge& e) {
        return "(" + std::to_string(e.source + 1) + "," + std::to_string(e.target + 1) + "," +
               a.alphabet().token(e.label) + ")";
    };
    std::string s = to_string(v.kind);
    if (v.state) s += " state " + std::to_string(*v.state + 1);
    if (v.first) s += " " + edge(*v.first);
    if (v.second) s += " " + edge(*v.second);
    return s;
}

} // namespace wheeler

#endif // WHEELER_VALIDATE_HPP
