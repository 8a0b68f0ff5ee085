#ifndef WHEELER_IO_HPP
#define WHEELER_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wheeler/minimize.hpp"
#include "wheeler/nfa.hpp"
#include "wheeler/relation.hpp"

namespace wheeler {

/// Syntax or content error in a text document; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

/// Splits a document into non-empty lines of whitespace-separated tokens, dropping `#` comments.
inline std::vector<Line> tokenize(std::string_view doc) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!doc.empty()) {
        ++number;
        std::size_t eol = doc.find('\n');
        std::string_view line = doc.substr(0, eol);
        doc = eol == std::string_view::npos ? std::string_view{} : doc.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line out{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) out.tokens.push_back({line.substr(start, i - start), start + 1});
        }
        if (!out.tokens.empty()) lines.push_back(std::move(out));
    }
    return lines;
}

inline std::size_t parse_count(const Line& line, const Token& tok) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        throw ParseError(line.number, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
    }
    return value;
}

/// 1-based index in [1, bound], returned 0-based.
inline State parse_index(const Line& line, const Token& tok, std::size_t bound) {
    std::size_t v = parse_count(line, tok);
    if (v < 1 || v > bound) {
        throw ParseError(line.number, tok.column,
                         "state index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
    }
    return static_cast<State>(v - 1);
}

inline const Line& expect_directive(const std::vector<Line>& lines, std::size_t k, std::string_view name) {
    if (k >= lines.size()) {
        std::size_t at = lines.empty() ? 1 : lines.back().number + 1;
        throw ParseError(at, 1, "missing '" + std::string(name) + "' header");
    }
    const Line& line = lines[k];
    if (line.tokens[0].text != name) {
        throw ParseError(line.number, 1,
                         "expected '" + std::string(name) + "', got '" + std::string(line.tokens[0].text) + "'");
    }
    return line;
}

} // namespace detail

/**
 * Parses a `.wnfa` document:
 *
 *     alphabet <tok1> <tok2> ...     # declares the symbol order
 *     states <n>
 *     final <i1> <i2> ...            # possibly empty
 *     edge <src> <dst> <tok>         # zero or more, 1-based states
 *
 * State 1 is the initial state; states are listed in Wheeler order.
 */
inline WheelerNfa parse_wnfa(std::string_view doc) {
    const auto lines = detail::tokenize(doc);
    for (const auto& line : lines) {
        if (line.tokens[0].text == "initial") {
            throw ParseError(line.number, 1, "'initial' is not allowed; state 1 is always initial");
        }
    }

    const auto& alpha = detail::expect_directive(lines, 0, "alphabet");
    std::vector<std::string> toks;
    for (std::size_t k = 1; k < alpha.tokens.size(); ++k) toks.emplace_back(alpha.tokens[k].text);
    OrderedAlphabet alphabet;
    try {
        alphabet = OrderedAlphabet(toks);
    } catch (const std::invalid_argument& e) {
        throw ParseError(alpha.number, 1, e.what());
    }

    const auto& states = detail::expect_directive(lines, 1, "states");
    if (states.tokens.size() != 2) throw ParseError(states.number, 1, "'states' takes exactly one count");
    const std::size_t n = detail::parse_count(states, states.tokens[1]);
    if (n == 0) throw ParseError(states.number, states.tokens[1].column, "an automaton needs at least one state");

    const auto& fin = detail::expect_directive(lines, 2, "final");
    std::vector<State> finals;
    for (std::size_t k = 1; k < fin.tokens.size(); ++k) finals.push_back(detail::parse_index(fin, fin.tokens[k], n));

    std::vector<Edge> edges;
    std::vector<std::size_t> edge_line;
    for (std::size_t k = 3; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.tokens[0].text != "edge") {
            throw ParseError(line.number, 1, "unexpected directive '" + std::string(line.tokens[0].text) + "'");
        }
        if (line.tokens.size() != 4) throw ParseError(line.number, 1, "'edge' takes <src> <dst> <symbol>");
        State src = detail::parse_index(line, line.tokens[1], n);
        State dst = detail::parse_index(line, line.tokens[2], n);
        auto sym = alphabet.find(line.tokens[3].text);
        if (!sym) {
            throw ParseError(line.number, line.tokens[3].column,
                             "unknown symbol '" + std::string(line.tokens[3].text) + "'");
        }
        edges.push_back({src, dst, *sym});
        edge_line.push_back(line.number);
    }
    {
        std::vector<std::size_t> order(edges.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return source_label_target_less(edges[x], edges[y]);
        });
        for (std::size_t k = 1; k < order.size(); ++k) {
            if (edges[order[k]] == edges[order[k - 1]]) throw ParseError(edge_line[order[k]], 1, "duplicate edge");
        }
    }
    return WheelerNfa(std::move(alphabet), n, std::move(edges), std::move(finals));
}

/// Canonical document: declared alphabet order, edges by (source, label, target).
inline std::string serialize_wnfa(const WheelerNfa& a) {
    std::ostringstream out;
    out << "alphabet";
    for (const auto& t : a.alphabet().tokens()) out << ' ' << t;
    out << "\nstates " << a.num_states() << "\nfinal";
    for (State f : a.finals()) out << ' ' << f + 1;
    out << '\n';
    for (const Edge& e : a.edges()) {
        out << "edge " << e.source + 1 << ' ' << e.target + 1 << ' ' << a.alphabet().token(e.label) << '\n';
    }
    return out.str();
}

inline std::string to_dot(const WheelerNfa& a) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream out;
    out << "digraph wnfa {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n  start -> 1;\n";
    for (State u = 0; u < a.num_states(); ++u) {
        out << "  " << u + 1 << " [label=\"" << u + 1 << "\"" << (a.is_final(u) ? ", shape=doublecircle" : "")
            << "];\n";
    }
    for (const Edge& e : a.edges()) {
        out << "  " << e.source + 1 << " -> " << e.target + 1 << " [label=" << quote(a.alphabet().token(e.label))
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

/// `relation <n> <n'>` followed by `pair <i> <j>` lines (1-based).
inline Relation parse_relation(std::string_view doc) {
    const auto lines = detail::tokenize(doc);
    const auto& head = detail::expect_directive(lines, 0, "relation");
    if (head.tokens.size() != 3) throw ParseError(head.number, 1, "'relation' takes <n> <n'>");
    const std::size_t left = detail::parse_count(head, head.tokens[1]);
    const std::size_t right = detail::parse_count(head, head.tokens[2]);
    std::vector<StatePair> pairs;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.tokens[0].text != "pair" || line.tokens.size() != 3) {
            throw ParseError(line.number, 1, "expected 'pair <i> <j>'");
        }
        pairs.emplace_back(detail::parse_index(line, line.tokens[1], left), detail::parse_index(line, line.tokens[2], right));
    }
    return Relation(left, right, std::move(pairs));
}

inline std::string serialize_relation(const Relation& r) {
    std::ostringstream out;
    out << "relation " << r.left_size() << ' ' << r.right_size() << '\n';
    for (const auto& [i, j] : r.pairs()) out << "pair " << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

/// `class <input-index> <quotient-index>` lines, 1-based.
inline std::string serialize_class_map(const std::vector<State>& class_map) {
    std::ostringstream out;
    for (State u = 0; u < class_map.size(); ++u) out << "class " << u + 1 << ' ' << class_map[u] + 1 << '\n';
    return out.str();
}

/// One `EVENT<TAB>index` record per line; index is the 1-based boundary position.
inline std::string serialize_trace(const std::vector<TraceRecord>& trace) {
    std::ostringstream out;
    for (const auto& r : trace) out << to_string(r.event) << '\t' << r.boundary + 1 << '\n';
    return out.str();
}

} // namespace wheeler

#endif // WHEELER_IO_HPP
