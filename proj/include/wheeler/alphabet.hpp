#ifndef WHEELER_ALPHABET_HPP
#define WHEELER_ALPHABET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wheeler {

/// Rank of a symbol in its alphabet. Comparing ranks compares symbols.
using Symbol = std::uint32_t;

/**
 * A finite alphabet with a strict total order on its symbols.
 *
 * Symbols are arbitrary non-empty tokens without whitespace. The order is the
 * declaration order: the first token is the smallest.
 */
class OrderedAlphabet {
public:
    OrderedAlphabet() = default;

    explicit OrderedAlphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            const std::string& tok = tokens_[i];
            if (!is_valid_token(tok)) {
                throw std::invalid_argument("invalid alphabet token '" + tok + "'");
            }
            if (!rank_.emplace(tok, static_cast<Symbol>(i)).second) {
                throw std::invalid_argument("duplicate alphabet token '" + tok + "'");
            }
        }
    }

    /// The first `count` symbols of a, b, c, ...; falls back to s0, s1, ... beyond 26.
    static OrderedAlphabet letters(std::size_t count) {
        std::vector<std::string> toks;
        toks.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            toks.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
        }
        return OrderedAlphabet(std::move(toks));
    }

    static bool is_valid_token(std::string_view tok) {
        if (tok.empty()) return false;
        for (char c : tok) {
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' || c == '#') return false;
        }
        return true;
    }

    std::size_t size() const noexcept { return tokens_.size(); }
    bool empty() const noexcept { return tokens_.empty(); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }

    const std::string& token(Symbol s) const { return tokens_.at(s); }

    std::optional<Symbol> find(std::string_view tok) const {
        auto it = rank_.find(tok);
        if (it == rank_.end()) return std::nullopt;
        return it->second;
    }

    Symbol rank(std::string_view tok) const {
        if (auto r = find(tok)) return *r;
        throw std::out_of_range("unknown symbol '" + std::string(tok) + "'");
    }

    friend bool operator==(const OrderedAlphabet& a, const OrderedAlphabet& b) { return a.tokens_ == b.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::map<std::string, Symbol, std::less<>> rank_;
};

} // namespace wheeler

#endif // WHEELER_ALPHABET_HPP
