#ifndef WHEELER_PARTITION_HPP
#define WHEELER_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wheeler/relation.hpp"

namespace wheeler {

/**
 * A partition of the states 0..n-1. Class ids are consecutive from 0 and are
 * numbered in order of first occurrence, so two partitions with the same
 * blocks compare equal. Classes need not be intervals.
 */
class Partition {
public:
    explicit Partition(std::vector<std::uint32_t> class_of) : class_of_(std::move(class_of)) { renumber(); }

    std::size_t num_states() const noexcept { return class_of_.size(); }
    std::size_t num_classes() const noexcept { return num_classes_; }
    std::uint32_t class_of(State u) const { return class_of_.at(u); }
    const std::vector<std::uint32_t>& class_map() const noexcept { return class_of_; }

    std::vector<std::vector<State>> classes() const {
        std::vector<std::vector<State>> out(num_classes_);
        for (State u = 0; u < class_of_.size(); ++u) out[class_of_[u]].push_back(u);
        return out;
    }

    /// The equivalence relation {(u, v) : u and v share a class}.
    Relation to_relation() const {
        std::vector<StatePair> p;
        for (const auto& cls : classes()) {
            for (State u : cls) {
                for (State v : cls) p.emplace_back(u, v);
            }
        }
        return Relation(num_states(), num_states(), std::move(p));
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    void renumber() {
        std::vector<std::uint32_t> remap;
        for (auto& c : class_of_) {
            if (c >= remap.size()) remap.resize(c + 1, UINT32_MAX);
            if (remap[c] == UINT32_MAX) remap[c] = static_cast<std::uint32_t>(num_classes_++);
            c = remap[c];
        }
    }

    std::vector<std::uint32_t> class_of_;
    std::size_t num_classes_ = 0;
};

/**
 * Boundary encoding of a convex partition of 0..n-1 into consecutive
 * intervals: `split_before(k)` for 1 <= k < n says whether states k-1 and k lie
 * in different classes. In 1-based text output this is bit k+1.
 */
class BoundaryBits {
public:
    explicit BoundaryBits(std::size_t num_states, bool value = false)
        : num_states_(num_states), bits_(num_states == 0 ? 0 : num_states - 1, value) {}

    std::size_t num_states() const noexcept { return num_states_; }

    bool split_before(State k) const { return bits_.at(k - 1); }
    void set_split_before(State k, bool v = true) { bits_.at(k - 1) = v; }

    std::size_t num_classes() const {
        std::size_t c = num_states_ == 0 ? 0 : 1;
        for (bool b : bits_) c += b ? 1 : 0;
        return c;
    }

    /// Bit string in 1-based order B[2..n], e.g. "101".
    std::string to_string() const {
        std::string s;
        for (bool b : bits_) s += b ? '1' : '0';
        return s;
    }

    friend BoundaryBits operator&(const BoundaryBits& a, const BoundaryBits& b) {
        if (a.num_states_ != b.num_states_) throw std::invalid_argument("boundary size mismatch");
        BoundaryBits out(a.num_states_);
        for (std::size_t k = 0; k < a.bits_.size(); ++k) out.bits_[k] = a.bits_[k] && b.bits_[k];
        return out;
    }

    friend bool operator==(const BoundaryBits&, const BoundaryBits&) = default;

private:
    std::size_t num_states_;
    std::vector<bool> bits_;
};

/// Positions sharing a class iff no boundary separates them; classes are intervals.
inline Partition equivalence_from_bits(const BoundaryBits& b) {
    std::vector<std::uint32_t> cls(b.num_states(), 0);
    for (State k = 1; k < b.num_states(); ++k) cls[k] = cls[k - 1] + (b.split_before(k) ? 1 : 0);
    return Partition(std::move(cls));
}

/// Inverse of equivalence_from_bits for convex partitions; nullopt otherwise.
inline std::optional<BoundaryBits> bits_from_partition(const Partition& p) {
    BoundaryBits b(p.num_states());
    std::uint32_t expected = 0;
    for (State k = 1; k < p.num_states(); ++k) {
        if (p.class_of(k) != p.class_of(k - 1)) {
            if (p.class_of(k) != ++expected) return std::nullopt;
            b.set_split_before(k);
        }
    }
    return b;
}

} // namespace wheeler

#endif // WHEELER_PARTITION_HPP
