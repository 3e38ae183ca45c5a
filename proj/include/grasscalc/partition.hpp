#pragma once

#include "grasscalc/rational.hpp"

#include <vector>

namespace grasscalc {

// Weakly decreasing sequence of positive integers in canonical form
// (no trailing zeros), so distinct diagrams are distinct values and
// the type can serve as an ordered map key.
class Partition {
public:
    Partition() = default;
    // Strips trailing zeros; throws std::invalid_argument if the parts
    // ever increase or an interior entry is zero.
    explicit Partition(std::vector<unsigned> parts);

    // `rows` copies of `entry`; the empty partition when entry = 0.
    static Partition rectangle(unsigned rows, unsigned entry);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    unsigned weight() const;
    // 0-based; zero beyond the stored length.
    unsigned part(unsigned i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    std::string str() const;  // "(3,1)" / "()"

    friend bool operator==(const Partition&, const Partition&) = default;
    // Total order used for map keys and serialization: weight first,
    // then the parts lexicographically.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts_ < b.parts_;
    }

private:
    std::vector<unsigned> parts_;
};

// Zero-pads both operands to length pad_to and adds componentwise.
// Throws if either operand is longer than pad_to.
Partition add_padded(const Partition& a, const Partition& b, unsigned pad_to);

// All partitions obtained from lam by adding a single box, keeping at
// most max_rows rows; returned in lexicographically decreasing order.
std::vector<Partition> pieri_add_box(const Partition& lam, unsigned max_rows);

// All partitions obtained from lam by removing a single box (one per
// removable corner), top row first.
std::vector<Partition> remove_corner_results(const Partition& lam);

// Tableau count f^lam by the shifted-factorial product formula;
// defined as 1 for length <= 1 (including the empty shape).
BigInt syt_count_formula(const Partition& lam);

// Independent oracle: exhaustively places the labels 1..|lam| so rows
// and columns increase. Throws std::invalid_argument above the cap.
BigInt syt_count_bruteforce(const Partition& lam, unsigned cap = 12);

// All partitions of the given weight with at most max_length rows,
// in lexicographically decreasing order.
std::vector<Partition> partitions_of(unsigned weight, unsigned max_length);

}  // namespace grasscalc
