#pragma once

#include "grasscalc/partition.hpp"
#include "grasscalc/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grasscalc {

struct Generator {
    std::string name;
    unsigned degree = 0;  // degree-0 generators are allowed (formal scalars)
};

// Immutable generator table of a truncated graded polynomial ring:
// everything of total degree > truncation() is identically zero.
// Elements belong to a ring *instance*; operands from different
// instances are rejected even if the tables coincide.
class GradedRing {
public:
    static std::shared_ptr<const GradedRing> create(std::vector<Generator> generators,
                                                    unsigned truncation);

    unsigned truncation() const { return truncation_; }
    unsigned generator_count() const { return static_cast<unsigned>(generators_.size()); }
    const Generator& generator(unsigned i) const { return generators_.at(i); }
    const std::vector<Generator>& generators() const { return generators_; }
    std::optional<unsigned> index_of(std::string_view name) const;

    unsigned monomial_degree(const std::vector<unsigned>& exponents) const;

private:
    GradedRing(std::vector<Generator> generators, unsigned truncation);
    std::vector<Generator> generators_;
    std::map<std::string, unsigned, std::less<>> index_;
    unsigned truncation_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

// Exponent vector over a ring's generator table with its weighted degree
// precomputed; ordered degree-first, then lexicographically.
struct Monomial {
    unsigned degree = 0;
    std::vector<unsigned> exponents;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class GradedElement {
public:
    GradedElement() = default;  // detached zero; usable only as assignment target
    explicit GradedElement(RingPtr ring) : ring_(std::move(ring)) {}

    static GradedElement unit(const RingPtr& ring);
    static GradedElement constant(const RingPtr& ring, const Rational& value);
    static GradedElement generator(const RingPtr& ring, std::string_view name);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& mono) const;

    GradedElement& operator+=(const GradedElement& rhs);
    GradedElement& operator-=(const GradedElement& rhs);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    GradedElement operator-() const;
    GradedElement operator*(const GradedElement& rhs) const;
    GradedElement operator*(const Rational& scalar) const;
    friend GradedElement operator*(const Rational& scalar, const GradedElement& e) {
        return e * scalar;
    }
    friend bool operator==(const GradedElement&, const GradedElement&) = default;

    // Homogeneous degree-k component.
    GradedElement degree_part(unsigned k) const;
    // True when every stored monomial has degree k (zero qualifies for any k).
    bool is_homogeneous_of(unsigned k) const;
    // The common degree of all terms, or nullopt for zero / mixed elements.
    std::optional<unsigned> homogeneous_degree() const;

    // True when some term involves the named generator.
    bool depends_on(std::string_view name) const;
    // Evaluates one generator at a rational value; degrees are recomputed
    // and anything landing above the truncation is dropped.
    GradedElement substitute(std::string_view name, const Rational& value) const;

    // Deterministic human-readable form, e.g. "c2 - 1/4*c1^2"; "0" for zero.
    std::string str() const;

    // Adds coeff * monomial, collecting and dropping zeros; monomials above
    // the truncation degree are discarded silently.
    void add_term(Monomial mono, const Rational& coeff);

private:
    void require_same_ring(const GradedElement& other) const;
    RingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

// Total class: component k is homogeneous of degree k and component 0 is 1.
class ClassSeries {
public:
    ClassSeries(RingPtr ring, std::vector<GradedElement> components);
    static ClassSeries one(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    unsigned truncation() const;
    // Zero outside 0..truncation; the ring unit at k = 0.
    GradedElement component(int k) const;

    GradedElement total() const;

    // Multiplicative inverse t with (this)*t = 1 up to the truncation.
    ClassSeries inverse() const;
    // Unsigned Segre components s_k = (-1)^k * inverse_k, so s1 = c1 and
    // s2 = c1^2 - c2 for a total Chern class.
    ClassSeries unsigned_segre() const;

private:
    RingPtr ring_;
    std::vector<GradedElement> components_;  // size truncation + 1
};

// Total class 1 + g_1 + g_2 + ... from existing generators, where names[i]
// must name a generator of degree i+1; components beyond the list are zero.
ClassSeries total_class_from_generators(const RingPtr& ring,
                                        const std::vector<std::string>& names);

// Schur determinant det[ c_{seq_i + j - i} ] over the series components,
// defined for arbitrary integer sequences (entries outside 0..truncation
// are zero, the 0th is 1); for a partition this is the Schur polynomial.
GradedElement schur_det(const std::vector<int>& seq, const ClassSeries& series);
GradedElement schur_det(const Partition& lam, const ClassSeries& series);

// c2 - ((rank-1)/(2*rank)) * c1^2; rank = 0 is rejected.
GradedElement discriminant(unsigned rank, const GradedElement& c1,
                           const GradedElement& c2);

}  // namespace grasscalc
