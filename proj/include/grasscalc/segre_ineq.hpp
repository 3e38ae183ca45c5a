#pragma once

#include "grasscalc/graded_ring.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasscalc {

// Ring underlying the divisor-data Segre sums: generators b0..bN of
// degree 0..N, then c1..c_min(r,n), then H of degree 1; truncated at n.
RingPtr make_ineq_ring(unsigned r, unsigned n, unsigned N);

// Canonical key for an intersection monomial: generators in declaration
// order joined by '*', exponents spelled '^e' when e > 1 (e.g.
// "b0*c1^2"); the empty monomial is "1".
std::string monomial_key(const RingPtr& ring, const Monomial& mono);

// Numeric intersection data: canonical monomial key -> exact rational.
// Missing keys are reported at evaluation time, never read as zero.
class IntersectionTable {
public:
    IntersectionTable() = default;
    static IntersectionTable from_json(const nlohmann::json& j);

    void insert(std::string key, Rational value);
    const std::map<std::string, Rational>& entries() const { return entries_; }

    // Checks every key against the ring's canonical grammar and the
    // expected total degree; throws std::invalid_argument on offenders.
    void validate(const RingPtr& ring, unsigned expected_degree) const;

private:
    std::map<std::string, Rational> entries_;
};

class MissingMonomialsError : public std::runtime_error {
public:
    explicit MissingMonomialsError(std::vector<std::string> keys);
    const std::vector<std::string>& keys() const { return keys_; }

private:
    std::vector<std::string> keys_;
};

// Degree-n class sum_i b_i * s_{k-i} * H^(n-k) with the unsigned Segre
// components expanded in the Chern generators; terms with i > N are
// absent (those divisor data vanish) as are those with k - i < 0.
GradedElement segre_lhs_symbolic(unsigned r, unsigned n, unsigned k, unsigned N);

// Linear evaluation of a degree-n element against the table; throws
// MissingMonomialsError listing every absent key.
Rational evaluate(const GradedElement& expr, const IntersectionTable& table);

struct InequalityEntry {
    unsigned k = 0;
    Rational value;
    bool nonnegative = true;
};

struct InequalityReport {
    std::vector<InequalityEntry> entries;
    bool any_violation = false;
};

// Values and signs of the divisor-data Segre sums for every k in 1..n.
// Reports signs only; a violation means the table cannot come from the
// nef situation, never the converse.
InequalityReport check_inequalities(unsigned r, unsigned n, unsigned N,
                                    const IntersectionTable& table);

nlohmann::json inequality_report_to_json(const InequalityReport& report);

}  // namespace grasscalc
