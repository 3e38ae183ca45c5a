#pragma once

#include "grasscalc/graded_ring.hpp"
#include "grasscalc/partition.hpp"

#include <map>

namespace grasscalc {

// Ambient data of a rank-d quotient Grassmann bundle over an n-fold:
// rank r of the bundle, quotient rank d with 0 < d < r.
struct GrassSetup {
    unsigned base_dim;
    unsigned rank;
    unsigned quot_rank;

    GrassSetup(unsigned n, unsigned r, unsigned d);

    unsigned rel_dim() const { return quot_rank * (rank - quot_rank); }
    unsigned m() const { return rel_dim() + 1; }
    // The d x (r-d) rectangle absorbed by the push-forward.
    Partition epsilon() const { return Partition::rectangle(quot_rank, rank - quot_rank); }
};

// Finite combination sum_mu alpha_mu (x) S_mu over partitions mu with at
// most quot_rank rows, where S_mu is the Schur determinant of the
// universal quotient's unsigned Segre series and alpha_mu lives in the
// base ring. Powers of the quotient's first Chern class and pullbacks of
// base classes all land here.
class FiberedClass {
public:
    FiberedClass(RingPtr ring, unsigned quot_rank);

    const RingPtr& ring() const { return ring_; }
    unsigned quot_rank() const { return quot_rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, GradedElement>& terms() const { return terms_; }
    GradedElement coefficient(const Partition& mu) const;

    // Collects into the mu slot; rejects partitions with more than
    // quot_rank rows and coefficients from a different ring.
    void add_term(const Partition& mu, const GradedElement& coeff);

    // deg(alpha_mu) + |mu| when constant across terms; nullopt otherwise
    // (and for the zero class).
    std::optional<unsigned> homogeneous_degree() const;

    friend bool operator==(const FiberedClass&, const FiberedClass&) = default;

private:
    RingPtr ring_;
    unsigned quot_rank_;
    std::map<Partition, GradedElement> terms_;
};

// c1 of the universal quotient: the mu = (1) basis term with unit coefficient.
FiberedClass chi(const RingPtr& ring, const GrassSetup& setup);

// c1(Q) - (d/r) * pullback of c1E; c1E must be homogeneous of degree 1.
FiberedClass theta(const GrassSetup& setup, const GradedElement& c1E);

// Single-box Pieri step: each S_mu becomes the sum of S_{mu+box} over the
// at-most-quot_rank-row results.
FiberedClass mul_by_chi(const FiberedClass& F);

// Scales every coefficient by a base class (truncating in the base ring).
FiberedClass mul_by_pullback(const FiberedClass& F, const GradedElement& alpha);

// Product with a class supported on {empty, (1)} only, i.e. a*chi + pullback.
FiberedClass mul_linear(const FiberedClass& F, const FiberedClass& linear);

// N-th power of a class supported on {empty, (1)}; general Schur-basis
// products are out of scope and rejected.
FiberedClass power(const FiberedClass& F, unsigned N);

// Push-forward to the base: termwise alpha_mu (x) S_mu goes to
// alpha_mu * schur_det(mu padded to d rows minus the epsilon rectangle,
// segreE); sequences with negative entries resolve through the
// determinant convention. Lowers degree by d(r-d).
GradedElement pushforward(const FiberedClass& F, const GrassSetup& setup,
                          const ClassSeries& segreE);

// Closed form for the push-forward of chi^N: the weighted sum of Schur
// terms of weight N - d(r-d) with tableau-count coefficients. Zero below
// the degree shift and (by truncation) above base_dim past it.
GradedElement pushforward_chi_power_closedform(unsigned N, const GrassSetup& setup,
                                               const ClassSeries& segreE);

// Both sides of the three tableau-count ratio identities tied to the
// rectangle: adding one box, a vertical domino, a horizontal domino.
// For quot_rank = 1 the vertical-domino side is defined as 0 = 0.
struct FNumberIdentities {
    Rational box_lhs, box_rhs;
    Rational vertical_lhs, vertical_rhs;
    Rational horizontal_lhs, horizontal_rhs;
};
FNumberIdentities f_coefficient_identities(const GrassSetup& setup);

// Divisor class chi * pullback(b0) + pullback(b1); b0 must be homogeneous
// of degree 0 and b1 of degree 1.
FiberedClass leray_hirsch_divisor(const GrassSetup& setup, const GradedElement& b0,
                                  const GradedElement& b1);

// d = 1 only: codimension-N class sum_i pullback(betas[i]) * xi^(N-i)
// with N = betas.size() - 1 <= r - 1; betas[i] homogeneous of degree i.
FiberedClass d1_polynomial_class(const GrassSetup& setup,
                                 const std::vector<GradedElement>& betas);

}  // namespace grasscalc
