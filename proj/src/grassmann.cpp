#include "grasscalc/grassmann.hpp"

#include <stdexcept>

namespace grasscalc {

GrassSetup::GrassSetup(unsigned n, unsigned r, unsigned d)
    : base_dim(n), rank(r), quot_rank(d) {
    if (d == 0 || d >= r)
        throw std::invalid_argument("GrassSetup: need 0 < d < r");
}

FiberedClass::FiberedClass(RingPtr ring, unsigned quot_rank)
    : ring_(std::move(ring)), quot_rank_(quot_rank) {
    if (quot_rank_ == 0)
        throw std::invalid_argument("FiberedClass: quotient rank must be positive");
}

GradedElement FiberedClass::coefficient(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? GradedElement(ring_) : it->second;
}

void FiberedClass::add_term(const Partition& mu, const GradedElement& coeff) {
    if (coeff.ring() != ring_)
        throw std::invalid_argument("FiberedClass: coefficient from a different ring");
    if (mu.length() > quot_rank_)
        throw std::invalid_argument("FiberedClass: partition " + mu.str() +
                                    " has more than " + std::to_string(quot_rank_) +
                                    " rows");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mu, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<unsigned> FiberedClass::homogeneous_degree() const {
    std::optional<unsigned> degree;
    for (const auto& [mu, coeff] : terms_) {
        const auto coeff_degree = coeff.homogeneous_degree();
        if (!coeff_degree) return std::nullopt;
        const unsigned total = *coeff_degree + mu.weight();
        if (degree && *degree != total) return std::nullopt;
        degree = total;
    }
    return degree;
}

FiberedClass chi(const RingPtr& ring, const GrassSetup& setup) {
    FiberedClass F(ring, setup.quot_rank);
    F.add_term(Partition({1}), GradedElement::unit(ring));
    return F;
}

FiberedClass theta(const GrassSetup& setup, const GradedElement& c1E) {
    if (!c1E.is_homogeneous_of(1))
        throw std::invalid_argument("theta: c1E must be homogeneous of degree 1");
    FiberedClass F = chi(c1E.ring(), setup);
    const Rational ratio(setup.quot_rank, setup.rank);
    F.add_term(Partition(), c1E * -ratio);
    return F;
}

FiberedClass mul_by_chi(const FiberedClass& F) {
    FiberedClass out(F.ring(), F.quot_rank());
    for (const auto& [mu, coeff] : F.terms())
        for (const Partition& grown : pieri_add_box(mu, F.quot_rank()))
            out.add_term(grown, coeff);
    return out;
}

FiberedClass mul_by_pullback(const FiberedClass& F, const GradedElement& alpha) {
    FiberedClass out(F.ring(), F.quot_rank());
    for (const auto& [mu, coeff] : F.terms()) out.add_term(mu, coeff * alpha);
    return out;
}

namespace {

void require_linear_support(const FiberedClass& F, const char* what) {
    for (const auto& [mu, coeff] : F.terms())
        if (mu.weight() > 1)
            throw std::invalid_argument(std::string(what) +
                                        ": support must lie in {(), (1)}, found " +
                                        mu.str());
}

}  // namespace

FiberedClass mul_linear(const FiberedClass& F, const FiberedClass& linear) {
    if (F.ring() != linear.ring() || F.quot_rank() != linear.quot_rank())
        throw std::invalid_argument("mul_linear: mismatched classes");
    require_linear_support(linear, "mul_linear");
    FiberedClass out(F.ring(), F.quot_rank());
    const GradedElement chi_part = linear.coefficient(Partition({1}));
    const GradedElement pull_part = linear.coefficient(Partition());
    if (!chi_part.is_zero()) {
        FiberedClass grown = mul_by_chi(F);
        for (const auto& [mu, coeff] : grown.terms()) out.add_term(mu, coeff * chi_part);
    }
    if (!pull_part.is_zero())
        for (const auto& [mu, coeff] : F.terms()) out.add_term(mu, coeff * pull_part);
    return out;
}

FiberedClass power(const FiberedClass& F, unsigned N) {
    require_linear_support(F, "power");
    FiberedClass acc(F.ring(), F.quot_rank());
    acc.add_term(Partition(), GradedElement::unit(F.ring()));
    for (unsigned i = 0; i < N; ++i) acc = mul_linear(acc, F);
    return acc;
}

GradedElement pushforward(const FiberedClass& F, const GrassSetup& setup,
                          const ClassSeries& segreE) {
    if (segreE.ring() != F.ring())
        throw std::invalid_argument("pushforward: series from a different ring");
    const unsigned d = setup.quot_rank;
    if (F.quot_rank() != d)
        throw std::invalid_argument("pushforward: class and setup quotient ranks differ");
    const int box = static_cast<int>(setup.rank - d);
    GradedElement out(F.ring());
    for (const auto& [mu, coeff] : F.terms()) {
        std::vector<int> seq(d);
        for (unsigned i = 0; i < d; ++i)
            seq[i] = static_cast<int>(mu.part(i)) - box;
        out += coeff * schur_det(seq, segreE);
    }
    return out;
}

GradedElement pushforward_chi_power_closedform(unsigned N, const GrassSetup& setup,
                                               const ClassSeries& segreE) {
    GradedElement out(segreE.ring());
    if (N < setup.rel_dim()) return out;
    const unsigned weight = N - setup.rel_dim();
    if (weight > segreE.truncation()) return out;  // everything truncates away
    for (const Partition& lam : partitions_of(weight, setup.quot_rank)) {
        const Partition shape = add_padded(lam, setup.epsilon(), setup.quot_rank);
        out += schur_det(lam, segreE) * Rational(syt_count_formula(shape));
    }
    return out;
}

FNumberIdentities f_coefficient_identities(const GrassSetup& setup) {
    const unsigned d = setup.quot_rank;
    const unsigned r = setup.rank;
    const unsigned m = setup.m();
    const Partition eps = setup.epsilon();
    const Rational f_eps(syt_count_formula(eps));

    FNumberIdentities out;
    out.box_lhs = syt_count_formula(add_padded(Partition({1}), eps, d));
    out.box_rhs = Rational(m * d, r) * f_eps;
    if (d >= 2) {
        out.vertical_lhs = syt_count_formula(add_padded(Partition({1, 1}), eps, d));
    } else {
        out.vertical_lhs = 0;  // no two-row shapes on a one-row bundle
    }
    out.vertical_rhs = Rational(m * (m + 1) * d * (d - 1), 2 * r * (r - 1)) * f_eps;
    out.horizontal_lhs = syt_count_formula(add_padded(Partition({2}), eps, d));
    out.horizontal_rhs = Rational(m * (m + 1) * d * (d + 1), 2 * r * (r + 1)) * f_eps;
    return out;
}

FiberedClass leray_hirsch_divisor(const GrassSetup& setup, const GradedElement& b0,
                                  const GradedElement& b1) {
    if (b0.ring() != b1.ring())
        throw std::invalid_argument("leray_hirsch_divisor: mixed rings");
    if (!b0.is_homogeneous_of(0))
        throw std::invalid_argument("leray_hirsch_divisor: b0 must have degree 0");
    if (!b1.is_homogeneous_of(1))
        throw std::invalid_argument("leray_hirsch_divisor: b1 must have degree 1");
    FiberedClass Z(b0.ring(), setup.quot_rank);
    Z.add_term(Partition({1}), b0);
    Z.add_term(Partition(), b1);
    return Z;
}

FiberedClass d1_polynomial_class(const GrassSetup& setup,
                                 const std::vector<GradedElement>& betas) {
    if (setup.quot_rank != 1)
        throw std::invalid_argument("d1_polynomial_class: requires quotient rank 1");
    if (betas.empty())
        throw std::invalid_argument("d1_polynomial_class: need at least beta_0");
    const unsigned codim = static_cast<unsigned>(betas.size()) - 1;
    if (codim < 1 || codim > setup.rank - 1)
        throw std::invalid_argument("d1_polynomial_class: codimension out of 1..r-1");
    FiberedClass Z(betas.front().ring(), 1);
    for (unsigned i = 0; i < betas.size(); ++i) {
        if (betas[i].ring() != Z.ring())
            throw std::invalid_argument("d1_polynomial_class: mixed rings");
        if (!betas[i].is_homogeneous_of(i))
            throw std::invalid_argument("d1_polynomial_class: beta_" + std::to_string(i) +
                                        " must be homogeneous of degree " +
                                        std::to_string(i));
        const unsigned xi_power = codim - i;
        Z.add_term(xi_power == 0 ? Partition() : Partition({xi_power}), betas[i]);
    }
    return Z;
}

}  // namespace grasscalc
