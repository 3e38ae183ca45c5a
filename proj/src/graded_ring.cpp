#include "grasscalc/graded_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace grasscalc {

GradedRing::GradedRing(std::vector<Generator> generators, unsigned truncation)
    : generators_(std::move(generators)), truncation_(truncation) {
    for (unsigned i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name.empty())
            throw std::invalid_argument("generator name must be nonempty");
        if (!index_.emplace(generators_[i].name, i).second)
            throw std::invalid_argument("duplicate generator name: " + generators_[i].name);
    }
}

std::shared_ptr<const GradedRing> GradedRing::create(std::vector<Generator> generators,
                                                     unsigned truncation) {
    return std::shared_ptr<const GradedRing>(
        new GradedRing(std::move(generators), truncation));
}

std::optional<unsigned> GradedRing::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

unsigned GradedRing::monomial_degree(const std::vector<unsigned>& exponents) const {
    if (exponents.size() != generators_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    unsigned degree = 0;
    for (size_t i = 0; i < exponents.size(); ++i)
        degree += exponents[i] * generators_[i].degree;
    return degree;
}

GradedElement GradedElement::unit(const RingPtr& ring) {
    return constant(ring, 1);
}

GradedElement GradedElement::constant(const RingPtr& ring, const Rational& value) {
    GradedElement e(ring);
    e.add_term(Monomial{0, std::vector<unsigned>(ring->generator_count(), 0)}, value);
    return e;
}

GradedElement GradedElement::generator(const RingPtr& ring, std::string_view name) {
    const auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown generator: " + std::string(name));
    std::vector<unsigned> exps(ring->generator_count(), 0);
    exps[*idx] = 1;
    GradedElement e(ring);
    e.add_term(Monomial{ring->generator(*idx).degree, std::move(exps)}, 1);
    return e;
}

Rational GradedElement::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedElement::require_same_ring(const GradedElement& other) const {
    if (ring_ != other.ring_)
        throw std::invalid_argument("operands belong to different ring instances");
}

void GradedElement::add_term(Monomial mono, const Rational& coeff) {
    if (coeff == 0) return;
    if (mono.degree > ring_->truncation()) return;
    auto [it, inserted] = terms_.emplace(std::move(mono), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedElement& GradedElement::operator+=(const GradedElement& rhs) {
    require_same_ring(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& rhs) {
    require_same_ring(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

GradedElement GradedElement::operator-() const {
    GradedElement out(ring_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

GradedElement GradedElement::operator*(const GradedElement& rhs) const {
    require_same_ring(rhs);
    GradedElement out(ring_);
    const unsigned cutoff = ring_->truncation();
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            const unsigned degree = ma.degree + mb.degree;
            if (degree > cutoff) continue;  // silent truncation
            Monomial prod{degree, ma.exponents};
            for (size_t i = 0; i < prod.exponents.size(); ++i)
                prod.exponents[i] += mb.exponents[i];
            out.add_term(std::move(prod), ca * cb);
        }
    }
    return out;
}

GradedElement GradedElement::operator*(const Rational& scalar) const {
    GradedElement out(ring_);
    if (scalar == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * scalar);
    return out;
}

GradedElement GradedElement::degree_part(unsigned k) const {
    GradedElement out(ring_);
    for (const auto& [mono, coeff] : terms_)
        if (mono.degree == k) out.terms_.emplace(mono, coeff);
    return out;
}

bool GradedElement::is_homogeneous_of(unsigned k) const {
    for (const auto& [mono, coeff] : terms_)
        if (mono.degree != k) return false;
    return true;
}

std::optional<unsigned> GradedElement::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const unsigned degree = terms_.begin()->first.degree;
    // Map order is degree-first, so checking the last term suffices.
    if (terms_.rbegin()->first.degree != degree) return std::nullopt;
    return degree;
}

bool GradedElement::depends_on(std::string_view name) const {
    const auto idx = ring_->index_of(name);
    if (!idx) return false;
    for (const auto& [mono, coeff] : terms_)
        if (mono.exponents[*idx] > 0) return true;
    return false;
}

GradedElement GradedElement::substitute(std::string_view name, const Rational& value) const {
    const auto idx = ring_->index_of(name);
    if (!idx) throw std::invalid_argument("unknown generator: " + std::string(name));
    GradedElement out(ring_);
    for (const auto& [mono, coeff] : terms_) {
        const unsigned exp = mono.exponents[*idx];
        if (exp == 0) {
            out.add_term(mono, coeff);
            continue;
        }
        if (value == 0) continue;
        Rational scaled = coeff;
        for (unsigned i = 0; i < exp; ++i) scaled *= value;
        Monomial reduced = mono;
        reduced.exponents[*idx] = 0;
        reduced.degree = ring_->monomial_degree(reduced.exponents);
        out.add_term(std::move(reduced), scaled);
    }
    return out;
}

std::string GradedElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        const bool negative = coeff < 0;
        const Rational mag = negative ? Rational(-coeff) : coeff;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string factors;
        for (size_t i = 0; i < mono.exponents.size(); ++i) {
            if (mono.exponents[i] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += ring_->generator(static_cast<unsigned>(i)).name;
            if (mono.exponents[i] > 1)
                factors += '^' + std::to_string(mono.exponents[i]);
        }
        if (factors.empty()) {
            out << rational_to_string(mag);
        } else {
            if (mag != 1) out << rational_to_string(mag) << '*';
            out << factors;
        }
    }
    return out.str();
}

ClassSeries::ClassSeries(RingPtr ring, std::vector<GradedElement> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
    components_.resize(ring_->truncation() + 1, GradedElement(ring_));
    if (components_[0] != GradedElement::unit(ring_))
        throw std::invalid_argument("total class must have component 0 equal to 1");
    for (unsigned k = 0; k < components_.size(); ++k) {
        if (components_[k].ring() != ring_)
            throw std::invalid_argument("series component from a different ring");
        if (!components_[k].is_homogeneous_of(k))
            throw std::invalid_argument("series component " + std::to_string(k) +
                                        " is not homogeneous of its degree");
    }
}

ClassSeries ClassSeries::one(const RingPtr& ring) {
    return ClassSeries(ring, {GradedElement::unit(ring)});
}

unsigned ClassSeries::truncation() const { return ring_->truncation(); }

GradedElement ClassSeries::component(int k) const {
    if (k < 0 || k >= static_cast<int>(components_.size())) return GradedElement(ring_);
    return components_[static_cast<size_t>(k)];
}

GradedElement ClassSeries::total() const {
    GradedElement sum(ring_);
    for (const auto& c : components_) sum += c;
    return sum;
}

ClassSeries ClassSeries::inverse() const {
    // t_0 = 1 and t_k = -sum_{j=1..k} c_j t_{k-j}.
    std::vector<GradedElement> inv;
    inv.reserve(components_.size());
    inv.push_back(GradedElement::unit(ring_));
    for (unsigned k = 1; k < components_.size(); ++k) {
        GradedElement acc(ring_);
        for (unsigned j = 1; j <= k; ++j) acc += components_[j] * inv[k - j];
        inv.push_back(-acc);
    }
    return ClassSeries(ring_, std::move(inv));
}

ClassSeries ClassSeries::unsigned_segre() const {
    ClassSeries inv = inverse();
    std::vector<GradedElement> segre;
    segre.reserve(components_.size());
    for (unsigned k = 0; k < components_.size(); ++k) {
        GradedElement c = inv.component(static_cast<int>(k));
        segre.push_back(k % 2 ? -c : c);
    }
    return ClassSeries(ring_, std::move(segre));
}

ClassSeries total_class_from_generators(const RingPtr& ring,
                                        const std::vector<std::string>& names) {
    std::vector<GradedElement> comps;
    comps.push_back(GradedElement::unit(ring));
    for (size_t i = 0; i < names.size(); ++i) {
        GradedElement g = GradedElement::generator(ring, names[i]);
        if (!g.is_homogeneous_of(static_cast<unsigned>(i + 1)))
            throw std::invalid_argument("generator " + names[i] +
                                        " does not have degree " + std::to_string(i + 1));
        comps.push_back(std::move(g));
    }
    return ClassSeries(ring, std::move(comps));
}

GradedElement schur_det(const std::vector<int>& seq, const ClassSeries& series) {
    const size_t q = seq.size();
    if (q == 0) return GradedElement::unit(series.ring());
    std::vector<std::vector<GradedElement>> matrix(q);
    for (size_t i = 0; i < q; ++i) {
        matrix[i].reserve(q);
        for (size_t j = 0; j < q; ++j)
            matrix[i].push_back(series.component(
                seq[i] + static_cast<int>(j) - static_cast<int>(i)));
    }
    // Laplace expansion along the first row of the live submatrix; the
    // matrices here never exceed the quotient rank, so this stays small.
    std::vector<size_t> cols(q);
    for (size_t j = 0; j < q; ++j) cols[j] = j;
    auto expand = [&](auto&& self, size_t row, std::vector<size_t>& live) -> GradedElement {
        if (live.empty()) return GradedElement::unit(series.ring());
        GradedElement det(series.ring());
        for (size_t pick = 0; pick < live.size(); ++pick) {
            const GradedElement& entry = matrix[row][live[pick]];
            if (entry.is_zero()) continue;
            std::vector<size_t> rest;
            rest.reserve(live.size() - 1);
            for (size_t j = 0; j < live.size(); ++j)
                if (j != pick) rest.push_back(live[j]);
            GradedElement minor = self(self, row + 1, rest);
            GradedElement contribution = entry * minor;
            if (pick % 2) contribution = -contribution;
            det += contribution;
        }
        return det;
    };
    return expand(expand, 0, cols);
}

GradedElement schur_det(const Partition& lam, const ClassSeries& series) {
    std::vector<int> seq(lam.parts().begin(), lam.parts().end());
    return schur_det(seq, series);
}

GradedElement discriminant(unsigned rank, const GradedElement& c1,
                           const GradedElement& c2) {
    if (rank == 0) throw std::invalid_argument("discriminant: rank must be positive");
    if (!c1.is_homogeneous_of(1))
        throw std::invalid_argument("discriminant: c1 must be homogeneous of degree 1");
    if (!c2.is_homogeneous_of(2))
        throw std::invalid_argument("discriminant: c2 must be homogeneous of degree 2");
    const Rational coeff(rank - 1, 2 * rank);
    return c2 - c1 * c1 * coeff;
}

}  // namespace grasscalc
