#include "grasscalc/segre_ineq.hpp"

#include "grasscalc/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace grasscalc {

RingPtr make_ineq_ring(unsigned r, unsigned n, unsigned N) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    if (n < 1) throw std::invalid_argument("base dimension must be positive");
    if (N < 1 || N > r - 1)
        throw std::invalid_argument("codimension N must lie in 1..r-1");
    std::vector<Generator> gens;
    for (unsigned i = 0; i <= N; ++i) gens.push_back({"b" + std::to_string(i), i});
    for (unsigned k = 1; k <= std::min(r, n); ++k)
        gens.push_back({"c" + std::to_string(k), k});
    gens.push_back({"H", 1});
    return GradedRing::create(std::move(gens), n);
}

std::string monomial_key(const RingPtr& ring, const Monomial& mono) {
    std::string key;
    for (size_t i = 0; i < mono.exponents.size(); ++i) {
        if (mono.exponents[i] == 0) continue;
        if (!key.empty()) key += '*';
        key += ring->generator(static_cast<unsigned>(i)).name;
        if (mono.exponents[i] > 1) key += '^' + std::to_string(mono.exponents[i]);
    }
    return key.empty() ? "1" : key;
}

IntersectionTable IntersectionTable::from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::invalid_argument("intersection table must be a JSON object");
    IntersectionTable table;
    for (const auto& [key, value] : j.items())
        table.insert(key, rational_from_json(value));
    return table;
}

void IntersectionTable::insert(std::string key, Rational value) {
    entries_.insert_or_assign(std::move(key), std::move(value));
}

namespace {

// Parses a canonical key against the ring; returns the monomial or
// throws naming the offending key.
Monomial parse_key(const RingPtr& ring, const std::string& key) {
    const auto fail = [&](const std::string& why) -> Monomial {
        throw std::invalid_argument("bad table key \"" + key + "\": " + why);
    };
    std::vector<unsigned> exponents(ring->generator_count(), 0);
    if (key == "1") return Monomial{0, std::move(exponents)};
    std::istringstream in(key);
    std::string factor;
    int last_index = -1;
    while (std::getline(in, factor, '*')) {
        std::string name = factor;
        unsigned exp = 1;
        if (const auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            const std::string digits = factor.substr(caret + 1);
            if (digits.empty() ||
                digits.find_first_not_of("0123456789") != std::string::npos)
                return fail("malformed exponent");
            exp = static_cast<unsigned>(std::stoul(digits));
            if (exp < 2) return fail("exponent 0 or 1 must not be spelled out");
        }
        const auto idx = ring->index_of(name);
        if (!idx) return fail("unknown generator \"" + name + "\"");
        if (static_cast<int>(*idx) <= last_index)
            return fail("generators must appear once, in declaration order");
        last_index = static_cast<int>(*idx);
        exponents[*idx] = exp;
    }
    return Monomial{ring->monomial_degree(exponents), std::move(exponents)};
}

}  // namespace

void IntersectionTable::validate(const RingPtr& ring, unsigned expected_degree) const {
    for (const auto& [key, value] : entries_) {
        const Monomial mono = parse_key(ring, key);
        if (mono.degree != expected_degree)
            throw std::invalid_argument("table key \"" + key + "\" has degree " +
                                        std::to_string(mono.degree) + ", expected " +
                                        std::to_string(expected_degree));
    }
}

MissingMonomialsError::MissingMonomialsError(std::vector<std::string> keys)
    : std::runtime_error("missing intersection numbers: " + [&keys] {
          std::string joined;
          for (const auto& key : keys) {
              if (!joined.empty()) joined += ", ";
              joined += key;
          }
          return joined;
      }()),
      keys_(std::move(keys)) {}

namespace {

GradedElement segre_lhs_on_ring(const RingPtr& ring, unsigned r, unsigned n,
                                unsigned k, unsigned N) {
    const unsigned chern_top = std::min(r, n);
    std::vector<std::string> names;
    for (unsigned j = 1; j <= chern_top; ++j) names.push_back("c" + std::to_string(j));
    const ClassSeries segre =
        total_class_from_generators(ring, names).unsigned_segre();

    GradedElement h_power = GradedElement::unit(ring);
    const GradedElement H = GradedElement::generator(ring, "H");
    for (unsigned j = 0; j < n - k; ++j) h_power = h_power * H;

    GradedElement acc(ring);
    for (unsigned i = 0; i <= std::min(N, k); ++i) {
        const GradedElement beta = GradedElement::generator(ring, "b" + std::to_string(i));
        acc += beta * segre.component(static_cast<int>(k - i)) * h_power;
    }
    return acc;
}

}  // namespace

GradedElement segre_lhs_symbolic(unsigned r, unsigned n, unsigned k, unsigned N) {
    if (k < 1 || k > n) throw std::invalid_argument("k must lie in 1..n");
    const RingPtr ring = make_ineq_ring(r, n, N);
    return segre_lhs_on_ring(ring, r, n, k, N);
}

Rational evaluate(const GradedElement& expr, const IntersectionTable& table) {
    std::vector<std::string> missing;
    Rational sum = 0;
    for (const auto& [mono, coeff] : expr.terms()) {
        const std::string key = monomial_key(expr.ring(), mono);
        const auto it = table.entries().find(key);
        if (it == table.entries().end()) {
            missing.push_back(key);
            continue;
        }
        sum += coeff * it->second;
    }
    if (!missing.empty()) throw MissingMonomialsError(std::move(missing));
    return sum;
}

InequalityReport check_inequalities(unsigned r, unsigned n, unsigned N,
                                    const IntersectionTable& table) {
    const RingPtr ring = make_ineq_ring(r, n, N);
    table.validate(ring, n);
    InequalityReport report;
    for (unsigned k = 1; k <= n; ++k) {
        const GradedElement expr = segre_lhs_on_ring(ring, r, n, k, N);
        InequalityEntry entry;
        entry.k = k;
        entry.value = evaluate(expr, table);
        entry.nonnegative = entry.value >= 0;
        if (!entry.nonnegative) report.any_violation = true;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

nlohmann::json inequality_report_to_json(const InequalityReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& entry : report.entries)
        entries.push_back({{"k", entry.k},
                           {"value", rational_to_string(entry.value)},
                           {"nonnegative", entry.nonnegative}});
    return {{"entries", entries}, {"any_violation", report.any_violation}};
}

}  // namespace grasscalc
