#include "grasscalc/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace grasscalc {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw std::invalid_argument("schema violation: " + what);
}

}  // namespace

unsigned json_to_unsigned(const nlohmann::json& j, const char* what) {
    if (j.is_number_unsigned()) {
        const auto value = j.get<unsigned long long>();
        if (value <= std::numeric_limits<unsigned>::max())
            return static_cast<unsigned>(value);
    } else if (j.is_number_integer()) {
        const auto value = j.get<long long>();
        if (value >= 0 && value <= std::numeric_limits<unsigned>::max())
            return static_cast<unsigned>(value);
    }
    schema_error(std::string(what) + " must be a nonnegative integer");
}

nlohmann::json partition_to_json(const Partition& lam) {
    return nlohmann::json(lam.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) schema_error("partition must be an array of integers");
    std::vector<unsigned> parts;
    parts.reserve(j.size());
    for (const auto& entry : j) parts.push_back(json_to_unsigned(entry, "partition part"));
    return Partition(std::move(parts));
}

nlohmann::json ring_to_json(const RingPtr& ring) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Generator& g : ring->generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}});
    return {{"truncation", ring->truncation()}, {"generators", gens}};
}

RingPtr ring_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("truncation") || !j.contains("generators"))
        schema_error("ring must be {truncation, generators}");
    std::vector<Generator> gens;
    for (const auto& entry : j.at("generators")) {
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("degree"))
            schema_error("generator must be {name, degree}");
        if (!entry.at("name").is_string()) schema_error("generator name must be a string");
        gens.push_back({entry.at("name").get<std::string>(),
                        json_to_unsigned(entry.at("degree"), "generator degree")});
    }
    return GradedRing::create(std::move(gens), json_to_unsigned(j.at("truncation"), "truncation"));
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    schema_error("rational must be a \"p/q\" string or integer");
}

nlohmann::json element_to_json(const GradedElement& e) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [mono, coeff] : e.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (size_t i = 0; i < mono.exponents.size(); ++i)
            if (mono.exponents[i] > 0)
                exps[e.ring()->generator(static_cast<unsigned>(i)).name] = mono.exponents[i];
        out.push_back({{"monomial", exps}, {"coeff", rational_to_string(coeff)}});
    }
    return out;
}

GradedElement element_from_json(const RingPtr& ring, const nlohmann::json& j) {
    if (!j.is_array()) schema_error("graded element must be an array of terms");
    GradedElement e(ring);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("monomial") || !term.contains("coeff"))
            schema_error("term must be {monomial, coeff}");
        const auto& exps = term.at("monomial");
        if (!exps.is_object()) schema_error("monomial must be an object");
        std::vector<unsigned> exponents(ring->generator_count(), 0);
        for (const auto& [name, value] : exps.items()) {
            const auto idx = ring->index_of(name);
            if (!idx) schema_error("unknown generator \"" + name + "\"");
            exponents[*idx] = json_to_unsigned(value, "exponent");
        }
        const unsigned degree = ring->monomial_degree(exponents);
        if (degree > ring->truncation())
            schema_error("monomial exceeds the truncation degree");
        e.add_term(Monomial{degree, std::move(exponents)},
                   rational_from_json(term.at("coeff")));
    }
    return e;
}

nlohmann::json fibered_to_json(const FiberedClass& F) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [mu, coeff] : F.terms())
        out.push_back({{"mu", partition_to_json(mu)}, {"coeff", element_to_json(coeff)}});
    return out;
}

FiberedClass fibered_from_json(const RingPtr& ring, unsigned quot_rank,
                               const nlohmann::json& j) {
    if (!j.is_array()) schema_error("fibered class must be an array of terms");
    FiberedClass F(ring, quot_rank);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("mu") || !term.contains("coeff"))
            schema_error("fibered term must be {mu, coeff}");
        F.add_term(partition_from_json(term.at("mu")),
                   element_from_json(ring, term.at("coeff")));
    }
    return F;
}

nlohmann::json setup_to_json(const GrassSetup& setup) {
    return {{"n", setup.base_dim}, {"r", setup.rank}, {"d", setup.quot_rank}};
}

GrassSetup setup_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("d"))
        schema_error("setup must be {n, r, d}");
    return GrassSetup(json_to_unsigned(j.at("n"), "n"), json_to_unsigned(j.at("r"), "r"),
                      json_to_unsigned(j.at("d"), "d"));
}

std::string dump_stable(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace grasscalc
