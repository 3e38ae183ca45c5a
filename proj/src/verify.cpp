#include "grasscalc/verify.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace grasscalc {

namespace {

using Clock = std::chrono::steady_clock;

RingPtr chern_ring(unsigned max_degree, unsigned truncation,
                   std::vector<Generator> extra_front = {}) {
    std::vector<Generator> gens = std::move(extra_front);
    for (unsigned k = 1; k <= max_degree; ++k)
        gens.push_back({"c" + std::to_string(k), k});
    return GradedRing::create(std::move(gens), truncation);
}

std::vector<std::string> chern_names(unsigned max_degree) {
    std::vector<std::string> names;
    for (unsigned k = 1; k <= max_degree; ++k) names.push_back("c" + std::to_string(k));
    return names;
}

nlohmann::json element_pairs_residual(const std::vector<GradedElement>& lhs,
                                      const std::vector<GradedElement>& rhs) {
    nlohmann::json out = nlohmann::json::array();
    for (size_t i = 0; i < lhs.size(); ++i)
        out.push_back(element_to_json(lhs[i] - rhs[i]));
    return out;
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
    return {{"case", report.name},
            {"params", report.params},
            {"status", report.pass ? "pass" : "fail"},
            {"lhs", report.lhs},
            {"rhs", report.rhs},
            {"residual", report.residual}};
}

VerificationReport verify_delta(unsigned r, unsigned d, bool corrupt) {
    const auto start = Clock::now();
    const GrassSetup setup(2, r, d);
    const RingPtr ring = chern_ring(2, 2, {{"b0", 0}, {"b1", 1}});
    const GradedElement c1 = GradedElement::generator(ring, "c1");
    const GradedElement c2 = GradedElement::generator(ring, "c2");
    const GradedElement b0 = GradedElement::generator(ring, "b0");
    const GradedElement b1 = GradedElement::generator(ring, "b1");
    const ClassSeries segre =
        total_class_from_generators(ring, chern_names(2)).unsigned_segre();

    const FiberedClass divisor = leray_hirsch_divisor(setup, b0, b1);
    const FiberedClass theta_power = power(theta(setup, c1), setup.m());
    const GradedElement engine =
        pushforward(mul_linear(theta_power, divisor), setup, segre).degree_part(2);

    const unsigned m = setup.m();
    Rational coeff = Rational(m * (m + 1) * (m - 1)) /
                     Rational(r * (r + 1) * (r - 1));
    coeff *= syt_count_formula(setup.epsilon());
    coeff = -coeff;
    if (corrupt) coeff += 1;
    const GradedElement target = coeff * b0 * discriminant(r, c1, c2);

    VerificationReport report;
    report.name = corrupt ? "negative-control" : "delta";
    report.params = {{"r", r}, {"d", d}};
    report.pass = engine == target && !engine.depends_on("b1");
    report.lhs = element_to_json(engine);
    report.rhs = element_to_json(target);
    report.residual = element_to_json(engine - target);
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return report;
}

VerificationReport verify_f1_f2(unsigned r, unsigned d) {
    const auto start = Clock::now();
    const GrassSetup setup(2, r, d);
    const RingPtr ring = chern_ring(2, 2);
    const GradedElement c1 = GradedElement::generator(ring, "c1");
    const GradedElement c2 = GradedElement::generator(ring, "c2");
    const ClassSeries segre =
        total_class_from_generators(ring, chern_names(2)).unsigned_segre();

    const unsigned m = setup.m();
    const FiberedClass chi_class = chi(ring, setup);
    const std::vector<GradedElement> engine = {
        pushforward(power(chi_class, m - 1), setup, segre),
        pushforward(power(chi_class, m), setup, segre),
        pushforward(power(chi_class, m + 1), setup, segre),
    };

    const Rational f_eps(syt_count_formula(setup.epsilon()));
    const Rational c_box = Rational(m * d, r) * f_eps;
    const Rational c_row = Rational(m * (m + 1) * d * (d + 1), 2 * r * (r + 1)) * f_eps;
    const Rational c_col = Rational(m * (m + 1) * d * (d - 1), 2 * r * (r - 1)) * f_eps;
    const std::vector<GradedElement> expected = {
        GradedElement::constant(ring, f_eps),
        c1 * c_box,
        (c1 * c1 - c2) * c_row + c2 * c_col,
    };

    VerificationReport report;
    report.name = "f1f2";
    report.params = {{"r", r}, {"d", d}};
    report.pass = engine == expected;
    report.lhs = {element_to_json(engine[0]), element_to_json(engine[1]),
                  element_to_json(engine[2])};
    report.rhs = {element_to_json(expected[0]), element_to_json(expected[1]),
                  element_to_json(expected[2])};
    report.residual = element_pairs_residual(engine, expected);
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return report;
}

VerificationReport verify_corollary_chi(unsigned r, unsigned d, unsigned n, unsigned N) {
    const auto start = Clock::now();
    const GrassSetup setup(n, r, d);
    const RingPtr ring = chern_ring(n, n);
    const ClassSeries segre =
        total_class_from_generators(ring, chern_names(n)).unsigned_segre();

    const GradedElement pieri_route =
        pushforward(power(chi(ring, setup), N), setup, segre);
    const GradedElement closed_form =
        pushforward_chi_power_closedform(N, setup, segre);

    VerificationReport report;
    report.name = "corollary";
    report.params = {{"r", r}, {"d", d}, {"n", n}, {"N", N}};
    report.pass = pieri_route == closed_form;
    report.lhs = element_to_json(pieri_route);
    report.rhs = element_to_json(closed_form);
    report.residual = element_to_json(pieri_route - closed_form);
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return report;
}

VerificationReport verify_fnumber_identities(unsigned r, unsigned d) {
    const auto start = Clock::now();
    const GrassSetup setup(2, r, d);
    const FNumberIdentities ids = f_coefficient_identities(setup);

    VerificationReport report;
    report.name = "fnumbers";
    report.params = {{"r", r}, {"d", d}};
    report.pass = ids.box_lhs == ids.box_rhs && ids.vertical_lhs == ids.vertical_rhs &&
                  ids.horizontal_lhs == ids.horizontal_rhs;
    report.lhs = {rational_to_string(ids.box_lhs), rational_to_string(ids.vertical_lhs),
                  rational_to_string(ids.horizontal_lhs)};
    report.rhs = {rational_to_string(ids.box_rhs), rational_to_string(ids.vertical_rhs),
                  rational_to_string(ids.horizontal_rhs)};
    report.residual = {rational_to_string(ids.box_lhs - ids.box_rhs),
                       rational_to_string(ids.vertical_lhs - ids.vertical_rhs),
                       rational_to_string(ids.horizontal_lhs - ids.horizontal_rhs)};
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return report;
}

VerificationReport verify_syt(const Partition& lam) {
    const auto start = Clock::now();
    const BigInt formula = syt_count_formula(lam);
    const BigInt brute = syt_count_bruteforce(lam);

    VerificationReport report;
    report.name = "syt";
    report.params = {{"lambda", partition_to_json(lam)}};
    report.pass = formula == brute;
    report.lhs = formula.str();
    report.rhs = brute.str();
    report.residual = BigInt(formula - brute).str();
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return report;
}

VerificationReport verify_duality(const Partition& lam, unsigned truncation) {
    const auto start = Clock::now();
    if (lam.weight() > truncation)
        throw std::invalid_argument("verify_duality: weight exceeds truncation");
    const RingPtr ring = chern_ring(truncation, truncation);
    const ClassSeries chern = total_class_from_generators(ring, chern_names(truncation));
    const ClassSeries segre = chern.unsigned_segre();

    const GradedElement lhs = schur_det(lam.conjugate(), chern);
    const GradedElement rhs = schur_det(lam, segre);

    VerificationReport report;
    report.name = "duality";
    report.params = {{"lambda", partition_to_json(lam)}, {"truncation", truncation}};
    report.pass = lhs == rhs;
    report.lhs = element_to_json(lhs);
    report.rhs = element_to_json(rhs);
    report.residual = element_to_json(lhs - rhs);
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return report;
}

VerificationReport verify_inversion(unsigned degree) {
    const auto start = Clock::now();
    const RingPtr ring = chern_ring(degree, degree);
    const ClassSeries chern = total_class_from_generators(ring, chern_names(degree));
    const GradedElement product = chern.total() * chern.inverse().total();
    const GradedElement one = GradedElement::unit(ring);

    VerificationReport report;
    report.name = "inversion";
    report.params = {{"degree", degree}};
    report.pass = product == one;
    report.lhs = element_to_json(product);
    report.rhs = element_to_json(one);
    report.residual = element_to_json(product - one);
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return report;
}

VerificationReport verify_segre_identity(unsigned r, unsigned i) {
    const auto start = Clock::now();
    const GrassSetup setup(i, r, 1);
    const RingPtr ring = chern_ring(i, i);
    const ClassSeries segre =
        total_class_from_generators(ring, chern_names(i)).unsigned_segre();

    const GradedElement engine =
        pushforward(power(chi(ring, setup), r - 1 + i), setup, segre);
    const GradedElement expected = segre.component(static_cast<int>(i));

    VerificationReport report;
    report.name = "segre";
    report.params = {{"r", r}, {"i", i}};
    report.pass = engine == expected;
    report.lhs = element_to_json(engine);
    report.rhs = element_to_json(expected);
    report.residual = element_to_json(engine - expected);
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return report;
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("suite config must be an object");
    SuiteConfig config;
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        const nlohmann::json& value = item.value();
        const auto as_unsigned = [&]() -> unsigned {
            return json_to_unsigned(value, ("config key \"" + key + "\"").c_str());
        };
        if (key == "r_max") config.r_max = as_unsigned();
        else if (key == "fnumber_r_max") config.fnumber_r_max = as_unsigned();
        else if (key == "corollary_base_dim") config.corollary_base_dim = as_unsigned();
        else if (key == "corollary_extra_powers") config.corollary_extra_powers = as_unsigned();
        else if (key == "syt_weight_max") config.syt_weight_max = as_unsigned();
        else if (key == "duality_weight_max") config.duality_weight_max = as_unsigned();
        else if (key == "inversion_degree") config.inversion_degree = as_unsigned();
        else if (key == "segre_i_max") config.segre_i_max = as_unsigned();
        else if (key == "negative_control") {
            if (!value.is_boolean())
                throw std::invalid_argument("config key \"negative_control\" must be a bool");
            config.negative_control = value.get<bool>();
        } else if (key == "only") {
            if (!value.is_string())
                throw std::invalid_argument("config key \"only\" must be a string");
            config.only = value.get<std::string>();
        } else if (key == "r") config.r_filter = as_unsigned();
        else if (key == "d") config.d_filter = as_unsigned();
        else throw std::invalid_argument("unknown config key \"" + key + "\"");
    }
    if (config.r_max < 2) throw std::invalid_argument("r_max must be at least 2");
    if (config.fnumber_r_max < 2)
        throw std::invalid_argument("fnumber_r_max must be at least 2");
    return config;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
    std::vector<VerificationReport> reports;
    const auto wanted = [&](const char* kind) {
        return !config.only || *config.only == kind;
    };
    const auto rd_pass = [&](unsigned r, unsigned d) {
        return (!config.r_filter || *config.r_filter == r) &&
               (!config.d_filter || *config.d_filter == d);
    };
    const auto r_pass = [&](unsigned r) {
        return (!config.r_filter || *config.r_filter == r) && !config.d_filter;
    };
    const auto unparametrized = !config.r_filter && !config.d_filter;

    if (wanted("delta"))
        for (unsigned r = 2; r <= config.r_max; ++r)
            for (unsigned d = 1; d < r; ++d)
                if (rd_pass(r, d)) reports.push_back(verify_delta(r, d));
    if (wanted("f1f2"))
        for (unsigned r = 2; r <= config.r_max; ++r)
            for (unsigned d = 1; d < r; ++d)
                if (rd_pass(r, d)) reports.push_back(verify_f1_f2(r, d));
    if (wanted("corollary"))
        for (unsigned r = 2; r <= config.r_max; ++r)
            for (unsigned d = 1; d < r; ++d) {
                if (!rd_pass(r, d)) continue;
                const unsigned top = d * (r - d) + config.corollary_extra_powers;
                for (unsigned N = 0; N <= top; ++N)
                    reports.push_back(
                        verify_corollary_chi(r, d, config.corollary_base_dim, N));
            }
    if (wanted("fnumbers"))
        for (unsigned r = 2; r <= config.fnumber_r_max; ++r)
            for (unsigned d = 1; d < r; ++d)
                if (rd_pass(r, d)) reports.push_back(verify_fnumber_identities(r, d));
    if (wanted("syt") && unparametrized)
        for (unsigned w = 0; w <= config.syt_weight_max; ++w)
            for (const Partition& lam : partitions_of(w, w == 0 ? 1 : w))
                reports.push_back(verify_syt(lam));
    if (wanted("duality") && unparametrized) {
        const unsigned truncation =
            std::max(config.duality_weight_max, config.inversion_degree);
        for (unsigned w = 0; w <= config.duality_weight_max; ++w)
            for (const Partition& lam : partitions_of(w, w == 0 ? 1 : w))
                reports.push_back(verify_duality(lam, truncation));
    }
    if (wanted("inversion") && unparametrized)
        reports.push_back(verify_inversion(config.inversion_degree));
    if (wanted("segre"))
        for (unsigned r = 2; r <= config.r_max; ++r) {
            if (!r_pass(r)) continue;
            for (unsigned i = 0; i <= config.segre_i_max; ++i)
                reports.push_back(verify_segre_identity(r, i));
        }
    if (config.negative_control && wanted("negative-control") && rd_pass(2, 1))
        reports.push_back(verify_delta(2, 1, /*corrupt=*/true));
    return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& report : reports)
        if (!report.pass) return false;
    return true;
}

nlohmann::json suite_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json cases = nlohmann::json::array();
    size_t passed = 0;
    for (const auto& report : reports) {
        cases.push_back(report_to_json(report));
        if (report.pass) ++passed;
    }
    return {{"cases", cases},
            {"summary",
             {{"total", reports.size()},
              {"passed", passed},
              {"failed", reports.size() - passed}}}};
}

namespace {

std::string params_brief(const nlohmann::json& params) {
    std::string out;
    for (const auto& [key, value] : params.items()) {
        if (!out.empty()) out += ' ';
        out += key + "=" + value.dump();
    }
    return out;
}

}  // namespace

std::string suite_to_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    size_t passed = 0;
    for (const auto& report : reports) {
        out << (report.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(16)
            << report.name << ' ' << params_brief(report.params);
        if (!report.pass) out << "  residual=" << report.residual.dump();
        out << '\n';
        if (report.pass) ++passed;
    }
    out << passed << '/' << reports.size() << " cases passed\n";
    return out.str();
}

}  // namespace grasscalc
