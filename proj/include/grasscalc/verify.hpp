#pragma once

#include "grasscalc/grassmann.hpp"
#include "grasscalc/json_io.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace grasscalc {

// One verification case. All comparisons are exact: pass holds iff the
// residual (left minus right) is identically zero. `elapsed` is kept for
// callers but never serialized, so reports are byte-stable across runs.
struct VerificationReport {
    std::string name;        // case kind, e.g. "delta"
    nlohmann::json params;   // object of the case's parameters
    bool pass = false;
    nlohmann::json lhs;
    nlohmann::json rhs;
    nlohmann::json residual;
    std::chrono::microseconds elapsed{0};
};

nlohmann::json report_to_json(const VerificationReport& report);

// Degree-2 value of the pushed-forward theta^m * divisor class on a
// surface base against its closed-form multiple of the discriminant;
// also requires the result to be free of the degree-1 divisor datum.
// `corrupt` shifts the expected coefficient by 1 (negative control).
VerificationReport verify_delta(unsigned r, unsigned d, bool corrupt = false);

// Push-forwards of the (m-1)-st, m-th and (m+1)-st chi powers on a
// surface base against their closed-form rational multiples.
VerificationReport verify_f1_f2(unsigned r, unsigned d);

// Route equivalence: iterated-Pieri push-forward of chi^N equals the
// tableau-count closed form on a base of dimension n.
VerificationReport verify_corollary_chi(unsigned r, unsigned d, unsigned n, unsigned N);

// Both sides of the three tableau-count ratio identities.
VerificationReport verify_fnumber_identities(unsigned r, unsigned d);

// Tableau count of one shape: product formula against the brute-force
// labeling oracle.
VerificationReport verify_syt(const Partition& lam);

// Schur determinant of the conjugate shape on the Chern series equals the
// Schur determinant of the shape on the unsigned Segre series.
VerificationReport verify_duality(const Partition& lam, unsigned truncation);

// Total class times its computed inverse re-multiplies to 1 on formal
// generators up to the given degree.
VerificationReport verify_inversion(unsigned degree);

// Rank-1 quotient: push-forward of the (r-1+i)-th chi power equals the
// i-th unsigned Segre component.
VerificationReport verify_segre_identity(unsigned r, unsigned i);

struct SuiteConfig {
    unsigned r_max = 6;
    unsigned fnumber_r_max = 8;
    unsigned corollary_base_dim = 4;
    unsigned corollary_extra_powers = 4;
    unsigned syt_weight_max = 8;
    unsigned duality_weight_max = 5;
    unsigned inversion_degree = 6;
    unsigned segre_i_max = 4;
    bool negative_control = false;
    std::optional<std::string> only;    // case-kind filter
    std::optional<unsigned> r_filter;
    std::optional<unsigned> d_filter;

    // Rejects unknown keys and ill-typed values.
    static SuiteConfig from_json(const nlohmann::json& j);
};

// Runs the configured sweep in a fixed case order; two runs over the same
// config serialize to byte-identical reports.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

bool all_pass(const std::vector<VerificationReport>& reports);
nlohmann::json suite_to_json(const std::vector<VerificationReport>& reports);
std::string suite_to_table(const std::vector<VerificationReport>& reports);

}  // namespace grasscalc
