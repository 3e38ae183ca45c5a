#include "grasscalc/grassmann.hpp"
#include "grasscalc/json_io.hpp"
#include "grasscalc/segre_ineq.hpp"
#include "grasscalc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace grasscalc;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct OutputSink {
    std::string format = "json";  // "json" | "table"
    std::string path;             // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + path);
        out << text;
    }
};

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("cannot parse " + path + ": " + e.what());
    }
    return j;
}

nlohmann::json parse_json_literal(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw std::invalid_argument(std::string("malformed ") + what + ": " + text);
    }
}

// Ring for push-forward and Schur commands: any extra generators declared
// by the input file come first, then the base Chern generators c1..cn.
RingPtr pushforward_ring(unsigned n, const nlohmann::json* declared) {
    std::vector<Generator> gens;
    if (declared) {
        for (const auto& entry : *declared) {
            if (!entry.is_object() || !entry.contains("name") || !entry.contains("degree"))
                throw std::invalid_argument("schema violation: generator must be {name, degree}");
            gens.push_back({entry.at("name").get<std::string>(),
                            json_to_unsigned(entry.at("degree"), "generator degree")});
        }
    }
    for (unsigned k = 1; k <= n; ++k) gens.push_back({"c" + std::to_string(k), k});
    return GradedRing::create(std::move(gens), n);
}

std::vector<std::string> chern_names(unsigned n) {
    std::vector<std::string> names;
    for (unsigned k = 1; k <= n; ++k) names.push_back("c" + std::to_string(k));
    return names;
}

int run_syt(const std::string& partition_text, unsigned cap, const OutputSink& sink) {
    const Partition lam = partition_from_json(parse_json_literal(partition_text, "partition"));
    const BigInt formula = syt_count_formula(lam);
    std::optional<BigInt> brute;
    if (lam.weight() <= cap) brute = syt_count_bruteforce(lam, cap);
    const bool agree = !brute || *brute == formula;

    if (sink.format == "json") {
        nlohmann::json out = {{"partition", partition_to_json(lam)},
                              {"formula", formula.str()},
                              {"bruteforce", nullptr},
                              {"agree", agree}};
        if (brute) out["bruteforce"] = brute->str();
        sink.write(dump_stable(out));
    } else {
        std::string text = "partition   " + lam.str() + "\nformula     " + formula.str() + "\n";
        if (brute) text += "bruteforce  " + brute->str() + "\n";
        sink.write(text);
    }
    return agree ? kExitOk : kExitVerificationFailure;
}

int run_schur(const std::string& partition_text, unsigned n, const std::string& series_kind,
              const OutputSink& sink) {
    const nlohmann::json j = parse_json_literal(partition_text, "partition");
    if (!j.is_array()) throw std::invalid_argument("schema violation: partition must be an array");
    std::vector<int> seq;
    for (const auto& entry : j) {
        if (!entry.is_number_integer())
            throw std::invalid_argument("schema violation: sequence entries must be integers");
        seq.push_back(entry.get<int>());
    }
    const RingPtr ring = pushforward_ring(n, nullptr);
    const ClassSeries chern = total_class_from_generators(ring, chern_names(n));
    const ClassSeries series = series_kind == "segre" ? chern.unsigned_segre() : chern;
    const GradedElement det = schur_det(seq, series);
    sink.write(sink.format == "json" ? dump_stable(element_to_json(det)) : det.str() + "\n");
    return kExitOk;
}

int run_pushforward(unsigned r, unsigned d, unsigned n, const std::string& input_path,
                    std::optional<unsigned> chi_power, const OutputSink& sink) {
    const GrassSetup setup(n, r, d);
    if (input_path.empty() && !chi_power)
        throw std::invalid_argument("pushforward needs --input or --N");

    RingPtr ring;
    FiberedClass F(GradedRing::create({}, 0), 1);  // placeholder, reassigned below
    if (!input_path.empty()) {
        const nlohmann::json j = load_json_file(input_path);
        const nlohmann::json* terms = &j;
        const nlohmann::json* declared = nullptr;
        if (j.is_object()) {
            if (!j.contains("terms"))
                throw std::invalid_argument("schema violation: expected {generators?, terms}");
            terms = &j.at("terms");
            if (j.contains("generators")) declared = &j.at("generators");
        }
        ring = pushforward_ring(n, declared);
        F = fibered_from_json(ring, d, *terms);
    } else {
        ring = pushforward_ring(n, nullptr);
        F = power(chi(ring, setup), *chi_power);
    }

    const ClassSeries segre =
        total_class_from_generators(ring, chern_names(n)).unsigned_segre();
    const GradedElement result = pushforward(F, setup, segre);
    sink.write(sink.format == "json" ? dump_stable(element_to_json(result))
                                     : result.str() + "\n");
    return kExitOk;
}

int run_verify(const std::string& config_path, std::optional<std::string> only,
               std::optional<unsigned> r, std::optional<unsigned> d,
               const OutputSink& sink) {
    SuiteConfig config;
    if (!config_path.empty())
        config = SuiteConfig::from_json(load_json_file(config_path));
    if (only) config.only = only;
    if (r) config.r_filter = r;
    if (d) config.d_filter = d;

    const std::vector<VerificationReport> reports = run_suite(config);
    sink.write(sink.format == "json" ? dump_stable(suite_to_json(reports))
                                     : suite_to_table(reports));
    return all_pass(reports) ? kExitOk : kExitVerificationFailure;
}

int run_segre_ineq(unsigned r, unsigned n, unsigned N, const std::string& input_path,
                   bool symbolic, std::optional<unsigned> k_choice,
                   const OutputSink& sink) {
    if (symbolic) {
        if (k_choice) {
            const GradedElement expr = segre_lhs_symbolic(r, n, *k_choice, N);
            sink.write(sink.format == "json" ? dump_stable(element_to_json(expr))
                                             : expr.str() + "\n");
        } else {
            nlohmann::json out = nlohmann::json::object();
            std::string table_text;
            for (unsigned k = 1; k <= n; ++k) {
                const GradedElement expr = segre_lhs_symbolic(r, n, k, N);
                if (sink.format == "json")
                    out[std::to_string(k)] = element_to_json(expr);
                else
                    table_text += "k=" + std::to_string(k) + "  " + expr.str() + "\n";
            }
            sink.write(sink.format == "json" ? dump_stable(out) : table_text);
        }
        return kExitOk;
    }

    if (input_path.empty())
        throw std::invalid_argument("segre-ineq needs --input (or --symbolic)");
    const IntersectionTable table = IntersectionTable::from_json(load_json_file(input_path));
    const InequalityReport report = check_inequalities(r, n, N, table);
    if (sink.format == "json") {
        sink.write(dump_stable(inequality_report_to_json(report)));
    } else {
        std::string text;
        for (const auto& entry : report.entries)
            text += "k=" + std::to_string(entry.k) + "  value=" +
                    rational_to_string(entry.value) +
                    (entry.nonnegative ? "" : "  VIOLATION") + "\n";
        sink.write(text);
    }
    return report.any_violation ? kExitVerificationFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection calculus on Grassmann bundles"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format/--output appear after the subcommand

    OutputSink sink;
    app.add_option("--format", sink.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--output", sink.path, "Write output to a file instead of stdout");

    std::string partition_text;
    unsigned cap = 12;
    auto* syt = app.add_subcommand("syt", "Count standard tableaux of a shape");
    syt->add_option("--partition", partition_text, "Partition literal, e.g. [2,1]")
        ->required();
    syt->add_option("--cap", cap, "Weight cap for the brute-force count")
        ->capture_default_str();

    std::string schur_partition;
    unsigned schur_n = 0;
    std::string series_kind = "chern";
    auto* schur = app.add_subcommand("schur", "Evaluate a Schur determinant");
    schur->add_option("--partition", schur_partition, "Integer sequence, e.g. [2,1]")
        ->required();
    schur->add_option("--n", schur_n, "Truncation degree of the base ring")->required();
    schur->add_option("--series", series_kind, "Series to evaluate on")
        ->check(CLI::IsMember({"chern", "segre"}))
        ->capture_default_str();

    unsigned pf_r = 0, pf_d = 0, pf_n = 0;
    std::string pf_input;
    std::optional<unsigned> pf_N;
    auto* pf = app.add_subcommand("pushforward", "Push a fibered class down to the base");
    pf->add_option("--r", pf_r, "Bundle rank")->required();
    pf->add_option("--d", pf_d, "Quotient rank")->required();
    pf->add_option("--n", pf_n, "Base dimension / truncation")->required();
    pf->add_option("--input", pf_input, "Fibered class JSON file");
    pf->add_option("--N", pf_N, "Use the N-th power of chi as the input class");

    std::string verify_config;
    std::optional<std::string> verify_only;
    std::optional<unsigned> verify_r, verify_d;
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--config", verify_config, "Suite config JSON file");
    verify->add_option("--only", verify_only, "Restrict to one case kind");
    verify->add_option("--r", verify_r, "Restrict to one rank");
    verify->add_option("--d", verify_d, "Restrict to one quotient rank");

    unsigned ineq_r = 0, ineq_n = 0, ineq_N = 0;
    std::string ineq_input;
    bool ineq_symbolic = false;
    std::optional<unsigned> ineq_k;
    auto* ineq = app.add_subcommand("segre-ineq", "Divisor-data Segre sums and signs");
    ineq->add_option("--r", ineq_r, "Bundle rank")->required();
    ineq->add_option("--n", ineq_n, "Base dimension")->required();
    ineq->add_option("--N", ineq_N, "Divisor-data codimension")->required();
    ineq->add_option("--input", ineq_input, "Intersection table JSON file");
    ineq->add_flag("--symbolic", ineq_symbolic, "Print the symbolic sums, no evaluation");
    ineq->add_option("--k", ineq_k, "Restrict to a single k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (syt->parsed()) return run_syt(partition_text, cap, sink);
        if (schur->parsed()) return run_schur(schur_partition, schur_n, series_kind, sink);
        if (pf->parsed()) return run_pushforward(pf_r, pf_d, pf_n, pf_input, pf_N, sink);
        if (verify->parsed())
            return run_verify(verify_config, verify_only, verify_r, verify_d, sink);
        if (ineq->parsed())
            return run_segre_ineq(ineq_r, ineq_n, ineq_N, ineq_input, ineq_symbolic,
                                  ineq_k, sink);
    } catch (const MissingMonomialsError& e) {
        nlohmann::json missing = nlohmann::json::array();
        for (const auto& key : e.keys()) missing.push_back(key);
        std::cerr << dump_stable({{"error", "missing intersection numbers"},
                                  {"missing", missing}});
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
