#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyverify/report_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

polyverify::Polynomial load_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw polyverify::Error("cannot open polynomial file: " + path);
    nlohmann::json j;
    in >> j;
    return polyverify::polynomial_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace polyverify;

    CLI::App app{"Numerical verifier for derivative lower bounds of polynomials with zeros in |z| <= k"};
    app.require_subcommand(1);

    std::string poly_path, format = "text";
    double k = 1.0, l = 0.0;
    SamplingBudget budget;
    std::uint64_t trials = 1000, seed = GeneratorConfig{}.master_seed;
    GeneratorConfig config;
    bool assert_printed = false;
    unsigned jobs = 1;

    auto add_budget_flags = [&](CLI::App* cmd) {
        cmd->add_option("--grid-points", budget.grid_points, "coarse angular grid size (0 = auto)");
        cmd->add_option("--refine-iters", budget.refine_iters, "golden-section refinement iterations");
    };

    CLI::App* check = app.add_subcommand("check", "verify every applicable bound for one polynomial");
    check->add_option("--poly", poly_path, "polynomial JSON file")->required();
    check->add_option("--k", k, "zero-containment radius, k >= 1")->required();
    check->add_option("--l", l, "refinement parameter, 0 <= l < 1");
    check->add_option("--format", format, "json | csv | text");
    add_budget_flags(check);

    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random inequality campaign");
    fuzz->add_option("--trials", trials, "number of trials");
    fuzz->add_option("--seed", seed, "master seed");
    fuzz->add_option("--n-min", config.n_min, "minimum degree");
    fuzz->add_option("--n-max", config.n_max, "maximum degree");
    fuzz->add_option("--k-min", config.k_min, "minimum k");
    fuzz->add_option("--k-max", config.k_max, "maximum k");
    fuzz->add_option("--boundary-frac", config.on_boundary_fraction,
                     "fraction of zeros planted on |z| = k");
    fuzz->add_flag("--assert-theorem3-printed", assert_printed,
                   "treat theorem3_printed violations as campaign failures");
    fuzz->add_option("--jobs", jobs, "worker threads");
    fuzz->add_option("--format", format, "json | text");

    CLI::App* sharp = app.add_subcommand("sharpness", "equality-family reproduction table");
    sharp->add_option("--format", format, "json | text");

    CLI::App* bounds = app.add_subcommand("bounds", "bound breakdown table for one polynomial");
    bounds->add_option("--poly", poly_path, "polynomial JSON file")->required();
    bounds->add_option("--k", k, "zero-containment radius, k >= 1")->required();
    bounds->add_option("--l", l, "refinement parameter, 0 <= l < 1");
    add_budget_flags(bounds);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed() || bounds->parsed()) {
            Polynomial p = load_polynomial(poly_path);
            VerifyOptions options;
            options.budget = budget;
            CaseReport report = verify_case(p, k, l, options);
            if (bounds->parsed()) {
                write_csv(std::cout, report);
            } else if (format == "json") {
                std::cout << to_json(report).dump(2) << '\n';
            } else if (format == "csv") {
                write_csv(std::cout, report);
            } else {
                write_text(std::cout, report);
            }
            return report.pass ? kExitPass : kExitViolation;
        }
        if (fuzz->parsed()) {
            config.master_seed = seed;
            VerifyOptions options;
            options.assert_theorem3_printed = assert_printed;
            CampaignReport report = fuzz_campaign(config, trials, options, jobs);
            if (format == "json") {
                std::cout << to_json(report).dump(2) << '\n';
            } else {
                std::cout << "trials " << report.attempted << " (valid " << report.valid
                          << ", discarded " << report.discarded << "), seed " << report.seed
                          << ", " << report.wall_seconds << " s\n";
                for (const auto& [id, s] : report.per_bound)
                    std::cout << "  " << id << ": " << s.count << " checks, " << s.violations
                              << " violations, worst margin " << s.worst_margin << '\n';
                std::cout << "theorem3_printed discrepancies observed: "
                          << report.printed_discrepancies << '\n'
                          << "theorem2 monotone in l: " << report.l_monotone << " of "
                          << (report.l_monotone + report.l_nonmonotone) << " applicable trials\n"
                          << (report.pass ? "pass" : "FAIL") << '\n';
            }
            return report.pass ? kExitPass : kExitViolation;
        }
        if (sharp->parsed()) {
            SharpnessReport report = sharpness_suite();
            if (format == "json")
                std::cout << to_json(report).dump(2) << '\n';
            else
                write_text(std::cout, report);
            return report.pass ? kExitPass : kExitViolation;
        }
    } catch (const polyverify::NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const polyverify::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
