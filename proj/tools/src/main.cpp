#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "harmint/version.hpp"

namespace {

using harmint::QuadratureConfig;
using namespace harmint::cli;

void add_tolerance_flags(CLI::App* cmd, QuadratureConfig& config) {
    cmd->add_option("--abs-tol", config.abs_tol, "Absolute quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--rel-tol", config.rel_tol, "Relative quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "harmonic numbers four ways: exact fractions, compensated floating point,\n"
        "the finite Euler integral, and a term-by-term exponential-sech integral\n"
        "identity with controlled quadrature error"};
    app.set_version_flag("--version", std::string(harmint::version));
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute H_n by a chosen method");
    std::uint64_t compute_n = 0;
    ComputeMethod method = ComputeMethod::exact;
    double compute_alpha = 1.0;
    QuadratureConfig compute_config;
    const std::map<std::string, ComputeMethod> method_names{
        {"exact", ComputeMethod::exact},
        {"float", ComputeMethod::floating},
        {"euler", ComputeMethod::euler},
        {"integrals", ComputeMethod::integrals},
        {"asymptotic", ComputeMethod::asymptotic},
    };
    compute->add_option("-n", compute_n, "Index n of the harmonic number, >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    compute->add_option("--method", method, "exact|float|euler|integrals|asymptotic")
        ->transform(CLI::CheckedTransformer(method_names))
        ->capture_default_str();
    compute->add_option("--alpha", compute_alpha,
                        "Identity parameter, > 0 (used by --method integrals)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_tolerance_flags(compute, compute_config);

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Check the per-term identity I_{k+1} + ((alpha-k+1)/k) J_k = 1/k");
    std::uint32_t verify_k = 0;
    double verify_alpha = 1.0;
    double verify_tol = 1e-8;
    QuadratureConfig verify_config;
    verify->add_option("-k", verify_k, "Term index, >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--alpha", verify_alpha, "Identity parameter, > 0")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--tol", verify_tol, "Residual tolerance for exit status")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_tolerance_flags(verify, verify_config);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Verify a (k, alpha) grid and write a report");
    SweepSpec sweep_spec;
    std::string sweep_out;
    std::string sweep_format = "csv";
    sweep->add_option("-k", sweep_spec.k_values, "Term indices, each >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--alpha", sweep_spec.alpha_values, "Identity parameters, each > 0")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--out", sweep_out, "Report file path")->required();
    sweep->add_option("--format", sweep_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_tolerance_flags(sweep, sweep_spec.config);

    // gamma
    auto* gamma = app.add_subcommand(
        "gamma", "Estimate the Euler-Mascheroni constant from H_n - ln n - 1/(2n)");
    std::vector<std::uint64_t> gamma_n;
    gamma->add_option("-n", gamma_n, "Indices n, each >= 2")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage_error;
    }

    try {
        if (compute->parsed()) {
            return run_compute(compute_n, method, compute_alpha, compute_config,
                               std::cout, std::cerr);
        }
        if (verify->parsed()) {
            return run_verify(verify_k, verify_alpha, verify_tol, verify_config,
                              std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            sweep_spec.output_format =
                sweep_format == "json" ? OutputFormat::json : OutputFormat::csv;
            return run_sweep_command(sweep_spec, sweep_out, std::cout, std::cerr);
        }
        if (gamma->parsed()) {
            return run_gamma(gamma_n, std::cout, std::cerr);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical_failure;
    }
    return exit_usage_error;
}
