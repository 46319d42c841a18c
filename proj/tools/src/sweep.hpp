#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmint/identity.hpp"
#include "harmint/quadrature.hpp"

namespace harmint::cli {

enum class OutputFormat { csv, json };

/// A grid of per-term identity checks: every k in k_values crossed with
/// every alpha in alpha_values.
struct SweepSpec {
    std::vector<std::uint32_t> k_values;   // each >= 1
    std::vector<double> alpha_values;      // each > 0
    QuadratureConfig config;
    OutputFormat output_format = OutputFormat::csv;
};

struct SweepReport {
    std::vector<TermVerification> rows;  // k-major, then alpha, in spec order
    double max_residual = 0.0;
    bool all_converged = true;
};

/// Runs the grid. Throws std::invalid_argument on an empty or out-of-domain
/// spec.
SweepReport run_sweep(const SweepSpec& spec);

/// CSV with the fixed header
/// k,alpha,i_value,i_err,j_value,j_err,combination,expected,residual,converged
/// and a trailing "# max_residual=..." comment line. Byte-deterministic for
/// identical inputs.
std::string render_sweep_csv(const SweepSpec& spec, const SweepReport& report);

/// Single JSON object: "meta" (config echo, tool version), "rows", and a
/// trailing "max_residual" field. Doubles keep full round-trip precision.
std::string render_sweep_json(const SweepSpec& spec, const SweepReport& report);

/// Renders in the spec's format and writes the whole report in one shot.
/// On failure the partial file is removed and a std::runtime_error naming
/// the path is thrown.
void write_sweep_file(const SweepSpec& spec, const SweepReport& report,
                      const std::string& out_path);

}  // namespace harmint::cli
