#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "harmint/quadrature.hpp"
#include "sweep.hpp"

namespace harmint::cli {

// Exit-code contract, stable across all subcommands.
inline constexpr int exit_success = 0;
inline constexpr int exit_numerical_failure = 1;
inline constexpr int exit_usage_error = 2;

enum class ComputeMethod { exact, floating, euler, integrals, asymptotic };

int run_compute(std::uint64_t n, ComputeMethod method, double alpha,
                const QuadratureConfig& config, std::ostream& out, std::ostream& err);

int run_verify(std::uint32_t k, double alpha, double tol,
               const QuadratureConfig& config, std::ostream& out, std::ostream& err);

int run_sweep_command(const SweepSpec& spec, const std::string& out_path,
                      std::ostream& out, std::ostream& err);

int run_gamma(const std::vector<std::uint64_t>& n_values, std::ostream& out,
              std::ostream& err);

}  // namespace harmint::cli
