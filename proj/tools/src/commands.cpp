#include "commands.hpp"

#include <cmath>
#include <ostream>

#include "format.hpp"
#include "harmint/harmonic.hpp"
#include "harmint/identity.hpp"

namespace harmint::cli {

namespace {

int fail_numerical(std::ostream& err, const std::string& message) {
    err << "error: " << message << "\n";
    return exit_numerical_failure;
}

}  // namespace

int run_compute(std::uint64_t n, ComputeMethod method, double alpha,
                const QuadratureConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (method) {
            case ComputeMethod::exact:
                out << harmonic_exact(n).to_string() << "\n";
                return exit_success;
            case ComputeMethod::floating:
                out << format_double(harmonic_float(n)) << "\n";
                return exit_success;
            case ComputeMethod::asymptotic:
                out << format_double(harmonic_asymptotic(n)) << "\n";
                return exit_success;
            case ComputeMethod::euler: {
                const QuadratureResult result = harmonic_via_euler(n, config);
                out << format_double(result.value) << " ± "
                    << format_brief(result.error_estimate) << "\n";
                if (!result.converged) {
                    return fail_numerical(err, "euler quadrature did not converge");
                }
                return exit_success;
            }
            case ComputeMethod::integrals: {
                const HarmonicReport report = harmonic_via_integrals(n, alpha, config);
                out << format_double(report.integral_sum) << " ± "
                    << format_brief(report_error_budget(report)) << "\n";
                if (!report.all_converged) {
                    return fail_numerical(err, "integral reconstruction did not converge");
                }
                return exit_success;
            }
        }
        return exit_usage_error;
    } catch (const QuadratureError& e) {
        return fail_numerical(err, e.what());
    }
}

int run_verify(std::uint32_t k, double alpha, double tol,
               const QuadratureConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const TermVerification term = verify_term(IdentityParams(k, alpha), config);
        const bool converged = term.i_result.converged && term.j_result.converged;

        out << "k           = " << k << "\n"
            << "alpha       = " << format_double(alpha) << "\n"
            << "coefficient = " << format_double(identity_coefficient(term.params)) << "\n"
            << "I(k+1)      = " << format_double(term.i_result.value) << " ± "
            << format_brief(term.i_result.error_estimate) << "\n"
            << "J(k)        = " << format_double(term.j_result.value) << " ± "
            << format_brief(term.j_result.error_estimate) << "\n"
            << "combination = " << format_double(term.combination) << "\n"
            << "expected    = " << format_double(term.expected) << "\n"
            << "residual    = " << format_double(term.residual) << "\n"
            << "converged   = " << (converged ? "yes" : "no") << "\n";

        if (!converged) {
            return fail_numerical(err, "quadrature did not converge");
        }
        if (!(term.residual <= tol)) {
            return fail_numerical(err, "residual " + format_double(term.residual) +
                                           " exceeds tolerance " + format_double(tol));
        }
        return exit_success;
    } catch (const QuadratureError& e) {
        return fail_numerical(err, e.what());
    }
}

int run_sweep_command(const SweepSpec& spec, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
    try {
        const SweepReport report = run_sweep(spec);
        write_sweep_file(spec, report, out_path);
        out << "wrote " << report.rows.size() << " rows to " << out_path
            << " (max residual " << format_brief(report.max_residual) << ")\n";
        if (!report.all_converged) {
            return fail_numerical(err, "one or more sweep cells did not converge");
        }
        return exit_success;
    } catch (const QuadratureError& e) {
        return fail_numerical(err, e.what());
    } catch (const std::runtime_error& e) {
        return fail_numerical(err, e.what());
    }
}

int run_gamma(const std::vector<std::uint64_t>& n_values, std::ostream& out,
              std::ostream& err) {
    (void)err;
    out << "n            estimate               abs_error\n";
    for (const std::uint64_t n : n_values) {
        const double estimate = estimate_gamma(n);
        const double abs_error = std::fabs(estimate - euler_gamma);
        char line[80];
        std::snprintf(line, sizeof(line), "%-12llu %-22.15g %.3e\n",
                      static_cast<unsigned long long>(n), estimate, abs_error);
        out << line;
    }
    return exit_success;
}

}  // namespace harmint::cli
