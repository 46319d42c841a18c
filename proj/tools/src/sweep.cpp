#include "sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "format.hpp"
#include "harmint/version.hpp"

namespace harmint::cli {

namespace {

void validate(const SweepSpec& spec) {
    if (spec.k_values.empty()) {
        throw std::invalid_argument("sweep: k list must not be empty");
    }
    if (spec.alpha_values.empty()) {
        throw std::invalid_argument("sweep: alpha list must not be empty");
    }
    for (const std::uint32_t k : spec.k_values) {
        if (k < 1) {
            throw std::invalid_argument("sweep: k values must be >= 1");
        }
    }
    for (const double alpha : spec.alpha_values) {
        if (!(alpha > 0.0)) {
            throw std::invalid_argument("sweep: alpha values must be > 0");
        }
    }
}

}  // namespace

SweepReport run_sweep(const SweepSpec& spec) {
    validate(spec);

    SweepReport report;
    report.rows.reserve(spec.k_values.size() * spec.alpha_values.size());
    for (const std::uint32_t k : spec.k_values) {
        for (const double alpha : spec.alpha_values) {
            TermVerification term = verify_term(IdentityParams(k, alpha), spec.config);
            report.max_residual = std::max(report.max_residual, term.residual);
            report.all_converged = report.all_converged &&
                                   term.i_result.converged && term.j_result.converged;
            report.rows.push_back(std::move(term));
        }
    }
    return report;
}

std::string render_sweep_csv(const SweepSpec&, const SweepReport& report) {
    std::string out;
    out += "k,alpha,i_value,i_err,j_value,j_err,combination,expected,residual,converged\n";
    for (const TermVerification& row : report.rows) {
        const bool converged = row.i_result.converged && row.j_result.converged;
        out += std::to_string(row.params.k);
        out += ',';
        out += format_double(row.params.alpha);
        out += ',';
        out += format_double(row.i_result.value);
        out += ',';
        out += format_double(row.i_result.error_estimate);
        out += ',';
        out += format_double(row.j_result.value);
        out += ',';
        out += format_double(row.j_result.error_estimate);
        out += ',';
        out += format_double(row.combination);
        out += ',';
        out += format_double(row.expected);
        out += ',';
        out += format_double(row.residual);
        out += ',';
        out += converged ? "true" : "false";
        out += '\n';
    }
    out += "# max_residual=";
    out += format_double(report.max_residual);
    out += '\n';
    return out;
}

std::string render_sweep_json(const SweepSpec& spec, const SweepReport& report) {
    nlohmann::ordered_json doc;
    doc["meta"] = {
        {"tool", "harmint"},
        {"version", harmint::version},
        {"abs_tol", spec.config.abs_tol},
        {"rel_tol", spec.config.rel_tol},
        {"max_refinement_levels", spec.config.max_refinement_levels},
        {"format", "json"},
    };
    doc["rows"] = nlohmann::ordered_json::array();
    for (const TermVerification& row : report.rows) {
        doc["rows"].push_back({
            {"k", row.params.k},
            {"alpha", row.params.alpha},
            {"i_value", row.i_result.value},
            {"i_err", row.i_result.error_estimate},
            {"j_value", row.j_result.value},
            {"j_err", row.j_result.error_estimate},
            {"combination", row.combination},
            {"expected", row.expected},
            {"residual", row.residual},
            {"converged", row.i_result.converged && row.j_result.converged},
        });
    }
    doc["max_residual"] = report.max_residual;
    return doc.dump(2) + "\n";
}

void write_sweep_file(const SweepSpec& spec, const SweepReport& report,
                      const std::string& out_path) {
    const std::string rendered = spec.output_format == OutputFormat::csv
                                     ? render_sweep_csv(spec, report)
                                     : render_sweep_json(spec, report);

    std::ofstream stream(out_path, std::ios::binary | std::ios::trunc);
    if (!stream) {
        throw std::runtime_error("sweep: cannot open output file: " + out_path);
    }
    stream << rendered;
    stream.flush();
    if (!stream) {
        stream.close();
        std::remove(out_path.c_str());
        throw std::runtime_error("sweep: write failed, removed partial file: " + out_path);
    }
}

}  // namespace harmint::cli
