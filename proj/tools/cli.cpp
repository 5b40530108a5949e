#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "hfcircle/error.hpp"
#include "hfcircle/experiments.hpp"
#include "hfcircle/hermite.hpp"
#include "hfcircle/nodal.hpp"
#include "hfcircle/report.hpp"

namespace hfc::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
            throw UsageError("--n expects a comma-separated list of integers, got '" + text + "'");
        }
        if (v < 1) throw UsageError("--n values must be >= 1");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("--n must not be empty");
    return out;
}

std::vector<int> default_n_list(Subcommand sub) {
    switch (sub) {
        case Subcommand::lebesgue:
        case Subcommand::converge: return {4, 8, 16, 32};
        default: return {8};
    }
}

void validate_config(RunConfig& config) {
    if (!(config.alpha > -1.0) || !(config.beta > -1.0)) throw UsageError("--alpha and --beta must be > -1");
    if (config.samples < kMinSamples) throw UsageError("--samples must be >= " + std::to_string(kMinSamples));
    const bool single_n = config.subcommand == Subcommand::nodes || config.subcommand == Subcommand::verify ||
                          config.subcommand == Subcommand::coeffs;
    if (single_n && config.n_list.size() != 1) throw UsageError("this subcommand takes a single --n");
    if (!config.function_name.empty()) {
        try {
            parse_test_function(config.function_name);
        } catch (const InputError& e) {
            throw UsageError(e.what());
        }
    }
    if (config.emit_plot) {
        if (config.subcommand != Subcommand::lebesgue && config.subcommand != Subcommand::converge) {
            throw UsageError("--plot applies to lebesgue and converge only");
        }
        if (config.output_path.empty()) throw UsageError("--plot requires --out");
    }
}

// Writes CSV through `write` to the configured file, or to `out`.
template <typename Writer>
void emit_csv(const RunConfig& config, std::ostream& out, Writer&& write) {
    if (config.output_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + config.output_path);
    write(file);
}

void emit_plot(const RunConfig& config, std::string_view title, const std::vector<ExperimentRecord>& records,
               QuantityKind kind) {
    ChartSeries series;
    series.label = std::string(to_string(kind));
    for (const auto& r : records) {
        if (r.kind != kind) continue;
        series.x.push_back(r.n);
        series.y.push_back(r.value);
    }
    std::filesystem::path path(config.output_path);
    path.replace_extension(".svg");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open plot file " + path.string());
    const std::vector<ChartSeries> all{series};
    write_line_chart_svg(file, title, all);
}

std::vector<cplx> verify_values(const RunConfig& config, const NodalSystem& sys) {
    std::vector<cplx> values;
    values.reserve(sys.size());
    if (!config.function_name.empty()) {
        const auto f = make_test_function(parse_test_function(config.function_name));
        for (const cplx& z : sys.nodes()) values.push_back(f(z));
        return values;
    }
    // Bounded pseudo-random values in the unit square, reproducible from the seed.
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t k = 0; k < sys.size(); ++k) {
        const double re = dist(rng);
        const double im = dist(rng);
        values.emplace_back(re, im);
    }
    return values;
}

int run_nodes(const RunConfig& config, std::ostream& out) {
    const NodalSystem sys(JacobiParams{config.alpha, config.beta, config.n_list.front()});
    emit_csv(config, out, [&](std::ostream& os) { write_nodes_csv(os, sys); });
    return kOk;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const NodalSystem sys(JacobiParams{config.alpha, config.beta, config.n_list.front()});
    const auto source = config.coefficients == CoefficientChoice::closed_form ? CoefficientSource::closed_form
                                                                              : CoefficientSource::oracle;
    const Interpolant q = interpolate(sys, verify_values(config, sys), source);
    const auto report = verify_hermite_conditions(q);
    emit_csv(config, out, [&](std::ostream& os) { write_residuals_csv(os, report); });

    const double max_deriv = report.max_scaled_derivative_residual();
    err << "max value residual: " << format_real(report.max_value_residual) << '\n';
    err << "max scaled derivative residual: " << format_real(max_deriv) << '\n';
    const bool ok = report.max_value_residual <= kValueTolerance && max_deriv <= kScaledDerivativeTolerance;
    if (!ok) {
        err << "tolerance breach (value <= " << kValueTolerance << ", scaled derivative <= "
            << kScaledDerivativeTolerance << ")\n";
        return kToleranceBreach;
    }
    return kOk;
}

int run_coeffs(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const NodalSystem sys(JacobiParams{config.alpha, config.beta, config.n_list.front()});
    const auto basis = build_basis_data(sys);
    const auto rows = compare_coefficients(sys, basis);
    emit_csv(config, out, [&](std::ostream& os) { write_coefficients_csv(os, rows); });
    for (int p = 1; p <= 4; ++p) {
        const auto bad = std::count_if(rows.begin(), rows.end(), [p](const auto& r) { return r.p == p && !r.agrees; });
        err << "c_" << p << ": " << bad << " of " << sys.size() << " nodes disagree with the jet oracle\n";
    }
    return kOk;
}

void finalize_records(const RunConfig& config, std::vector<ExperimentRecord>& records) {
    if (!config.timing) {
        for (auto& r : records) r.runtime_ms = 0.0;
    }
}

int run_lebesgue(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!alpha_in_estimate_range(config.alpha)) {
        err << "warning: alpha outside (-1, 1/2]; no log n growth is expected there\n";
    }
    auto records = lebesgue_study(config.alpha, config.beta, config.n_list, config.samples);
    finalize_records(config, records);
    emit_csv(config, out, [&](std::ostream& os) { write_records_csv(os, records); });
    if (config.emit_plot) emit_plot(config, "Lebesgue constant", records, QuantityKind::lebesgue_constant);
    return kOk;
}

int run_converge(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::string name = config.function_name.empty() ? "exp" : config.function_name;
    const auto f = make_test_function(parse_test_function(name));
    const auto rows = convergence_rows(f, config.alpha, config.beta, config.n_list, config.samples);
    std::vector<ExperimentRecord> records;
    for (const auto& row : rows) {
        records.push_back({config.alpha, config.beta, row.n, QuantityKind::sup_error, row.sup_error, config.samples,
                           row.runtime_ms});
        records.push_back(
            {config.alpha, config.beta, row.n, QuantityKind::omega, row.omega, config.samples, row.runtime_ms});
        err << "n=" << row.n << " sup_error=" << format_real(row.sup_error)
            << " err/(omega*log n)=" << format_real(row.ratio) << '\n';
    }
    sort_records(records);
    finalize_records(config, records);
    emit_csv(config, out, [&](std::ostream& os) { write_records_csv(os, records); });
    if (config.emit_plot) emit_plot(config, "sup error, f = " + name, records, QuantityKind::sup_error);
    return kOk;
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
    CLI::App app{"Fifth-order Hermite-Fejer interpolation on the unit circle", "hfcircle"};
    app.require_subcommand(1);

    RunConfig config;
    std::string n_text;

    struct Entry {
        Subcommand sub;
        const char* name;
        const char* help;
    };
    const Entry entries[] = {
        {Subcommand::nodes, "nodes", "Write the nodal system as CSV (k,re,im,x)"},
        {Subcommand::verify, "verify", "Check the interpolation conditions at every node"},
        {Subcommand::lebesgue, "lebesgue", "Lebesgue constants and growth ratios over an n ladder"},
        {Subcommand::converge, "converge", "Sup-norm error of Q_n against a test function"},
        {Subcommand::coeffs, "coeffs", "Compare closed-form and jet-solved coefficients"},
    };
    std::vector<std::pair<CLI::App*, Subcommand>> subs;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        sub->add_option("--alpha", config.alpha, "Jacobi alpha (> -1)");
        sub->add_option("--beta", config.beta, "Jacobi beta (> -1)");
        sub->add_option("--n", n_text, "Degree, or comma-separated list for lebesgue/converge");
        sub->add_option("--function", config.function_name, "Test function: one,z,z8,exp,pole,rough");
        sub->add_option("--samples", config.samples, "Circle samples (>= 64)");
        sub->add_option("--out", config.output_path, "Output CSV path (default: stdout)");
        sub->add_flag("--plot", config.emit_plot, "Also write an SVG chart next to --out");
        sub->add_flag("--timing", config.timing, "Record wall-clock runtime_ms instead of 0");
        sub->add_option("--seed", config.seed, "Seed for the random values used by verify");
        if (e.sub == Subcommand::verify) {
            const std::map<std::string, CoefficientChoice> choices{{"oracle", CoefficientChoice::oracle},
                                                                   {"closed-form", CoefficientChoice::closed_form}};
            sub->add_option("--coefficients", config.coefficients, "Coefficient source: oracle or closed-form")
                ->transform(CLI::CheckedTransformer(choices, CLI::ignore_case));
        }
        subs.emplace_back(sub, e.sub);
    }

    try {
        app.parse(argc, argv);
        for (const auto& [sub, kind] : subs) {
            if (sub->parsed()) config.subcommand = kind;
        }
        config.n_list = n_text.empty() ? default_n_list(config.subcommand) : parse_n_list(n_text);
        validate_config(config);
    } catch (const CLI::CallForHelp& e) {
        exit_code = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        exit_code = kUsage;
        return std::nullopt;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        exit_code = kUsage;
        return std::nullopt;
    }
    exit_code = kOk;
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.subcommand) {
            case Subcommand::nodes: return run_nodes(config, out);
            case Subcommand::verify: return run_verify(config, out, err);
            case Subcommand::lebesgue: return run_lebesgue(config, out, err);
            case Subcommand::converge: return run_converge(config, out, err);
            case Subcommand::coeffs: return run_coeffs(config, out, err);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto config = parse_args(argc, argv, out, err, code);
    if (!config) return code;
    return run(*config, out, err);
}

}  // namespace hfc::cli
