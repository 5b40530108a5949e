#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hfc::cli {

enum ExitCode : int {
    kOk = 0,
    kNumericalFailure = 1,
    kUsage = 2,
    kToleranceBreach = 3,
};

enum class Subcommand { nodes, verify, lebesgue, converge, coeffs };

enum class CoefficientChoice { oracle, closed_form };

struct RunConfig {
    Subcommand subcommand = Subcommand::verify;
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<int> n_list;
    /// Empty means the subcommand default (random values for verify, exp for converge).
    std::string function_name;
    int samples = 512;
    std::string output_path;
    bool emit_plot = false;
    bool timing = false;
    unsigned seed = 42;
    /// verify only: build A_{0k} from the jet-solved or the reference closed-form coefficients.
    CoefficientChoice coefficients = CoefficientChoice::oracle;
};

inline constexpr double kValueTolerance = 1e-9;
inline constexpr double kScaledDerivativeTolerance = 1e-6;

/// Parses argv into a RunConfig. On failure writes a diagnostic plus usage to
/// err and returns std::nullopt; `exit_code` receives the code to return.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Executes a parsed configuration. CSV goes to config.output_path, or to out
/// when no path is given; summaries and warnings go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hfc::cli
