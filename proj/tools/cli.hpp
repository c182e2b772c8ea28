#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spectral_portrait/discretize.hpp"
#include "spectral_portrait/verify.hpp"

namespace spectral_portrait::cli {

enum class Command { Portrait, Graph, Predict, Compare, Stokes };
const char* to_string(Command c);
Command command_from_string(const std::string& s);

struct RunConfig {
    std::optional<Command> command;
    std::optional<std::string> profile;  // linear | quadratic | shifted_square | half_sine
    std::optional<double> beta;
    std::optional<std::vector<double>> coeffs;  // a2, a1, a0 of a quadratic
    std::optional<double> eps, alpha, reynolds, sigma, depth, tau, delta;
    std::optional<int> n;
    std::optional<cplx> lambda;  // stokes
    std::optional<std::string> bc;
    std::optional<std::string> out;
    std::optional<std::vector<std::string>> formats;
    std::optional<SignConvention> sign;
    std::optional<double> trust_constant;

    // Fields unset here are taken from other.
    void fill_from(const RunConfig& other);
};

// Parses argv with an optional --config JSON document; the command line wins.
// Throws ConfigError on malformed input. Returns nullopt after --help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);
RunConfig config_from_json(const std::string& text);

// Fully resolved run parameters.
struct ResolvedConfig {
    Command command;
    Profile profile;
    bool orr_sommerfeld = false;
    double eps = 0.0;  // model eps, or 1/(alpha R)
    double alpha = 0.0, reynolds = 0.0;
    int n = 0;
    double sigma = 0.5, tau = 0.05, depth = 6.0, delta = 0.1;
    double trust_constant = default_trust_constant;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    cplx lambda;
    std::string out = ".";
    bool csv = true, json = true, svg = true;
    SignConvention sign = SignConvention::PlusI;
};

// Checks that the command's required parameters are present, naming the
// first missing one in the ConfigError.
ResolvedConfig resolve(const RunConfig& config);

Profile make_profile(const std::string& name, std::optional<double> beta, const std::optional<std::vector<double>>& coeffs);

// 0 on success, 2 when a compare run misses its thresholds.
int run(const ResolvedConfig& config, std::ostream& log);

// Exit codes: 0 ok, 2 compare threshold violation, 64 configuration error, 1 numerical failure.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spectral_portrait::cli
