#pragma once

#include "vlab/asymptotics.hpp"
#include "vlab/operator_matrices.hpp"
#include "vlab/symbols.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlab::cli {

enum class Command { spectrum, windows, verify, toeplitz, lpcheck, selftest };

std::string to_string(Command command);
std::optional<Command> parse_command(const std::string& name);

/// Schema violation; `field` is the JSON path of the offending entry.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct Tolerances {
    double quadrature = 1e-10;
    double spectrum = 0.02;
    double lpcheck = 1e-8;
};

struct MeasureConfig {
    std::vector<DiscPoint> points;
    std::vector<double> masses;
};

struct RunConfig {
    Command command = Command::verify;
    nlohmann::json symbolSpec = {{"kind", "monomial"}};
    SpaceSpec space = SpaceSpec::hardy();
    int dimension = 256;      ///< N, power of two <= 4096
    int generations = 8;      ///< G <= 16
    int strips = 20;
    double safetyFactor = 2.0;
    double ratioBudget = 50.0;
    Tolerances tolerances;
    std::optional<IndexRange> indexRange;
    MeasureConfig measure;    ///< toeplitz only
    int lpMaxDegree = 10;
    std::filesystem::path outputDir = ".";
    unsigned threads = 1;
    std::optional<long long> seed;  ///< reserved; no core path draws random numbers

    AnalyticSymbol symbol() const;
    /// Configuration with every default filled in, echoed into every output.
    nlohmann::json echo() const;
};

/// Default Toeplitz measure: z_n = 1 - 2^{-n}, c_n = 16^{-n}, n = 1..12.
MeasureConfig default_measure();

/// Builds the symbol from {"kind": ..., parameters...}; throws ConfigError.
AnalyticSymbol parse_symbol(const nlohmann::json& spec, const std::string& path = "symbol");

/// Validates a whole config document. `commandOverride` comes from the
/// command line and must agree with a "command" field when both are present.
RunConfig parse_config(const nlohmann::json& doc, std::optional<Command> commandOverride = {});

} // namespace vlab::cli
