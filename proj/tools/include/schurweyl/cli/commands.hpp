#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace schurweyl::cli {

enum class OutputFormat { text, json };

struct RunConfig {
    std::string command;
    std::string partition;
    /// Defaults to c_1 of the partition.
    std::optional<int> d;
    /// Defaults to N-1.
    std::optional<int> cut;
    int restarts = 32;
    int max_iterations = 500;
    /// Convergence tolerance for maximize (default 1e-10), residual tolerance
    /// for verify (default 1e-9).
    std::optional<double> tolerance;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 1;
    int max_n = 4;
    /// Defaults to max_n.
    std::optional<int> min_n;
    int max_d = 3;
    /// Random probe states per check in verify.
    int samples = 4;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr double kAnalyticSlack = 1e-6;

struct CommandOutput {
    int exit_code = kExitOk;
    nlohmann::json report;
};

/// Each command throws schurweyl::Error on invalid input.
CommandOutput cmd_bound(const RunConfig &config);
CommandOutput cmd_tableaux(const RunConfig &config);
CommandOutput cmd_verify(const RunConfig &config);
CommandOutput cmd_maximize(const RunConfig &config);
CommandOutput cmd_sweep(const RunConfig &config);

CommandOutput dispatch(const RunConfig &config);

/// Human-readable rendering of a command report.
std::string render_text(const nlohmann::json &report);

/// Parses argv, runs the command and writes its report. Returns the exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace schurweyl::cli
