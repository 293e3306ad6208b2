#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace prefmatch::cli {

inline constexpr const char* kToolName = "prefmatch";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { Analyze, Preferential, Sample, Generate, Reverse, SweepP, SweepR };

const char* command_name(Command command);
std::optional<Command> parse_command(const std::string& name);

/// Distinct exit statuses per failure class.
enum ExitStatus : int {
    kExitOk = 0,
    kExitUsage = 2,       // malformed config or violated precondition
    kExitUnreadable = 3,  // input or order file cannot be opened, output cannot be written
    kExitIngestion = 4,   // malformed edge list
    kExitValidation = 5,  // matching / driver validation failure
    kExitStatistic = 6,   // statistic undefined for the input
    kExitInternal = 70,
};

struct RunConfig {
    Command command = Command::Analyze;
    std::optional<std::string> input;  // edge-list path
    std::optional<std::string> gen;    // "ba:n=..,m=..,p=..,m0=.." or "er:n=..,l=.."
    std::string order = "asc";         // asc | desc | random | file:PATH
    std::optional<std::size_t> m;      // preferential node count, defaults to N
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    std::string format;                // json | csv; empty picks the command's default
    bool dedupe = false;
    std::vector<double> grid;          // empty picks the command's default grid
    double r = 0.0;                    // reversal probability for `reverse`
    std::optional<std::string> out;
    unsigned threads = 1;
};

/// Resolved, echo-ready form of the config (defaults filled in).
nlohmann::json config_json(const RunConfig& config);
/// Inverse of config_json. Throws UsageError on unknown commands or bad types.
RunConfig config_from_json(const nlohmann::json& echoed);

struct Report {
    int status = kExitOk;
    std::string document;    // report text on success
    std::string diagnostic;  // message on failure
};

/// Executes one command. Never throws; failures come back as a nonzero status.
Report run(const RunConfig& config);

/// Parses argv. `env_seed` is the NETCTRL_SEED value, if set. On --help or a
/// parse error, returns nullopt and sets `status` and `message`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv,
                                    std::optional<std::string> env_seed, int& status,
                                    std::string& message);

}  // namespace prefmatch::cli
