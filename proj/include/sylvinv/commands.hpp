#ifndef SYLVINV_COMMANDS_HPP
#define SYLVINV_COMMANDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sylvinv/guards.hpp"
#include "sylvinv/json_io.hpp"

namespace sylvinv {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int singular = 2;
inline constexpr int validation = 3;
}  // namespace exit_code

struct CommandOptions {
    /// auto | lagrange | hermite | oracle | dyadic
    std::string method = "auto";
    Guards guards;
    double verify_tol = 1e-8;
    /// Allow coefficient input where zeros are needed; all zeros are taken as simple.
    bool find_roots = false;
};

struct CommandResult {
    int exit_code = exit_code::ok;
    json output;
    std::vector<std::string> warnings;
};

/// Names accepted by run_command, in CLI order.
const std::vector<std::string>& command_names();

// Each command reads its JSON document and returns the JSON result.
// Library exceptions propagate; run_command maps them to exit codes.
json cmd_sylvester(const json& input, const CommandOptions& options, std::vector<std::string>& warnings);
json cmd_invert(const json& input, const CommandOptions& options, std::vector<std::string>& warnings);
json cmd_solve(const json& input, const CommandOptions& options, std::vector<std::string>& warnings);
json cmd_adjugate(const json& input, const CommandOptions& options, std::vector<std::string>& warnings);
json cmd_confluence(const json& input, const CommandOptions& options, std::vector<std::string>& warnings);
json cmd_bench(const json& input, const CommandOptions& options, std::vector<std::string>& warnings);

/// Never throws. On failure output is {"error": {"kind", "message"}}.
CommandResult run_command(std::string_view name, const json& input, const CommandOptions& options);

}  // namespace sylvinv

#endif
