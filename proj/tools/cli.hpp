#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "wbu3/basket.hpp"

namespace wbu3::cli {

// Exit codes of the command-line frontend.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

/// Parses "(r1,v1),(r2,v2),..."; an empty string or "-" is the empty basket.
Basket parse_basket(const std::string& text);

/// Runs one invocation.  argv excludes the program name.  Human-readable
/// output by default; --json switches to the envelope
///   {"command", "inputs", "result", "status"}
/// with status ok | violation | error and rationals rendered as "p/q".
int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

/// Envelope for one invocation, exposed for round-trip tests.
nlohmann::json make_envelope(const std::string& command,
                             const nlohmann::json& inputs,
                             const nlohmann::json& result,
                             const std::string& status);

} // namespace wbu3::cli
