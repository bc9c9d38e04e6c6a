#ifndef QBRACKET_TOOLS_CLI_HPP
#define QBRACKET_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qbracket::cli {

enum class Format { json, csv, text };

// Resolved settings. Precedence: command-line flags, then the JSON file named
// by QBRACKET_CONFIG, then these defaults. `order` and `format` stay unset
// when neither flag nor config gives them; each command then uses its own
// default.
struct RunConfig {
    std::optional<int> order;
    double tol = 1e-8;
    double y_floor = 0.05;
    std::optional<Format> format;
    std::optional<std::string> output_path;
};

// Exit codes: 0 pass, 1 verification failure or golden mismatch, 2 usage or
// domain error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbracket::cli

#endif
