#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace monadica::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitUsage = 64;

/// Run one command line (without the program name). Results go to out as
/// JSON; usage errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

/// Split a REPL line into words, honoring single and double quotes.
/// Throws Error(ParseError) on an unterminated quote.
std::vector<std::string> split_line(std::string_view line);

}  // namespace monadica::cli
