#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asmloops::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;      // validation, parse or usage error
inline constexpr int kMismatch = 2;     // inv --method both disagrees
inline constexpr int kCounterexample = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace asmloops::cli
