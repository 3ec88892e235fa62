#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rootfan/verify.hpp"

namespace rootfan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name):
//   rootfan <building-set|facets|symmetry|check|classify|verify>
//           [--cycle K|--complete K|--path K|--star K|FILE]
//           [--format text|json] [--max-nodes K] [--labeled|--up-to-iso]
// Returns 0 on success, 1 when `verify` finds a counterexample and 2 on
// usage, input or cap errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Pipeline& pipeline = {});

}  // namespace rootfan::cli
