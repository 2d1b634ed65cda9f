#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric_diamond::cli {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitMalformed = 2;

// args[0] is the program name. Results go to `out` (or --out), errors to
// `err` as one JSON object {code, message, context}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric_diamond::cli
