#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsum::cli {

// Fixed default so bare seeded invocations are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Exit codes: 0 success (all internal checks passed), 1 failed mathematical
// check (would falsify a theorem, i.e. an implementation bug), 2 usage or
// precondition error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsum::cli
