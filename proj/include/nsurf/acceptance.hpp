#pragma once

#include <iosfwd>

namespace nsurf {

/// Runs the verification suite: tier 1 covers the family, oracle and small
/// census checks (minutes); tier 2 adds the full n=4 censuses and the large
/// bounded triangulation G (hours).  Prints one pass/fail line per criterion
/// to `out` and returns true when every executed criterion passed.
bool run_acceptance(int tier, std::ostream& out);

}  // namespace nsurf
