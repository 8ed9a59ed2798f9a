#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qv {

// One check of a verification suite.  Non-binding lines are informational
// companions (literal readings, transposition substitutions); only binding
// lines decide the suite's exit status.
struct CheckLine {
  std::string label;
  bool pass = false;
  bool binding = true;
  std::string canonical;  // offending canonical form, empty on pass
};

// Named suites: F, T, V, QF, tQT, tQV (relator checks), symStar, symZ
// (finite symmetric-group presentations over the depth-2 vertex pool),
// figures (pinned element fixtures), all (everything, fixed order).
// Throws std::invalid_argument for an unknown name.
std::vector<CheckLine> verify_suite(const std::string& name);

// Batch entry point.  Returns the process exit code: 0 success,
// 1 verification failure, 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qv
