#pragma once

#include <string>
#include <vector>

namespace sunspin {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The module invariant suite backing the `verify` subcommand: algebra and
/// generator identities, construction cross-checks, overlap and connection
/// properties, conservation and determinism checks.
std::vector<CheckResult> run_invariant_suite();

}  // namespace sunspin
