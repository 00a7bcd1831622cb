#pragma once

#include <string>
#include <vector>

namespace orbitfold {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Built-in consistency suite over the reference fixtures: folding, twining
// equivalence, rotation traces, Weyl embedding, affine relations, modular
// data, and the two coset fixtures.  Each entry is independent; a throw
// inside a check is converted into a failure with the message as detail.
std::vector<CheckResult> run_check_suite();

}  // namespace orbitfold
