#pragma once

// Golden worked examples of the model, checked for exact agreement.

#include <string>
#include <vector>

namespace paradd {

struct FixtureResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

/// Evaluates every golden example. Exceptions raised while evaluating an
/// example are reported as failures, never propagated.
std::vector<FixtureResult> run_fixtures();

}  // namespace paradd
