#pragma once

#include <string>
#include <vector>

namespace z4rm {

struct VerifyOptions {
  int max_m = 4;
  /// Unlocks the large distance enumerations (up to 2^26 codewords).
  bool extended = false;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the family-wide invariant suite up to m = max_m. Deterministic:
/// identical output for identical options.
std::vector<PropertyResult> run_family_verification(const VerifyOptions& options);

}  // namespace z4rm
