#pragma once

#include <string>
#include <utility>

namespace reciprocity {

/// Outcome of a verification routine. A failure always carries a witness: the
/// smallest argument, point or pair that broke the identity.
struct CheckResult {
  bool passed = true;
  std::string witness;

  static CheckResult ok() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return passed; }
};

}  // namespace reciprocity
