#pragma once

#include "ghc/chain_ops.hpp"
#include "ghc/random.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghc {

struct IdentitySuiteOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  /// Degrees are drawn uniformly from [1, max_degree].
  int max_degree = 4;
  int terms = 4;
  int radius = 6;
  Convention convention = Convention::Standard;
};

struct IdentityCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Sample index and degree of the first violation.
  std::optional<std::string> witness;
};

struct IdentitySuiteReport {
  std::string group;
  IdentitySuiteOptions options;
  std::vector<IdentityCheck> checks;

  bool passed() const;
  const IdentityCheck& check(const std::string& name) const;
};

/// Checks b b = 0, B B = 0, b B + B b = 0, commutation of b and B with the
/// conjugacy splitting, radius closure of b, B and tau, tau^{n+1} = s^{n+1} id,
/// and descent of b to the cyclic quotient, on seeded random chains. Sample
/// i draws from its own stream, so the result is the same for both modes.
IdentitySuiteReport run_identity_suite(const Group& group, const IdentitySuiteOptions& opts, bool parallel = true);

}  // namespace ghc
