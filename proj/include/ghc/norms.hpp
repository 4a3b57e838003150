#pragma once

#include "ghc/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghc {

struct ReducedNormOptions {
  /// Initial grid points per torus axis (free abelian groups).
  int resolution = 64;
  /// Target enclosure width for the torus branch-and-bound.
  double tolerance = 1e-9;
  std::size_t max_cells = 4'000'000;
};

/// Certified enclosure of an operator norm together with the floating-point
/// estimate it was built from.
struct NormEnclosure {
  Interval value;
  double approx = 0.0;
  /// Error bound attached to `approx` before clamping to the exact bounds.
  double error_bound = 0.0;
};

/// Reduced C*-norm ||x||_r, i.e. the operator norm of the left regular
/// representation. Finite groups: largest singular value of the regular
/// representation matrix. Z^k: maximum of |x^| over the torus by grid plus
/// Lipschitz branch-and-bound. The enclosure is clamped to
/// [|sum_g c_g|, nu_1(x)], both of which are exact bounds.
NormEnclosure reduced_norm(const Group& group, const AlgebraElement& x, const ReducedNormOptions& opts = {});

/// ||x||_max = || |x| ||_r.
NormEnclosure amax_seminorm(const Group& group, const AlgebraElement& x, const ReducedNormOptions& opts = {});

enum class SeminormKind { NuLambda, Max, Reduced };

struct Seminorm {
  SeminormKind kind = SeminormKind::NuLambda;
  Rational lambda{1};

  static Seminorm nu(Rational lambda) { return {SeminormKind::NuLambda, std::move(lambda)}; }
  static Seminorm max() { return {SeminormKind::Max, Rational(1)}; }
  static Seminorm reduced() { return {SeminormKind::Reduced, Rational(1)}; }
  std::string name() const;
  Interval evaluate(const Group& group, const AlgebraElement& x, const ReducedNormOptions& opts = {}) const;
};

struct UnconditionalViolation {
  std::size_t sample = 0;
  std::string condition;  // "absolute" or "monotone"
  Interval lhs;
  Interval rhs;
};

struct UnconditionalReport {
  std::string seminorm;
  std::size_t samples = 0;
  std::size_t absolute_checked = 0;
  std::size_t monotone_checked = 0;
  std::size_t inconclusive = 0;
  std::vector<UnconditionalViolation> violations;

  bool passed() const { return violations.empty() && inconclusive == 0; }
};

/// Checks eta(x) = eta(|x|) for every sample pair and, where |x| <= |x'|
/// coefficientwise, eta(x) <= eta(x'). Violations are certified: the two
/// enclosures are disjoint.
UnconditionalReport check_unconditional(const Group& group, const Seminorm& seminorm,
                                        const std::vector<std::pair<AlgebraElement, AlgebraElement>>& samples,
                                        const ReducedNormOptions& opts = {});

/// True when |x_g| <= |y_g| for every g (certified via squared moduli).
bool dominated_by(const AlgebraElement& x, const AlgebraElement& y);

}  // namespace ghc
