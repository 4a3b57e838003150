#pragma once

#include "ghc/algebra.hpp"

#include <cstdint>
#include <random>

namespace ghc {

/// Seeded generator with platform-independent draws (std distributions are
/// implementation-defined, so bounded integers are derived by rejection).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool chance(unsigned percent) { return uniform(0, 99) < static_cast<long>(percent); }

 private:
  std::mt19937_64 gen_;
};

/// SplitMix64 mix of (seed, stream); gives independent per-sample seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

enum class CoefficientKind {
  /// Nonzero integers in [-5, 5].
  Integer,
  /// Nonzero rationals p/q with |p| <= 9, 1 <= q <= 6.
  Rational,
  /// Rationals or Gaussian multiples of Pythagorean triples; the modulus is
  /// always rational.
  RationalModulus,
};

Scalar random_coefficient(Rng& rng, CoefficientKind kind = CoefficientKind::Integer);

/// Random word of at most `max_length` generator steps.
Element random_element(const Group& group, Rng& rng, int max_length);

struct ChainShape {
  int degree = 1;
  int terms = 5;
  /// Total word length bound per tuple.
  int radius = 6;
  CoefficientKind coefficients = CoefficientKind::Integer;
  /// Percentage of terms whose tuple product is forced to e.
  unsigned homogeneous_percent = 0;
};

Tuple random_tuple(const Group& group, Rng& rng, int length, int radius);
Chain random_chain(const Group& group, Rng& rng, const ChainShape& shape);
AlgebraElement random_algebra_element(const Group& group, Rng& rng, int terms, int max_length,
                                      CoefficientKind kind = CoefficientKind::RationalModulus);

}  // namespace ghc
