#pragma once

#include "ghc/cochain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghc {

enum class GrowthClass { SubexponentialConsistent, ExponentialOnly, Inconclusive };

std::string to_string(GrowthClass c);

struct GrowthOptions {
  std::vector<Rational> lambdas{Rational(2), Rational(3, 2), Rational(5, 4), Rational(9, 8)};
  std::vector<int> radii{4, 6, 8, 10};
  std::size_t cap = kDefaultBallCap;
  bool parallel = true;
};

struct GrowthRow {
  Rational lambda;
  int radius = 0;
  /// C_lambda(R)^2, always exact.
  Rational constant_sq;
  Interval constant;
};

struct GrowthReport {
  std::string cochain;
  int arity = 0;
  std::vector<Rational> lambdas;
  std::vector<int> radii;
  /// One row per (lambda, radius), lambdas outer.
  std::vector<GrowthRow> rows;
  /// max |phi|^2 over tuples with total length exactly l, l = 0..max radius.
  std::vector<Rational> layer_max_sq;
  GrowthClass classification = GrowthClass::Inconclusive;
  /// Smallest d in 0..6 with max |phi| / max(1, sum L)^d stable across the
  /// two largest radii; only fitted for subexponential-consistent cochains.
  std::optional<int> polynomial_degree;
  /// Estimated growth base from the two largest layers, and the bracket
  /// [largest diverging lambda, smallest stable lambda].
  std::optional<double> threshold_estimate;
  std::optional<Rational> threshold_lower;
  std::optional<Rational> threshold_upper;

  const GrowthRow& row(const Rational& lambda, int radius) const;
  bool stable(const Rational& lambda) const;
};

/// Per-layer maxima of |phi|^2 for layers 0..radius. Throws ResourceLimit
/// when the tuple enumeration exceeds cap.
std::vector<Rational> layer_maxima_sq(const Group& group, const Cochain& phi, int radius,
                                      std::size_t cap = kDefaultBallCap, bool parallel = true);

/// C_lambda(R)^2 = max_{l <= R} M(l) lambda^{-2l} from precomputed layer maxima.
Rational fitted_constant_sq(const std::vector<Rational>& layer_max_sq, const Rational& lambda, int radius);

GrowthReport growth_fit(const Group& group, const Cochain& phi, const GrowthOptions& opts = {});

}  // namespace ghc
