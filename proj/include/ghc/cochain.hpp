#pragma once

#include "ghc/algebra.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

namespace ghc {

/// Declared growth bound |phi(g_1..g_n)| <= constant * base^{sum L(g_i)}.
struct GrowthBound {
  Rational base;
  Rational constant;
};

/// Inhomogeneous bar cochain phi : pi^n -> C, given by a pure evaluator.
class Cochain {
 public:
  using Evaluator = std::function<Scalar(std::span<const Element>)>;

  Cochain(int arity, Evaluator eval, std::string name, bool normalized = false,
          std::optional<GrowthBound> declared = std::nullopt);

  int arity() const { return arity_; }
  const std::string& name() const { return name_; }
  bool normalized() const { return normalized_; }
  const std::optional<GrowthBound>& declared_bound() const { return declared_; }

  /// Throws DomainError when the argument count differs from the arity.
  Scalar operator()(std::span<const Element> args) const;
  Scalar operator()(const Tuple& args) const { return (*this)(std::span<const Element>(args)); }

  Cochain with_name(std::string name) const;

 private:
  int arity_;
  std::shared_ptr<const Evaluator> eval_;
  std::string name_;
  bool normalized_;
  std::optional<GrowthBound> declared_;
};

namespace cochains {

Cochain zero(int arity);

/// Additive character pi -> C fixed by its values on the positive
/// generators (exponent sums). Finite groups admit only the zero character.
Cochain homomorphism(const Group& group, std::vector<Scalar> generator_values);

/// (sum L(g_i))^degree.
Cochain length_power(const Group& group, int arity, unsigned degree);

/// base^{sum L(g_i)}.
Cochain length_exponential(const Group& group, int arity, const Rational& base);

/// value at one tuple, 0 elsewhere.
Cochain indicator(const Tuple& at, Scalar value);

/// c(g, h) = g_i h_j - g_j h_i on Z^k; declared bound 1 * 2^{L(g)+L(h)}.
Cochain area(const Group& group, int i = 0, int j = 1);

Cochain sum(const Cochain& a, const Cochain& b);
Cochain product(const Cochain& a, const Cochain& b);
Cochain scale(const Scalar& s, const Cochain& a);

/// Zeroes the cochain on degenerate tuples (some argument = e).
Cochain zero_degenerate(const Group& group, const Cochain& a);

}  // namespace cochains

/// (d phi)(g_1..g_{n+1}) = phi(g_2..g_{n+1}) + sum_{i=1}^n (-1)^i phi(.., g_i g_{i+1}, ..)
///                        + (-1)^{n+1} phi(g_1..g_n).
Cochain bar_coboundary(const Group& group, const Cochain& phi);

/// Checks phi(..., e, ...) = 0 on every degenerate tuple with entries in the ball.
bool vanishes_on_degenerate(const Group& group, const Cochain& phi, int radius);

/// Checks d phi = 0 on every (n+1)-tuple with total length <= radius.
bool is_cocycle_on(const Group& group, const Cochain& phi, int radius, std::size_t cap = kDefaultBallCap);

}  // namespace ghc
