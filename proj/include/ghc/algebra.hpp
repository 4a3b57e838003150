#pragma once

#include "ghc/group.hpp"
#include "ghc/scalar.hpp"

#include <map>

namespace ghc {

/// Finitely supported element sum_g c_g g of C[pi]. Zero coefficients are
/// never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Element, Scalar>;

  AlgebraElement() = default;
  static AlgebraElement delta(const Element& g, Scalar c = Scalar(1));

  void add(const Element& g, const Scalar& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Element& g) const;

  /// Coefficientwise modulus |x| = sum_g |c_g| g. Exact when every modulus
  /// is rational; otherwise each coefficient is the lower end of its
  /// enclosure and `exact` is cleared.
  struct Abs;
  Abs absolute() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& s);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

struct AlgebraElement::Abs {
  AlgebraElement value;
  bool exact = true;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);

/// Product in C[pi].
AlgebraElement convolve(const Group& group, const AlgebraElement& x, const AlgebraElement& y);

/// Weighted l1 value sum_g |c_g| lambda^L(g) (the l^1_lambda norm).
Interval nu_lambda(const Group& group, const AlgebraElement& x, const Rational& lambda);

/// Degree-n element of the Hochschild chain module: a finitely supported
/// combination of elementary tensors (g_0, ..., g_n) of group elements.
class Chain {
 public:
  using Terms = std::map<Tuple, Scalar>;

  explicit Chain(int degree = 0) : degree_(degree) {}
  static Chain elementary(Tuple t, Scalar c = Scalar(1));

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Tuple& t) const;

  /// Adds c * t; throws DomainError when t has the wrong length.
  void add(const Tuple& t, const Scalar& c);
  void add(Tuple&& t, const Scalar& c);

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Scalar& s);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Scalar& s, Chain a) { return a *= s; }
  friend bool operator==(const Chain&, const Chain&) = default;

  /// Largest total word length over the support (0 for the zero chain).
  int max_total_length(const Group& group) const;
  void validate(const Group& group) const;

 private:
  int degree_ = 0;
  Terms terms_;
};

}  // namespace ghc
