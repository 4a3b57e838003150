#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghc {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Exact element of the Gaussian-rational field Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  /// re^2 + im^2, always exact.
  Rational abs2() const { return re_ * re_ + im_ * im_; }
  Scalar conj() const { return {re_, -im_}; }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Closed interval [lo, hi] with exact rational endpoints. A point interval
/// is an exact value.
struct Interval {
  Rational lo{0};
  Rational hi{0};

  Interval() = default;
  Interval(Rational v) : lo(v), hi(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }

  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

/// Product of intervals with nonnegative endpoints.
Interval mul_nonneg(const Interval& a, const Interval& b);
Interval scale_nonneg(const Interval& a, const Rational& s);

/// Three-valued comparison of enclosures.
enum class Certified { True, False, Unknown };

Certified certified_le(const Interval& a, const Interval& b);
Certified certified_eq(const Interval& a, const Interval& b);

/// sqrt(q) for q >= 0: exact if q is the square of a rational, otherwise an
/// enclosure of width at most 2^-bits (relative to the denominator scale).
Interval sqrt_enclosure(const Rational& q, unsigned bits = 160);

/// |s| as an enclosure; exact whenever the modulus is rational.
Interval modulus(const Scalar& s);

Rational pow(const Rational& base, unsigned exp);
Rational factorial(unsigned n);

/// Exact value of a finite double.
Rational to_rational(double d);
double to_double(const Rational& q);

/// Canonical text form: "p/q" for reals, "p/q+r/s i" otherwise.
std::string to_string(const Scalar& s);
std::string to_string(const Rational& q);

/// Accepts "3", "-1/2", "2i", "1/2+3/4 i", "1/2-3/4i", "-i".
Scalar parse_scalar(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace ghc
