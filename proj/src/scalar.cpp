#include "ghc/scalar.hpp"

#include "ghc/errors.hpp"

#include <cctype>
#include <cmath>
#include <regex>

namespace ghc {

Scalar& Scalar::operator/=(const Scalar& o) {
  Rational d = o.abs2();
  if (d == 0) throw std::domain_error("division by zero scalar");
  Scalar num = *this * o.conj();
  re_ = num.re_ / d;
  im_ = num.im_ / d;
  return *this;
}

Interval mul_nonneg(const Interval& a, const Interval& b) { return {a.lo * b.lo, a.hi * b.hi}; }

Interval scale_nonneg(const Interval& a, const Rational& s) { return {a.lo * s, a.hi * s}; }

Certified certified_le(const Interval& a, const Interval& b) {
  if (a.hi <= b.lo) return Certified::True;
  if (a.lo > b.hi) return Certified::False;
  return Certified::Unknown;
}

Certified certified_eq(const Interval& a, const Interval& b) {
  if (a.exact() && b.exact()) return a.lo == b.lo ? Certified::True : Certified::False;
  if (a.hi < b.lo || b.hi < a.lo) return Certified::False;
  return Certified::Unknown;
}

namespace {

Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

}  // namespace

Interval sqrt_enclosure(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return Interval(Rational(0));
  Integer a = numerator(q);
  Integer b = denominator(q);
  Integer ra = isqrt(a);
  Integer rb = isqrt(b);
  if (ra * ra == a && rb * rb == b) return Interval(Rational(ra, rb));
  // sqrt(a/b) = sqrt(a*b)/b; bracket sqrt(a*b*4^bits) between consecutive integers.
  Integer scaled = a * b;
  scaled <<= (2 * bits);
  Integer m = isqrt(scaled);
  Integer scale = Integer(1) << bits;
  return {Rational(m, scale * b), Rational(m + 1, scale * b)};
}

Interval modulus(const Scalar& s) {
  if (s.im() == 0) return Interval(abs(s.re()));
  if (s.re() == 0) return Interval(abs(s.im()));
  return sqrt_enclosure(s.abs2());
}

Rational pow(const Rational& base, unsigned exp) {
  Rational result(1);
  Rational b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return result;
}

Rational factorial(unsigned n) {
  Integer r(1);
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

Rational to_rational(double d) {
  if (!std::isfinite(d)) throw std::domain_error("non-finite double");
  int e = 0;
  double m = std::frexp(d, &e);
  // m * 2^53 is an integer for any double.
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  Rational r{Integer(mant)};
  int shift = e - 53;
  if (shift > 0) r *= Rational(Integer(1) << shift);
  if (shift < 0) r /= Rational(Integer(1) << -shift);
  return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const Scalar& s) {
  if (s.im() == 0) return s.re().str();
  std::string im = s.im().str();
  if (im.front() != '-') im = "+" + im;
  return s.re().str() + im + " i";
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(\s*([+-]?\d+(/\d+)?)\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string t = m[1].str();
  if (t.front() == '+') t.erase(t.begin());
  auto slash = t.find('/');
  if (slash != std::string::npos && t.find_first_not_of('0', slash + 1) == std::string::npos)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(t);
}

Scalar parse_scalar(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError("empty scalar");
  if (t.back() != 'i') return Scalar(parse_rational(t));
  t.pop_back();
  // split real and imaginary parts at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if (t[i] == '+' || t[i] == '-') {
      split = i;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : t.substr(0, split);
  std::string im_part = split == std::string::npos ? t : t.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, parse_rational(im_part)};
}

}  // namespace ghc
