#include "ghc/eta.hpp"

#include "ghc/errors.hpp"

namespace ghc {

void EtaParams::validate() const {
  if (N < 1) throw DomainError("eta parameter N must be >= 1, got " + to_string(N));
  if (lambda < 1) throw DomainError("eta parameter lambda must be >= 1, got " + to_string(lambda));
}

Rational eta_weight(int n, const EtaParams& p) {
  if (n < 0) throw DomainError("degree must be >= 0");
  p.validate();
  const unsigned c = eta_c(n);
  return pow(Rational(2 + 2 * c), p.m) / (factorial(c) * pow(p.N, c));
}

Rational pairing_D(int n, const EtaParams& p) { return 1 / eta_weight(n, p); }

Interval eta_seminorm(const Group& group, const Chain& x, const EtaParams& p) {
  const Rational w = eta_weight(x.degree(), p);
  Interval total;
  for (const auto& [t, c] : x.terms())
    total += scale_nonneg(modulus(c), pow(p.lambda, static_cast<unsigned>(group.total_length(t))));
  return scale_nonneg(total, w);
}

std::string to_string(BoundaryOp op) { return op == BoundaryOp::b ? "b" : "B"; }

BoundednessReport boundedness_check(const Group& group, BoundaryOp op, const EtaParams& p, int degree,
                                    const std::vector<Chain>& samples, Convention convention) {
  if (op == BoundaryOp::b && degree < 1) throw DomainError("b needs degree >= 1");
  if (degree < 0) throw DomainError("degree must be >= 0");
  BoundednessReport r;
  r.op = op;
  r.degree = degree;
  r.m_in = p.m;
  r.m_out = op == BoundaryOp::b ? p.m : p.m + 1;
  EtaParams out = p;
  out.m = r.m_out;
  const int n = degree;
  if (op == BoundaryOp::b)
    r.analytic_bound = Rational(n + 1) * eta_weight(n - 1, out) / eta_weight(n, p);
  else
    r.analytic_bound = Rational(2 * (n + 1)) * eta_weight(n + 1, out) / eta_weight(n, p);

  bool first = true;
  for (const auto& x : samples) {
    if (x.degree() != degree) throw DomainError("sample of degree " + std::to_string(x.degree()) +
                                                " in a degree " + std::to_string(degree) + " check");
    if (x.is_zero()) throw DomainError("boundedness samples must be nonzero");
    const Chain y = op == BoundaryOp::b ? hochschild_b(group, x) : connes_B(group, x, convention);
    const Interval num = eta_seminorm(group, y, out);
    const Interval den = eta_seminorm(group, x, p);
    const Interval ratio{num.lo / den.hi, num.hi / den.lo};
    if (first) {
      r.max_ratio = ratio;
      first = false;
    } else {
      if (ratio.lo > r.max_ratio.lo) r.max_ratio.lo = ratio.lo;
      if (ratio.hi > r.max_ratio.hi) r.max_ratio.hi = ratio.hi;
    }
    ++r.samples;
  }
  r.within_bound = r.samples == 0 || certified_le(r.max_ratio, Interval(r.analytic_bound)) == Certified::True;
  return r;
}

}  // namespace ghc
