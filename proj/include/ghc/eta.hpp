#pragma once

#include "ghc/chain_ops.hpp"

#include <string>
#include <vector>

namespace ghc {

struct EtaParams {
  Rational N{1};
  unsigned m = 0;
  Rational lambda{1};

  /// Throws DomainError unless N >= 1 and lambda >= 1.
  void validate() const;
};

/// c(2k) = c(2k+1) = k.
inline unsigned eta_c(int n) { return static_cast<unsigned>(n / 2); }

/// (2 + 2c(n))^m / (c(n)! N^{c(n)}).
Rational eta_weight(int n, const EtaParams& p);

/// c(n)! (2 + 2c(n))^{-m} N^{c(n)} = 1 / eta_weight(n).
Rational pairing_D(int n, const EtaParams& p);

/// weight(n) * sum |coef| * lambda^{sum L(g_i)}. Exact when every
/// coefficient has rational modulus.
Interval eta_seminorm(const Group& group, const Chain& x, const EtaParams& p);

enum class BoundaryOp { b, B };

std::string to_string(BoundaryOp op);

struct BoundednessReport {
  BoundaryOp op = BoundaryOp::b;
  int degree = 0;
  unsigned m_in = 0;
  /// m' = m for b, m + 1 for B.
  unsigned m_out = 0;
  std::size_t samples = 0;
  /// Enclosure of max_x eta_{N,m'}(op x) / eta_{N,m}(x).
  Interval max_ratio;
  /// (n+1) w_m(n-1)/w_m(n) for b; 2(n+1) w_{m+1}(n+1)/w_m(n) for B.
  Rational analytic_bound;
  bool within_bound = false;
};

/// Throws DomainError if a sample is zero or has the wrong degree.
BoundednessReport boundedness_check(const Group& group, BoundaryOp op, const EtaParams& p, int degree,
                                    const std::vector<Chain>& samples, Convention convention = Convention::Standard);

}  // namespace ghc
