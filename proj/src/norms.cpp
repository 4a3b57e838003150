#include "ghc/norms.hpp"

#include "ghc/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace ghc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::complex<double> to_complex(const Scalar& s) { return {to_double(s.re()), to_double(s.im())}; }

Rational round_down(double d) {
  d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d <= 0 ? Rational(0) : to_rational(d);
}

Rational round_up(double d) { return to_rational(std::nextafter(std::max(d, 0.0), std::numeric_limits<double>::infinity())); }

NormEnclosure finite_norm(const Group& group, const AlgebraElement& x) {
  const auto n = static_cast<Eigen::Index>(group.order());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  double l1 = 0.0;
  for (const auto& [g, c] : x.terms()) {
    auto cz = to_complex(c);
    l1 += std::abs(cz);
    for (Eigen::Index h = 0; h < n; ++h) {
      auto gh = group.multiply(g, Element{{static_cast<int>(h)}});
      m(gh.code[0], h) += cz;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  double sigma = n > 0 ? svd.singularValues()(0) : 0.0;
  double err = (8.0 * static_cast<double>(n) + 4.0) * kEps * l1 + std::numeric_limits<double>::denorm_min();
  return {Interval(round_down(sigma - err), round_up(sigma + err)), sigma, err};
}

struct TorusProblem {
  std::vector<std::pair<std::vector<double>, std::complex<double>>> terms;
  int dims = 0;

  double value(const std::vector<double>& theta) const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [g, c] : terms) {
      double phase = 0.0;
      for (int i = 0; i < dims; ++i) phase += g[static_cast<std::size_t>(i)] * theta[static_cast<std::size_t>(i)];
      s += c * std::polar(1.0, phase);
    }
    return std::abs(s);
  }
};

NormEnclosure torus_norm(const Group& group, const AlgebraElement& x, const ReducedNormOptions& opts) {
  TorusProblem p;
  p.dims = group.rank();
  double lipschitz = 0.0, eval_err = 0.0;
  for (const auto& [g, c] : x.terms()) {
    std::vector<double> v(g.code.begin(), g.code.end());
    double gnorm = 0.0;
    for (double a : v) gnorm += std::abs(a);
    double cabs = std::abs(to_complex(c));
    lipschitz += cabs * gnorm;
    eval_err += 16.0 * kEps * cabs * (1.0 + gnorm);
    p.terms.emplace_back(std::move(v), to_complex(c));
  }
  if (p.terms.empty()) return {Interval(Rational(0)), 0.0, 0.0};

  const int k = p.dims;
  const int res = std::max(1, opts.resolution);
  double cells_needed = std::pow(static_cast<double>(res), k);
  if (cells_needed > static_cast<double>(opts.max_cells)) throw ResourceLimit("torus cells", opts.max_cells);

  struct Cell {
    std::vector<double> center;
    double value;
  };
  double half = std::numbers::pi / res;
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(cells_needed));
  std::vector<int> idx(k, 0);
  for (std::size_t c = 0; c < static_cast<std::size_t>(cells_needed); ++c) {
    std::vector<double> theta(k);
    for (int i = 0; i < k; ++i) theta[i] = (2 * idx[i] + 1) * half;
    cells.push_back({theta, p.value(theta)});
    for (int i = 0; i < k && ++idx[i] == res; ++i) idx[i] = 0;
  }

  double best = 0.0;
  for (const auto& c : cells) best = std::max(best, c.value);
  double upper = 0.0;
  while (true) {
    double margin = lipschitz * half + eval_err;
    upper = 0.0;
    for (const auto& c : cells) upper = std::max(upper, c.value + margin);
    double lower = best - eval_err;
    if (upper - lower <= opts.tolerance || half < 1e-15) break;
    std::vector<Cell> next;
    const std::size_t children = std::size_t{1} << k;
    double child_half = half / 2;
    for (const auto& c : cells) {
      if (c.value + margin < lower) continue;
      for (std::size_t mask = 0; mask < children; ++mask) {
        std::vector<double> theta = c.center;
        for (int i = 0; i < k; ++i) theta[i] += ((mask >> i) & 1u) ? child_half : -child_half;
        double v = p.value(theta);
        best = std::max(best, v);
        next.push_back({std::move(theta), v});
      }
      if (next.size() > opts.max_cells) break;
    }
    if (next.size() > opts.max_cells) break;  // keep the current (wider) enclosure
    cells = std::move(next);
    half = child_half;
  }
  double lower = best - eval_err;
  double mid = 0.5 * (lower + upper);
  return {Interval(round_down(lower), round_up(upper)), best, upper - mid};
}

}  // namespace

NormEnclosure reduced_norm(const Group& group, const AlgebraElement& x, const ReducedNormOptions& opts) {
  NormEnclosure out;
  switch (group.kind()) {
    case GroupKind::FiniteTable: out = finite_norm(group, x); break;
    case GroupKind::FreeAbelian: out = torus_norm(group, x, opts); break;
    case GroupKind::Free:
      throw Unsupported("reduced C*-norm is only computable for finite and free abelian groups");
  }
  // exact bounds: the trivial representation from below, l1 from above
  Scalar total;
  for (const auto& [g, c] : x.terms()) total += c;
  Interval trivial = modulus(total);
  Interval l1 = nu_lambda(group, x, Rational(1));
  out.value.lo = std::max(out.value.lo, trivial.lo);
  out.value.hi = std::min(out.value.hi, l1.hi);
  if (out.value.lo > out.value.hi) throw std::logic_error("reduced norm enclosure is inconsistent");
  return out;
}

NormEnclosure amax_seminorm(const Group& group, const AlgebraElement& x, const ReducedNormOptions& opts) {
  return reduced_norm(group, x.absolute().value, opts);
}

std::string Seminorm::name() const {
  switch (kind) {
    case SeminormKind::NuLambda: return "nu[" + lambda.str() + "]";
    case SeminormKind::Max: return "max";
    case SeminormKind::Reduced: return "reduced";
  }
  return "?";
}

Interval Seminorm::evaluate(const Group& group, const AlgebraElement& x, const ReducedNormOptions& opts) const {
  switch (kind) {
    case SeminormKind::NuLambda: return nu_lambda(group, x, lambda);
    case SeminormKind::Max: return amax_seminorm(group, x, opts).value;
    case SeminormKind::Reduced: return reduced_norm(group, x, opts).value;
  }
  return {};
}

bool dominated_by(const AlgebraElement& x, const AlgebraElement& y) {
  for (const auto& [g, c] : x.terms())
    if (c.abs2() > y.coefficient(g).abs2()) return false;
  return true;
}

UnconditionalReport check_unconditional(const Group& group, const Seminorm& seminorm,
                                        const std::vector<std::pair<AlgebraElement, AlgebraElement>>& samples,
                                        const ReducedNormOptions& opts) {
  UnconditionalReport report;
  report.seminorm = seminorm.name();
  report.samples = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [x, y] = samples[i];
    Interval ex = seminorm.evaluate(group, x, opts);
    auto ax = x.absolute();
    Interval eabs = seminorm.evaluate(group, ax.value, opts);
    ++report.absolute_checked;
    switch (certified_eq(ex, eabs)) {
      case Certified::True: break;
      case Certified::False: report.violations.push_back({i, "absolute", ex, eabs}); break;
      case Certified::Unknown: ++report.inconclusive; break;
    }
    if (dominated_by(x, y)) {
      ++report.monotone_checked;
      Interval ey = seminorm.evaluate(group, y, opts);
      switch (certified_le(ex, ey)) {
        case Certified::True: break;
        case Certified::False: report.violations.push_back({i, "monotone", ex, ey}); break;
        case Certified::Unknown: ++report.inconclusive; break;
      }
    }
  }
  return report;
}

}  // namespace ghc
