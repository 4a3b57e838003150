#include "ghc/growth.hpp"

#include "ghc/errors.hpp"
#include "ghc/parallel.hpp"
#include "ghc/truncated.hpp"

#include <algorithm>
#include <cmath>

namespace ghc {

std::string to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::SubexponentialConsistent: return "subexponential-consistent";
    case GrowthClass::ExponentialOnly: return "exponential-only";
    case GrowthClass::Inconclusive: return "inconclusive";
  }
  return "?";
}

const GrowthRow& GrowthReport::row(const Rational& lambda, int radius) const {
  for (const auto& r : rows)
    if (r.lambda == lambda && r.radius == radius) return r;
  throw DomainError("no growth row for lambda " + to_string(lambda) + ", R = " + std::to_string(radius));
}

bool GrowthReport::stable(const Rational& lambda) const {
  if (radii.size() < 2) return false;
  return row(lambda, radii[radii.size() - 1]).constant_sq == row(lambda, radii[radii.size() - 2]).constant_sq;
}

std::vector<Rational> layer_maxima_sq(const Group& group, const Cochain& phi, int radius, std::size_t cap,
                                      bool parallel) {
  if (radius < 0) throw DomainError("radius must be >= 0");
  std::vector<Rational> layers(static_cast<std::size_t>(radius + 1), Rational(0));
  if (phi.arity() == 0) {
    layers[0] = phi(Tuple{}).abs2();
    return layers;
  }
  const auto tuples = tuples_within(group, phi.arity(), radius, cap);
  std::vector<Rational> values(tuples.size());
  std::vector<int> lengths(tuples.size());
  auto eval = [&](std::size_t i) {
    values[i] = phi(tuples[i]).abs2();
    lengths[i] = group.total_length(tuples[i]);
  };
  if (parallel) {
    parallel_for(tuples.size(), eval);
  } else {
    for (std::size_t i = 0; i < tuples.size(); ++i) eval(i);
  }
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    auto& m = layers[static_cast<std::size_t>(lengths[i])];
    if (values[i] > m) m = values[i];
  }
  return layers;
}

Rational fitted_constant_sq(const std::vector<Rational>& layer_max_sq, const Rational& lambda, int radius) {
  Rational best(0);
  Rational scale(1);  // lambda^{-2l}
  const Rational step = 1 / (lambda * lambda);
  const int top = std::min<int>(radius, static_cast<int>(layer_max_sq.size()) - 1);
  for (int l = 0; l <= top; ++l) {
    Rational v = layer_max_sq[static_cast<std::size_t>(l)] * scale;
    if (v > best) best = v;
    scale *= step;
  }
  return best;
}

namespace {

std::optional<int> polynomial_fit(const std::vector<Rational>& layers, int r_prev, int r_max) {
  for (unsigned d = 0; d <= 6; ++d) {
    auto fit = [&](int radius) {
      Rational best(0);
      for (int l = 0; l <= radius; ++l) {
        Rational denom = pow(Rational(std::max(1, l)), 2 * d);
        Rational v = layers[static_cast<std::size_t>(l)] / denom;
        if (v > best) best = v;
      }
      return best;
    };
    if (fit(r_prev) == fit(r_max)) return static_cast<int>(d);
  }
  return std::nullopt;
}

}  // namespace

GrowthReport growth_fit(const Group& group, const Cochain& phi, const GrowthOptions& opts) {
  if (opts.lambdas.empty()) throw DomainError("lambda grid is empty");
  if (opts.radii.empty()) throw DomainError("radius list is empty");
  for (const auto& l : opts.lambdas)
    if (l <= 1) throw DomainError("growth fit needs lambda > 1, got " + to_string(l));
  for (int r : opts.radii)
    if (r < 0) throw DomainError("radii must be >= 0");

  GrowthReport rep;
  rep.cochain = phi.name();
  rep.arity = phi.arity();
  rep.lambdas = opts.lambdas;
  std::sort(rep.lambdas.begin(), rep.lambdas.end());
  rep.lambdas.erase(std::unique(rep.lambdas.begin(), rep.lambdas.end()), rep.lambdas.end());
  rep.radii = opts.radii;
  std::sort(rep.radii.begin(), rep.radii.end());
  rep.radii.erase(std::unique(rep.radii.begin(), rep.radii.end()), rep.radii.end());

  const int r_max = rep.radii.back();
  rep.layer_max_sq = layer_maxima_sq(group, phi, r_max, opts.cap, opts.parallel);
  for (const auto& l : rep.lambdas)
    for (int r : rep.radii) {
      GrowthRow row{l, r, fitted_constant_sq(rep.layer_max_sq, l, r), {}};
      row.constant = sqrt_enclosure(row.constant_sq);
      rep.rows.push_back(std::move(row));
    }

  if (rep.radii.size() < 2) return rep;
  const int r_prev = rep.radii[rep.radii.size() - 2];
  std::vector<Rational> diverging, stable;
  for (const auto& l : rep.lambdas) (rep.stable(l) ? stable : diverging).push_back(l);
  if (diverging.empty()) {
    rep.classification = GrowthClass::SubexponentialConsistent;
    // at small radii l^d outgrows any fixed exponential, so the fit is only
    // meaningful once every sampled lambda has stabilized
    rep.polynomial_degree = polynomial_fit(rep.layer_max_sq, r_prev, r_max);
  } else if (!stable.empty() && diverging.back() < stable.front()) {
    rep.classification = GrowthClass::ExponentialOnly;
    rep.threshold_lower = diverging.back();
    rep.threshold_upper = stable.front();
    const auto& top = rep.layer_max_sq[static_cast<std::size_t>(r_max)];
    const auto& prev = rep.layer_max_sq[static_cast<std::size_t>(r_prev)];
    if (top > 0 && prev > 0)
      rep.threshold_estimate = std::pow(to_double(top / prev), 1.0 / (2.0 * (r_max - r_prev)));
  }
  return rep;
}

}  // namespace ghc
