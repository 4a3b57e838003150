#include "ghc/identity_suite.hpp"

#include "ghc/errors.hpp"
#include "ghc/parallel.hpp"
#include "ghc/truncated.hpp"

#include <algorithm>
#include <array>

namespace ghc {

namespace {

enum Check : std::size_t {
  kBB_b,
  kBB_B,
  kAnti,
  kSplitB,
  kSplitConnes,
  kRadiusB,
  kRadiusConnes,
  kRadiusTau,
  kTauPower,
  kDescent,
  kCheckCount
};

constexpr std::array<const char*, kCheckCount> kNames{
    "bb",        "BB",        "bB+Bb",       "split-b",   "split-B",
    "closure-b", "closure-B", "closure-tau", "tau-power", "cyclic-descent"};

using Outcome = std::array<int, kCheckCount>;  // -1 skipped, 0 ok, 1 violation

bool split_commutes(const Group& group, const Chain& x, const Chain& image,
                    Chain (*op)(const Group&, const Chain&, Convention), Convention conv) {
  auto whole = conjugacy_split(group, image);
  auto parts = conjugacy_split(group, x);
  std::map<Element, Chain> mapped;
  for (const auto& [cls, part] : parts) {
    Chain y = op(group, part, conv);
    if (!y.is_zero()) mapped.emplace(cls, std::move(y));
  }
  return whole == mapped;
}

Chain apply_b(const Group& g, const Chain& x, Convention) { return hochschild_b(g, x); }
Chain apply_B(const Group& g, const Chain& x, Convention c) { return connes_B(g, x, c); }

Outcome run_sample(const Group& group, const IdentitySuiteOptions& opts, std::size_t index) {
  Rng rng(derive_seed(opts.seed, index));
  ChainShape shape;
  shape.degree = static_cast<int>(rng.uniform(1, std::max(1, opts.max_degree)));
  shape.terms = opts.terms;
  shape.radius = opts.radius;
  shape.coefficients = CoefficientKind::Rational;
  shape.homogeneous_percent = 30;
  const Chain x = random_chain(group, rng, shape);
  const int n = x.degree();
  const Convention conv = opts.convention;

  Outcome out;
  out.fill(-1);
  auto set = [&](Check c, bool ok) { out[c] = ok ? 0 : 1; };

  const Chain bx = hochschild_b(group, x);
  const Chain Bx = connes_B(group, x, conv);
  if (n >= 2) set(kBB_b, hochschild_b(group, bx).is_zero());
  set(kBB_B, connes_B(group, Bx, conv).is_zero());
  set(kAnti, (hochschild_b(group, Bx) + connes_B(group, bx, conv)).is_zero());
  set(kSplitB, split_commutes(group, x, bx, apply_b, conv));
  set(kSplitConnes, split_commutes(group, x, Bx, apply_B, conv));

  // B inserts units, so its image stays within the radius of x as well
  const int r = opts.radius;
  set(kRadiusB, bx.max_total_length(group) <= r);
  set(kRadiusConnes, Bx.max_total_length(group) <= r);
  Chain t = x;
  bool closed = true;
  for (int k = 0; k <= n; ++k) {
    t = cyclic_tau(t, conv);
    closed = closed && t.max_total_length(group) <= r;
  }
  set(kRadiusTau, closed);
  Chain expected = x;
  if (tau_sign(n, conv) == -1 && (n + 1) % 2 == 1) expected *= Scalar(-1);
  set(kTauPower, t == expected);
  if (conv == Convention::Standard) set(kDescent, cyclic_descent_defect(group, x, conv).is_zero());
  return out;
}

}  // namespace

bool IdentitySuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.violations == 0; });
}

const IdentityCheck& IdentitySuiteReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw DomainError("no identity check named '" + name + "'");
}

IdentitySuiteReport run_identity_suite(const Group& group, const IdentitySuiteOptions& opts, bool parallel) {
  if (opts.max_degree < 1) throw DomainError("identity suite needs max_degree >= 1");
  std::vector<Outcome> outcomes(opts.samples);
  auto body = [&](std::size_t i) { outcomes[i] = run_sample(group, opts, i); };
  if (parallel) {
    parallel_for(opts.samples, body);
  } else {
    for (std::size_t i = 0; i < opts.samples; ++i) body(i);
  }

  IdentitySuiteReport rep;
  rep.group = group.name();
  rep.options = opts;
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    IdentityCheck check;
    check.name = kNames[c];
    for (std::size_t i = 0; i < opts.samples; ++i) {
      if (outcomes[i][c] < 0) continue;
      ++check.checked;
      if (outcomes[i][c] == 1) {
        if (!check.witness) check.witness = "sample " + std::to_string(i);
        ++check.violations;
      }
    }
    rep.checks.push_back(std::move(check));
  }
  return rep;
}

}  // namespace ghc
