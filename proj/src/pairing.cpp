#include "ghc/pairing.hpp"

#include "ghc/errors.hpp"
#include "ghc/growth.hpp"
#include "ghc/truncated.hpp"

#include <algorithm>

namespace ghc {

std::string to_string(CyclicityCertificate c) {
  switch (c) {
    case CyclicityCertificate::Unverified: return "unverified";
    case CyclicityCertificate::VerifiedOnSamples: return "verified-on-samples";
    case CyclicityCertificate::Symmetrized: return "symmetrized";
  }
  return "?";
}

std::string to_string(ConstantSource s) { return s == ConstantSource::Fitted ? "fitted" : "declared"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CyclicCocycle::CyclicCocycle(int arity, Cochain base, Evaluator eval, CyclicityCertificate cert, Convention conv,
                             std::vector<std::string> notes)
    : arity_(arity),
      base_(std::move(base)),
      eval_(std::make_shared<const Evaluator>(std::move(eval))),
      cert_(cert),
      conv_(conv),
      notes_(std::move(notes)) {}

Scalar CyclicCocycle::operator()(const Tuple& t) const {
  if (static_cast<int>(t.size()) != arity_ + 1)
    throw DomainError("cyclic cocycle of arity " + std::to_string(arity_) + " evaluated on a " +
                      std::to_string(t.size()) + "-tuple");
  return (*eval_)(t);
}

CyclicCocycle CyclicCocycle::with_certificate(CyclicityCertificate cert, std::string note) const {
  CyclicCocycle out = *this;
  out.cert_ = cert;
  out.notes_.push_back(std::move(note));
  return out;
}

namespace {

Scalar extension_value(const Group& group, const Cochain& c, const Tuple& t) {
  if (!group.is_identity(group.product(t))) return Scalar{};
  return c(std::span<const Element>(t).subspan(1));
}

Tuple rotate_right(Tuple t, int k) {
  const auto m = static_cast<int>(t.size());
  std::rotate(t.begin(), t.begin() + (m - k % m) % m, t.end());
  return t;
}

}  // namespace

CyclicCocycle extend_to_cyclic(const Group& group, const Cochain& c, NormalizationPolicy policy,
                               Convention convention) {
  std::vector<std::string> notes;
  Cochain base = c;
  if (!c.normalized() && c.arity() > 0) {
    if (policy == NormalizationPolicy::Require)
      throw DomainError("cochain '" + c.name() + "' is not normalized; pass the zero-degenerate policy to normalize");
    base = cochains::zero_degenerate(group, c);
    notes.push_back("normalized by zeroing degenerate tuples");
  }
  return CyclicCocycle(
      c.arity(), base, [group, base](const Tuple& t) { return extension_value(group, base, t); },
      CyclicityCertificate::Unverified, convention, std::move(notes));
}

CyclicCocycle cyclic_symmetrize(const CyclicCocycle& tc) {
  const int n = tc.arity();
  const int s = tau_sign(n, tc.convention());
  // the signed rotation has order n+1, or 2(n+1) when s^{n+1} = -1; averaging
  // over the full cyclic group it generates gives an idempotent projection
  const bool odd_order = s == -1 && (n + 1) % 2 == 1;
  const int period = odd_order ? 2 * (n + 1) : n + 1;
  auto notes = tc.notes();
  notes.push_back(odd_order ? "cyclically symmetrized (tau has order 2(n+1); only 0 is invariant)"
                            : "cyclically symmetrized");
  return CyclicCocycle(
      n, tc.base(),
      [tc, n, s, period](const Tuple& t) {
        Scalar acc;
        for (int k = 0; k < period; ++k) {
          Scalar v = tc(rotate_right(t, k % (n + 1)));
          if (s == -1 && k % 2 == 1) acc -= v;
          else acc += v;
        }
        return acc * Scalar(Rational(1, period));
      },
      CyclicityCertificate::Symmetrized, tc.convention(), std::move(notes));
}

std::optional<Tuple> cyclicity_defect(const Group& group, const CyclicCocycle& tc, int radius, std::size_t cap) {
  const int s = tau_sign(tc.arity(), tc.convention());
  for (const auto& t : tuples_within(group, tc.arity() + 1, radius, cap)) {
    Scalar a = tc(rotate_right(t, 1));
    Scalar b = tc(t);
    if (s == -1) b = -b;
    if (!(a == b)) return t;
  }
  return std::nullopt;
}

std::optional<Tuple> support_defect(const Group& group, const CyclicCocycle& tc, int radius, std::size_t cap) {
  for (const auto& t : tuples_within(group, tc.arity() + 1, radius, cap))
    if (!group.is_identity(group.product(t)) && !tc(t).is_zero()) return t;
  return std::nullopt;
}

CyclicCocycle alternate_extension(const Group& group, const CyclicCocycle& tc) {
  if (tc.convention() != Convention::Standard)
    throw Unsupported("alternation matches the standard tau sign only");
  const int n = tc.arity();
  std::vector<int> perm(static_cast<std::size_t>(n + 1));
  std::vector<std::pair<std::vector<int>, int>> perms;  // permutation and its sign
  for (int i = 0; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    int inversions = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    perms.emplace_back(perm, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const Rational scale(1, static_cast<long>(perms.size()));

  auto notes = tc.notes();
  notes.push_back("alternated over all vertex permutations");
  return CyclicCocycle(
      n, tc.base(),
      [group, tc, n, perms, scale](const Tuple& t) {
        if (!group.is_identity(group.product(t))) return Scalar{};
        // vertices e, g_1, g_1 g_2, ..., g_1...g_n of the homogeneous simplex
        std::vector<Element> v{group.identity()};
        for (int k = 1; k <= n; ++k) v.push_back(group.multiply(v.back(), t[static_cast<std::size_t>(k)]));
        Scalar acc;
        Tuple args(static_cast<std::size_t>(n + 1));
        for (const auto& [p, sign] : perms) {
          // c(x_0^-1 x_1, ..., x_{n-1}^-1 x_n) read off the inhomogeneous extension
          Element prod = group.identity();
          for (int k = 1; k <= n; ++k) {
            const auto& a = v[static_cast<std::size_t>(p[static_cast<std::size_t>(k - 1)])];
            const auto& b = v[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])];
            args[static_cast<std::size_t>(k)] = group.eval(a, b, GroupOp::InverseLeft);
            prod = group.multiply(prod, args[static_cast<std::size_t>(k)]);
          }
          args[0] = group.inverse(prod);
          Scalar val = tc(args);
          if (sign == 1) acc += val;
          else acc -= val;
        }
        return acc * Scalar(scale);
      },
      CyclicityCertificate::Symmetrized, tc.convention(), std::move(notes));
}

CyclicCocycle certify_cyclic(const Group& group, const CyclicCocycle& tc, int radius, std::size_t cap) {
  if (!cyclicity_defect(group, tc, radius, cap))
    return tc.with_certificate(CyclicityCertificate::VerifiedOnSamples,
                               "tau-invariant on the radius " + std::to_string(radius) + " ball");
  if (tc.convention() == Convention::Standard) return alternate_extension(group, tc);
  auto out = cyclic_symmetrize(tc);
  return out.with_certificate(CyclicityCertificate::Symmetrized,
                              "rotation average; need not preserve the cocycle property");
}

Scalar pair(const CyclicCocycle& tc, const Chain& x) {
  if (x.degree() != tc.arity())
    throw DomainError("pairing a degree " + std::to_string(tc.arity()) + " cocycle with a degree " +
                      std::to_string(x.degree()) + " chain");
  Scalar s;
  for (const auto& [t, c] : x.terms()) s += c * tc(t);
  return s;
}

FactoringReport homogeneous_factoring_check(const Group& group, const CyclicCocycle& tc, const Chain& x) {
  FactoringReport r;
  r.full = pair(tc, x);
  r.homogeneous = pair(tc, homogeneous_part(group, x));
  r.equal = r.full == r.homogeneous;
  return r;
}

CocycleCheckReport cocycle_check(const Group& group, const CyclicCocycle& tc, const std::vector<Chain>& ys,
                                 int cocycle_radius, std::size_t cap) {
  CocycleCheckReport r;
  r.base_is_cocycle = is_cocycle_on(group, tc.base(), cocycle_radius, cap);
  for (const auto& y : ys) {
    if (y.degree() != tc.arity() + 1) throw DomainError("cocycle check needs chains of degree n+1");
    Scalar v = pair(tc, hochschild_b(group, y));
    if (!v.is_zero()) ++r.nonzero;
    r.defects.push_back(std::move(v));
    ++r.samples;
  }
  return r;
}

BoundCertificate verify_pairing_bound(const Group& group, const Cochain& c, const Chain& x, const EtaParams& params,
                                      int cover_radius, ConstantSource source, std::size_t cap) {
  params.validate();
  const int n = x.degree();
  if (c.arity() != n)
    throw DomainError("cochain arity " + std::to_string(c.arity()) + " does not match chain degree " +
                      std::to_string(n));
  int tail = 0;
  for (const auto& [t, coef] : x.terms())
    tail = std::max(tail, group.total_length(t) - group.word_length(t[0]));
  if (cover_radius < tail)
    throw DomainError("coverRadius " + std::to_string(cover_radius) + " is below the support radius " +
                      std::to_string(tail));

  BoundCertificate cert;
  cert.cochain_id = c.name();
  cert.params = params;
  cert.degree = n;
  cert.cover_radius = cover_radius;
  cert.source = source;

  Scalar value;
  for (const auto& [t, coef] : x.terms()) value += coef * extension_value(group, c, t);
  cert.left = modulus(value);

  const auto layers = layer_maxima_sq(group, c, cover_radius, cap);
  cert.fitted_constant = sqrt_enclosure(fitted_constant_sq(layers, params.lambda, cover_radius));
  cert.constant = cert.fitted_constant;
  if (source == ConstantSource::Declared) {
    const auto& declared = c.declared_bound();
    if (!declared) throw DomainError("cochain '" + c.name() + "' declares no growth bound");
    if (declared->base > params.lambda)
      throw DomainError("declared growth base " + to_string(declared->base) + " exceeds lambda " +
                        to_string(params.lambda));
    cert.constant = Interval(declared->constant);
    cert.declared_consistent = certified_le(cert.fitted_constant, cert.constant) == Certified::True;
  }

  cert.D = pairing_D(n, params);
  cert.eta = eta_seminorm(group, x, params);
  cert.right = scale_nonneg(mul_nonneg(cert.constant, cert.eta), cert.D);
  switch (certified_le(cert.left, cert.right)) {
    case Certified::True: cert.verdict = Verdict::Pass; break;
    case Certified::False: cert.verdict = Verdict::Fail; break;
    case Certified::Unknown: cert.verdict = Verdict::Inconclusive; break;
  }
  if (cert.declared_consistent == false) cert.verdict = Verdict::Fail;
  return cert;
}

}  // namespace ghc
