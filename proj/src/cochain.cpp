#include "ghc/cochain.hpp"

#include "ghc/errors.hpp"
#include "ghc/truncated.hpp"

#include <algorithm>

namespace ghc {

Cochain::Cochain(int arity, Evaluator eval, std::string name, bool normalized, std::optional<GrowthBound> declared)
    : arity_(arity),
      eval_(std::make_shared<const Evaluator>(std::move(eval))),
      name_(std::move(name)),
      normalized_(normalized),
      declared_(std::move(declared)) {
  if (arity < 0) throw DomainError("cochain arity must be >= 0");
}

Scalar Cochain::operator()(std::span<const Element> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw DomainError("cochain '" + name_ + "' of arity " + std::to_string(arity_) + " evaluated on " +
                      std::to_string(args.size()) + " arguments");
  return (*eval_)(args);
}

Cochain Cochain::with_name(std::string name) const {
  Cochain c = *this;
  c.name_ = std::move(name);
  return c;
}

namespace cochains {

Cochain zero(int arity) {
  return Cochain(arity, [](std::span<const Element>) { return Scalar{}; }, "zero", true, GrowthBound{Rational(1), Rational(0)});
}

Cochain homomorphism(const Group& group, std::vector<Scalar> values) {
  if (group.kind() == GroupKind::FiniteTable) {
    if (std::any_of(values.begin(), values.end(), [](const Scalar& s) { return !s.is_zero(); }))
      throw Unsupported("finite groups admit no nonzero homomorphism to C");
    return zero(1).with_name("homomorphism");
  }
  if (static_cast<int>(values.size()) != group.rank())
    throw DomainError("homomorphism needs one value per generator");
  const GroupKind kind = group.kind();
  Rational maxabs(0);
  bool real = true;
  for (const auto& v : values) {
    if (!v.is_real()) real = false;
    maxabs = std::max(maxabs, Rational(abs(v.re()) + abs(v.im())));
  }
  std::optional<GrowthBound> bound;
  // |phi(g)| <= max|v| * L(g) <= max|v| * 2^{L(g)}
  if (real) bound = GrowthBound{Rational(2), maxabs};
  return Cochain(
      1,
      [values, kind](std::span<const Element> a) {
        Scalar s;
        const auto& code = a[0].code;
        if (kind == GroupKind::Free) {
          for (int c : code) {
            const Scalar& v = values[static_cast<std::size_t>(std::abs(c) - 1)];
            if (c > 0) s += v;
            else s -= v;
          }
        } else {
          for (std::size_t i = 0; i < code.size(); ++i) s += Scalar(Rational(code[i])) * values[i];
        }
        return s;
      },
      "homomorphism", true, bound);
}

Cochain length_power(const Group& group, int arity, unsigned degree) {
  return Cochain(
      arity,
      [group, degree](std::span<const Element> a) {
        int total = 0;
        for (const auto& g : a) total += group.word_length(g);
        return Scalar(pow(Rational(total), degree));
      },
      "length_power(" + std::to_string(degree) + ")", arity == 1 && degree > 0);
}

Cochain length_exponential(const Group& group, int arity, const Rational& base) {
  return Cochain(
      arity,
      [group, base](std::span<const Element> a) {
        int total = 0;
        for (const auto& g : a) total += group.word_length(g);
        return Scalar(pow(base, static_cast<unsigned>(total)));
      },
      "length_exponential(" + base.str() + ")", false, GrowthBound{abs(base), Rational(1)});
}

Cochain indicator(const Tuple& at, Scalar value) {
  return Cochain(
      static_cast<int>(at.size()),
      [at, value](std::span<const Element> a) {
        return std::equal(a.begin(), a.end(), at.begin(), at.end()) ? value : Scalar{};
      },
      "indicator");
}

Cochain area(const Group& group, int i, int j) {
  if (group.kind() != GroupKind::FreeAbelian) throw Unsupported("area cocycle needs a free abelian group");
  if (i < 0 || j < 0 || i >= group.rank() || j >= group.rank() || i == j)
    throw DomainError("area cocycle coordinates out of range");
  // |g_i h_j - g_j h_i| <= L(g) L(h) <= 2^{L(g)} 2^{L(h)}
  return Cochain(
      2,
      [i, j](std::span<const Element> a) {
        const auto& g = a[0].code;
        const auto& h = a[1].code;
        return Scalar(Rational(static_cast<long>(g[i]) * h[j] - static_cast<long>(g[j]) * h[i]));
      },
      "area", true, GrowthBound{Rational(2), Rational(1)});
}

Cochain sum(const Cochain& a, const Cochain& b) {
  if (a.arity() != b.arity()) throw DomainError("sum of cochains of different arity");
  std::optional<GrowthBound> bound;
  if (a.declared_bound() && b.declared_bound()) {
    const auto& x = *a.declared_bound();
    const auto& y = *b.declared_bound();
    bound = GrowthBound{std::max(x.base, y.base), x.constant + y.constant};
  }
  return Cochain(
      a.arity(), [a, b](std::span<const Element> args) { return a(args) + b(args); },
      "(" + a.name() + "+" + b.name() + ")", a.normalized() && b.normalized(), bound);
}

Cochain product(const Cochain& a, const Cochain& b) {
  if (a.arity() != b.arity()) throw DomainError("product of cochains of different arity");
  std::optional<GrowthBound> bound;
  if (a.declared_bound() && b.declared_bound()) {
    const auto& x = *a.declared_bound();
    const auto& y = *b.declared_bound();
    bound = GrowthBound{x.base * y.base, x.constant * y.constant};
  }
  return Cochain(
      a.arity(), [a, b](std::span<const Element> args) { return a(args) * b(args); },
      "(" + a.name() + "*" + b.name() + ")", a.normalized() || b.normalized(), bound);
}

Cochain scale(const Scalar& s, const Cochain& a) {
  std::optional<GrowthBound> bound;
  if (a.declared_bound() && s.is_real())
    bound = GrowthBound{a.declared_bound()->base, abs(s.re()) * a.declared_bound()->constant};
  return Cochain(
      a.arity(), [s, a](std::span<const Element> args) { return s * a(args); }, to_string(s) + "*" + a.name(),
      a.normalized(), bound);
}

Cochain zero_degenerate(const Group& group, const Cochain& a) {
  return Cochain(
      a.arity(),
      [group, a](std::span<const Element> args) {
        for (const auto& g : args)
          if (group.is_identity(g)) return Scalar{};
        return a(args);
      },
      a.name(), true, a.declared_bound());
}

}  // namespace cochains

Cochain bar_coboundary(const Group& group, const Cochain& phi) {
  const int n = phi.arity();
  return Cochain(
      n + 1,
      [group, phi, n](std::span<const Element> g) {
        Scalar s = phi(g.subspan(1));
        std::vector<Element> face(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
          // merge g_i g_{i+1} (1-based) into one slot
          std::size_t k = 0;
          for (int j = 1; j <= n + 1; ++j) {
            if (j == i) {
              face[k++] = group.multiply(g[static_cast<std::size_t>(j - 1)], g[static_cast<std::size_t>(j)]);
              ++j;
            } else {
              face[k++] = g[static_cast<std::size_t>(j - 1)];
            }
          }
          Scalar v = phi(face);
          if (i % 2 == 0) s += v;
          else s -= v;
        }
        Scalar last = phi(g.first(static_cast<std::size_t>(n)));
        if ((n + 1) % 2 == 0) s += last;
        else s -= last;
        return s;
      },
      "d(" + phi.name() + ")", phi.normalized());
}

bool vanishes_on_degenerate(const Group& group, const Cochain& phi, int radius) {
  if (phi.arity() == 0) return true;
  for (const auto& t : tuples_within(group, phi.arity(), radius))
    if (std::any_of(t.begin(), t.end(), [&](const Element& g) { return group.is_identity(g); }) && !phi(t).is_zero())
      return false;
  return true;
}

bool is_cocycle_on(const Group& group, const Cochain& phi, int radius, std::size_t cap) {
  Cochain d = bar_coboundary(group, phi);
  for (const auto& t : tuples_within(group, phi.arity() + 1, radius, cap))
    if (!d(t).is_zero()) return false;
  return true;
}

}  // namespace ghc
