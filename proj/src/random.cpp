#include "ghc/random.hpp"

#include "ghc/errors.hpp"

#include <algorithm>
#include <limits>

namespace ghc {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<long>(x % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Scalar random_coefficient(Rng& rng, CoefficientKind kind) {
  auto nonzero = [&](long bound) {
    long v = rng.uniform(1, bound);
    return rng.chance(50) ? v : -v;
  };
  switch (kind) {
    case CoefficientKind::Integer: return Scalar(nonzero(5));
    case CoefficientKind::Rational: return Scalar(Rational(nonzero(9), rng.uniform(1, 6)));
    case CoefficientKind::RationalModulus: {
      if (rng.chance(50)) return Scalar(Rational(nonzero(9), rng.uniform(1, 6)));
      static const int triples[][2] = {{3, 4}, {5, 12}, {8, 15}, {7, 24}};
      const auto& tr = triples[rng.uniform(0, 3)];
      const Rational scale(nonzero(3), rng.uniform(1, 4));
      Scalar s(scale * tr[0], scale * tr[1]);
      if (rng.chance(50)) s = Scalar(s.im(), s.re());
      if (rng.chance(50)) s = s.conj();
      return s;
    }
  }
  return Scalar(1);
}

Element random_element(const Group& group, Rng& rng, int max_length) {
  const auto& gens = group.generators();
  Element g = group.identity();
  const long steps = rng.uniform(0, std::max(0, max_length));
  for (long i = 0; i < steps; ++i)
    g = group.multiply(g, gens[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gens.size()) - 1))]);
  return g;
}

Tuple random_tuple(const Group& group, Rng& rng, int length, int radius) {
  Tuple t;
  int remaining = radius;
  for (int i = 0; i < length; ++i) {
    Element g = random_element(group, rng, static_cast<int>(rng.uniform(0, remaining)));
    remaining -= group.word_length(g);
    t.push_back(std::move(g));
  }
  // spread the longer entries over all positions
  for (int i = length - 1; i > 0; --i) std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(rng.uniform(0, i))]);
  return t;
}

Chain random_chain(const Group& group, Rng& rng, const ChainShape& shape) {
  if (shape.degree < 0) throw DomainError("degree must be >= 0");
  Chain x(shape.degree);
  const int length = shape.degree + 1;
  for (int k = 0; k < shape.terms; ++k) {
    Tuple t;
    if (length > 1 && rng.chance(shape.homogeneous_percent)) {
      // L(product^-1) <= L(head), so half the budget keeps the tuple inside the radius
      t = random_tuple(group, rng, length - 1, shape.radius / 2);
      t.push_back(group.inverse(group.product(t)));
    } else {
      t = random_tuple(group, rng, length, shape.radius);
    }
    x.add(t, random_coefficient(rng, shape.coefficients));
  }
  return x;
}

AlgebraElement random_algebra_element(const Group& group, Rng& rng, int terms, int max_length, CoefficientKind kind) {
  AlgebraElement x;
  for (int k = 0; k < terms; ++k) x.add(random_element(group, rng, max_length), random_coefficient(rng, kind));
  return x;
}

}  // namespace ghc
