#include "ghc/cochain.hpp"
#include "ghc/errors.hpp"
#include "ghc/random.hpp"
#include "ghc/truncated.hpp"

#include "catch_amalgamated.hpp"

#include <map>

using namespace ghc;

namespace {

/// Finitely supported cochain with random values on a handful of tuples.
Cochain random_supported(const Group& g, Rng& rng, int arity) {
  std::map<Tuple, Scalar> values;
  for (int i = 0; i < 6; ++i) values[random_tuple(g, rng, arity, 3)] = random_coefficient(rng, CoefficientKind::Rational);
  return Cochain(
      arity,
      [values](std::span<const Element> a) {
        auto it = values.find(Tuple(a.begin(), a.end()));
        return it == values.end() ? Scalar{} : it->second;
      },
      "random");
}

}  // namespace

TEST_CASE("coboundary of an indicator on Z") {
  Group z = Group::free_abelian(1);
  Element t = z.parse("a");
  Cochain phi = cochains::indicator({t}, Scalar(1));
  Cochain d = bar_coboundary(z, phi);
  CHECK(d.arity() == 2);
  CHECK(d(Tuple{t, t}) == Scalar(2));
  CHECK(d(Tuple{t, z.inverse(t)}) == Scalar(1));
  CHECK(d(Tuple{z.parse("a a"), z.parse("a a")}) == Scalar(0));
}

TEST_CASE("homomorphisms are cocycles") {
  Group f = Group::free(2);
  Cochain phi = cochains::homomorphism(f, {Scalar(3), Scalar(Rational(-1, 2))});
  CHECK(phi(Tuple{f.parse("a b A")}) == Scalar(Rational(-1, 2)));
  CHECK(is_cocycle_on(f, phi, 4));
  Group z2 = Group::free_abelian(2);
  CHECK(is_cocycle_on(z2, cochains::homomorphism(z2, {Scalar(1), Scalar(Rational(0), Rational(1))}), 4));
  CHECK_THROWS_AS(cochains::homomorphism(Group::cyclic(3), {Scalar(1)}), Unsupported);
  CHECK_THROWS_AS(cochains::homomorphism(f, {Scalar(1)}), DomainError);
}

TEST_CASE("area cocycle") {
  Group z2 = Group::free_abelian(2);
  Cochain c = cochains::area(z2);
  CHECK(c(Tuple{z2.parse("a"), z2.parse("b")}) == Scalar(1));
  CHECK(c(Tuple{z2.parse("b"), z2.parse("a")}) == Scalar(-1));
  CHECK(is_cocycle_on(z2, c, 4));
  CHECK(vanishes_on_degenerate(z2, c, 3));
  CHECK_THROWS_AS(cochains::area(Group::free(2)), Unsupported);
}

TEST_CASE("coboundary squares to zero") {
  Rng rng(5);
  for (const auto& g : {Group::free(2), Group::symmetric3(), Group::free_abelian(2)}) {
    for (int arity = 0; arity <= 2; ++arity) {
      Cochain phi = random_supported(g, rng, arity);
      Cochain dd = bar_coboundary(g, bar_coboundary(g, phi));
      for (const auto& t : tuples_within(g, arity + 2, 3)) CHECK(dd(t).is_zero());
    }
  }
}

TEST_CASE("coboundaries of normalized cochains are normalized") {
  Group f = Group::free(2);
  Cochain psi = cochains::length_power(f, 1, 2);
  REQUIRE(psi.normalized());
  Cochain d = bar_coboundary(f, psi);
  CHECK(d.normalized());
  CHECK(vanishes_on_degenerate(f, d, 3));
  CHECK_FALSE(vanishes_on_degenerate(f, cochains::length_exponential(f, 1, Rational(2)), 2));
}

TEST_CASE("arity checks and combinators") {
  Group z = Group::free_abelian(1);
  Cochain a = cochains::length_power(z, 1, 1);
  CHECK_THROWS_AS(a(Tuple{}), DomainError);
  CHECK_THROWS_AS(cochains::sum(a, cochains::zero(2)), DomainError);
  Cochain s = cochains::scale(Scalar(3), cochains::product(a, a));
  CHECK(s(Tuple{z.parse("A A")}) == Scalar(12));
  Cochain zd = cochains::zero_degenerate(z, cochains::length_exponential(z, 1, Rational(3)));
  CHECK(zd(Tuple{z.identity()}).is_zero());
  CHECK(zd(Tuple{z.parse("a a")}) == Scalar(9));
  CHECK(zd.normalized());
}
