#include "ghc/errors.hpp"
#include "ghc/eta.hpp"
#include "ghc/random.hpp"

#include "catch_amalgamated.hpp"

using namespace ghc;

namespace {

/// weight(n) from the displayed formula, computed with plain integer loops.
Rational weight_oracle(int n, long N, unsigned m) {
  const long c = n / 2;
  Rational num(1), den(1);
  for (unsigned i = 0; i < m; ++i) num *= 2 + 2 * c;
  for (long i = 1; i <= c; ++i) den *= i * N;
  return num / den;
}

}  // namespace

TEST_CASE("weights and D") {
  for (int n = 0; n <= 7; ++n)
    for (long N : {1L, 2L, 5L})
      for (unsigned m : {0U, 1U, 3U}) {
        EtaParams p{Rational(N), m, Rational(1)};
        CHECK(eta_weight(n, p) == weight_oracle(n, N, m));
        CHECK(pairing_D(n, p) * eta_weight(n, p) == 1);
      }
  CHECK(pairing_D(2, {Rational(2), 1, Rational(1)}) == Rational(1, 2));
  CHECK(eta_c(4) == 2);
  CHECK(eta_c(5) == 2);
  CHECK_THROWS_AS((EtaParams{Rational(1, 2), 0, Rational(1)}.validate()), DomainError);
  CHECK_THROWS_AS((EtaParams{Rational(1), 0, Rational(1, 2)}.validate()), DomainError);
}

TEST_CASE("seminorm examples") {
  Group f = Group::free(2);
  Chain x = Chain::elementary({f.parse("a"), f.parse("b"), f.parse("a b")});
  CHECK(eta_seminorm(f, x, {Rational(4), 0, Rational(1)}) == Interval(Rational(1, 4)));
  CHECK(eta_seminorm(f, Chain(2), {Rational(4), 0, Rational(1)}) == Interval(Rational(0)));

  Group z2 = Group::free_abelian(2);
  Chain z(2);
  z.add({z2.parse("B A"), z2.parse("a"), z2.parse("b")}, Scalar(1));
  z.add({z2.parse("A B"), z2.parse("b"), z2.parse("a")}, Scalar(-1));
  CHECK(eta_seminorm(z2, z, {Rational(1), 0, Rational(2)}) == Interval(Rational(32)));
}

TEST_CASE("seminorm monotonicity in N, m and lambda") {
  Group f = Group::free(2);
  Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    Chain x = random_chain(f, rng, {static_cast<int>(rng.uniform(0, 4)), 4, 6, CoefficientKind::Rational, 0});
    EtaParams p{Rational(rng.uniform(1, 4)), static_cast<unsigned>(rng.uniform(0, 2)), Rational(rng.uniform(2, 6), 2)};
    EtaParams more_m = p, more_n = p, more_l = p;
    more_m.m += 1;
    more_n.N += 1;
    more_l.lambda += Rational(1, 3);
    auto base = eta_seminorm(f, x, p);
    CHECK(certified_le(base, eta_seminorm(f, x, more_m)) == Certified::True);
    CHECK(certified_le(eta_seminorm(f, x, more_n), base) == Certified::True);
    CHECK(certified_le(base, eta_seminorm(f, x, more_l)) == Certified::True);
  }
}

TEST_CASE("b and B are bounded with the documented schedule") {
  for (const auto& g : {Group::free(2), Group::symmetric3(), Group::free_abelian(2)}) {
    Rng rng(99);
    for (int n = 1; n <= 3; ++n) {
      std::vector<Chain> samples;
      for (int i = 0; i < 15; ++i) samples.push_back(random_chain(g, rng, {n, 3, 6, CoefficientKind::Integer, 30}));
      for (EtaParams p : {EtaParams{Rational(1), 0, Rational(1)}, EtaParams{Rational(3), 2, Rational(2)}}) {
        auto rb = boundedness_check(g, BoundaryOp::b, p, n, samples);
        CHECK(rb.m_out == p.m);
        CHECK(rb.within_bound);
        CHECK(rb.analytic_bound == Rational(n + 1) * eta_weight(n - 1, p) / eta_weight(n, p));
        auto rB = boundedness_check(g, BoundaryOp::B, p, n, samples);
        CHECK(rB.m_out == p.m + 1);
        CHECK(rB.within_bound);
      }
    }
  }
}

TEST_CASE("B0 on a single group element") {
  Group f = Group::free(2);
  EtaParams p{Rational(1), 0, Rational(1)};
  std::vector<Chain> samples{Chain::elementary({f.parse("a")})};
  auto report = boundedness_check(f, BoundaryOp::B, p, 0, samples);
  EtaParams next = p;
  next.m = 1;
  // standard B_0(g) = (e, g) + (g, e): two terms of the same total length
  CHECK(report.max_ratio == Interval(Rational(2) * eta_weight(1, next) / eta_weight(0, p)));
}

TEST_CASE("boundedness preconditions") {
  Group f = Group::free(2);
  EtaParams p;
  CHECK_THROWS_AS(boundedness_check(f, BoundaryOp::b, p, 1, {Chain(1)}), DomainError);
  CHECK_THROWS_AS(boundedness_check(f, BoundaryOp::b, p, 1, {Chain::elementary({f.parse("a")})}), DomainError);
  CHECK_THROWS_AS(boundedness_check(f, BoundaryOp::b, p, 0, {Chain::elementary({f.parse("a")})}), DomainError);
}
