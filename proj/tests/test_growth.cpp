#include "ghc/errors.hpp"
#include "ghc/growth.hpp"
#include "ghc/random.hpp"

#include "catch_amalgamated.hpp"

#include <algorithm>

using namespace ghc;

namespace {

/// max_{|k| <= R} f(|k|) lambda^{-|k|} computed directly on integers.
Rational closed_max(int radius, const Rational& lambda, auto f) {
  Rational best(0);
  for (int k = -radius; k <= radius; ++k) {
    const unsigned a = static_cast<unsigned>(std::abs(k));
    Rational v = abs(f(a)) / pow(lambda, a);
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

TEST_CASE("homomorphism on Z is subexponential-consistent with C_2 = 1/2") {
  Group z = Group::free_abelian(1);
  auto report = growth_fit(z, cochains::homomorphism(z, {Scalar(1)}));
  CHECK(report.classification == GrowthClass::SubexponentialConsistent);
  for (int r : report.radii) {
    CHECK(report.row(Rational(2), r).constant_sq == Rational(1, 4));
    CHECK(report.row(Rational(2), r).constant == Interval(Rational(1, 2)));
  }
  CHECK(report.polynomial_degree == 1);
  for (const auto& row : report.rows) {
    auto expected = closed_max(row.radius, row.lambda, [](unsigned k) { return Rational(k); });
    CHECK(row.constant_sq == expected * expected);
  }
}

TEST_CASE("3^L on Z is 3-exponential-only") {
  Group z = Group::free_abelian(1);
  // normalized so that phi(e) = 0; then C_4(R) = 3/4
  Cochain phi = cochains::zero_degenerate(z, cochains::length_exponential(z, 1, Rational(3)));
  GrowthOptions opts;
  opts.lambdas = {Rational(2), Rational(5, 2), Rational(4), Rational(5)};
  auto report = growth_fit(z, phi, opts);
  CHECK(report.classification == GrowthClass::ExponentialOnly);
  CHECK_FALSE(report.polynomial_degree);
  for (int r : report.radii) {
    CHECK(report.row(Rational(4), r).constant_sq == Rational(9, 16));
    CHECK(report.row(Rational(2), r).constant_sq == pow(Rational(3, 2), 2 * static_cast<unsigned>(r)));
  }
  REQUIRE(report.threshold_lower);
  REQUIRE(report.threshold_upper);
  CHECK(*report.threshold_lower == Rational(5, 2));
  CHECK(*report.threshold_upper == Rational(4));
  REQUIRE(report.threshold_estimate);
  CHECK(*report.threshold_estimate == Catch::Approx(3.0));
}

TEST_CASE("zero cochain") {
  auto report = growth_fit(Group::free(2), cochains::zero(1));
  CHECK(report.classification == GrowthClass::SubexponentialConsistent);
  for (const auto& row : report.rows) CHECK(row.constant_sq == 0);
  CHECK(report.polynomial_degree == 0);
}

TEST_CASE("homomorphism on F2 is subexponential-consistent") {
  Group f = Group::free(2);
  auto report = growth_fit(f, cochains::homomorphism(f, {Scalar(1), Scalar(2)}));
  CHECK(report.classification == GrowthClass::SubexponentialConsistent);
  // max over l of (2l)^2 4^-l is attained at l = 1 and l = 2
  CHECK(report.row(Rational(2), 10).constant_sq == 1);
}

TEST_CASE("fitted constants are monotone") {
  Group f = Group::free(2);
  Rng rng(4);
  for (int trial = 0; trial < 4; ++trial) {
    Cochain phi = cochains::sum(cochains::length_power(f, 2, static_cast<unsigned>(rng.uniform(0, 3))),
                                cochains::length_exponential(f, 2, Rational(rng.uniform(1, 4), 2)));
    auto layers = layer_maxima_sq(f, phi, 5);
    CHECK(layers == layer_maxima_sq(f, phi, 5, kDefaultBallCap, false));
    std::vector<Rational> lambdas{Rational(9, 8), Rational(5, 4), Rational(3, 2), Rational(2), Rational(3)};
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      for (int r = 0; r <= 5; ++r) {
        auto v = fitted_constant_sq(layers, lambdas[i], r);
        if (r > 0) CHECK(fitted_constant_sq(layers, lambdas[i], r - 1) <= v);
        if (i > 0) CHECK(v <= fitted_constant_sq(layers, lambdas[i - 1], r));
      }
  }
}

TEST_CASE("declared bounds dominate fitted constants") {
  Group z2 = Group::free_abelian(2);
  Cochain c = cochains::area(z2);
  auto bound = *c.declared_bound();
  auto layers = layer_maxima_sq(z2, c, 6);
  for (auto lambda : {bound.base, Rational(3), Rational(5, 2)})
    CHECK(fitted_constant_sq(layers, lambda, 6) <= bound.constant * bound.constant);
}

TEST_CASE("growth options are validated") {
  Group z = Group::free_abelian(1);
  GrowthOptions bad;
  bad.lambdas = {Rational(1)};
  CHECK_THROWS_AS(growth_fit(z, cochains::zero(1), bad), DomainError);
  GrowthOptions empty;
  empty.radii = {};
  CHECK_THROWS_AS(growth_fit(z, cochains::zero(1), empty), DomainError);
  GrowthOptions huge;
  huge.radii = {12};
  huge.cap = 1000;
  CHECK_THROWS_AS(growth_fit(Group::free(2), cochains::zero(2), huge), ResourceLimit);
}
