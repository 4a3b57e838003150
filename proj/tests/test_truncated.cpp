#include "ghc/errors.hpp"
#include "ghc/random.hpp"
#include "ghc/truncated.hpp"

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace ghc;

namespace {

int full_radius(const Group& g, int n_max) { return g.diameter() * (n_max + 2); }

}  // namespace

TEST_CASE("HH0 of finite group algebras equals the class count") {
  for (const auto& g : {Group::symmetric3(), Group::cyclic(4), Group::klein_four(), Group::dihedral(4)}) {
    auto cx = TruncatedComplex::build(g, 0, full_radius(g, 0), {Variant::Hochschild});
    auto h = cx.homology(0);
    INFO(g.name());
    CHECK(h.dim == static_cast<std::size_t>(oracle::conjugacy_class_count(g.table())));
    CHECK(h.dim == oracle::commutator_quotient_dim(g.table()));
    CHECK(cx.homology(0, RankMethod::Serial).dim == h.dim);
  }
}

TEST_CASE("higher Hochschild homology of a finite group algebra vanishes") {
  Group s3 = Group::symmetric3();
  auto cx = TruncatedComplex::build(s3, 1, full_radius(s3, 1), {Variant::Hochschild});
  CHECK(cx.homology(1).dim == 0);
}

TEST_CASE("basis sizes") {
  Group z = Group::free_abelian(1);
  auto cx = TruncatedComplex::build(z, 1, 2, {Variant::Hochschild});
  CHECK(cx.space(1).basis.size() == 13);
  for (const auto& cell : cx.space(2).basis) CHECK(z.total_length(cell.tuple) <= 2);
  // b vanishes in degree 1 on a commutative group algebra
  CHECK(cx.homology(1).kernel_rank == 13);
}

TEST_CASE("cyclic quotient of Z/2 in degree 1") {
  Group z2 = Group::cyclic(2);
  auto standard = TruncatedComplex::build(z2, 1, 4, {Variant::CyclicQuotient});
  auto twisted = TruncatedComplex::build(z2, 1, 4, {Variant::CyclicQuotient}, {Convention::Twisted});
  // standard tau(g,h) = -(h,g): fixed tuples vanish, the 2-orbit survives once
  CHECK(standard.space(1).basis.size() == 1);
  // twisted sign: tau(g,h) = +(h,g), orbits (e,e), (t,t), {(e,t),(t,e)}
  CHECK(twisted.space(1).basis.size() == 3);
}

TEST_CASE("periodic quotient with k = 1 on Z/2") {
  Group z2 = Group::cyclic(2);
  auto cx = TruncatedComplex::build(z2, 0, 4, {Variant::PeriodicQuotient, 1});
  CHECK(cx.homology(0).dim == 2);
}

TEST_CASE("all variants compose to zero under the standard convention") {
  for (const auto& g : {Group::cyclic(3), Group::free(2), Group::free_abelian(2)}) {
    for (ComplexVariant v : {ComplexVariant{Variant::Hochschild}, ComplexVariant{Variant::Normalized},
                          ComplexVariant{Variant::CyclicQuotient}, ComplexVariant{Variant::ConnectiveTC},
                          ComplexVariant{Variant::PeriodicQuotient, 2}, ComplexVariant{Variant::PeriodicQuotient, 3}}) {
      auto cx = TruncatedComplex::build(g, 2, 3, v);
      INFO(g.name() << " " << v.name());
      CHECK(cx.is_complex());
      for (int n = 0; n <= 2; ++n) {
        auto h = cx.homology(n);
        CHECK(h.dim == h.kernel_rank - h.image_rank);
        CHECK(cx.homology(n, RankMethod::Serial).dim == h.dim);
      }
    }
  }
}

TEST_CASE("connective complex is not a complex under the twisted sign") {
  auto cx = TruncatedComplex::build(Group::free_abelian(1), 3, 2, {Variant::ConnectiveTC}, {Convention::Twisted});
  // B o B first appears on the degree 4 to degree 0 composite
  CHECK_FALSE(cx.is_complex());
  CHECK_THROWS_AS(cx.homology(0), DomainError);
}

TEST_CASE("normalized and unnormalized Hochschild homology agree") {
  Group f = Group::free(2);
  auto a = TruncatedComplex::build(f, 1, 3, {Variant::Hochschild});
  auto b = TruncatedComplex::build(f, 1, 3, {Variant::Normalized});
  // degree 0 needs no degeneracies; the full complexes differ by contractible pieces only
  // up to truncation effects, so compare degree 0 only
  CHECK(a.homology(0).dim == b.homology(0).dim);
}

TEST_CASE("homology representatives are cycles and independent modulo boundaries") {
  Group z = Group::free_abelian(1);
  auto cx = TruncatedComplex::build(z, 1, 3, {Variant::Hochschild});
  auto h = cx.homology(1, RankMethod::Blocked, true);
  CHECK(h.representatives.size() == h.dim);
  for (const auto& v : h.representatives) {
    Chain x = cx.chain_of(1, 1, v);
    CHECK(hochschild_b(z, x).is_zero());
  }
}

TEST_CASE("degree range and caps") {
  Group f = Group::free(2);
  auto cx = TruncatedComplex::build(f, 1, 2, {Variant::Hochschild});
  CHECK_THROWS_AS(cx.homology(2), DomainError);
  CHECK_THROWS_AS(cx.homology(-1), DomainError);
  CHECK_THROWS_AS(TruncatedComplex::build(f, 2, 8, {Variant::Hochschild}, {Convention::Standard, 5000}),
                  ResourceLimit);
  CHECK_THROWS_AS(TruncatedComplex::build(f, 1, 2, {Variant::PeriodicQuotient, 0}), DomainError);
}

TEST_CASE("cyclic descent of b under the standard convention") {
  for (const auto& g : {Group::symmetric3(), Group::free(2)}) {
    Rng rng(77);
    for (int k = 0; k < 50; ++k) {
      ChainShape shape{static_cast<int>(rng.uniform(1, 4)), 3, 5, CoefficientKind::Rational, 30};
      Chain x = random_chain(g, rng, shape);
      CHECK(cyclic_descent_defect(g, x, Convention::Standard).is_zero());
    }
  }
}

TEST_CASE("boundary matrices match the chain-level operator") {
  Group f = Group::free(2);
  auto cx = TruncatedComplex::build(f, 1, 3, {Variant::Hochschild});
  const auto& d = cx.boundary(2);
  for (std::size_t j = 0; j < cx.space(2).basis.size(); j += 7) {
    Chain x = Chain::elementary(cx.space(2).basis[j].tuple);
    auto coords = cx.coordinates(1, 1, hochschild_b(f, x));
    REQUIRE(coords);
    CHECK(*coords == d.columns[j]);
  }
}
