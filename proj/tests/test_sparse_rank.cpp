#include "ghc/random.hpp"
#include "ghc/sparse_rank.hpp"

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace ghc;

namespace {

std::vector<SparseVec> random_columns(Rng& rng, std::size_t rows, std::size_t cols, int density) {
  std::vector<SparseVec> out(cols);
  for (auto& c : out)
    for (std::size_t r = 0; r < rows; ++r)
      if (rng.chance(static_cast<unsigned>(density))) c.emplace_back(r, Rational(rng.uniform(-3, 3), rng.uniform(1, 3)));
  for (auto& c : out) std::erase_if(c, [](const auto& p) { return p.second == 0; });
  return out;
}

std::vector<std::vector<Rational>> dense_rows(std::size_t rows, const std::vector<SparseVec>& cols) {
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, v] : cols[j]) m[i][j] = v;
  return m;
}

SparseVec combine(const std::vector<SparseVec>& cols, const SparseVec& coeffs) {
  SparseVec acc;
  for (const auto& [j, c] : coeffs) acc = axpy(acc, c, cols[j]);
  return acc;
}

}  // namespace

TEST_CASE("sparse ranks agree with dense elimination") {
  Rng rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 12));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 12));
    auto m = random_columns(rng, rows, cols, 35);
    // duplicate some columns to force dependencies
    if (cols > 2) m.push_back(axpy(m[0], Rational(2), m[1]));
    const auto expected = oracle::dense_rank(dense_rows(rows, m));
    CHECK(rank_serial(m) == expected);
    CHECK(rank_bareiss(rows, m) == expected);
    std::vector<std::size_t> one_block(m.size(), 0);
    CHECK(rank_blocked(m, one_block) == expected);
  }
}

TEST_CASE("blocked rank over disjoint row supports") {
  Rng rng(31);
  std::vector<SparseVec> cols;
  std::vector<std::size_t> blocks;
  std::size_t total = 0;
  for (std::size_t b = 0; b < 6; ++b) {
    auto part = random_columns(rng, 5, 7, 40);
    total += oracle::dense_rank(dense_rows(5, part));
    for (auto& c : part) {
      for (auto& [i, v] : c) i += 5 * b;
      cols.push_back(std::move(c));
      blocks.push_back(b);
    }
  }
  CHECK(rank_blocked(cols, blocks) == total);
  CHECK(rank_serial(cols) == total);
}

TEST_CASE("kernel basis vectors are relations") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_columns(rng, 6, 9, 30);
    auto kernel = kernel_basis(m);
    CHECK(kernel.size() == m.size() - rank_serial(m));
    for (const auto& k : kernel) CHECK(combine(m, k).empty());
    CHECK(rank_serial(kernel) == kernel.size());
  }
}

TEST_CASE("echelon membership") {
  Echelon e;
  SparseVec a{{0, Rational(1)}, {2, Rational(3)}};
  SparseVec b{{1, Rational(2)}};
  CHECK(e.insert(a));
  CHECK(e.insert(b));
  CHECK_FALSE(e.insert(axpy(a, Rational(-5, 2), b)));
  CHECK(e.rank() == 2);
  CHECK(e.reduce(axpy(b, Rational(7), a)).empty());
  CHECK_FALSE(e.reduce(SparseVec{{3, Rational(1)}}).empty());
}

TEST_CASE("sparse matrix product") {
  SparseMatrix a{2, 2, {{{0, Rational(1)}}, {{0, Rational(1)}, {1, Rational(1)}}}};
  SparseMatrix b{2, 1, {{{0, Rational(-1)}, {1, Rational(1)}}}};
  SparseMatrix c = a * b;
  REQUIRE(c.columns.size() == 1);
  CHECK(c.columns[0] == SparseVec{{1, Rational(1)}});
  CHECK_FALSE(c.is_zero());
  CHECK(c.nonzeros() == 1);
}
