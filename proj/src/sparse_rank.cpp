#include "ghc/sparse_rank.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace ghc {

SparseVec axpy(const SparseVec& x, const Rational& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

std::vector<std::tuple<std::size_t, std::size_t, Rational>> SparseMatrix::triplets() const {
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> out;
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, v] : columns[j]) out.emplace_back(i, j, v);
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  SparseMatrix out{rows, rhs.cols, std::vector<SparseVec>(rhs.cols)};
  for (std::size_t j = 0; j < rhs.cols; ++j) {
    SparseVec acc;
    for (const auto& [k, v] : rhs.columns[j]) acc = axpy(acc, v, columns[k]);
    out.columns[j] = std::move(acc);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVec& c) { return c.empty(); });
}

SparseVec Echelon::reduce(SparseVec v) const {
  // eliminate leading entries until the lead is a non-pivot index
  SparseVec done;
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) {
      done.push_back(std::move(v.front()));
      v.erase(v.begin());
      continue;
    }
    Rational a = -v.front().second;
    v = axpy(v, a, it->second.vec);
  }
  return done;
}

bool Echelon::insert(SparseVec v, SparseVec* dependency) {
  SparseVec combo;
  if (track_) combo.emplace_back(inserted_, Rational(1));
  ++inserted_;
  // reduce only the leading entry repeatedly; a nonzero lead that is not a
  // pivot makes v independent
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) break;
    Rational a = -v.front().second;
    v = axpy(v, a, it->second.vec);
    if (track_) combo = axpy(combo, a, it->second.combo);
  }
  if (v.empty()) {
    if (dependency) *dependency = std::move(combo);
    return false;
  }
  Rational lead = v.front().second;
  if (lead != 1) {
    Rational inv = 1 / lead;
    for (auto& [i, x] : v) x *= inv;
    for (auto& [i, x] : combo) x *= inv;
  }
  std::size_t key = v.front().first;
  pivots_.emplace(key, Row{std::move(v), std::move(combo)});
  return true;
}

std::size_t rank_serial(const std::vector<SparseVec>& columns) {
  // sparsest columns first keeps fill-in low
  std::vector<std::size_t> order(columns.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return columns[a].size() < columns[b].size(); });
  Echelon e;
  for (std::size_t j : order)
    if (!columns[j].empty()) e.insert(columns[j]);
  return e.rank();
}

std::size_t rank_blocked(const std::vector<SparseVec>& columns, const std::vector<std::size_t>& block_of_column) {
  std::size_t nblocks = 0;
  for (std::size_t b : block_of_column) nblocks = std::max(nblocks, b + 1);
  std::vector<std::vector<std::size_t>> members(nblocks);
  for (std::size_t j = 0; j < columns.size(); ++j) members[block_of_column[j]].push_back(j);
  // largest blocks first for better load balance
  std::vector<std::size_t> order(nblocks);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return members[a].size() > members[b].size(); });
  std::vector<std::size_t> ranks(nblocks, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(nblocks); ++k) {
    std::size_t b = order[static_cast<std::size_t>(k)];
    std::vector<SparseVec> cols;
    cols.reserve(members[b].size());
    for (std::size_t j : members[b]) cols.push_back(columns[j]);
    ranks[b] = rank_serial(cols);
  }
  return std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
}

std::size_t rank_bareiss(std::size_t rows, const std::vector<SparseVec>& columns) {
  const std::size_t cols = columns.size();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    Integer l(1);
    for (const auto& [i, v] : columns[j]) l = boost::multiprecision::lcm(l, denominator(v));
    for (const auto& [i, v] : columns[j]) a[i][j] = numerator(v) * (l / denominator(v));
  }
  std::size_t rank = 0;
  Integer prev(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) a[i][k] = (a[rank][c] * a[i][k] - a[i][c] * a[rank][k]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& columns) {
  Echelon e(true);
  std::vector<SparseVec> out;
  for (const auto& c : columns) {
    SparseVec dep;
    if (!e.insert(c, &dep)) out.push_back(std::move(dep));
  }
  return out;
}

}  // namespace ghc
