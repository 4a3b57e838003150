#pragma once

#include "ghc/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ghc {

/// Sparse vector: (index, value) pairs, strictly increasing index, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec axpy(const SparseVec& x, const Rational& a, const SparseVec& y);  // x + a*y

/// Column-major sparse matrix; column j is the image of basis vector j.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> columns;

  std::size_t nonzeros() const;
  /// Coordinate triples (row, col, value) in column order.
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  bool is_zero() const;
};

/// Incremental echelon basis of a subspace. Inserting a vector reduces it
/// against the stored pivots; nonzero remainders become new basis vectors.
/// With tracking enabled, every inserted vector carries the combination of
/// inserted vectors that produced it, which yields kernel vectors.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  /// Returns true when v was independent of the current span. When
  /// tracking, `dependency` receives the relation (as coefficients over
  /// insertion ids) for dependent vectors.
  bool insert(SparseVec v, SparseVec* dependency = nullptr);
  std::size_t rank() const { return pivots_.size(); }
  /// Reduces v against the basis (for membership tests).
  SparseVec reduce(SparseVec v) const;

 private:
  struct Row {
    SparseVec vec;
    SparseVec combo;
  };
  bool track_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Row> pivots_;  // leading index -> normalized row
};

/// Exact rank of the column span of `columns` (serial reference).
std::size_t rank_serial(const std::vector<SparseVec>& columns);

/// Exact rank where the columns are partitioned into independent blocks
/// whose row supports are disjoint; blocks are reduced in parallel.
std::size_t rank_blocked(const std::vector<SparseVec>& columns, const std::vector<std::size_t>& block_of_column);

/// Dense fraction-free (Bareiss) rank over the integers; entries are scaled
/// to integers per column. Independent oracle for the sparse routines.
std::size_t rank_bareiss(std::size_t rows, const std::vector<SparseVec>& columns);

/// Basis of {c : sum_j c_j columns[j] = 0}.
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& columns);

}  // namespace ghc
