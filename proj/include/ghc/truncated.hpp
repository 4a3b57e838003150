#pragma once

#include "ghc/chain_ops.hpp"
#include "ghc/sparse_rank.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ghc {

enum class Variant { Hochschild, Normalized, CyclicQuotient, ConnectiveTC, PeriodicQuotient };

struct ComplexVariant {
  Variant kind = Variant::Hochschild;
  /// Filtration index for the periodic quotient T/F^k.
  int k = 3;

  std::string name() const;
  static ComplexVariant parse(const std::string& name, int k = 3);
};

/// One basis vector: an elementary tensor placed in the bicomplex column
/// whose form degree is `component` (= tuple length - 1).
struct BasisCell {
  int component = 0;
  Tuple tuple;
  friend auto operator<=>(const BasisCell&, const BasisCell&) = default;
};

struct DegreeSpace {
  std::vector<BasisCell> basis;
  /// Conjugacy block of each basis cell (class of the tuple product).
  std::vector<std::size_t> block;
  /// Spanning vectors of the subspace divided out in this degree (the
  /// b(Omega^k) part of F^k for the periodic quotient; empty otherwise).
  std::vector<SparseVec> quotient;
  std::vector<std::size_t> quotient_block;
};

struct HomologyResult {
  std::string variant;
  int degree = 0;
  int radius = 0;
  std::size_t kernel_rank = 0;
  std::size_t image_rank = 0;
  std::size_t dim = 0;
  /// Coordinates (over the degree's basis) of chains whose classes form a
  /// basis of the homology; filled on request.
  std::vector<SparseVec> representatives;
};

enum class RankMethod { Blocked, Serial };

struct BuildOptions {
  Convention convention = Convention::Standard;
  std::size_t cap = kDefaultBallCap;
};

/// Finite stage of a chain complex of C[pi]: all elementary tensors of total
/// word length <= R, with exact boundary matrices. Degrees 0..n_max carry
/// homology; degree n_max + 1 is built so the top image rank is available.
class TruncatedComplex {
 public:
  static TruncatedComplex build(const Group& group, int n_max, int radius, ComplexVariant variant,
                                const BuildOptions& opts = {});

  const Group& group() const { return group_; }
  int n_max() const { return n_max_; }
  int radius() const { return radius_; }
  const ComplexVariant& variant() const { return variant_; }
  Convention convention() const { return convention_; }
  const DegreeSpace& space(int degree) const { return spaces_.at(static_cast<std::size_t>(degree)); }
  /// Boundary matrix V_degree -> V_{degree-1}, degree in [1, n_max + 1].
  const SparseMatrix& boundary(int degree) const { return boundary_.at(static_cast<std::size_t>(degree)); }
  std::size_t block_count() const { return block_ids_.size(); }

  /// Whether consecutive boundaries compose to zero (modulo the quotient
  /// subspaces). False only under the twisted convention.
  bool is_complex() const { return is_complex_; }

  HomologyResult homology(int degree, RankMethod method = RankMethod::Blocked, bool representatives = false) const;

  /// Coordinates of a chain living in component `component` of `degree`;
  /// nullopt if some term falls outside the truncation.
  std::optional<SparseVec> coordinates(int degree, int component, const Chain& x) const;
  /// Chain (in one component) described by coordinates.
  Chain chain_of(int degree, int component, const SparseVec& v) const;

 private:
  TruncatedComplex(Group g) : group_(std::move(g)) {}

  struct Located {
    std::size_t index;
    int sign;
  };
  std::optional<Located> locate(int degree, const BasisCell& cell) const;
  std::size_t block_id(const Tuple& t);
  SparseVec apply_boundary(int degree, const BasisCell& cell) const;
  void check_composites();

  Group group_;
  int n_max_ = 0;
  int radius_ = 0;
  ComplexVariant variant_;
  Convention convention_ = Convention::Standard;
  std::vector<DegreeSpace> spaces_;
  std::vector<std::map<BasisCell, std::size_t>> index_;
  std::vector<SparseMatrix> boundary_;
  std::map<Element, std::size_t> block_ids_;
  bool is_complex_ = true;
};

/// All (length)-tuples of group elements with total word length <= radius,
/// in lexicographic order.
std::vector<Tuple> tuples_within(const Group& group, int length, int radius, std::size_t cap = kDefaultBallCap);

/// Image of x in the cyclic quotient C_n / (1 - tau): coefficients collected
/// on least-rotation representatives; orbits on which tau^{period} = -1 are
/// zero in the quotient.
Chain cyclic_class(const Chain& x, Convention convention);

/// cyclic_class(b((1 - tau) x)); zero exactly when b descends on x.
Chain cyclic_descent_defect(const Group& group, const Chain& x, Convention convention);

}  // namespace ghc
