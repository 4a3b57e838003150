#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ghc {

/// Canonical form of a group element. The meaning of `code` depends on the
/// realization: a single table index (finite), a freely reduced word of
/// signed generator numbers +/-1..+/-rank (free), or an exponent vector
/// (free abelian). Canonical forms are unique, so equality is identity.
struct Element {
  std::vector<int> code;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;
};

using Tuple = std::vector<Element>;

enum class GroupKind { FiniteTable, Free, FreeAbelian };

enum class GroupOp { Multiply, InverseLeft };

inline constexpr std::size_t kDefaultBallCap = 200000;

std::string to_string(GroupKind kind);

/// A finitely generated group with a fixed finite symmetric generating set.
/// Immutable after construction; safe to share across threads.
class Group {
 public:
  /// `table[i][j]` is the index of i*j. Generators are closed under inverse
  /// on construction. Throws InvalidElement if the table is not a group.
  static Group finite_table(std::vector<std::vector<int>> table, std::vector<int> generators,
                            std::string name = "finite");
  static Group free(int rank);
  static Group free_abelian(int rank);

  static Group cyclic(int order);
  static Group symmetric3();
  static Group klein_four();
  static Group dihedral(int n);

  GroupKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  /// Number of elements for finite groups, 0 otherwise.
  std::size_t order() const { return table_.size(); }
  const std::vector<Element>& generators() const { return generators_; }

  Element identity() const;
  bool is_identity(const Element& g) const;
  Element multiply(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const;
  Element eval(const Element& g, const Element& h, GroupOp op) const;
  Element product(const Tuple& t) const;

  int word_length(const Element& g) const;
  int total_length(const Tuple& t) const;

  /// Canonical representative of the conjugacy class of g.
  Element conjugacy_class(const Element& g) const;

  /// Elements with word length <= r, sorted by (length, canonical form).
  std::vector<Element> ball(int r, std::size_t cap = kDefaultBallCap) const;
  /// Elements with word length exactly r, sorted by canonical form.
  std::vector<Element> sphere(int r, std::size_t cap = kDefaultBallCap) const;
  /// Largest word length attained (finite groups only).
  int diameter() const;

  /// Throws InvalidElement when g is not a canonical element of this group.
  void validate(const Element& g) const;
  bool valid(const Element& g) const;

  /// "e" for the identity; words "a b A" (capital = inverse) for free and
  /// free-abelian groups; decimal table index for finite groups.
  Element parse(std::string_view text) const;
  std::string format(const Element& g) const;
  std::string format(const Tuple& t) const;

  /// Finite-table groups only.
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  Group() = default;
  std::vector<int> reduce(std::vector<int> word) const;

  GroupKind kind_ = GroupKind::Free;
  std::string name_;
  int rank_ = 0;
  std::vector<Element> generators_;

  // finite-table data
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> length_;
  std::vector<int> class_rep_;
  int identity_index_ = 0;
};

/// Parses a group description document ("key: value" lines). Keys:
/// kind (finite-table | free | free-abelian), name, rank, generators, and
/// for finite tables a `table:` line followed by one row of indices per line.
Group parse_group_text(std::string_view text);
Group load_group_file(const std::string& path);

/// Resolves "Z/4", "S3", "Z2xZ2", "D4", "Z^2", "F2", or "file:PATH".
Group group_by_name(std::string_view name);

}  // namespace ghc
