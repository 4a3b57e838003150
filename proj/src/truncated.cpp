#include "ghc/truncated.hpp"

#include "ghc/errors.hpp"
#include "ghc/parallel.hpp"

#include <algorithm>

namespace ghc {

std::string ComplexVariant::name() const {
  switch (kind) {
    case Variant::Hochschild: return "hochschild";
    case Variant::Normalized: return "normalized";
    case Variant::CyclicQuotient: return "cyclic-quotient";
    case Variant::ConnectiveTC: return "connective-TC";
    case Variant::PeriodicQuotient: return "periodic-quotient(" + std::to_string(k) + ")";
  }
  return "?";
}

ComplexVariant ComplexVariant::parse(const std::string& name, int k) {
  if (name == "hochschild") return {Variant::Hochschild, k};
  if (name == "normalized") return {Variant::Normalized, k};
  if (name == "cyclic-quotient" || name == "cyclic") return {Variant::CyclicQuotient, k};
  if (name == "connective-TC" || name == "connective") return {Variant::ConnectiveTC, k};
  if (name == "periodic-quotient" || name == "periodic") return {Variant::PeriodicQuotient, k};
  throw ConfigError("unknown complex variant '" + name + "'");
}

std::vector<Tuple> tuples_within(const Group& group, int length, int radius, std::size_t cap) {
  if (length < 1) throw DomainError("tuple length must be >= 1");
  int top = radius;
  if (group.kind() == GroupKind::FiniteTable) top = std::min(top, group.diameter());
  std::vector<std::vector<Element>> spheres;
  for (int r = 0; r <= top; ++r) spheres.push_back(group.sphere(r, cap));

  std::vector<Tuple> out;
  Tuple current;
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == length) {
      if (out.size() >= cap) throw ResourceLimit("basis", cap);
      out.push_back(current);
      return;
    }
    for (int r = 0; r <= std::min(remaining, top); ++r)
      for (const auto& g : spheres[static_cast<std::size_t>(r)]) {
        current.push_back(g);
        self(self, pos + 1, remaining - r);
        current.pop_back();
      }
  };
  rec(rec, 0, radius);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Rotation {
  Tuple rep;
  int shift = 0;   // rep = rot^shift(t)
  int period = 0;  // least p > 0 with rot^p(t) = t
};

// rot(t) = (t_n, t_0, ..., t_{n-1}), the permutation underlying tau
Rotation least_rotation(const Tuple& t) {
  const int m = static_cast<int>(t.size());
  Rotation r{t, 0, m};
  Tuple cur = t;
  for (int k = 1; k < m; ++k) {
    std::rotate(cur.rbegin(), cur.rbegin() + 1, cur.rend());
    if (cur == t) {
      r.period = k;
      break;
    }
    if (cur < r.rep) {
      r.rep = cur;
      r.shift = k;
    }
  }
  return r;
}

// sign s^shift with s the tau sign; 0 if the orbit vanishes in the quotient
int cyclic_sign(const Rotation& r, int degree, Convention c) {
  int s = tau_sign(degree, c);
  if (s == -1 && r.period % 2 == 1) return 0;
  return (s == -1 && r.shift % 2 == 1) ? -1 : 1;
}

std::vector<int> components(const ComplexVariant& v, int degree) {
  std::vector<int> out;
  switch (v.kind) {
    case Variant::Hochschild:
    case Variant::Normalized:
    case Variant::CyclicQuotient: out.push_back(degree); break;
    case Variant::ConnectiveTC:
      for (int q = degree % 2; q <= degree; q += 2) out.push_back(q);
      break;
    case Variant::PeriodicQuotient:
      for (int q = degree % 2; q < v.k; q += 2) out.push_back(q);
      break;
  }
  return out;
}

bool has_component(const ComplexVariant& v, int degree, int q) {
  if (degree < 0 || q < 0) return false;
  auto c = components(v, degree);
  return std::find(c.begin(), c.end(), q) != c.end();
}

}  // namespace

Chain cyclic_class(const Chain& x, Convention convention) {
  Chain out(x.degree());
  for (const auto& [t, c] : x.terms()) {
    auto r = least_rotation(t);
    int s = cyclic_sign(r, x.degree(), convention);
    if (s != 0) out.add(r.rep, s == 1 ? c : -c);
  }
  return out;
}

Chain cyclic_descent_defect(const Group& group, const Chain& x, Convention convention) {
  return cyclic_class(hochschild_b(group, x - cyclic_tau(x, convention)), convention);
}

std::size_t TruncatedComplex::block_id(const Tuple& t) {
  auto cls = group_.conjugacy_class(group_.product(t));
  return block_ids_.try_emplace(cls, block_ids_.size()).first->second;
}

std::optional<TruncatedComplex::Located> TruncatedComplex::locate(int degree, const BasisCell& cell) const {
  const auto& index = index_.at(static_cast<std::size_t>(degree));
  if (variant_.kind == Variant::CyclicQuotient) {
    auto r = least_rotation(cell.tuple);
    int s = cyclic_sign(r, degree, convention_);
    if (s == 0) return Located{0, 0};
    auto it = index.find(BasisCell{cell.component, r.rep});
    if (it == index.end()) return std::nullopt;
    return Located{it->second, s};
  }
  if (variant_.kind == Variant::Normalized) {
    for (std::size_t i = 1; i < cell.tuple.size(); ++i)
      if (group_.is_identity(cell.tuple[i])) return Located{0, 0};
  }
  auto it = index.find(cell);
  if (it == index.end()) return std::nullopt;
  return Located{it->second, 1};
}

SparseVec TruncatedComplex::apply_boundary(int degree, const BasisCell& cell) const {
  std::map<std::size_t, Rational> acc;
  auto collect = [&](const Chain& y, int component) {
    for (const auto& [t, c] : y.terms()) {
      if (!c.is_real()) throw std::logic_error("non-real boundary coefficient");
      auto loc = locate(degree - 1, BasisCell{component, t});
      if (!loc)
        throw std::logic_error("boundary term " + group_.format(t) + " leaves the truncation (filtration closure)");
      if (loc->sign == 0) continue;
      acc[loc->index] += loc->sign == 1 ? c.re() : Rational(-c.re());
    }
  };
  Chain x = Chain::elementary(cell.tuple);
  const int q = cell.component;
  if (q >= 1 && has_component(variant_, degree - 1, q - 1)) collect(hochschild_b(group_, x), q - 1);
  if ((variant_.kind == Variant::ConnectiveTC || variant_.kind == Variant::PeriodicQuotient) &&
      has_component(variant_, degree - 1, q + 1))
    collect(connes_B(group_, x, convention_), q + 1);
  SparseVec v;
  for (auto& [i, c] : acc)
    if (c != 0) v.emplace_back(i, std::move(c));
  return v;
}

TruncatedComplex TruncatedComplex::build(const Group& group, int n_max, int radius, ComplexVariant variant,
                                         const BuildOptions& opts) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  if (radius < 0) throw DomainError("radius must be >= 0");
  if (variant.kind == Variant::PeriodicQuotient && variant.k < 1)
    throw DomainError("periodic quotient needs k >= 1");
  TruncatedComplex cx(group);
  cx.n_max_ = n_max;
  cx.radius_ = radius;
  cx.variant_ = variant;
  cx.convention_ = opts.convention;

  const int top = n_max + 1;
  std::map<int, std::vector<Tuple>> tuples;  // by component
  auto tuples_for = [&](int q) -> const std::vector<Tuple>& {
    auto it = tuples.find(q);
    if (it == tuples.end()) it = tuples.emplace(q, tuples_within(group, q + 1, radius, opts.cap)).first;
    return it->second;
  };

  cx.spaces_.resize(static_cast<std::size_t>(top + 1));
  cx.index_.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    auto& space = cx.spaces_[static_cast<std::size_t>(n)];
    for (int q : components(variant, n)) {
      for (const auto& t : tuples_for(q)) {
        if (variant.kind == Variant::Normalized &&
            std::any_of(t.begin() + 1, t.end(), [&](const Element& g) { return group.is_identity(g); }))
          continue;
        if (variant.kind == Variant::CyclicQuotient) {
          auto r = least_rotation(t);
          if (r.shift != 0 || cyclic_sign(r, n, opts.convention) == 0) continue;
        }
        space.basis.push_back(BasisCell{q, t});
      }
    }
    std::sort(space.basis.begin(), space.basis.end());
    if (space.basis.size() > opts.cap) throw ResourceLimit("basis", opts.cap);
    auto& index = cx.index_[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
      index.emplace(space.basis[i], i);
      space.block.push_back(cx.block_id(space.basis[i].tuple));
    }
  }

  cx.boundary_.resize(static_cast<std::size_t>(top + 1));
  for (int n = 1; n <= top; ++n) {
    const auto& src = cx.spaces_[static_cast<std::size_t>(n)];
    SparseMatrix d{cx.spaces_[static_cast<std::size_t>(n - 1)].basis.size(), src.basis.size(),
                   std::vector<SparseVec>(src.basis.size())};
    parallel_for(src.basis.size(), [&](std::size_t j) { d.columns[j] = cx.apply_boundary(n, src.basis[j]); });
    cx.boundary_[static_cast<std::size_t>(n)] = std::move(d);
  }

  if (variant.kind == Variant::PeriodicQuotient) {
    const int q = variant.k - 1;
    for (int n = q % 2; n <= top; n += 2) {
      auto& space = cx.spaces_[static_cast<std::size_t>(n)];
      const auto& src = tuples_for(variant.k);
      std::vector<SparseVec> cols(src.size());
      parallel_for(src.size(), [&](std::size_t j) {
        auto v = cx.coordinates(n, q, hochschild_b(group, Chain::elementary(src[j])));
        if (!v) throw std::logic_error("b(Omega^k) leaves the truncation");
        cols[j] = std::move(*v);
      });
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (cols[j].empty()) continue;
        space.quotient.push_back(std::move(cols[j]));
        space.quotient_block.push_back(cx.block_id(src[j]));
      }
    }
  }
  cx.check_composites();
  return cx;
}

void TruncatedComplex::check_composites() {
  for (int n = 2; n <= n_max_ + 1; ++n) {
    SparseMatrix dd = boundary(n - 1) * boundary(n);
    Echelon w;
    for (const auto& v : space(n - 2).quotient) w.insert(v);
    for (const auto& c : dd.columns)
      if (!w.reduce(c).empty()) {
        is_complex_ = false;
        return;
      }
  }
}

std::optional<SparseVec> TruncatedComplex::coordinates(int degree, int component, const Chain& x) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [t, c] : x.terms()) {
    if (!c.is_real()) throw DomainError("coordinates are only defined for real coefficients");
    auto loc = locate(degree, BasisCell{component, t});
    if (!loc) return std::nullopt;
    if (loc->sign == 0) continue;
    acc[loc->index] += loc->sign == 1 ? c.re() : Rational(-c.re());
  }
  SparseVec v;
  for (auto& [i, c] : acc)
    if (c != 0) v.emplace_back(i, std::move(c));
  return v;
}

Chain TruncatedComplex::chain_of(int degree, int component, const SparseVec& v) const {
  Chain x(component);
  const auto& basis = space(degree).basis;
  for (const auto& [i, c] : v)
    if (basis[i].component == component) x.add(basis[i].tuple, Scalar(c));
  return x;
}

HomologyResult TruncatedComplex::homology(int degree, RankMethod method, bool representatives) const {
  if (degree < 0 || degree > n_max_)
    throw DomainError("degree " + std::to_string(degree) + " outside [0, " + std::to_string(n_max_) + "]");
  if (!is_complex_) throw DomainError("boundary maps do not square to zero under the " + to_string(convention_) +
                                      " convention; homology undefined");
  auto rank_of = [&](const std::vector<SparseVec>& cols, const std::vector<std::size_t>& blocks) {
    return method == RankMethod::Blocked ? rank_blocked(cols, blocks) : rank_serial(cols);
  };
  // rank of [columns of d_n (blocks of V_n cells) | quotient vectors of degree n-1]
  auto combined_rank = [&](int n, int target) {
    std::vector<SparseVec> cols;
    std::vector<std::size_t> blocks;
    if (n >= 1 && n <= n_max_ + 1) {
      cols = boundary(n).columns;
      blocks = space(n).block;
    }
    const auto& w = space(target);
    cols.insert(cols.end(), w.quotient.begin(), w.quotient.end());
    blocks.insert(blocks.end(), w.quotient_block.begin(), w.quotient_block.end());
    return rank_of(cols, blocks);
  };
  auto quotient_rank = [&](int n) {
    if (n < 0) return std::size_t{0};
    return rank_of(space(n).quotient, space(n).quotient_block);
  };

  HomologyResult r;
  r.variant = variant_.name();
  r.degree = degree;
  r.radius = radius_;
  const std::size_t dim_v = space(degree).basis.size() - quotient_rank(degree);
  const std::size_t rank_out = degree >= 1 ? combined_rank(degree, degree - 1) - quotient_rank(degree - 1) : 0;
  r.kernel_rank = dim_v - rank_out;
  r.image_rank = combined_rank(degree + 1, degree) - quotient_rank(degree);
  r.dim = r.kernel_rank - r.image_rank;

  if (representatives) {
    if (!space(degree).quotient.empty()) throw Unsupported("representatives for quotient variants");
    std::vector<SparseVec> kernel;
    if (degree == 0) {
      for (std::size_t i = 0; i < space(0).basis.size(); ++i) kernel.push_back({{i, Rational(1)}});
    } else {
      kernel = kernel_basis(boundary(degree).columns);
    }
    Echelon e;
    for (const auto& c : boundary(degree + 1).columns)
      if (!c.empty()) e.insert(c);
    for (auto& k : kernel)
      if (e.insert(k)) r.representatives.push_back(std::move(k));
  }
  return r;
}

}  // namespace ghc
