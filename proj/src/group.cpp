#include "ghc/group.hpp"

#include "ghc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ghc {

namespace {

// Generator letters skip 'e', which is reserved for the identity.
constexpr std::string_view kLetters = "abcdfghijklmnopqrstuvwxyz";
constexpr int kMaxRank = static_cast<int>(kLetters.size());

char letter_for(int code) {
  char c = kLetters[static_cast<std::size_t>(std::abs(code) - 1)];
  return code > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

int code_for(char c, int rank) {
  char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto pos = kLetters.find(lower);
  if (pos == std::string_view::npos || static_cast<int>(pos) >= rank)
    throw InvalidElement(std::string("unknown generator letter '") + c + "'");
  int code = static_cast<int>(pos) + 1;
  return std::isupper(static_cast<unsigned char>(c)) ? -code : code;
}

}  // namespace

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::FiniteTable: return "finite-table";
    case GroupKind::Free: return "free";
    case GroupKind::FreeAbelian: return "free-abelian";
  }
  return "unknown";
}

Group Group::finite_table(std::vector<std::vector<int>> table, std::vector<int> generators, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidElement("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InvalidElement("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidElement("table entry out of range");
  }
  // Latin square
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]++) throw InvalidElement("table is not a Latin square (row " + std::to_string(i) + ")");
      if (seen_col[table[j][i]]++) throw InvalidElement("table is not a Latin square (column " + std::to_string(i) + ")");
    }
  }
  int identity = -1;
  for (int i = 0; i < n && identity < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
    if (ok) identity = i;
  }
  if (identity < 0) throw InvalidElement("table has no identity element");

  Group g;
  g.kind_ = GroupKind::FiniteTable;
  g.name_ = std::move(name);
  g.identity_index_ = identity;
  g.inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] == identity) g.inverse_[i] = j;

  // symmetric closure of the generating set
  std::vector<int> gens;
  for (int s : generators) {
    if (s < 0 || s >= n) throw InvalidElement("generator index out of range");
    if (s == identity) continue;
    for (int t : {s, g.inverse_[s]})
      if (std::find(gens.begin(), gens.end(), t) == gens.end()) gens.push_back(t);
  }
  std::sort(gens.begin(), gens.end());

  // breadth-first search over the Cayley graph for word lengths
  g.length_.assign(n, -1);
  g.length_[identity] = 0;
  std::deque<int> queue{identity};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int y = table[x][s];
      if (g.length_[y] < 0) {
        g.length_[y] = g.length_[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (std::find(g.length_.begin(), g.length_.end(), -1) != g.length_.end())
    throw InvalidElement("generators do not generate the group");

  // associativity against generators suffices once the generators generate
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int s : gens)
        if (table[table[x][y]][s] != table[x][table[y][s]]) throw InvalidElement("table is not associative");

  g.table_ = std::move(table);
  for (int s : gens) g.generators_.push_back(Element{{s}});

  g.class_rep_.assign(n, n);
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h) {
      int c = g.table_[g.table_[h][x]][g.inverse_[h]];
      g.class_rep_[x] = std::min(g.class_rep_[x], c);
    }
  return g;
}

Group Group::free(int rank) {
  if (rank < 1 || rank > kMaxRank) throw DomainError("free group rank out of range");
  Group g;
  g.kind_ = GroupKind::Free;
  g.rank_ = rank;
  g.name_ = "F" + std::to_string(rank);
  for (int i = 1; i <= rank; ++i) {
    g.generators_.push_back(Element{{i}});
    g.generators_.push_back(Element{{-i}});
  }
  return g;
}

Group Group::free_abelian(int rank) {
  if (rank < 1 || rank > kMaxRank) throw DomainError("free abelian rank out of range");
  Group g;
  g.kind_ = GroupKind::FreeAbelian;
  g.rank_ = rank;
  g.name_ = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (int i = 0; i < rank; ++i)
    for (int s : {1, -1}) {
      std::vector<int> v(rank, 0);
      v[i] = s;
      g.generators_.push_back(Element{v});
    }
  return g;
}

Group Group::cyclic(int order) {
  if (order < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) t[i][j] = (i + j) % order;
  return finite_table(std::move(t), order > 1 ? std::vector<int>{1} : std::vector<int>{}, "Z/" + std::to_string(order));
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {  // (p*q)(x) = p(q(x))
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

Group from_permutations(const std::vector<Perm>& elems, const std::vector<int>& gens, std::string name) {
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = std::find(elems.begin(), elems.end(), compose(elems[i], elems[j]));
      t[i][j] = static_cast<int>(it - elems.begin());
    }
  return Group::finite_table(std::move(t), gens, std::move(name));
}

}  // namespace

Group Group::symmetric3() {
  std::vector<Perm> elems;
  Perm p{0, 1, 2};
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // lexicographic order: 0=id, 1=(1 2), 2=(0 1), ...
  auto idx = [&](const Perm& q) { return static_cast<int>(std::find(elems.begin(), elems.end(), q) - elems.begin()); };
  return from_permutations(elems, {idx({1, 0, 2}), idx({0, 2, 1})}, "S3");
}

Group Group::klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return finite_table(std::move(t), {1, 2}, "Z2xZ2");
}

Group Group::dihedral(int n) {
  if (n < 3) throw DomainError("dihedral group needs n >= 3");
  // rotations r^k at 0..n-1, reflections s r^k at n..2n-1
  std::vector<Perm> elems;
  for (int k = 0; k < n; ++k) {
    Perm p(n);
    for (int x = 0; x < n; ++x) p[x] = (x + k) % n;
    elems.push_back(p);
  }
  for (int k = 0; k < n; ++k) {
    Perm p(n);
    for (int x = 0; x < n; ++x) p[x] = ((n - x - k) % n + n) % n;
    elems.push_back(p);
  }
  return from_permutations(elems, {1, n}, "D" + std::to_string(n));
}

Element Group::identity() const {
  switch (kind_) {
    case GroupKind::FiniteTable: return Element{{identity_index_}};
    case GroupKind::Free: return Element{};
    case GroupKind::FreeAbelian: return Element{std::vector<int>(rank_, 0)};
  }
  return {};
}

bool Group::is_identity(const Element& g) const { return g == identity(); }

bool Group::valid(const Element& g) const {
  switch (kind_) {
    case GroupKind::FiniteTable:
      return g.code.size() == 1 && g.code[0] >= 0 && g.code[0] < static_cast<int>(table_.size());
    case GroupKind::Free:
      for (std::size_t i = 0; i < g.code.size(); ++i) {
        int c = g.code[i];
        if (c == 0 || std::abs(c) > rank_) return false;
        if (i > 0 && g.code[i - 1] == -c) return false;
      }
      return true;
    case GroupKind::FreeAbelian: return static_cast<int>(g.code.size()) == rank_;
  }
  return false;
}

void Group::validate(const Element& g) const {
  if (!valid(g)) throw InvalidElement("element is not a canonical element of " + name_);
}

std::vector<int> Group::reduce(std::vector<int> word) const {
  std::vector<int> out;
  out.reserve(word.size());
  for (int c : word) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Element Group::multiply(const Element& g, const Element& h) const {
  switch (kind_) {
    case GroupKind::FiniteTable:
      return Element{{table_[static_cast<std::size_t>(g.code[0])][static_cast<std::size_t>(h.code[0])]}};
    case GroupKind::Free: {
      std::vector<int> w;
      w.reserve(g.code.size() + h.code.size());
      // cancel at the junction only; both factors are already reduced
      std::size_t i = g.code.size(), j = 0;
      while (i > 0 && j < h.code.size() && g.code[i - 1] == -h.code[j]) {
        --i;
        ++j;
      }
      w.assign(g.code.begin(), g.code.begin() + static_cast<std::ptrdiff_t>(i));
      w.insert(w.end(), h.code.begin() + static_cast<std::ptrdiff_t>(j), h.code.end());
      return Element{std::move(w)};
    }
    case GroupKind::FreeAbelian: {
      std::vector<int> v(g.code);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += h.code[i];
      return Element{std::move(v)};
    }
  }
  return {};
}

Element Group::inverse(const Element& g) const {
  switch (kind_) {
    case GroupKind::FiniteTable: return Element{{inverse_[static_cast<std::size_t>(g.code[0])]}};
    case GroupKind::Free: {
      std::vector<int> w(g.code.rbegin(), g.code.rend());
      for (int& c : w) c = -c;
      return Element{std::move(w)};
    }
    case GroupKind::FreeAbelian: {
      std::vector<int> v(g.code);
      for (int& c : v) c = -c;
      return Element{std::move(v)};
    }
  }
  return {};
}

Element Group::eval(const Element& g, const Element& h, GroupOp op) const {
  validate(g);
  validate(h);
  return op == GroupOp::Multiply ? multiply(g, h) : multiply(inverse(g), h);
}

Element Group::product(const Tuple& t) const {
  Element p = identity();
  for (const auto& g : t) p = multiply(p, g);
  return p;
}

int Group::word_length(const Element& g) const {
  switch (kind_) {
    case GroupKind::FiniteTable: return length_[static_cast<std::size_t>(g.code[0])];
    case GroupKind::Free: return static_cast<int>(g.code.size());
    case GroupKind::FreeAbelian: {
      int s = 0;
      for (int c : g.code) s += std::abs(c);
      return s;
    }
  }
  return 0;
}

int Group::total_length(const Tuple& t) const {
  int s = 0;
  for (const auto& g : t) s += word_length(g);
  return s;
}

Element Group::conjugacy_class(const Element& g) const {
  switch (kind_) {
    case GroupKind::FiniteTable: return Element{{class_rep_[static_cast<std::size_t>(g.code[0])]}};
    case GroupKind::FreeAbelian: return g;
    case GroupKind::Free: {
      // cyclic reduction, then least rotation
      const auto& w = g.code;
      std::size_t lo = 0, hi = w.size();
      while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
      }
      std::vector<int> core(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
      std::vector<int> best = core;
      std::vector<int> rot = core;
      for (std::size_t k = 1; k < core.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
      }
      return Element{std::move(best)};
    }
  }
  return g;
}

std::vector<Element> Group::sphere(int r, std::size_t cap) const {
  if (r < 0) throw DomainError("negative radius");
  std::vector<Element> out;
  auto push = [&](Element e) {
    if (out.size() >= cap) throw ResourceLimit("ball", cap);
    out.push_back(std::move(e));
  };
  switch (kind_) {
    case GroupKind::FiniteTable:
      for (int i = 0; i < static_cast<int>(table_.size()); ++i)
        if (length_[static_cast<std::size_t>(i)] == r) push(Element{{i}});
      break;
    case GroupKind::Free: {
      std::vector<std::vector<int>> layer{{}};
      for (int len = 0; len < r; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : layer)
          for (int c = -rank_; c <= rank_; ++c) {
            if (c == 0 || (!w.empty() && w.back() == -c)) continue;
            if (next.size() >= cap) throw ResourceLimit("ball", cap);
            auto v = w;
            v.push_back(c);
            next.push_back(std::move(v));
          }
        layer = std::move(next);
      }
      for (auto& w : layer) push(Element{std::move(w)});
      break;
    }
    case GroupKind::FreeAbelian: {
      std::vector<int> v(rank_, 0);
      auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == rank_ - 1) {
          if (remaining == 0) {
            v[i] = 0;
            push(Element{v});
          } else {
            for (int s : {-remaining, remaining}) {
              v[i] = s;
              push(Element{v});
            }
          }
          return;
        }
        for (int c = -remaining; c <= remaining; ++c) {
          v[i] = c;
          self(self, i + 1, remaining - std::abs(c));
        }
      };
      rec(rec, 0, r);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> Group::ball(int r, std::size_t cap) const {
  if (r < 0) throw DomainError("negative radius");
  std::vector<Element> out;
  for (int len = 0; len <= r; ++len) {
    if (kind_ == GroupKind::FiniteTable && len > diameter()) break;
    auto s = sphere(len, cap);
    if (out.size() + s.size() > cap) throw ResourceLimit("ball", cap);
    out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  return out;
}

int Group::diameter() const {
  if (kind_ != GroupKind::FiniteTable) throw Unsupported("diameter of an infinite group");
  return *std::max_element(length_.begin(), length_.end());
}

Element Group::parse(std::string_view text) const {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "e" || (t.empty() && kind_ != GroupKind::FiniteTable)) return identity();
  switch (kind_) {
    case GroupKind::FiniteTable: {
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidElement("finite group element must be a table index, got '" + std::string(text) + "'");
      Element g{{std::stoi(t)}};
      validate(g);
      return g;
    }
    case GroupKind::Free: {
      std::vector<int> w;
      for (char c : t) w.push_back(code_for(c, rank_));
      return Element{reduce(std::move(w))};
    }
    case GroupKind::FreeAbelian: {
      std::vector<int> v(rank_, 0);
      for (char c : t) {
        int code = code_for(c, rank_);
        v[static_cast<std::size_t>(std::abs(code) - 1)] += code > 0 ? 1 : -1;
      }
      return Element{std::move(v)};
    }
  }
  return {};
}

std::string Group::format(const Element& g) const {
  if (is_identity(g)) return "e";
  std::string out;
  auto emit = [&](int code) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(letter_for(code));
  };
  switch (kind_) {
    case GroupKind::FiniteTable: return std::to_string(g.code[0]);
    case GroupKind::Free:
      for (int c : g.code) emit(c);
      break;
    case GroupKind::FreeAbelian:
      for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < std::abs(g.code[static_cast<std::size_t>(i)]); ++k)
          emit(g.code[static_cast<std::size_t>(i)] > 0 ? i + 1 : -(i + 1));
      break;
  }
  return out;
}

std::string Group::format(const Tuple& t) const {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += format(t[i]);
  }
  return out + ")";
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<int> parse_ints(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> v;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("-0123456789") != std::string::npos) throw ParseError("expected integer, got '" + tok + "'");
    v.push_back(std::stoi(tok));
  }
  return v;
}

}  // namespace

Group parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, kind, name, gens;
  int rank = 0;
  std::vector<std::vector<int>> table;
  bool in_table = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto sep = t.find_first_of(":=");
    if (in_table && sep == std::string::npos) {
      table.push_back(parse_ints(t));
      continue;
    }
    if (sep == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(t.substr(0, sep));
    std::string value = trim(t.substr(sep + 1));
    in_table = false;
    if (key == "kind")
      kind = value;
    else if (key == "name")
      name = value;
    else if (key == "rank")
      rank = std::stoi(value);
    else if (key == "generators")
      gens = value;
    else if (key == "table") {
      in_table = true;
      if (!value.empty()) table.push_back(parse_ints(value));
    } else
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (kind == "finite-table") {
    Group g = Group::finite_table(std::move(table), parse_ints(gens), name.empty() ? "finite" : name);
    return g;
  }
  if (kind == "free") return Group::free(rank);
  if (kind == "free-abelian") return Group::free_abelian(rank);
  throw ParseError("unknown or missing group kind '" + kind + "'");
}

Group load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str());
}

Group group_by_name(std::string_view name) {
  std::string n(name);
  if (n.rfind("file:", 0) == 0) return load_group_file(n.substr(5));
  if (n == "S3") return Group::symmetric3();
  if (n == "Z2xZ2" || n == "V4") return Group::klein_four();
  if (n == "Z") return Group::free_abelian(1);
  try {
    if (n.rfind("Z/", 0) == 0) return Group::cyclic(std::stoi(n.substr(2)));
    if (n.rfind("Z^", 0) == 0) return Group::free_abelian(std::stoi(n.substr(2)));
    if (n.size() > 1 && n[0] == 'F') return Group::free(std::stoi(n.substr(1)));
    if (n.size() > 1 && n[0] == 'D') return Group::dihedral(std::stoi(n.substr(1)));
  } catch (const std::logic_error&) {
  }
  throw ConfigError("unknown group '" + n + "'");
}

}  // namespace ghc
