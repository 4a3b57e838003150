#include "ghc/chain_ops.hpp"

#include "ghc/errors.hpp"

#include <algorithm>

namespace ghc {

std::string to_string(Convention c) { return c == Convention::Standard ? "standard" : "twisted"; }

Convention parse_convention(const std::string& s) {
  if (s == "standard") return Convention::Standard;
  if (s == "twisted") return Convention::Twisted;
  throw ConfigError("convention must be 'standard' or 'twisted', got '" + s + "'");
}

int tau_sign(int degree, Convention convention) {
  int e = convention == Convention::Standard ? degree : degree + 1;
  return e % 2 == 0 ? 1 : -1;
}

Chain hochschild_b(const Group& group, const Chain& x) {
  const int n = x.degree();
  if (n < 1) throw DomainError("Hochschild boundary needs degree >= 1");
  Chain out(n - 1);
  for (const auto& [t, c] : x.terms()) {
    for (int i = 0; i < n; ++i) {
      Tuple face;
      face.reserve(static_cast<std::size_t>(n));
      face.insert(face.end(), t.begin(), t.begin() + i);
      face.push_back(group.multiply(t[i], t[i + 1]));
      face.insert(face.end(), t.begin() + i + 2, t.end());
      out.add(std::move(face), i % 2 == 0 ? c : -c);
    }
    Tuple last;
    last.reserve(static_cast<std::size_t>(n));
    last.push_back(group.multiply(t[n], t[0]));
    last.insert(last.end(), t.begin() + 1, t.begin() + n);
    out.add(std::move(last), n % 2 == 0 ? c : -c);
  }
  return out;
}

Chain connes_B(const Group& group, const Chain& x, Convention convention) {
  const int n = x.degree();
  const Element e = group.identity();
  const int second = convention == Convention::Standard ? 1 : -1;
  Chain out(n + 1);
  for (const auto& [t, c] : x.terms()) {
    for (int i = 0; i <= n; ++i) {
      Tuple rot;
      rot.reserve(t.size());
      rot.insert(rot.end(), t.begin() + i, t.end());
      rot.insert(rot.end(), t.begin(), t.begin() + i);
      Scalar sc = (n * i) % 2 == 0 ? c : -c;

      Tuple unit_first;
      unit_first.reserve(t.size() + 1);
      unit_first.push_back(e);
      unit_first.insert(unit_first.end(), rot.begin(), rot.end());
      out.add(std::move(unit_first), sc);

      Tuple unit_second;
      unit_second.reserve(t.size() + 1);
      unit_second.push_back(rot[0]);
      unit_second.push_back(e);
      unit_second.insert(unit_second.end(), rot.begin() + 1, rot.end());
      out.add(std::move(unit_second), second == 1 ? sc : -sc);
    }
  }
  return out;
}

Chain cyclic_tau(const Chain& x, Convention convention) {
  const int n = x.degree();
  const int sign = tau_sign(n, convention);
  Chain out(n);
  for (const auto& [t, c] : x.terms()) {
    Tuple r;
    r.reserve(t.size());
    r.push_back(t.back());
    r.insert(r.end(), t.begin(), t.end() - 1);
    out.add(std::move(r), sign == 1 ? c : -c);
  }
  return out;
}

Chain normalize_chain(const Group& group, const Chain& x) {
  Chain out(x.degree());
  for (const auto& [t, c] : x.terms()) {
    bool degenerate = std::any_of(t.begin() + 1, t.end(), [&](const Element& g) { return group.is_identity(g); });
    if (!degenerate) out.add(t, c);
  }
  return out;
}

std::map<Element, Chain> conjugacy_split(const Group& group, const Chain& x) {
  std::map<Element, Chain> out;
  for (const auto& [t, c] : x.terms()) {
    auto cls = group.conjugacy_class(group.product(t));
    out.try_emplace(cls, x.degree()).first->second.add(t, c);
  }
  return out;
}

Chain homogeneous_part(const Group& group, const Chain& x) {
  Chain out(x.degree());
  for (const auto& [t, c] : x.terms())
    if (group.is_identity(group.product(t))) out.add(t, c);
  return out;
}

}  // namespace ghc
