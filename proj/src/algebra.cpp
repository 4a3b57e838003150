#include "ghc/algebra.hpp"

#include "ghc/errors.hpp"

namespace ghc {

AlgebraElement AlgebraElement::delta(const Element& g, Scalar c) {
  AlgebraElement x;
  x.add(g, c);
  return x;
}

void AlgebraElement::add(const Element& g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar AlgebraElement::coefficient(const Element& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar{} : it->second;
}

AlgebraElement::Abs AlgebraElement::absolute() const {
  Abs out;
  for (const auto& [g, c] : terms_) {
    Interval m = modulus(c);
    if (!m.exact()) out.exact = false;
    out.value.terms_.emplace(g, Scalar(m.lo));
  }
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
  for (const auto& [g, c] : b.terms()) a.add(g, -c);
  return a;
}

AlgebraElement convolve(const Group& group, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [g, a] : x.terms())
    for (const auto& [h, b] : y.terms()) out.add(group.multiply(g, h), a * b);
  return out;
}

Interval nu_lambda(const Group& group, const AlgebraElement& x, const Rational& lambda) {
  if (lambda < 1) throw DomainError("lambda must be >= 1");
  Interval total;
  for (const auto& [g, c] : x.terms())
    total += scale_nonneg(modulus(c), pow(lambda, static_cast<unsigned>(group.word_length(g))));
  return total;
}

Chain Chain::elementary(Tuple t, Scalar c) {
  Chain x(static_cast<int>(t.size()) - 1);
  x.add(std::move(t), c);
  return x;
}

Scalar Chain::coefficient(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar{} : it->second;
}

void Chain::add(const Tuple& t, const Scalar& c) { add(Tuple(t), c); }

void Chain::add(Tuple&& t, const Scalar& c) {
  if (static_cast<int>(t.size()) != degree_ + 1)
    throw DomainError("tuple of length " + std::to_string(t.size()) + " in a degree-" + std::to_string(degree_) +
                      " chain");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(t), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.degree_ != degree_ && !o.is_zero()) throw DomainError("adding chains of different degrees");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (o.degree_ != degree_ && !o.is_zero()) throw DomainError("subtracting chains of different degrees");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

Chain& Chain::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= s;
  return *this;
}

int Chain::max_total_length(const Group& group) const {
  int m = 0;
  for (const auto& [t, c] : terms_) m = std::max(m, group.total_length(t));
  return m;
}

void Chain::validate(const Group& group) const {
  for (const auto& [t, c] : terms_)
    for (const auto& g : t) group.validate(g);
}

}  // namespace ghc
