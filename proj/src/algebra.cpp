#include "qlat/algebra.hpp"

#include "qlat/errors.hpp"

namespace qlat {

AlgebraElement::AlgebraElement(MonoidPtr monoid) : monoid_(std::move(monoid)) {
  if (!monoid_) throw InvalidArgument("algebra element needs a monoid instance");
}

AlgebraElement AlgebraElement::monomial(MonoidPtr monoid, const Monomial& m, const Scalar& coeff) {
  AlgebraElement x(std::move(monoid));
  x.add_term(m, coeff);
  return x;
}

AlgebraElement AlgebraElement::range_projection(MonoidPtr monoid, const Element& p) {
  return monomial(std::move(monoid), Monomial(p, p));
}

AlgebraElement AlgebraElement::unit(MonoidPtr monoid) {
  auto e = monoid->identity();
  return range_projection(std::move(monoid), e);
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& coeff) {
  if (m.is_zero() || coeff.is_zero()) return;
  monoid_->validate(m.range());
  monoid_->validate(m.source());
  auto [it, inserted] = terms_.try_emplace(Key(m.range(), m.source()), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar AlgebraElement::coefficient(const Element& s, const Element& t) const {
  auto it = terms_.find(Key(s, t));
  return it == terms_.end() ? Scalar() : it->second;
}

void AlgebraElement::require_same(const AlgebraElement& o) const {
  if (monoid_ != o.monoid_ && monoid_->config() != o.monoid_->config()) {
    throw InstanceMismatch("algebra elements belong to different instances");
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(Monomial(k.first, k.second), c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(Monomial(k.first, k.second), -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same(b);
  AlgebraElement out(a.monoid_);
  for (const auto& [ka, ca] : a.terms_) {
    Monomial ma(ka.first, ka.second);
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(multiply(*a.monoid_, ma, Monomial(kb.first, kb.second)), ca * cb);
    }
  }
  return out;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement out(monoid_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key(k.second, k.first), c.conj());
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same(b);
  return a.terms_ == b.terms_;
}

std::map<Label, AlgebraElement> grade(const AlgebraElement& x) {
  std::map<Label, AlgebraElement> out;
  const auto& m = x.monoid();
  for (const auto& [k, c] : x.terms()) {
    auto label = m.quotient_label(k.first, k.second);
    auto it = out.try_emplace(label, x.monoid_ptr()).first;
    it->second.add_term(Monomial(k.first, k.second), c);
  }
  return out;
}

AlgebraElement expectation(const AlgebraElement& x) {
  AlgebraElement out(x.monoid_ptr());
  const auto& m = x.monoid();
  const auto identity = m.identity_label();
  for (const auto& [k, c] : x.terms()) {
    if (m.quotient_label(k.first, k.second) == identity) out.add_term(Monomial(k.first, k.second), c);
  }
  return out;
}

std::optional<Label> homogeneous_degree(const AlgebraElement& x) {
  auto parts = grade(x);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

BasisVector act(const AlgebraElement& x, const Element& t) {
  BasisVector out;
  for (const auto& [k, c] : x.terms()) {
    auto image = apply(x.monoid(), Monomial(k.first, k.second), t);
    if (!image) continue;
    auto [it, inserted] = out.try_emplace(*image, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

std::string format(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    std::string mono = format(x.monoid(), Monomial(k.first, k.second));
    std::string coeff;
    bool negative = false;
    if (sgn(c.im()) == 0) {
      negative = sgn(c.re()) < 0;
      Rational mag = abs(c.re());
      if (mag != 1) coeff = mag.get_str() + " ";
    } else {
      coeff = "(" + c.to_string() + ") ";
    }
    if (first) {
      s += negative ? "-" : "";
    } else {
      s += negative ? " - " : " + ";
    }
    s += coeff + mono;
    first = false;
  }
  return s;
}

}  // namespace qlat
