#pragma once

// The inverse semigroup {T_s T_t^*} u {0}. A nonzero monomial V(s,t) acts on
// P as the partial injection tP -> sP, tu |-> su.

#include <optional>
#include <string>
#include <utility>

#include "qlat/monoid.hpp"

namespace qlat {

class Monomial {
 public:
  static Monomial zero() { return Monomial(); }
  Monomial(Element s, Element t) : pair_(std::in_place, std::move(s), std::move(t)) {}

  bool is_zero() const { return !pair_.has_value(); }
  /// s in V(s,t); precondition: nonzero.
  const Element& range() const { return pair_->first; }
  /// t in V(s,t); precondition: nonzero.
  const Element& source() const { return pair_->second; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Monomial() = default;
  std::optional<std::pair<Element, Element>> pair_;
};

/// V(s,t)V(u,v) = V(s t^{-1}(t v u), v u^{-1}(t v u)), or zero when t v u = inf.
Monomial multiply(const Monoid& m, const Monomial& a, const Monomial& b);
Monomial adjoint(const Monomial& a);
/// Image of the basis vector e_t, absent when t is outside the domain.
std::optional<Element> apply(const Monoid& m, const Monomial& a, const Element& t);
/// quotient_label(s,t); throws InvalidArgument for the zero monomial.
Label degree(const Monoid& m, const Monomial& a);

std::string format(const Monoid& m, const Monomial& a);
/// Accepts "V(s,t)" and "0".
Monomial parse_monomial(const Monoid& m, std::string_view text);

}  // namespace qlat
