#include "qlat/monomial.hpp"

#include "qlat/errors.hpp"
#include "qlat/syntax.hpp"

namespace qlat {

Monomial multiply(const Monoid& m, const Monomial& a, const Monomial& b) {
  if (a.is_zero() || b.is_zero()) return Monomial::zero();
  auto j = m.join(a.source(), b.range());
  if (!j.is_finite()) return Monomial::zero();
  auto left = m.left_divide(a.source(), j.value());
  auto right = m.left_divide(b.range(), j.value());
  return Monomial(m.compose(a.range(), *left), m.compose(b.source(), *right));
}

Monomial adjoint(const Monomial& a) {
  if (a.is_zero()) return a;
  return Monomial(a.source(), a.range());
}

std::optional<Element> apply(const Monoid& m, const Monomial& a, const Element& t) {
  if (a.is_zero()) return std::nullopt;
  auto rest = m.left_divide(a.source(), t);
  if (!rest) return std::nullopt;
  return m.compose(a.range(), *rest);
}

Label degree(const Monoid& m, const Monomial& a) {
  if (a.is_zero()) throw InvalidArgument("the zero monomial has no degree");
  return m.quotient_label(a.range(), a.source());
}

std::string format(const Monoid& m, const Monomial& a) {
  if (a.is_zero()) return "0";
  return "V(" + m.format(a.range()) + "," + m.format(a.source()) + ")";
}

Monomial parse_monomial(const Monoid& m, std::string_view text) {
  Cursor c(text);
  c.skip_space();
  if (c.consume('0')) {
    c.skip_space();
    c.expect_end();
    return Monomial::zero();
  }
  Monomial out = parse_monomial_at(m, c);
  c.skip_space();
  c.expect_end();
  return out;
}

}  // namespace qlat
