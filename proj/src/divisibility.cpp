#include <numeric>

#include "instances.hpp"
#include "qlat/errors.hpp"

namespace qlat::detail {

namespace {

Label reduced(std::int64_t num, std::int64_t den) {
  auto g = std::gcd(num, den);
  return Label{num / g, den / g};
}

}  // namespace

Divisibility::Divisibility() : config_{MonoidKind::Divisibility, 1, 1} {}

void Divisibility::validate(const Element& p) const {
  if (p.length() != 1 || p.data()[0] < 1) {
    throw InstanceMismatch("not a positive integer of the divisibility monoid");
  }
}

void Divisibility::validate(const Label& g) const {
  if (g.length() != 2 || g.data()[0] < 1 || g.data()[1] < 1 ||
      std::gcd(g.data()[0], g.data()[1]) != 1) {
    throw InstanceMismatch("not a reduced positive fraction");
  }
}

Element Divisibility::compose(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  return Element{checked_mul(p.data()[0], q.data()[0])};
}

std::optional<Element> Divisibility::left_divide(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  if (q.data()[0] % p.data()[0] != 0) return std::nullopt;
  return Element{q.data()[0] / p.data()[0]};
}

JoinResult Divisibility::join(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  auto a = p.data()[0];
  auto b = q.data()[0];
  return JoinResult::finite(Element{checked_mul(a / std::gcd(a, b), b)});
}

Label Divisibility::quotient_label(const Element& s, const Element& t) const {
  validate(s);
  validate(t);
  return reduced(s.data()[0], t.data()[0]);
}

Label Divisibility::label_mul(const Label& g, const Label& h) const {
  validate(g);
  validate(h);
  auto g1 = std::gcd(g.data()[0], h.data()[1]);
  auto g2 = std::gcd(h.data()[0], g.data()[1]);
  return Label{checked_mul(g.data()[0] / g1, h.data()[0] / g2),
               checked_mul(g.data()[1] / g2, h.data()[1] / g1)};
}

Label Divisibility::label_inverse(const Label& g) const { return Label{g.data()[1], g.data()[0]}; }

std::optional<Element> Divisibility::label_in_positive(const Label& g) const {
  if (g.data()[1] != 1) return std::nullopt;
  return Element{g.data()[0]};
}

std::optional<Element> Divisibility::lub_impl(const Label& g) const {
  // u >= n/d in P iff n | u*d iff n | u.
  return Element{g.data()[0]};
}

std::vector<Element> Divisibility::enumerate_ball(int n) const {
  if (n < 0) throw InvalidArgument("ball radius must be non-negative");
  std::vector<Element> out;
  for (std::int64_t k = 1; k <= std::max(n, 1); ++k) out.push_back(Element{k});
  return out;
}

std::vector<Element> Divisibility::lower_set(const Element& t) const {
  validate(t);
  std::vector<Element> out;
  for (std::int64_t k = 1; k <= t.data()[0]; ++k) {
    if (t.data()[0] % k == 0) out.push_back(Element{k});
  }
  return out;
}

Rational Divisibility::size(const Element& p) const { return Rational(static_cast<long>(p.data()[0])); }

std::string Divisibility::format(const Element& p) const { return std::to_string(p.data()[0]); }

std::string Divisibility::format(const Label& g) const {
  if (g.data()[1] == 1) return std::to_string(g.data()[0]);
  return std::to_string(g.data()[0]) + "/" + std::to_string(g.data()[1]);
}

Element Divisibility::parse(std::string_view text) const {
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos) throw ParseError("empty element", 0);
  std::size_t e = text.find_last_not_of(" \t");
  for (std::size_t i = b; i <= e; ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("expected a positive integer", i);
  }
  auto value = std::stoll(std::string(text.substr(b, e - b + 1)));
  if (value < 1) throw ParseError("divisibility elements are positive integers", b);
  return Element{value};
}

}  // namespace qlat::detail
