#include <algorithm>

#include "instances.hpp"
#include "qlat/errors.hpp"

namespace qlat::detail {

Payload fraction_payload(const Rational& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
    throw InvalidArgument("rational out of range");
  }
  return Payload{q.get_num().get_si(), q.get_den().get_si()};
}

Rational fraction_value(const Payload& p) {
  Rational q(static_cast<long>(p[0]), static_cast<long>(p[1]));
  q.canonicalize();
  return q;
}

namespace {

bool in_cone(const Rational& v) { return v == 0 || v >= 1; }

}  // namespace

HalfLine::HalfLine(int denominator_bound) : config_{MonoidKind::HalfLine, 1, denominator_bound} {
  if (denominator_bound < 1) throw InvalidArgument("denominator bound must be positive");
}

std::string HalfLine::name() const {
  return "half_line(den<=" + std::to_string(config_.denominator_bound) + ")";
}

void HalfLine::validate(const Label& g) const {
  if (g.length() != 2 || g.data()[1] < 1 || fraction_payload(fraction_value(g.data())) != g.data()) {
    throw InstanceMismatch("not a reduced fraction");
  }
}

void HalfLine::validate(const Element& p) const {
  validate(Label(p.data()));
  if (!in_cone(fraction_value(p.data()))) throw InstanceMismatch("value outside {0} u [1, inf)");
}

Element HalfLine::compose(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  return Element(fraction_payload(fraction_value(p.data()) + fraction_value(q.data())));
}

std::optional<Element> HalfLine::left_divide(const Element& p, const Element& q) const {
  Rational d = fraction_value(q.data()) - fraction_value(p.data());
  if (!in_cone(d)) return std::nullopt;
  return Element(fraction_payload(d));
}

JoinResult HalfLine::join(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  Rational x = fraction_value(p.data());
  Rational y = fraction_value(q.data());
  if (x > y) std::swap(x, y);
  if (in_cone(y - x)) return JoinResult::finite(Element(fraction_payload(y)));
  return JoinResult::finite(Element(fraction_payload(y + 1)));
}

Label HalfLine::quotient_label(const Element& s, const Element& t) const {
  validate(s);
  validate(t);
  return Label(fraction_payload(fraction_value(s.data()) - fraction_value(t.data())));
}

Label HalfLine::label_mul(const Label& g, const Label& h) const {
  validate(g);
  validate(h);
  return Label(fraction_payload(fraction_value(g.data()) + fraction_value(h.data())));
}

Label HalfLine::label_inverse(const Label& g) const {
  return Label(fraction_payload(-fraction_value(g.data())));
}

std::optional<Element> HalfLine::label_in_positive(const Label& g) const {
  if (!in_cone(fraction_value(g.data()))) return std::nullopt;
  return Element(g.data());
}

std::optional<Element> HalfLine::lub_impl(const Label&) const {
  throw Unsupported(name() + " does not support least upper bounds of quotients");
}

std::vector<Element> HalfLine::enumerate_ball(int n) const {
  if (n < 0) throw InvalidArgument("ball radius must be non-negative");
  std::vector<Rational> values{Rational(0)};
  for (long den = 1; den <= config_.denominator_bound; ++den) {
    for (long num = den; num <= static_cast<long>(n) * den; ++num) {
      Rational q(num, den);
      q.canonicalize();
      if (q.get_den() == den) values.push_back(q);
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<Element> out;
  for (const auto& v : values) out.emplace_back(fraction_payload(v));
  return out;
}

std::vector<Element> HalfLine::lower_set(const Element& t) const {
  validate(t);
  Rational tv = fraction_value(t.data());
  std::vector<Element> out;
  for (const auto& s : enumerate_ball(static_cast<int>(mpz_class(tv.get_num() / tv.get_den()).get_si()) + 1)) {
    Rational sv = fraction_value(s.data());
    if (sv <= tv && in_cone(tv - sv)) out.push_back(s);
  }
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  return out;
}

Rational HalfLine::size(const Element& p) const { return fraction_value(p.data()); }

std::string HalfLine::format(const Element& p) const { return fraction_value(p.data()).get_str(); }
std::string HalfLine::format(const Label& g) const { return fraction_value(g.data()).get_str(); }

Element HalfLine::parse(std::string_view text) const {
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos) throw ParseError("empty element", 0);
  std::size_t e = text.find_last_not_of(" \t");
  Rational q;
  try {
    q = parse_rational(text.substr(b, e - b + 1));
  } catch (const ParseError& err) {
    throw ParseError("malformed rational element", b + err.position());
  }
  if (!in_cone(q)) throw ParseError("value outside {0} u [1, inf)", b);
  return Element(fraction_payload(q));
}

}  // namespace qlat::detail
