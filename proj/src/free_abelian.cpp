#include <algorithm>
#include <numeric>

#include "instances.hpp"
#include "qlat/errors.hpp"

namespace qlat::detail {

namespace {

std::string format_vector(const Payload& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Compositions of `total` into `parts` non-negative summands, in decreasing
// lexicographic order.
void compositions(int total, int parts, Payload& prefix, std::vector<Element>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FreeAbelian::FreeAbelian(int rank) : config_{MonoidKind::FreeAbelian, rank, 1} {
  if (rank < 1) throw InvalidArgument("free abelian rank must be positive");
}

std::string FreeAbelian::name() const {
  return config_.rank == 1 ? "N" : "N^" + std::to_string(config_.rank);
}

Element FreeAbelian::identity() const {
  return Element(Payload(static_cast<std::size_t>(config_.rank), 0));
}

void FreeAbelian::validate(const Element& p) const {
  if (p.length() != static_cast<std::size_t>(config_.rank)) {
    throw InstanceMismatch("vector length does not match rank of " + name());
  }
  for (auto x : p.data()) {
    if (x < 0) throw InstanceMismatch("negative coordinate in element of " + name());
  }
}

void FreeAbelian::validate(const Label& g) const {
  if (g.length() != static_cast<std::size_t>(config_.rank)) {
    throw InstanceMismatch("vector length does not match rank of " + name());
  }
}

Element FreeAbelian::compose(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  Payload v(p.data());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(v[i], q.data()[i]);
  return Element(std::move(v));
}

std::optional<Element> FreeAbelian::left_divide(const Element& p, const Element& q) const {
  if (p.length() != q.length()) return std::nullopt;
  Payload v(q.data());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] -= p.data()[i];
    if (v[i] < 0) return std::nullopt;
  }
  return Element(std::move(v));
}

JoinResult FreeAbelian::join(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  Payload v(p.data());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], q.data()[i]);
  return JoinResult::finite(Element(std::move(v)));
}

Label FreeAbelian::quotient_label(const Element& s, const Element& t) const {
  validate(s);
  validate(t);
  Payload v(s.data());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= t.data()[i];
  return Label(std::move(v));
}

Label FreeAbelian::label_mul(const Label& g, const Label& h) const {
  validate(g);
  validate(h);
  Payload v(g.data());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(v[i], h.data()[i]);
  return Label(std::move(v));
}

Label FreeAbelian::label_inverse(const Label& g) const {
  Payload v(g.data());
  for (auto& x : v) x = -x;
  return Label(std::move(v));
}

std::optional<Element> FreeAbelian::label_in_positive(const Label& g) const {
  if (std::any_of(g.data().begin(), g.data().end(), [](auto x) { return x < 0; })) {
    return std::nullopt;
  }
  return Element(g.data());
}

std::optional<Element> FreeAbelian::lub_impl(const Label& g) const {
  Payload v(g.data());
  for (auto& x : v) x = std::max<std::int64_t>(x, 0);
  return Element(std::move(v));
}

std::vector<Element> FreeAbelian::enumerate_ball(int n) const {
  if (n < 0) throw InvalidArgument("ball radius must be non-negative");
  std::vector<Element> out;
  Payload prefix;
  for (int total = 0; total <= n; ++total) compositions(total, config_.rank, prefix, out);
  return out;
}

std::vector<Element> FreeAbelian::lower_set(const Element& t) const {
  std::vector<Element> out{identity()};
  for (std::size_t axis = 0; axis < t.length(); ++axis) {
    std::vector<Element> next;
    for (const auto& base : out) {
      for (std::int64_t k = 0; k <= t.data()[axis]; ++k) {
        Payload v(base.data());
        v[axis] = k;
        next.emplace_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

Rational FreeAbelian::size(const Element& p) const {
  return Rational(static_cast<long>(std::accumulate(p.data().begin(), p.data().end(), std::int64_t{0})));
}

std::string FreeAbelian::format(const Element& p) const { return format_vector(p.data()); }
std::string FreeAbelian::format(const Label& g) const { return format_vector(g.data()); }

Element FreeAbelian::parse(std::string_view text) const {
  Payload v;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto number = [&] {
    skip();
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (start == i) throw ParseError("expected a non-negative integer", start);
    v.push_back(std::stoll(std::string(text.substr(start, i - start))));
    skip();
  };
  skip();
  if (i < text.size() && text[i] == '(') {
    ++i;
    number();
    while (i < text.size() && text[i] == ',') {
      ++i;
      number();
    }
    if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
    ++i;
    skip();
  } else {
    number();
  }
  if (i != text.size()) throw ParseError("trailing characters after element", i);
  if (v.size() != static_cast<std::size_t>(config_.rank)) {
    throw ParseError("expected " + std::to_string(config_.rank) + " coordinates", 0);
  }
  return Element(std::move(v));
}

}  // namespace qlat::detail
