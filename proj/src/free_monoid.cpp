#include <algorithm>

#include "instances.hpp"
#include "qlat/errors.hpp"

namespace qlat::detail {

namespace {

constexpr std::string_view kLetters = "abcdfghijklmnopqrstuvwxyz";
constexpr std::size_t kMaxBall = 4'000'000;

}  // namespace

FreeMonoid::FreeMonoid(int rank) : config_{MonoidKind::FreeMonoid, rank, 1} {
  if (rank < 1 || rank > static_cast<int>(kLetters.size())) {
    throw InvalidArgument("free monoid rank must lie in 1..25");
  }
}

std::string FreeMonoid::name() const { return "F" + std::to_string(config_.rank) + "+"; }

char FreeMonoid::letter(std::int64_t generator) const {
  return kLetters[static_cast<std::size_t>(generator)];
}

void FreeMonoid::validate(const Element& p) const {
  for (auto x : p.data()) {
    if (x < 0 || x >= config_.rank) throw InstanceMismatch("not a word of " + name());
  }
}

void FreeMonoid::validate(const Label& g) const {
  const auto& w = g.data();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0 || w[i] > config_.rank || w[i] < -config_.rank) {
      throw InstanceMismatch("not a free-group word of " + name());
    }
    if (i > 0 && w[i] == -w[i - 1]) throw InstanceMismatch("free-group word is not reduced");
  }
}

Element FreeMonoid::compose(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  Payload w(p.data());
  w.insert(w.end(), q.data().begin(), q.data().end());
  return Element(std::move(w));
}

std::optional<Element> FreeMonoid::left_divide(const Element& p, const Element& q) const {
  const auto& a = p.data();
  const auto& b = q.data();
  if (a.size() > b.size() || !std::equal(a.begin(), a.end(), b.begin())) return std::nullopt;
  return Element(Payload(b.begin() + static_cast<std::ptrdiff_t>(a.size()), b.end()));
}

JoinResult FreeMonoid::join(const Element& p, const Element& q) const {
  validate(p);
  validate(q);
  if (leq(p, q)) return JoinResult::finite(q);
  if (leq(q, p)) return JoinResult::finite(p);
  return JoinResult::infinity();
}

Label FreeMonoid::quotient_label(const Element& s, const Element& t) const {
  validate(s);
  validate(t);
  const auto& a = s.data();
  const auto& b = t.data();
  std::size_t common = 0;
  while (common < a.size() && common < b.size() &&
         a[a.size() - 1 - common] == b[b.size() - 1 - common]) {
    ++common;
  }
  Payload w;
  for (std::size_t i = 0; i + common < a.size(); ++i) w.push_back(a[i] + 1);
  for (std::size_t i = b.size() - common; i-- > 0;) w.push_back(-(b[i] + 1));
  return Label(std::move(w));
}

Label FreeMonoid::label_mul(const Label& g, const Label& h) const {
  validate(g);
  validate(h);
  Payload w(g.data());
  for (auto x : h.data()) {
    if (!w.empty() && w.back() == -x) {
      w.pop_back();
    } else {
      w.push_back(x);
    }
  }
  return Label(std::move(w));
}

Label FreeMonoid::label_inverse(const Label& g) const {
  Payload w;
  for (auto it = g.data().rbegin(); it != g.data().rend(); ++it) w.push_back(-*it);
  return Label(std::move(w));
}

std::optional<Element> FreeMonoid::label_in_positive(const Label& g) const {
  Payload w;
  for (auto x : g.data()) {
    if (x < 0) return std::nullopt;
    w.push_back(x - 1);
  }
  return Element(std::move(w));
}

std::optional<Element> FreeMonoid::lub_impl(const Label& g) const {
  // An upper bound in P exists iff g = p n^{-1} with p, n positive; then it is p.
  Payload p;
  const auto& w = g.data();
  std::size_t i = 0;
  for (; i < w.size() && w[i] > 0; ++i) p.push_back(w[i] - 1);
  for (; i < w.size(); ++i) {
    if (w[i] > 0) return std::nullopt;
  }
  return Element(std::move(p));
}

std::vector<Element> FreeMonoid::enumerate_ball(int n) const {
  if (n < 0) throw InvalidArgument("ball radius must be non-negative");
  std::vector<Element> out{Element()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= n; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::int64_t g = 0; g < config_.rank; ++g) {
        Payload w(out[i].data());
        w.push_back(g);
        out.emplace_back(std::move(w));
        if (out.size() > kMaxBall) throw InvalidArgument("ball too large to enumerate");
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Element> FreeMonoid::lower_set(const Element& t) const {
  std::vector<Element> out;
  const auto& w = t.data();
  for (std::size_t k = 0; k <= w.size(); ++k) {
    out.emplace_back(Payload(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
  }
  return out;
}

Rational FreeMonoid::size(const Element& p) const {
  return Rational(static_cast<long>(p.length()));
}

std::string FreeMonoid::format(const Element& p) const {
  if (p.length() == 0) return "e";
  std::string s;
  for (auto x : p.data()) s += letter(x);
  return s;
}

std::string FreeMonoid::format(const Label& g) const {
  if (g.length() == 0) return "e";
  std::string s;
  for (auto x : g.data()) {
    s += letter(std::abs(x) - 1);
    if (x < 0) s += "^-1";
  }
  return s;
}

Element FreeMonoid::parse(std::string_view text) const {
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos) throw ParseError("empty element", 0);
  std::size_t e = text.find_last_not_of(" \t");
  std::string_view body = text.substr(b, e - b + 1);
  if (body == "e") return identity();
  Payload w;
  for (std::size_t i = 0; i < body.size(); ++i) {
    auto pos = kLetters.find(body[i]);
    if (pos == std::string_view::npos || static_cast<int>(pos) >= config_.rank) {
      throw ParseError(std::string("'") + body[i] + "' is not a generator of " + name(), b + i);
    }
    w.push_back(static_cast<std::int64_t>(pos));
  }
  return Element(std::move(w));
}

}  // namespace qlat::detail
