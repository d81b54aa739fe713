#include "qlat/spectrum.hpp"

#include <bit>
#include <cstdint>
#include <set>

#include "qlat/errors.hpp"

namespace qlat {

namespace {

using Mask = std::uint32_t;

struct OrderTables {
  std::vector<Mask> below;  // below[i]: all j with ball[j] <= ball[i]
  std::vector<Mask> above;  // above[i]: all j with ball[i] <= ball[j]
};

OrderTables tables(const Monoid& m, const std::vector<Element>& ball) {
  OrderTables t{std::vector<Mask>(ball.size()), std::vector<Mask>(ball.size())};
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = 0; j < ball.size(); ++j) {
      if (m.leq(ball[j], ball[i])) {
        t.below[i] |= Mask{1} << j;
        t.above[j] |= Mask{1} << i;
      }
    }
  }
  return t;
}

}  // namespace

std::vector<SpectrumPoint> enumerate_spectrum(const Monoid& m, const std::vector<Element>& ball) {
  if (ball.size() > kMaxSpectrumBall) {
    throw InvalidArgument("ball of " + std::to_string(ball.size()) + " elements is too large for the spectrum census (limit " +
                          std::to_string(kMaxSpectrumBall) + ")");
  }
  const auto t = tables(m, ball);
  const std::size_t n = ball.size();

  std::vector<SpectrumPoint> out;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask set = 1; set <= full && set != 0; ++set) {
    bool hereditary = true;
    for (std::size_t i = 0; i < n && hereditary; ++i) {
      if ((set >> i) & 1) hereditary = (t.below[i] & ~set) == 0;
    }
    if (!hereditary) continue;
    bool directed = true;
    for (std::size_t i = 0; i < n && directed; ++i) {
      if (!((set >> i) & 1)) continue;
      for (std::size_t j = i + 1; j < n && directed; ++j) {
        if ((set >> j) & 1) directed = (t.above[i] & t.above[j] & set) != 0;
      }
    }
    if (!directed) continue;

    SpectrumPoint p;
    p.hereditary = true;
    p.directed = true;
    for (std::size_t i = 0; i < n; ++i) {
      if ((set >> i) & 1) p.members.push_back(ball[i]);
      if (t.below[i] == set) {
        p.principal = true;
        p.generator = ball[i];
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SpectrumPoint> enumerate_spectrum(const Monoid& m, int bound) {
  return enumerate_spectrum(m, m.enumerate_ball(bound));
}

Rational principal_fraction(const Monoid& m, int bound) {
  auto points = enumerate_spectrum(m, bound);
  if (points.empty()) return 0;
  long principal = 0;
  for (const auto& p : points) principal += p.principal ? 1 : 0;
  Rational q(principal, static_cast<long>(points.size()));
  q.canonicalize();
  return q;
}

CheckReport spectrum_report(const Monoid& m, int bound) {
  CheckReport r;
  r.check = "spectrum";
  r.instance = m.name();
  r.parameters["bound"] = bound;
  const auto ball = m.enumerate_ball(bound);
  const auto points = enumerate_spectrum(m, ball);

  long principal = 0;
  nlohmann::ordered_json census = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (const auto& e : p.members) members.push_back(m.format(e));
    nlohmann::ordered_json entry{{"members", members}, {"hereditary", p.hereditary},
                                 {"directed", p.directed}, {"principal", p.principal}};
    if (p.generator) entry["generator"] = m.format(*p.generator);
    census.push_back(entry);
    principal += p.principal ? 1 : 0;
  }
  r.cases = points.size();
  r.parameters["ball_size"] = ball.size();
  r.parameters["points"] = points.size();
  r.parameters["principal"] = principal;
  r.parameters["principal_fraction"] = std::to_string(principal) + "/" + std::to_string(points.size());
  r.parameters["census"] = census;

  // Sanity of t |-> [e,t]: principal sets are hereditary and directed, and
  // distinct elements give distinct intervals.
  const auto t = tables(m, ball);
  std::set<Mask> intervals;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (!intervals.insert(t.below[i]).second) {
      r.fail({{"identity", "[e,s] = [e,t] implies s = t"}, {"t", m.format(ball[i])}});
    }
  }
  if (static_cast<std::size_t>(principal) != ball.size()) {
    r.fail({{"identity", "every interval [e,t] is a spectrum point"}, {"principal", principal},
            {"ball", ball.size()}});
  }
  r.note = "finite census; principal fraction reported as data";
  return r;
}

}  // namespace qlat
