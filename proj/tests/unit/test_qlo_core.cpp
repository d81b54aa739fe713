#include "doctest.h"

#include <set>

#include "oracle.hpp"
#include "qlat/errors.hpp"
#include "qlat/monoid.hpp"
#include "support.hpp"

using namespace qlat;
using test::E;

namespace {

template <class O>
void ball_matches(const MonoidPtr& m, const O& o, int n) {
  auto mine = m->enumerate_ball(n);
  auto ref = test::lift(m, o, o.ball(n));
  CHECK(mine.size() == ref.size());
  CHECK(std::set<Element>(mine.begin(), mine.end()) == std::set<Element>(ref.begin(), ref.end()));
  // Every prefix of the enumeration is hereditary.
  std::set<Element> seen;
  for (const auto& t : mine) {
    for (const auto& s : mine) {
      if (m->leq(s, t)) CHECK_MESSAGE(seen.count(s) + (s == t), m->format(s) << " after " << m->format(t));
    }
    seen.insert(t);
  }
}

template <class O>
void joins_match(const MonoidPtr& m, const O& o, int n, int universe_radius) {
  const auto ball = o.ball(n);
  const auto universe = o.ball(universe_radius);
  for (const auto& p : ball) {
    for (const auto& q : ball) {
      auto ref = oracle::brute_join(o, p, q, universe);
      auto j = m->join(m->parse(o.format(p)), m->parse(o.format(q)));
      INFO(o.format(p) << " v " << o.format(q));
      REQUIRE(j.is_finite() == ref.least.has_value());
      if (j.is_finite()) CHECK(m->format(j.value()) == o.format(*ref.least));
    }
  }
}

}  // namespace

TEST_SUITE("qlo_core") {
  TEST_CASE("compose, divide and join on small examples") {
    auto f2 = free_monoid(2);
    auto n2 = free_abelian(2);
    auto dv = divisibility();
    auto hl = half_line(4);
    CHECK(f2->format(f2->compose(E(f2, "a"), E(f2, "b"))) == "ab");
    CHECK(n2->format(n2->compose(E(n2, "(1,0)"), E(n2, "(0,2)"))) == "(1,2)");
    CHECK(dv->format(dv->compose(E(dv, "4"), E(dv, "6"))) == "24");
    CHECK(f2->left_divide(E(f2, "a"), E(f2, "ab")) == E(f2, "b"));
    CHECK_FALSE(f2->left_divide(E(f2, "a"), E(f2, "ba")));
    CHECK(hl->left_divide(E(hl, "3/2"), E(hl, "3")) == E(hl, "3/2"));
    CHECK_FALSE(f2->join(E(f2, "a"), E(f2, "b")).is_finite());
    CHECK(dv->join(E(dv, "4"), E(dv, "6")) == JoinResult::finite(E(dv, "12")));
    CHECK(hl->join(E(hl, "3/2"), E(hl, "7/4")) == JoinResult::finite(E(hl, "11/4")));
  }

  TEST_CASE("join axioms") {
    auto dv = divisibility();
    for (const auto& p : dv->enumerate_ball(12)) {
      CHECK(dv->join(p, p) == JoinResult::finite(p));
      CHECK(dv->join(dv->identity(), p) == JoinResult::finite(p));
    }
  }

  TEST_CASE("balls agree with the reference enumeration") {
    ball_matches(free_monoid(2), oracle::Words{2}, 3);
    ball_matches(free_monoid(3), oracle::Words{3}, 2);
    ball_matches(free_abelian(1), oracle::Vectors{1}, 3);
    ball_matches(free_abelian(2), oracle::Vectors{2}, 4);
    ball_matches(free_abelian(3), oracle::Vectors{3}, 3);
    ball_matches(divisibility(), oracle::Divisors{}, 6);
    ball_matches(half_line(4), oracle::HalfLine{4}, 3);
    CHECK(free_monoid(2)->enumerate_ball(2).size() == 7);
    CHECK(free_abelian(1)->enumerate_ball(3).size() == 4);
  }

  TEST_CASE("joins agree with a brute-force least upper bound") {
    joins_match(free_monoid(2), oracle::Words{2}, 3, 6);
    joins_match(free_abelian(2), oracle::Vectors{2}, 3, 6);
    joins_match(free_abelian(3), oracle::Vectors{3}, 2, 4);
    joins_match(divisibility(), oracle::Divisors{}, 12, 144);
  }

  TEST_CASE("half-line joins are real-order minima without being least") {
    auto hl = half_line(4);
    oracle::HalfLine o{4};
    const auto universe = o.ball(8);
    for (const auto& p : o.ball(3)) {
      for (const auto& q : o.ball(3)) {
        auto ref = oracle::brute_join(o, p, q, universe);
        REQUIRE(ref.has_upper_bound);
        // Smallest common upper bound in the real order.
        auto lt = [](const auto& a, const auto& b) { return a.first * b.second < b.first * a.second; };
        std::optional<oracle::HalfLine::T> lowest;
        for (const auto& u : universe) {
          if (oracle::leq(o, p, u) && oracle::leq(o, q, u) && (!lowest || lt(u, *lowest))) lowest = u;
        }
        auto j = hl->join(E(hl, o.format(p)), E(hl, o.format(q)));
        REQUIRE(j.is_finite());
        CHECK(hl->format(j.value()) == o.format(*lowest));
        if (ref.least) CHECK(o.format(*ref.least) == o.format(*lowest));
      }
    }
    // 3 bounds both 3/2 and 7/4, yet 11/4 is not below it.
    CHECK(hl->leq(E(hl, "3/2"), E(hl, "3")));
    CHECK(hl->leq(E(hl, "7/4"), E(hl, "3")));
    CHECK_FALSE(hl->leq(E(hl, "11/4"), E(hl, "3")));
    CHECK_FALSE(oracle::brute_join(o, {3, 2}, {7, 4}, universe).least);
  }

  TEST_CASE("quotient labels decide equality in the group") {
    auto f2 = free_monoid(2);
    CHECK(f2->quotient_label(E(f2, "ab"), E(f2, "bb")) == f2->quotient_label(E(f2, "a"), E(f2, "b")));
    auto n2 = free_abelian(2);
    CHECK(n2->format(n2->quotient_label(E(n2, "(3,1)"), E(n2, "(1,1)"))) == "(2,0)");

    // Divisibility: s/t = u/v iff s v = u t.
    auto dv = divisibility();
    const auto ball = dv->enumerate_ball(8);
    for (const auto& s : ball) {
      for (const auto& t : ball) {
        for (const auto& u : ball) {
          for (const auto& v : ball) {
            bool same = s.data()[0] * v.data()[0] == u.data()[0] * t.data()[0];
            CHECK((dv->quotient_label(s, t) == dv->quotient_label(u, v)) == same);
          }
        }
      }
    }
    // N^2: s - t = u - v.
    const auto nb = n2->enumerate_ball(2);
    for (const auto& s : nb) {
      for (const auto& t : nb) {
        for (const auto& u : nb) {
          for (const auto& v : nb) {
            bool same = true;
            for (int i = 0; i < 2; ++i) same = same && s.data()[i] - t.data()[i] == u.data()[i] - v.data()[i];
            CHECK((n2->quotient_label(s, t) == n2->quotient_label(u, v)) == same);
          }
        }
      }
    }
  }

  TEST_CASE("free group labels match reduced words") {
    // Reference: reduce s t^{-1} as a string with upper case for inverses.
    auto reduce = [](const std::string& s, const std::string& t) {
      std::string w = s;
      for (auto it = t.rbegin(); it != t.rend(); ++it) {
        char inv = static_cast<char>(std::toupper(*it));
        if (!w.empty() && w.back() == *it) {
          w.pop_back();
        } else {
          w.push_back(inv);
        }
      }
      return w;
    };
    auto f2 = free_monoid(2);
    oracle::Words o{2};
    const auto ball = o.ball(3);
    for (const auto& s : ball) {
      for (const auto& t : ball) {
        for (const auto& u : ball) {
          for (const auto& v : ball) {
            bool same = reduce(s, t) == reduce(u, v);
            auto ls = f2->quotient_label(E(f2, o.format(s)), E(f2, o.format(t)));
            auto lu = f2->quotient_label(E(f2, o.format(u)), E(f2, o.format(v)));
            CHECK((ls == lu) == same);
          }
        }
      }
    }
  }

  TEST_CASE("labels are right invariant and trivial on the diagonal") {
    for (auto m : {free_monoid(2), free_abelian(2), divisibility(), half_line(3)}) {
      const auto ball = m->enumerate_ball(2);
      for (const auto& s : ball) {
        CHECK(m->quotient_label(s, s) == m->identity_label());
        for (const auto& t : ball) {
          for (const auto& u : ball) {
            CHECK(m->quotient_label(m->compose(s, u), m->compose(t, u)) == m->quotient_label(s, t));
          }
        }
      }
    }
  }

  TEST_CASE("least element of P above a label") {
    auto n2 = free_abelian(2);
    auto g = n2->quotient_label(E(n2, "(1,0)"), E(n2, "(0,2)"));
    CHECK(n2->format(g) == "(1,-2)");
    CHECK(n2->lub_in_positive(g) == E(n2, "(1,0)"));
    CHECK(n2->lub_in_positive(n2->identity_label()) == E(n2, "(0,0)"));
    auto f2 = free_monoid(2);
    CHECK(f2->lub_in_positive(f2->quotient_label(E(f2, "a"), E(f2, "b"))) == E(f2, "a"));

    // Brute force: the least p in a ball with g <= p, i.e. g^{-1} p in P.
    for (auto m : {f2, n2, divisibility()}) {
      const auto ball = m->enumerate_ball(m->kind() == MonoidKind::Divisibility ? 36 : 3);
      const auto small = m->enumerate_ball(m->kind() == MonoidKind::Divisibility ? 6 : 1);
      for (const auto& s : small) {
        for (const auto& t : small) {
          auto g = m->quotient_label(s, t);
          std::vector<Element> above;
          for (const auto& p : ball) {
            if (m->label_in_positive(m->label_mul(m->label_inverse(g), m->embed(p)))) above.push_back(p);
          }
          std::optional<Element> least;
          for (const auto& p : above) {
            if (std::all_of(above.begin(), above.end(), [&](const Element& u) { return m->leq(p, u); })) least = p;
          }
          INFO(m->name() << " " << m->format(g));
          CHECK(m->lub_in_positive(g) == least);
        }
      }
    }
    auto hl = half_line(2);
    CHECK_THROWS_AS(hl->lub_in_positive(hl->identity_label()), Unsupported);
  }

  TEST_CASE("configuration records") {
    auto m = make_monoid(nlohmann::json{{"kind", "half_line"}, {"denominator_bound", 3}});
    CHECK(m->config().denominator_bound == 3);
    CHECK(make_monoid(nlohmann::json{{"kind", "free_abelian"}, {"rank", 2}})->name() == "N^2");
    CHECK_THROWS_AS(make_monoid(nlohmann::json{{"kind", "braid"}}), ConfigError);
    CHECK_THROWS_AS(make_monoid(nlohmann::json{{"kind", "free_monoid"}, {"rank", 0}}), ConfigError);
    CHECK_THROWS_AS(make_monoid(nlohmann::json::array()), ConfigError);
  }

  TEST_CASE("foreign payloads and bad syntax are rejected") {
    auto f2 = free_monoid(2);
    CHECK_THROWS_AS(f2->compose(Element{5}, f2->identity()), InstanceMismatch);
    CHECK_THROWS_AS(free_abelian(2)->validate(Element{1}), InstanceMismatch);
    try {
      f2->parse("abx");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(half_line(2)->parse("1/2"), Error);
  }
}
