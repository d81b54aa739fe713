#include "doctest.h"

#include "oracle.hpp"
#include "qlat/errors.hpp"
#include "qlat/indicator.hpp"
#include "support.hpp"

using namespace qlat;
using test::E;
using test::Es;

namespace {

// prod_{a in F} ([x <= y] - [xa <= y]) evaluated directly.
template <class O>
int pointwise_chi(const O& o, const typename O::T& x, const std::vector<typename O::T>& F, const typename O::T& y) {
  int v = 1;
  for (const auto& a : F) v *= int(oracle::leq(o, x, y)) - int(oracle::leq(o, o.compose(x, a), y));
  return v;
}

template <class O>
void chi_matches(const MonoidPtr& m, const O& o, const std::vector<typename O::T>& F, int n) {
  std::vector<Element> mf;
  for (const auto& f : F) mf.push_back(m->parse(o.format(f)));
  const auto ball = o.ball(n);
  for (const auto& x : ball) {
    auto chi = chi_product(*m, m->parse(o.format(x)), mf);
    for (const auto& y : ball) {
      CHECK(eval(*m, chi, m->parse(o.format(y))) == pointwise_chi(o, x, F, y));
    }
  }
}

}  // namespace

TEST_SUITE("indicator") {
  TEST_CASE("evaluation of basis indicators") {
    auto f2 = free_monoid(2);
    CHECK(eval(*f2, IndicatorElement::basis(E(f2, "a")), E(f2, "ab")) == 1);
    CHECK(eval(*f2, IndicatorElement::basis(E(f2, "a")), E(f2, "b")) == 0);
    for (const auto& t : f2->enumerate_ball(3)) CHECK(eval(*f2, IndicatorElement::basis(f2->identity()), t) == 1);
  }

  TEST_CASE("products follow joins pointwise") {
    for (auto m : {free_monoid(2), free_abelian(2), divisibility()}) {
      const auto ball = m->enumerate_ball(m->kind() == MonoidKind::Divisibility ? 12 : 2);
      for (const auto& s : ball) {
        for (const auto& t : ball) {
          auto prod = multiply(*m, IndicatorElement::basis(s, 2), IndicatorElement::basis(t, Rational(1, 3)));
          for (const auto& u : ball) {
            Rational expected = Rational(2, 3) * int(m->leq(s, u) && m->leq(t, u));
            CHECK(eval(*m, prod, u) == expected);
          }
        }
      }
    }
  }

  TEST_CASE("expansion of the product formula") {
    auto f2 = free_monoid(2);
    auto chi = chi_product(*f2, f2->identity(), Es(f2, "{a,b}"));
    IndicatorElement expected = IndicatorElement::basis(E(f2, "e")) - IndicatorElement::basis(E(f2, "a")) -
                                IndicatorElement::basis(E(f2, "b"));
    CHECK(chi == expected);
    CHECK(eval(*f2, chi, E(f2, "e")) == 1);
    CHECK(eval(*f2, chi, E(f2, "a")) == 0);
    CHECK(eval(*f2, chi, E(f2, "ab")) == 0);

    auto n1 = free_abelian(1);
    CHECK(chi_product(*n1, E(n1, "0"), Es(n1, "{1}")) ==
          IndicatorElement::basis(E(n1, "0")) - IndicatorElement::basis(E(n1, "1")));
  }

  TEST_CASE("product formula agrees with direct evaluation") {
    chi_matches(free_monoid(2), oracle::Words{2}, {"a", "b"}, 3);
    chi_matches(free_monoid(2), oracle::Words{2}, {"a", "bb"}, 3);
    chi_matches(free_abelian(2), oracle::Vectors{2}, {{1, 0}, {0, 1}}, 3);
    chi_matches(divisibility(), oracle::Divisors{}, {2, 3}, 12);
  }

  TEST_CASE("chi formula reports") {
    CHECK(verify_chi_formula(*free_monoid(2), Es(free_monoid(2), "{a,b}"), 4).passed());
    CHECK(verify_chi_formula(*free_abelian(1), Es(free_abelian(1), "{1}"), 20).passed());

    auto hl = half_line(4);
    auto r = verify_chi_formula(*hl, Es(hl, "{1,3/2}"), 4);
    CHECK(r.verdict == Verdict::Fail);
    auto chi = chi_product(*hl, hl->identity(), Es(hl, "{1,3/2}"));
    CHECK(eval(*hl, chi, E(hl, "5/4")) == 1);  // only 0 is below 5/4
    bool seen = false;
    for (const auto& w : r.witnesses) seen = seen || (w["x"] == "0" && w["y"] == "5/4" && w["value"] == "1");
    CHECK(seen);
  }

  TEST_CASE("finite exhaustive sets") {
    auto f2 = free_monoid(2);
    CHECK(std::holds_alternative<StructurallyVerified>(is_fesspe(*f2, Es(f2, "{a,b}"), 6)));
    auto dv = divisibility();
    auto v = is_fesspe(*dv, Es(dv, "{2,3,5}"), 10);
    REQUIRE(is_counterexample(v));
    CHECK(dv->format(std::get<Counterexample>(v).element) == "7");
    auto n1 = free_abelian(1);
    auto w = is_fesspe(*n1, Es(n1, "{1}"), 100);
    REQUIRE(std::holds_alternative<VerifiedUpTo>(w));
    CHECK(std::get<VerifiedUpTo>(w).bound == 100);
    auto u = is_fesspe(*f2, Es(f2, "{a,ba,bb}"), 3);
    REQUIRE(is_counterexample(u));
    CHECK(f2->format(std::get<Counterexample>(u).element) == "b");
    CHECK_THROWS_AS(is_fesspe(*f2, Es(f2, "{e,a}"), 3), InvalidArgument);
    CHECK_THROWS_AS(is_fesspe(*f2, {}, 3), InvalidArgument);
  }

  TEST_CASE("finite exhaustive sets agree with brute force") {
    // Words over {a,b} of length <= 2 as candidate F, checked on ball(4).
    oracle::Words o{2};
    auto f2 = free_monoid(2);
    auto pool = o.ball(2);
    pool.erase(pool.begin());
    for (std::size_t mask = 1; mask < (1u << pool.size()); ++mask) {
      std::vector<std::string> F;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (mask >> i & 1) F.push_back(pool[i]);
      }
      bool covered = true;
      for (const auto& p : o.ball(4)) {
        if (p.empty()) continue;
        covered = covered && std::any_of(F.begin(), F.end(), [&](const auto& f) { return oracle::leq(o, f, p); });
      }
      CHECK(is_counterexample(is_fesspe(*f2, test::lift(f2, o, F), 4)) == !covered);
    }
  }

  TEST_CASE("half-line probe is flagged, not failed") {
    auto hl = half_line(4);
    auto r = fesspe_report(*hl, Es(hl, "{1,3/2}"), 4);
    CHECK(r.verdict == Verdict::Flagged);
    REQUIRE_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses) {
      auto x = parse_rational(w["uncovered"].get<std::string>());
      CHECK(x > 1);
      CHECK(x < 2);
    }
    auto dv = divisibility();
    CHECK(fesspe_report(*dv, Es(dv, "{2,3,5}"), 10).verdict == Verdict::Fail);
  }
}
