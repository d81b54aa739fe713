#include "doctest.h"

#include "oracle.hpp"
#include "qlat/errors.hpp"
#include "qlat/monomial.hpp"
#include "support.hpp"

using namespace qlat;
using test::A;
using test::E;

namespace {

// Compose the explicit partial maps of two monomials on a universe and
// compare with the map of the library product on `domain`. The universe must
// be large enough to hold every image of the domain.
template <class O>
void products_match_maps(const MonoidPtr& m, const O& o, int radius, int domain_radius, int universe_radius) {
  const auto comps = o.ball(radius);
  const auto universe = o.ball(universe_radius);
  const auto domain = o.ball(domain_radius);
  for (const auto& s : comps) {
    for (const auto& t : comps) {
      auto first = oracle::monomial_map(o, s, t, universe);
      for (const auto& u : comps) {
        for (const auto& v : comps) {
          auto second = oracle::monomial_map(o, u, v, universe);
          auto prod = multiply(*m, Monomial(m->parse(o.format(s)), m->parse(o.format(t))),
                               Monomial(m->parse(o.format(u)), m->parse(o.format(v))));
          for (const auto& x : domain) {
            std::optional<std::string> expected;
            if (auto it = second.find(x); it != second.end()) {
              if (auto jt = first.find(it->second); jt != first.end()) expected = o.format(jt->second);
            }
            std::optional<std::string> got;
            if (!prod.is_zero()) {
              if (auto img = apply(*m, prod, m->parse(o.format(x)))) got = m->format(*img);
            }
            INFO("V(" << o.format(s) << "," << o.format(t) << ") V(" << o.format(u) << "," << o.format(v)
                      << ") at " << o.format(x));
            REQUIRE(got == expected);
          }
        }
      }
    }
  }
}

std::vector<AlgebraElement> samples(const MonoidPtr& m) {
  std::vector<AlgebraElement> xs;
  const auto ball = m->enumerate_ball(m->kind() == MonoidKind::Divisibility ? 4 : 1);
  long k = 0;
  for (const auto& s : ball) {
    for (const auto& t : ball) {
      AlgebraElement x(m);
      x.add_term(Monomial(s, t), Scalar(k % 3 + 1, k % 2));
      x.add_term(Monomial(t, m->compose(s, ball.back())), Scalar(-1 - k % 2));
      xs.push_back(x);
      ++k;
    }
  }
  return xs;
}

}  // namespace

TEST_SUITE("monomial") {
  TEST_CASE("products of monomials") {
    auto f2 = free_monoid(2);
    auto mono = [&](const char* text) { return parse_monomial(*f2, text); };
    CHECK(multiply(*f2, mono("V(a,b)"), mono("V(b,a)")) == mono("V(a,a)"));
    CHECK(multiply(*f2, mono("V(e,a)"), mono("V(b,e)")).is_zero());
    CHECK(multiply(*f2, mono("V(a,a)"), mono("V(ab,ab)")) == mono("V(ab,ab)"));
    CHECK(adjoint(mono("V(a,b)")) == mono("V(b,a)"));
    CHECK(adjoint(mono("V(ab,ab)")) == mono("V(ab,ab)"));
    CHECK(apply(*f2, mono("V(a,b)"), E(f2, "ba")) == E(f2, "aa"));
    CHECK_FALSE(apply(*f2, mono("V(a,b)"), E(f2, "a")));
    auto n1 = free_abelian(1);
    CHECK(apply(*n1, parse_monomial(*n1, "V(1,2)"), E(n1, "3")) == E(n1, "2"));
    CHECK(format(*f2, Monomial::zero()) == "0");
    CHECK_THROWS_AS(degree(*f2, Monomial::zero()), InvalidArgument);
  }

  TEST_CASE("products agree with composition of partial maps") {
    products_match_maps(free_monoid(2), oracle::Words{2}, 2, 2, 6);
    products_match_maps(free_abelian(2), oracle::Vectors{2}, 2, 2, 6);
    products_match_maps(divisibility(), oracle::Divisors{}, 6, 12, 12 * 36);
  }

  TEST_CASE("monomial syntax") {
    auto f2 = free_monoid(2);
    CHECK(parse_monomial(*f2, " V( ab , b ) ") == Monomial(E(f2, "ab"), E(f2, "b")));
    CHECK(parse_monomial(*f2, "0").is_zero());
    CHECK_THROWS_AS(parse_monomial(*f2, "V(a)"), ParseError);
    CHECK_THROWS_AS(parse_monomial(*f2, "V(a,b"), ParseError);
  }
}

TEST_SUITE("algebra") {
  TEST_CASE("small products and adjoints") {
    auto f2 = free_monoid(2);
    CHECK(A(f2, "V(e,a) + V(e,b)") * A(f2, "V(a,e) + V(b,e)") == A(f2, "2 V(e,e)"));
    CHECK(A(f2, "(2+i)*V(ab,b)").star() == A(f2, "(2-i)*V(b,ab)"));
    CHECK((A(f2, "V(a,b) - 3 V(e,a)") * AlgebraElement(f2)).is_zero());
    CHECK(format(A(f2, "V(a,a) - 2 V(a,b)")) == "V(a,a) - 2 V(a,b)");
    CHECK(A(f2, "3") == A(f2, "3 V(e,e)"));
    CHECK(A(f2, "V(a,b) - V(a,b)").is_zero());
  }

  TEST_CASE("ring axioms on sample elements") {
    for (auto m : {free_monoid(2), free_abelian(2), divisibility()}) {
      const auto xs = samples(m);
      for (const auto& x : xs) {
        CHECK(x * AlgebraElement::unit(m) == x);
        CHECK(x.star().star() == x);
        for (const auto& y : xs) {
          CHECK((x * y).star() == y.star() * x.star());
          CHECK(x + y == y + x);
          for (std::size_t k = 0; k < xs.size(); k += 3) {
            const auto& z = xs[k];
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
          }
        }
      }
    }
  }

  TEST_CASE("elements from different instances do not mix") {
    auto a = A(free_monoid(2), "V(a,e)");
    auto b = A(free_monoid(3), "V(a,e)");
    CHECK_THROWS_AS(a * b, InstanceMismatch);
    CHECK_THROWS_AS(a + b, InstanceMismatch);
    CHECK(A(free_monoid(2), "V(a,e)") == a);
  }

  TEST_CASE("grading and expectation") {
    auto f2 = free_monoid(2);
    auto x = A(f2, "V(a,a) + 2 V(a,b)");
    auto parts = grade(x);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(f2->identity_label()) == A(f2, "V(a,a)"));
    CHECK(parts.at(f2->quotient_label(E(f2, "a"), E(f2, "b"))) == A(f2, "2 V(a,b)"));
    CHECK(expectation(x) == A(f2, "V(a,a)"));
    CHECK(expectation(A(f2, "V(ab,b)")).is_zero());
    CHECK(grade(A(f2, "V(ab,b)")).begin()->first == grade(A(f2, "V(a,e)")).begin()->first);
    auto y = A(f2, "V(ab,b) + 2 V(a,a)");
    auto py = grade(y);
    CHECK(py.size() == 2);
    CHECK(f2->format(py.begin()->first) == "e");
    CHECK(homogeneous_degree(y) == std::nullopt);
    CHECK(homogeneous_degree(A(f2, "V(ab,b) - V(a,e)")) == f2->embed(E(f2, "a")));
  }

  TEST_CASE("action on basis vectors") {
    auto f2 = free_monoid(2);
    auto x = A(f2, "V(a,b) - i V(e,b)");
    BasisVector expected{{E(f2, "aa"), Scalar(1)}, {E(f2, "a"), Scalar(0, -1)}};
    CHECK(act(x, E(f2, "ba")) == expected);
    CHECK(act(x, E(f2, "a")).empty());
  }

  TEST_CASE("literal syntax errors carry positions") {
    auto f2 = free_monoid(2);
    try {
      A(f2, "V(a,b) + 2 V(a,x)");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 15);
    }
    CHECK_THROWS_AS(A(f2, "V(a,b) +"), ParseError);
    CHECK_THROWS_AS(A(f2, "2 * * V(a,b)"), ParseError);
    CHECK_THROWS_AS(A(f2, ""), ParseError);
  }
}
