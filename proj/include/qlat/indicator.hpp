#pragma once

// Finite linear combinations of indicator functions 1_s on P, where
// 1_s(t) = 1 iff s <= t. Products follow 1_s 1_t = 1_{s v t}.

#include <map>
#include <variant>
#include <vector>

#include "qlat/monoid.hpp"
#include "qlat/report.hpp"

namespace qlat {

class IndicatorElement {
 public:
  IndicatorElement() = default;
  static IndicatorElement basis(const Element& s, Rational coeff = 1);

  const std::map<Element, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Element& s, const Rational& coeff);

  IndicatorElement& operator+=(const IndicatorElement& o);
  IndicatorElement& operator-=(const IndicatorElement& o);
  friend IndicatorElement operator+(IndicatorElement a, const IndicatorElement& b) { return a += b; }
  friend IndicatorElement operator-(IndicatorElement a, const IndicatorElement& b) { return a -= b; }
  friend bool operator==(const IndicatorElement&, const IndicatorElement&) = default;

 private:
  std::map<Element, Rational> terms_;
};

Rational eval(const Monoid& m, const IndicatorElement& x, const Element& t);
IndicatorElement multiply(const Monoid& m, const IndicatorElement& x, const IndicatorElement& y);

/// prod_{a in F} (1_x - 1_{xa}), expanded with the product rule.
IndicatorElement chi_product(const Monoid& m, const Element& x, const std::vector<Element>& F);

/// Throws InvalidArgument unless F is a non-empty subset of P \ {e}.
void require_strictly_positive(const Monoid& m, const std::vector<Element>& F);

struct VerifiedUpTo {
  int bound;
};
struct Counterexample {
  Element element;
};
struct StructurallyVerified {};

using FesspeVerdict = std::variant<VerifiedUpTo, Counterexample, StructurallyVerified>;

inline bool is_counterexample(const FesspeVerdict& v) {
  return std::holds_alternative<Counterexample>(v);
}

/// Whether every p != e in the ball of radius `bound` has a lower bound in F.
/// Free monoids whose F contains every generator are certified structurally.
FesspeVerdict is_fesspe(const Monoid& m, const std::vector<Element>& F, int bound);

/// Pointwise check of chi_product(x, F) = 1_{{x}} over the ball.
CheckReport verify_chi_formula(const Monoid& m, const std::vector<Element>& F, int bound);

/// Report wrapper around is_fesspe. Half-line counterexamples are flagged
/// rather than failed.
CheckReport fesspe_report(const Monoid& m, const std::vector<Element>& F, int bound);

}  // namespace qlat
