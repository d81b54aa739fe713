#pragma once

// The dense *-subalgebra of the Toeplitz algebra spanned by the monomials
// V(s,t), with exact Gaussian-rational coefficients and its group grading.

#include <map>
#include <utility>

#include "qlat/monomial.hpp"
#include "qlat/rational.hpp"

namespace qlat {

class AlgebraElement {
 public:
  using Key = std::pair<Element, Element>;
  using Terms = std::map<Key, Scalar>;

  explicit AlgebraElement(MonoidPtr monoid);

  static AlgebraElement monomial(MonoidPtr monoid, const Monomial& m, const Scalar& coeff = 1);
  /// V(p,p), the range projection T_p T_p^*.
  static AlgebraElement range_projection(MonoidPtr monoid, const Element& p);
  static AlgebraElement unit(MonoidPtr monoid);

  const Monoid& monoid() const { return *monoid_; }
  const MonoidPtr& monoid_ptr() const { return monoid_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds coeff * m; zero monomials and zero coefficients are dropped.
  void add_term(const Monomial& m, const Scalar& coeff);
  Scalar coefficient(const Element& s, const Element& t) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

  /// Conjugates coefficients and adjoints monomials.
  AlgebraElement star() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void require_same(const AlgebraElement& o) const;

  MonoidPtr monoid_;
  Terms terms_;
};

/// Degree decomposition keyed by quotient label; components sum to x.
std::map<Label, AlgebraElement> grade(const AlgebraElement& x);

/// The identity-degree component (conditional expectation onto the diagonal).
AlgebraElement expectation(const AlgebraElement& x);

/// Degree of a homogeneous nonzero element; absent when x is zero or mixed.
std::optional<Label> homogeneous_degree(const AlgebraElement& x);

/// Sparse vector over the basis {e_t : t in P}.
using BasisVector = std::map<Element, Scalar>;

/// x applied to the basis vector e_t.
BasisVector act(const AlgebraElement& x, const Element& t);

std::string format(const AlgebraElement& x);

}  // namespace qlat
