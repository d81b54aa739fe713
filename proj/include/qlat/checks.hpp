#pragma once

// Ball-level checks that are not tied to a single module operation: order
// axioms, Nica covariance, the partial-injection oracle, translated joins,
// grading, matrix truncations, partition perturbations, commutants.

#include <vector>

#include "qlat/algebra.hpp"
#include "qlat/report.hpp"
#include "qlat/sampling.hpp"

namespace qlat {

/// Associativity, identity, cancellation, join as least upper bound (with
/// infinity confirmed in a ball of twice the radius), label invariance.
CheckReport check_qlo_axioms(const Monoid& m, int radius, const SamplingPolicy& policy = {});

/// V(s,s)V(t,t) = V(s v t, s v t) or 0, symbolically and on basis vectors.
CheckReport check_nica_covariance(const MonoidPtr& m, int radius);

/// apply(m1 m2, t) = apply(m1, apply(m2, t)) for monomials with components
/// in ball(component_radius) and t in ball(apply_radius); adjoints invert.
CheckReport check_monomial_oracle(const Monoid& m, int component_radius, int apply_radius,
                                  const SamplingPolicy& policy = {});

/// z(a v b) = za v zb over triples with z, a, b in the ball, and with z a
/// quotient label when the instance supports lub of quotients.
CheckReport check_translated_joins(const Monoid& m, int radius, const SamplingPolicy& policy = {});

/// Degrees multiply, adjoints invert degrees, grade components are
/// homogeneous and sum back, expectation is an idempotent.
CheckReport check_grading(const MonoidPtr& m, int radius, const SamplingPolicy& policy = {});

/// verify_against_matrices over pairs of monomials with components in
/// ball(component_radius), truncated to ball(truncation_radius).
CheckReport check_matrix_oracle(const MonoidPtr& m, int component_radius, int truncation_radius,
                                const SamplingPolicy& policy = {});

/// Singletons pass; every move, swap and removal of a singleton partition
/// of the ball fails with a witness.
CheckReport check_partition_perturbations(const Monoid& m, int radius);

/// diagonal_commutant_dimension(S) = |S| for the hereditary prefixes S of
/// ball(radius) with sizes in [min_size, max_size] (clamped to the ball).
CheckReport check_commutant(const MonoidPtr& m, int radius, std::size_t min_size, std::size_t max_size);

/// truncate(rank_one(x,y)) is the elementary matrix at (x,y) for x, y in
/// ball(pair_radius), on the truncation ball(truncation_radius).
CheckReport check_rank_one_truncation(const MonoidPtr& m, const std::vector<Element>& F, int pair_radius,
                                      int truncation_radius);

/// Smallest radius whose ball has at least `size` elements (capped at 64).
int radius_for_size(const Monoid& m, std::size_t size);

}  // namespace qlat
