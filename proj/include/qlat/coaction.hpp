#pragma once

// Projection families p_y = prod_{a in F}(V(y,y) - V(ya,ya)), the
// commutation law c_x p_y = p_{xy} c_x for homogeneous c_x, the rank-one
// elements R(x,y) = V(x,e) p_e V(e,y), the ideal they span, and the
// covariance test for candidate partitions of P.

#include <map>
#include <optional>
#include <vector>

#include "qlat/algebra.hpp"
#include "qlat/report.hpp"
#include "qlat/sampling.hpp"

namespace qlat {

/// Inclusion-exclusion expansion sum_{S subset F, vS finite} (-1)^|S| V(y vS, y vS).
AlgebraElement projection(const MonoidPtr& m, const Element& y, const std::vector<Element>& F);

/// p_y for a group element y: the projection when y lies in P, zero otherwise.
AlgebraElement projection(const MonoidPtr& m, const Label& y, const std::vector<Element>& F);

/// Finite joins vS over subsets S of F, with the sign (-1)^|S|. Shared by
/// projection and rank_one.
std::vector<std::pair<Element, int>> signed_subset_joins(const Monoid& m, const std::vector<Element>& F);

enum class CommutationCase { YAndXYInP = 1, YInPOnly = 2, XYInPOnly = 3, Neither = 4 };

struct CommutationResult {
  bool pass;
  CommutationCase which;
  Label x;
  Label xy;
  AlgebraElement lhs;  // c p_y
  AlgebraElement rhs;  // p_{xy} c
};

/// Forms c = V(p,q), x = label(p,q) and compares c p_y with p_{xy} c exactly.
CommutationResult verify_commutation(const MonoidPtr& m, const Element& p, const Element& q,
                                     const Label& y, const std::vector<Element>& F);

/// Exhaustive commutation suite over p,q,y in a ball plus constructed y not in
/// P, compared symbolically and as operators on a basis ball. Also checks
/// T_x p_e = p_x T_x.
CheckReport verify_commutation_suite(const MonoidPtr& m, const std::vector<Element>& F, int radius,
                                     int apply_radius, const SamplingPolicy& policy = {});

/// V(x,e) p_e V(e,y), the matrix unit e_y |-> e_x.
AlgebraElement rank_one(const MonoidPtr& m, const Element& x, const Element& y,
                        const std::vector<Element>& F);

/// Matrix-unit relations R(x,y)R(u,v) = [y=u] R(x,v), and
/// expectation(R(x,y)^* R(x,y)) = p_y, over the ball.
CheckReport verify_rank_one_system(const MonoidPtr& m, const std::vector<Element>& F, int bound,
                                   const SamplingPolicy& policy = {});

/// Coefficients c_{x,y} with z = sum c_{x,y} R(x,y), or absent when z is
/// not in the span (searched up to the largest source size occurring in z).
std::optional<std::map<std::pair<Element, Element>, Scalar>> rank_one_decomposition(
    const AlgebraElement& z, const std::vector<Element>& F);

/// V(s,t) R(x,y) and R(x,y) V(s,t) resolve into rank-one combinations, and
/// R(x,y) is homogeneous of degree label(x,y).
CheckReport verify_ideal_J(const MonoidPtr& m, const std::vector<Element>& F, int bound,
                           const SamplingPolicy& policy = {});

/// p_y e_t = [y=t] e_t over the ball, and p_y p_z = 0 for y != z.
CheckReport verify_sum_to_identity(const MonoidPtr& m, const std::vector<Element>& F, int bound);

/// y |-> E(y), finite subsets of a ball; q_y is the diagonal indicator of E(y).
struct PartitionCandidate {
  std::map<Element, std::vector<Element>> blocks;

  static PartitionCandidate singletons(const std::vector<Element>& ball);
  const std::vector<Element>* block(const Element& y) const;
};

struct PartitionResult {
  bool covariant = false;
  bool partitions_ball = false;
  bool singleton_structure = false;
  /// First covariance failure (p, y, u): T_p q_y e_u != q_{py} T_p e_u.
  std::optional<nlohmann::ordered_json> witness;

  bool pass() const { return covariant && partitions_ball && singleton_structure; }
};

/// Tests T_p q_y = q_{py} T_p on basis vectors over the ball, then checks
/// that a covariant partition is forced to be E(y) = {y}.
PartitionResult check_partition_covariance(const Monoid& m, const PartitionCandidate& c, int bound);

}  // namespace qlat
