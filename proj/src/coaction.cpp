#include "qlat/coaction.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "qlat/errors.hpp"
#include "qlat/indicator.hpp"

namespace qlat {

namespace {

using Json = nlohmann::ordered_json;

Json element_list(const Monoid& m, const std::vector<Element>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(m.format(x));
  return j;
}

AlgebraElement isometry(const MonoidPtr& m, const Element& x) {
  return AlgebraElement::monomial(m, Monomial(x, m->identity()));
}

bool same_action(const AlgebraElement& a, const AlgebraElement& b, const std::vector<Element>& basis,
                 const Element** where) {
  for (const auto& t : basis) {
    if (act(a, t) != act(b, t)) {
      *where = &t;
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::pair<Element, int>> signed_subset_joins(const Monoid& m, const std::vector<Element>& F) {
  require_strictly_positive(m, F);
  if (F.size() > 20) throw InvalidArgument("F is too large for subset expansion");
  std::vector<std::pair<Element, int>> out;
  const std::size_t subsets = std::size_t{1} << F.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    JoinResult j = JoinResult::finite(m.identity());
    int sign = 1;
    for (std::size_t i = 0; i < F.size() && j.is_finite(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        j = m.join(j.value(), F[i]);
        sign = -sign;
      }
    }
    if (j.is_finite()) out.emplace_back(j.value(), sign);
  }
  return out;
}

AlgebraElement projection(const MonoidPtr& m, const Element& y, const std::vector<Element>& F) {
  AlgebraElement out(m);
  for (const auto& [j, sign] : signed_subset_joins(*m, F)) {
    auto yj = m->compose(y, j);
    out.add_term(Monomial(yj, yj), Scalar(sign));
  }
  return out;
}

AlgebraElement projection(const MonoidPtr& m, const Label& y, const std::vector<Element>& F) {
  auto in_p = m->label_in_positive(y);
  if (!in_p) return AlgebraElement(m);
  return projection(m, *in_p, F);
}

CommutationResult verify_commutation(const MonoidPtr& m, const Element& p, const Element& q,
                                     const Label& y, const std::vector<Element>& F) {
  auto c = AlgebraElement::monomial(m, Monomial(p, q));
  Label x = m->quotient_label(p, q);
  Label xy = m->label_mul(x, y);
  bool y_in = m->label_in_positive(y).has_value();
  bool xy_in = m->label_in_positive(xy).has_value();
  CommutationCase which = y_in ? (xy_in ? CommutationCase::YAndXYInP : CommutationCase::YInPOnly)
                               : (xy_in ? CommutationCase::XYInPOnly : CommutationCase::Neither);
  auto lhs = c * projection(m, y, F);
  auto rhs = projection(m, xy, F) * c;
  bool pass = lhs == rhs;
  return CommutationResult{pass, which, std::move(x), std::move(xy), std::move(lhs), std::move(rhs)};
}

CheckReport verify_commutation_suite(const MonoidPtr& m, const std::vector<Element>& F, int radius,
                                     int apply_radius, const SamplingPolicy& policy) {
  CheckReport r;
  r.check = "commutation";
  r.instance = m->name();
  r.parameters["radius"] = radius;
  r.parameters["apply_radius"] = apply_radius;
  r.parameters["F"] = element_list(*m, F);

  const auto ball = m->enumerate_ball(radius);
  const auto basis = m->enumerate_ball(apply_radius);

  // y ranges over the ball, quotients u v^{-1}, and inverse-first products
  // u^{-1} v, which reach group elements outside P (and outside PP^{-1}).
  std::set<Label> ys;
  for (const auto& y : ball) ys.insert(m->embed(y));
  const auto small = m->enumerate_ball(std::max(radius - 1, 1));
  for (const auto& u : small) {
    for (const auto& v : small) {
      ys.insert(m->quotient_label(u, v));
      ys.insert(m->label_mul(m->label_inverse(m->embed(u)), m->embed(v)));
    }
  }
  r.parameters["y_labels"] = ys.size();

  std::map<Label, AlgebraElement> proj;
  auto projection_of = [&](const Label& g) -> const AlgebraElement& {
    auto it = proj.find(g);
    if (it == proj.end()) it = proj.emplace(g, projection(m, g, F)).first;
    return it->second;
  };

  const std::vector<Label> y_list(ys.begin(), ys.end());
  std::array<std::size_t, 4> per_case{};
  const std::array<std::size_t, 3> dims{ball.size(), ball.size(), y_list.size()};
  r.sampled = for_each_tuple(dims, policy, [&](std::span<const std::size_t> i) {
    const auto& p = ball[i[0]];
    const auto& q = ball[i[1]];
    const auto& y = y_list[i[2]];
    auto c = AlgebraElement::monomial(m, Monomial(p, q));
    Label xy = m->label_mul(m->quotient_label(p, q), y);
    bool y_in = m->label_in_positive(y).has_value();
    bool xy_in = m->label_in_positive(xy).has_value();
    int which = y_in ? (xy_in ? 1 : 2) : (xy_in ? 3 : 4);
    ++per_case[static_cast<std::size_t>(which - 1)];
    ++r.cases;
    auto lhs = c * projection_of(y);
    auto rhs = projection_of(xy) * c;
    if (lhs != rhs) {
      r.fail({{"p", m->format(p)}, {"q", m->format(q)}, {"y", m->format(y)}, {"case", which},
              {"lhs", format(lhs)}, {"rhs", format(rhs)}});
      return;
    }
    const Element* where = nullptr;
    if (!same_action(lhs, rhs, basis, &where)) {
      r.fail({{"p", m->format(p)}, {"q", m->format(q)}, {"y", m->format(y)}, {"case", which},
              {"basis", m->format(*where)}, {"level", "operator"}});
    }
  });
  r.parameters["case_counts"] = per_case;

  // T_x p_e = p_x T_x.
  const auto pe = projection(m, m->identity(), F);
  for (const auto& x : ball) {
    ++r.cases;
    auto tx = isometry(m, x);
    auto lhs = tx * pe;
    auto rhs = projection(m, x, F) * tx;
    if (lhs != rhs) {
      r.fail({{"identity", "T_x p_e = p_x T_x"}, {"x", m->format(x)}, {"lhs", format(lhs)},
              {"rhs", format(rhs)}});
    }
  }
  return r;
}

AlgebraElement rank_one(const MonoidPtr& m, const Element& x, const Element& y,
                        const std::vector<Element>& F) {
  AlgebraElement out(m);
  for (const auto& [j, sign] : signed_subset_joins(*m, F)) {
    out.add_term(Monomial(m->compose(x, j), m->compose(y, j)), Scalar(sign));
  }
  return out;
}

CheckReport verify_rank_one_system(const MonoidPtr& m, const std::vector<Element>& F, int bound,
                                   const SamplingPolicy& policy) {
  CheckReport r;
  r.check = "rank-one";
  r.instance = m->name();
  r.parameters["bound"] = bound;
  r.parameters["F"] = element_list(*m, F);
  const auto ball = m->enumerate_ball(bound);

  std::map<std::pair<Element, Element>, AlgebraElement> R;
  auto R_at = [&](const Element& x, const Element& y) -> const AlgebraElement& {
    auto key = std::pair(x, y);
    auto it = R.find(key);
    if (it == R.end()) it = R.emplace(key, rank_one(m, x, y, F)).first;
    return it->second;
  };
  const AlgebraElement zero(m);
  const std::array<std::size_t, 4> dims{ball.size(), ball.size(), ball.size(), ball.size()};
  r.sampled = for_each_tuple(dims, policy, [&](std::span<const std::size_t> i) {
    const auto& x = ball[i[0]];
    const auto& y = ball[i[1]];
    const auto& u = ball[i[2]];
    const auto& v = ball[i[3]];
    ++r.cases;
    auto product = R_at(x, y) * R_at(u, v);
    const auto& expected = (y == u) ? R_at(x, v) : zero;
    if (product != expected) {
      r.fail({{"x", m->format(x)}, {"y", m->format(y)}, {"u", m->format(u)}, {"v", m->format(v)},
              {"product", format(product)}, {"expected", format(expected)}});
    }
  });
  for (const auto& x : ball) {
    for (const auto& y : ball) {
      ++r.cases;
      const auto& rxy = R_at(x, y);
      auto phi = expectation(rxy.star() * rxy);
      auto py = projection(m, y, F);
      if (phi != py) {
        r.fail({{"identity", "expectation(R*R) = p_y"}, {"x", m->format(x)}, {"y", m->format(y)},
                {"value", format(phi)}, {"expected", format(py)}});
      }
    }
  }
  return r;
}

std::optional<std::map<std::pair<Element, Element>, Scalar>> rank_one_decomposition(
    const AlgebraElement& z, const std::vector<Element>& F) {
  const auto& m = z.monoid();
  std::map<std::pair<Element, Element>, Scalar> coeffs;
  if (z.is_zero()) return coeffs;
  Rational limit = 0;
  for (const auto& [k, c] : z.terms()) limit = std::max(limit, m.size(k.second));

  // The R(x,y) with the smallest sources keep their leading term V(x,y)
  // uncancelled, so peeling off the term of smallest source size always
  // removes one summand of a genuine decomposition.
  AlgebraElement rest = z;
  while (!rest.is_zero()) {
    auto best = rest.terms().begin();
    Rational best_size = m.size(best->first.second);
    for (auto it = std::next(best); it != rest.terms().end(); ++it) {
      Rational s = m.size(it->first.second);
      if (s < best_size) {
        best = it;
        best_size = s;
      }
    }
    if (best_size > limit) return std::nullopt;
    auto [x, y] = best->first;
    Scalar c = best->second;
    coeffs[{x, y}] += c;
    rest -= c * rank_one(z.monoid_ptr(), x, y, F);
  }
  return coeffs;
}

CheckReport verify_ideal_J(const MonoidPtr& m, const std::vector<Element>& F, int bound,
                           const SamplingPolicy& policy) {
  CheckReport r;
  r.check = "ideal-j";
  r.instance = m->name();
  r.parameters["bound"] = bound;
  r.parameters["F"] = element_list(*m, F);
  const auto ball = m->enumerate_ball(bound);

  auto matches = [&](const AlgebraElement& product, const std::optional<std::pair<Element, Element>>& expected,
                     Json witness) {
    ++r.cases;
    auto dec = rank_one_decomposition(product, F);
    bool ok = dec.has_value();
    if (ok) {
      if (expected) {
        ok = dec->size() == 1 && dec->begin()->first == *expected && dec->begin()->second == Scalar(1);
      } else {
        ok = dec->empty();
      }
    }
    if (!ok) {
      witness["product"] = format(product);
      witness["in_span"] = dec.has_value();
      if (expected) witness["expected"] = "R(" + m->format(expected->first) + "," + m->format(expected->second) + ")";
      r.fail(std::move(witness));
    }
  };

  std::map<std::pair<Element, Element>, AlgebraElement> R;
  for (const auto& x : ball) {
    for (const auto& y : ball) {
      auto rxy = rank_one(m, x, y, F);
      ++r.cases;
      auto deg = homogeneous_degree(rxy);
      if (!deg || *deg != m->quotient_label(x, y)) {
        r.fail({{"identity", "degree R(x,y) = label(x,y)"}, {"x", m->format(x)}, {"y", m->format(y)}});
      }
      R.emplace(std::pair(x, y), std::move(rxy));
    }
  }
  const std::array<std::size_t, 4> dims{ball.size(), ball.size(), ball.size(), ball.size()};
  r.sampled = for_each_tuple(dims, policy, [&](std::span<const std::size_t> i) {
    const auto& x = ball[i[0]];
    const auto& y = ball[i[1]];
    const auto& s = ball[i[2]];
    const auto& t = ball[i[3]];
    const auto& rxy = R.at({x, y});
    auto v = AlgebraElement::monomial(m, Monomial(s, t));
    Json w = {{"s", m->format(s)}, {"t", m->format(t)}, {"x", m->format(x)}, {"y", m->format(y)}};
    // V(s,t) R(x,y) = R(s t^{-1} x, y) when t <= x, else 0.
    std::optional<std::pair<Element, Element>> left;
    if (auto d = m->left_divide(t, x)) left.emplace(m->compose(s, *d), y);
    w["side"] = "V*R";
    matches(v * rxy, left, w);
    // R(x,y) V(s,t) = R(x, t s^{-1} y) when s <= y, else 0.
    std::optional<std::pair<Element, Element>> right;
    if (auto d = m->left_divide(s, y)) right.emplace(x, m->compose(t, *d));
    w["side"] = "R*V";
    matches(rxy * v, right, w);
  });
  return r;
}

CheckReport verify_sum_to_identity(const MonoidPtr& m, const std::vector<Element>& F, int bound) {
  CheckReport r;
  r.check = "sum-to-identity";
  r.instance = m->name();
  r.parameters["bound"] = bound;
  r.parameters["F"] = element_list(*m, F);
  const auto ball = m->enumerate_ball(bound);

  std::vector<AlgebraElement> ps;
  for (const auto& y : ball) ps.push_back(projection(m, y, F));
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto& p = ps[i];
    ++r.cases;
    if (p * p != p || p.star() != p) {
      r.fail({{"identity", "p_y self-adjoint idempotent"}, {"y", m->format(ball[i])}});
    }
    for (const auto& t : ball) {
      ++r.cases;
      BasisVector expected;
      if (ball[i] == t) expected.emplace(t, Scalar(1));
      if (act(p, t) != expected) {
        r.fail({{"identity", "p_y e_t = [y=t] e_t"}, {"y", m->format(ball[i])}, {"t", m->format(t)}});
      }
    }
    for (std::size_t j = 0; j < ball.size(); ++j) {
      if (i == j) continue;
      ++r.cases;
      if (!(p * ps[j]).is_zero()) {
        r.fail({{"identity", "p_y p_z = 0"}, {"y", m->format(ball[i])}, {"z", m->format(ball[j])}});
      }
    }
  }
  return r;
}

PartitionCandidate PartitionCandidate::singletons(const std::vector<Element>& ball) {
  PartitionCandidate c;
  for (const auto& y : ball) c.blocks[y] = {y};
  return c;
}

const std::vector<Element>* PartitionCandidate::block(const Element& y) const {
  auto it = blocks.find(y);
  return it == blocks.end() ? nullptr : &it->second;
}

PartitionResult check_partition_covariance(const Monoid& m, const PartitionCandidate& c, int bound) {
  const auto ball = m.enumerate_ball(bound);
  const std::set<Element> in_ball(ball.begin(), ball.end());
  auto member = [&](const Element& u, const Element& y) {
    const auto* b = c.block(y);
    return b && std::find(b->begin(), b->end(), u) != b->end();
  };

  PartitionResult res;
  res.covariant = true;
  for (const auto& p : ball) {
    for (const auto& y : ball) {
      auto py = m.compose(p, y);
      if (!in_ball.count(py)) continue;
      for (const auto& u : ball) {
        auto pu = m.compose(p, u);
        if (!in_ball.count(pu)) continue;
        bool lhs = member(u, y);
        bool rhs = member(pu, py);
        if (lhs != rhs && res.covariant) {
          res.covariant = false;
          res.witness = nlohmann::ordered_json{
              {"p", m.format(p)}, {"y", m.format(y)}, {"u", m.format(u)},
              {"T_p q_y e_u", lhs ? "e_" + m.format(pu) : "0"},
              {"q_py T_p e_u", rhs ? "e_" + m.format(pu) : "0"}};
        }
      }
    }
  }

  std::map<Element, int> cover;
  bool inside = true;
  for (const auto& [y, block] : c.blocks) {
    for (const auto& u : block) {
      ++cover[u];
      inside = inside && in_ball.count(u);
    }
  }
  res.partitions_ball = inside && cover.size() == ball.size() &&
                        std::all_of(cover.begin(), cover.end(), [](const auto& kv) { return kv.second == 1; });

  res.singleton_structure = std::all_of(ball.begin(), ball.end(), [&](const Element& y) {
    const auto* b = c.block(y);
    return b && b->size() == 1 && b->front() == y;
  });
  return res;
}

}  // namespace qlat
