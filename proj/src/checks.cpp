#include "qlat/checks.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

#include "qlat/coaction.hpp"
#include "qlat/errors.hpp"
#include "qlat/truncation.hpp"

namespace qlat {

namespace {

using Json = nlohmann::ordered_json;

std::vector<Monomial> monomials_over(const std::vector<Element>& ball) {
  std::vector<Monomial> out;
  out.reserve(ball.size() * ball.size());
  for (const auto& s : ball) {
    for (const auto& t : ball) out.emplace_back(s, t);
  }
  return out;
}

std::string fmt(const Monoid& m, const std::optional<Element>& p) {
  return p ? m.format(*p) : std::string("undefined");
}

std::string fmt(const Monoid& m, const JoinResult& j) {
  return j.is_finite() ? m.format(j.value()) : std::string("inf");
}

CheckReport start(std::string check, const Monoid& m) {
  CheckReport r;
  r.check = std::move(check);
  r.instance = m.name();
  return r;
}

}  // namespace

int radius_for_size(const Monoid& m, std::size_t size) {
  for (int n = 1; n <= 64; ++n) {
    if (m.enumerate_ball(n).size() >= size) return n;
  }
  throw InvalidArgument("no ball with " + std::to_string(size) + " elements up to radius 64");
}

CheckReport check_qlo_axioms(const Monoid& m, int radius, const SamplingPolicy& policy) {
  auto r = start("qlo-axioms", m);
  r.parameters["radius"] = radius;
  const auto ball = m.enumerate_ball(radius);
  const auto big = m.enumerate_ball(2 * radius);
  r.parameters["ball"] = ball.size();
  r.parameters["margin_ball"] = big.size();
  const Element e = m.identity();
  Json laws = Json::object();
  auto violate = [&](Json w) {
    const auto law = w.at("law").get<std::string>();
    laws[law] = laws.value(law, 0) + 1;
    r.fail(std::move(w));
  };

  std::unordered_set<Element> members;
  for (const auto& p : ball) {
    if (!members.insert(p).second) violate({{"law", "duplicate-free ball"}, {"p", m.format(p)}});
  }
  for (const auto& t : ball) {
    for (const auto& s : m.lower_set(t)) {
      ++r.cases;
      if (!members.count(s)) violate({{"law", "hereditary ball"}, {"s", m.format(s)}, {"t", m.format(t)}});
    }
    ++r.cases;
    if (m.compose(e, t) != t || m.compose(t, e) != t) violate({{"law", "identity"}, {"p", m.format(t)}});
    if (m.quotient_label(t, t) != m.identity_label()) violate({{"law", "label(s,s) = e"}, {"s", m.format(t)}});
  }

  const std::array<std::size_t, 3> dims3{ball.size(), ball.size(), ball.size()};
  bool sampled = for_each_tuple(dims3, policy, [&](std::span<const std::size_t> i) {
    const auto& p = ball[i[0]];
    const auto& q = ball[i[1]];
    const auto& s = ball[i[2]];
    ++r.cases;
    if (m.compose(m.compose(p, q), s) != m.compose(p, m.compose(q, s))) {
      violate({{"law", "associativity"}, {"p", m.format(p)}, {"q", m.format(q)}, {"r", m.format(s)}});
    }
    if (m.quotient_label(m.compose(p, s), m.compose(q, s)) != m.quotient_label(p, q)) {
      violate({{"law", "label(su,tu) = label(s,t)"}, {"s", m.format(p)}, {"t", m.format(q)}, {"u", m.format(s)}});
    }
  });

  const std::array<std::size_t, 2> dims2{ball.size(), ball.size()};
  sampled |= for_each_tuple(dims2, policy, [&](std::span<const std::size_t> i) {
    const auto& p = ball[i[0]];
    const auto& q = ball[i[1]];
    ++r.cases;
    auto pq = m.compose(p, q);
    auto back = m.left_divide(p, pq);
    if (!back || *back != q) {
      violate({{"law", "left_divide(p, pq) = q"}, {"p", m.format(p)}, {"q", m.format(q)}, {"got", fmt(m, back)}});
    }
    if (auto d = m.left_divide(p, q); d && m.compose(p, *d) != q) {
      violate({{"law", "p (p^-1 q) = q"}, {"p", m.format(p)}, {"q", m.format(q)}});
    }
    if (p != q && m.leq(p, q) && !(m.size(p) < m.size(q))) {
      violate({{"law", "size increases along the order"}, {"p", m.format(p)}, {"q", m.format(q)}});
    }
    auto g = m.quotient_label(p, q);
    if (m.label_mul(g, m.embed(q)) != m.embed(p) || m.label_inverse(g) != m.quotient_label(q, p)) {
      violate({{"law", "label arithmetic"}, {"s", m.format(p)}, {"t", m.format(q)}});
    }

    auto j = m.join(p, q);
    if (j != m.join(q, p)) violate({{"law", "join commutative"}, {"p", m.format(p)}, {"q", m.format(q)}});
    if (j.is_finite() && (!m.leq(p, j.value()) || !m.leq(q, j.value()))) {
      violate({{"law", "join is an upper bound"}, {"p", m.format(p)}, {"q", m.format(q)}, {"join", fmt(m, j)}});
      return;
    }
    for (const auto& u : big) {
      if (!m.leq(p, u) || !m.leq(q, u)) continue;
      if (!j.is_finite() || !m.leq(j.value(), u)) {
        violate({{"law", j.is_finite() ? "join is least" : "infinite join has no upper bound"},
                {"p", m.format(p)}, {"q", m.format(q)}, {"join", fmt(m, j)}, {"upper_bound", m.format(u)}});
        return;
      }
    }
  });
  r.sampled = sampled;
  r.parameters["violated_laws"] = laws;
  return r;
}

CheckReport check_nica_covariance(const MonoidPtr& m, int radius) {
  auto r = start("nica-covariance", *m);
  r.parameters["radius"] = radius;
  const auto ball = m->enumerate_ball(radius);
  const auto basis = m->enumerate_ball(2 * radius);
  r.parameters["ball"] = ball.size();
  r.parameters["apply_ball"] = basis.size();
  for (const auto& s : ball) {
    for (const auto& t : ball) {
      ++r.cases;
      auto j = m->join(s, t);
      auto product = AlgebraElement::range_projection(m, s) * AlgebraElement::range_projection(m, t);
      auto expected = j.is_finite() ? AlgebraElement::range_projection(m, j.value()) : AlgebraElement(m);
      if (product != expected) {
        r.fail({{"s", m->format(s)}, {"t", m->format(t)}, {"product", format(product)},
                {"expected", format(expected)}});
        continue;
      }
      // On basis vectors both sides are the indicator of {u : s <= u, t <= u}.
      Monomial mono = multiply(*m, Monomial(s, s), Monomial(t, t));
      for (const auto& u : basis) {
        bool lhs = m->leq(s, u) && m->leq(t, u);
        auto image = mono.is_zero() ? std::nullopt : apply(*m, mono, u);
        if (lhs != image.has_value() || (image && *image != u)) {
          r.fail({{"s", m->format(s)}, {"t", m->format(t)}, {"basis", m->format(u)}, {"level", "operator"}});
          break;
        }
      }
    }
  }
  return r;
}

CheckReport check_monomial_oracle(const Monoid& m, int component_radius, int apply_radius,
                                  const SamplingPolicy& policy) {
  auto r = start("monomial-oracle", m);
  r.parameters["component_radius"] = component_radius;
  r.parameters["apply_radius"] = apply_radius;
  const auto monos = monomials_over(m.enumerate_ball(component_radius));
  const auto basis = m.enumerate_ball(apply_radius);
  r.parameters["monomials"] = monos.size();
  r.parameters["basis"] = basis.size();

  for (const auto& a : monos) {
    auto star = adjoint(a);
    ++r.cases;
    if (multiply(m, multiply(m, a, star), a) != a) {
      r.fail({{"law", "V V^* V = V"}, {"monomial", format(m, a)}});
    }
    for (const auto& t : basis) {
      auto image = apply(m, a, t);
      if (!image) continue;
      ++r.cases;
      auto back = apply(m, star, *image);
      if (!back || *back != t) {
        r.fail({{"law", "adjoint inverts"}, {"monomial", format(m, a)}, {"t", m.format(t)}});
      }
    }
  }

  const std::array<std::size_t, 2> dims{monos.size(), monos.size()};
  r.sampled = for_each_tuple(dims, policy, [&](std::span<const std::size_t> i) {
    const auto& a = monos[i[0]];
    const auto& b = monos[i[1]];
    auto ab = multiply(m, a, b);
    for (const auto& t : basis) {
      ++r.cases;
      std::optional<Element> expected;
      if (auto mid = apply(m, b, t)) expected = apply(m, a, *mid);
      std::optional<Element> got = ab.is_zero() ? std::nullopt : apply(m, ab, t);
      if (got != expected) {
        r.fail({{"m1", format(m, a)}, {"m2", format(m, b)}, {"product", format(m, ab)}, {"t", m.format(t)},
                {"composed", fmt(m, expected)}, {"product_image", fmt(m, got)}});
        return;
      }
    }
  });
  return r;
}

CheckReport check_translated_joins(const Monoid& m, int radius, const SamplingPolicy& policy) {
  auto r = start("lub-products", m);
  r.parameters["radius"] = radius;
  const auto ball = m.enumerate_ball(radius);

  std::size_t positive = 0;
  const std::array<std::size_t, 3> dims{ball.size(), ball.size(), ball.size()};
  r.sampled = for_each_tuple(dims, policy, [&](std::span<const std::size_t> i) {
    const auto& z = ball[i[0]];
    const auto& a = ball[i[1]];
    const auto& b = ball[i[2]];
    ++r.cases;
    ++positive;
    auto j = m.join(a, b);
    auto jz = m.join(m.compose(z, a), m.compose(z, b));
    bool ok = j.is_finite() == jz.is_finite() && (!j.is_finite() || m.compose(z, j.value()) == jz.value());
    if (!ok) {
      r.fail({{"z", m.format(z)}, {"a", m.format(a)}, {"b", m.format(b)}, {"z(a v b)", fmt(m, j)},
              {"za v zb", fmt(m, jz)}});
    }
  });
  r.parameters["positive_triples"] = positive;

  if (!m.capabilities().lub_of_quotient) {
    r.parameters["label_triples"] = 0;
    r.note = "translations by group elements outside P skipped: the instance has no lub of quotients";
    return r;
  }
  std::set<Label> zs;
  for (const auto& u : ball) {
    for (const auto& v : ball) {
      auto g = m.quotient_label(u, v);
      if (!m.label_in_positive(g)) zs.insert(g);
    }
  }
  const std::vector<Label> z_list(zs.begin(), zs.end());
  std::size_t labelled = 0;
  const std::array<std::size_t, 3> ldims{z_list.size(), ball.size(), ball.size()};
  r.sampled |= for_each_tuple(ldims, policy, [&](std::span<const std::size_t> i) {
    const auto& z = z_list[i[0]];
    const auto& a = ball[i[1]];
    const auto& b = ball[i[2]];
    auto za = m.label_mul(z, m.embed(a));
    auto zb = m.label_mul(z, m.embed(b));
    if (!m.label_in_positive(za) && !m.label_in_positive(zb)) return;
    ++r.cases;
    ++labelled;
    auto j = m.join(a, b);
    auto jz = m.label_join(za, zb);
    bool ok = j.is_finite() == jz.is_finite() &&
              (!j.is_finite() || m.label_mul(z, m.embed(j.value())) == m.embed(jz.value()));
    if (!ok) {
      r.fail({{"z", m.format(z)}, {"a", m.format(a)}, {"b", m.format(b)},
              {"z(a v b)", j.is_finite() ? m.format(m.label_mul(z, m.embed(j.value()))) : "inf"},
              {"za v zb", fmt(m, jz)}});
    }
  });
  r.parameters["label_triples"] = labelled;
  return r;
}

CheckReport check_grading(const MonoidPtr& m, int radius, const SamplingPolicy& policy) {
  auto r = start("grading", *m);
  r.parameters["radius"] = radius;
  const auto monos = monomials_over(m->enumerate_ball(radius));

  for (const auto& a : monos) {
    ++r.cases;
    if (degree(*m, adjoint(a)) != m->label_inverse(degree(*m, a))) {
      r.fail({{"law", "deg V^* = (deg V)^-1"}, {"monomial", format(*m, a)}});
    }
  }
  const std::array<std::size_t, 2> dims{monos.size(), monos.size()};
  r.sampled = for_each_tuple(dims, policy, [&](std::span<const std::size_t> i) {
    const auto& a = monos[i[0]];
    const auto& b = monos[i[1]];
    auto ab = multiply(*m, a, b);
    if (ab.is_zero()) return;
    ++r.cases;
    if (degree(*m, ab) != m->label_mul(degree(*m, a), degree(*m, b))) {
      r.fail({{"law", "deg(ab) = deg(a) deg(b)"}, {"m1", format(*m, a)}, {"m2", format(*m, b)}});
    }
  });

  // A dense element with varied Gaussian coefficients.
  AlgebraElement x(m);
  for (std::size_t k = 0; k < monos.size(); ++k) {
    Rational im = k % 3 == 1 ? static_cast<long>(k % 7) - 3 : 0;
    x.add_term(monos[k], Scalar(static_cast<long>(k % 5) + 1, im));
  }
  const auto parts = grade(x);
  r.parameters["components"] = parts.size();
  AlgebraElement sum(m);
  for (const auto& [g, part] : parts) {
    ++r.cases;
    sum += part;
    if (homogeneous_degree(part) != g) r.fail({{"law", "component is homogeneous"}, {"label", m->format(g)}});
  }
  ++r.cases;
  if (sum != x) r.fail({{"law", "components sum to x"}});

  auto phi = expectation(x);
  ++r.cases;
  auto id = parts.find(m->identity_label());
  if (phi != (id == parts.end() ? AlgebraElement(m) : id->second)) r.fail({{"law", "expectation is the e-component"}});
  ++r.cases;
  if (expectation(phi) != phi || expectation(x.star()) != phi.star()) {
    r.fail({{"law", "expectation idempotent and *-preserving"}});
  }
  for (const auto& [k, c] : phi.terms()) {
    ++r.cases;
    if (k.first != k.second) r.fail({{"law", "expectation is diagonal"}, {"term", format(*m, Monomial(k.first, k.second))}});
  }

  std::vector<std::pair<Label, const AlgebraElement*>> comps;
  for (const auto& [g, part] : parts) comps.emplace_back(g, &part);
  const std::array<std::size_t, 2> cdims{comps.size(), comps.size()};
  r.sampled |= for_each_tuple(cdims, policy, [&](std::span<const std::size_t> i) {
    const auto& [g, a] = comps[i[0]];
    const auto& [h, b] = comps[i[1]];
    auto ab = *a * *b;
    ++r.cases;
    if (!ab.is_zero() && homogeneous_degree(ab) != m->label_mul(g, h)) {
      r.fail({{"law", "A_g A_h in A_gh"}, {"g", m->format(g)}, {"h", m->format(h)}});
    }
  });
  return r;
}

CheckReport check_matrix_oracle(const MonoidPtr& m, int component_radius, int truncation_radius,
                                const SamplingPolicy& policy) {
  auto r = start("matrix-oracle", *m);
  r.parameters["component_radius"] = component_radius;
  r.parameters["truncation_radius"] = truncation_radius;
  const auto monos = monomials_over(m->enumerate_ball(component_radius));
  const auto S = Truncation::ball(m, truncation_radius);
  r.parameters["truncation_size"] = S.size();

  auto run = [&](const AlgebraElement& x, const AlgebraElement& y) {
    auto sub = verify_against_matrices(x, y, S);
    for (auto& w : sub.witnesses) {
      w["x"] = format(x);
      w["y"] = format(y);
    }
    r.absorb(sub);
  };

  const std::array<std::size_t, 2> dims{monos.size(), monos.size()};
  r.sampled = for_each_tuple(dims, policy, [&](std::span<const std::size_t> i) {
    run(AlgebraElement::monomial(m, monos[i[0]]), AlgebraElement::monomial(m, monos[i[1]]));
  });

  AlgebraElement x(m);
  for (std::size_t k = 0; k < monos.size(); ++k) {
    x.add_term(monos[k], Scalar(static_cast<long>(k % 4) - 1, static_cast<long>(k % 3)));
  }
  run(x, x.star());
  run(x.star(), x);
  return r;
}

CheckReport check_partition_perturbations(const Monoid& m, int radius) {
  auto r = start("partition", m);
  r.parameters["radius"] = radius;
  const auto ball = m.enumerate_ball(radius);
  const auto singles = PartitionCandidate::singletons(ball);

  ++r.cases;
  auto base = check_partition_covariance(m, singles, radius);
  if (!base.pass()) {
    Json w = {{"perturbation", "none"}, {"covariant", base.covariant}, {"partitions_ball", base.partitions_ball}};
    if (base.witness) w["witness"] = *base.witness;
    r.fail(std::move(w));
  }

  std::size_t moves = 0, swaps = 0, removals = 0;
  std::optional<Json> example;
  auto expect_failure = [&](const PartitionCandidate& c, Json label) {
    ++r.cases;
    auto res = check_partition_covariance(m, c, radius);
    if (res.pass() || !res.witness) {
      label["covariant"] = res.covariant;
      label["partitions_ball"] = res.partitions_ball;
      label["has_witness"] = res.witness.has_value();
      r.fail(std::move(label));
    } else if (!example) {
      label["witness"] = *res.witness;
      example = std::move(label);
    }
  };

  for (const auto& u : ball) {
    for (const auto& y : ball) {
      if (u == y) continue;
      auto c = singles;
      c.blocks[u].clear();
      c.blocks[y].push_back(u);
      ++moves;
      expect_failure(c, {{"perturbation", "move"}, {"u", m.format(u)}, {"to", m.format(y)}});
    }
  }
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = i + 1; j < ball.size(); ++j) {
      auto c = singles;
      c.blocks[ball[i]] = {ball[j]};
      c.blocks[ball[j]] = {ball[i]};
      ++swaps;
      expect_failure(c, {{"perturbation", "swap"}, {"u", m.format(ball[i])}, {"v", m.format(ball[j])}});
    }
  }
  for (const auto& u : ball) {
    auto c = singles;
    c.blocks[u].clear();
    ++removals;
    expect_failure(c, {{"perturbation", "removal"}, {"u", m.format(u)}});
  }
  r.parameters["moves"] = moves;
  r.parameters["swaps"] = swaps;
  r.parameters["removals"] = removals;
  if (example) r.parameters["example"] = *example;
  return r;
}

CheckReport check_commutant(const MonoidPtr& m, int radius, std::size_t min_size, std::size_t max_size) {
  auto r = start("commutant", *m);
  const auto ball = m->enumerate_ball(radius);
  r.parameters["radius"] = radius;
  Json dims = Json::object();
  const std::size_t hi = std::min(max_size, ball.size());
  for (std::size_t k = std::min(min_size, hi); k <= hi; ++k) {
    if (k == 0) continue;
    ++r.cases;
    Truncation S(m, std::vector<Element>(ball.begin(), ball.begin() + static_cast<std::ptrdiff_t>(k)));
    auto dim = diagonal_commutant_dimension(S);
    dims[std::to_string(k)] = dim;
    if (dim != k) r.fail({{"size", k}, {"dimension", dim}});
  }
  r.parameters["dimensions"] = dims;
  return r;
}

CheckReport check_rank_one_truncation(const MonoidPtr& m, const std::vector<Element>& F, int pair_radius,
                                      int truncation_radius) {
  auto r = start("rank-one-truncation", *m);
  r.parameters["pair_radius"] = pair_radius;
  r.parameters["truncation_radius"] = truncation_radius;
  const auto S = Truncation::ball(m, truncation_radius);
  const auto pairs = m->enumerate_ball(pair_radius);
  for (const auto& x : pairs) {
    for (const auto& y : pairs) {
      ++r.cases;
      auto ix = S.index_of(x);
      auto iy = S.index_of(y);
      if (!ix || !iy) throw InvalidArgument("pair ball must lie inside the truncation");
      auto T = truncate(rank_one(m, x, y, F), S);
      if (T.matrix != ExactMatrix::elementary(S.size(), *ix, *iy)) {
        r.fail({{"x", m->format(x)}, {"y", m->format(y)}});
      }
    }
  }
  return r;
}

}  // namespace qlat
