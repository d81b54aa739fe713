#include "qlat/monoid.hpp"

#include "instances.hpp"
#include "qlat/errors.hpp"

namespace qlat {

std::string_view kind_name(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::FreeMonoid: return "free_monoid";
    case MonoidKind::FreeAbelian: return "free_abelian";
    case MonoidKind::Divisibility: return "divisibility";
    case MonoidKind::HalfLine: return "half_line";
  }
  return "unknown";
}

InstanceConfig InstanceConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("instance record must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("instance record needs a string 'kind'");
  }
  InstanceConfig c;
  const auto kind = j["kind"].get<std::string>();
  if (kind == "free_monoid") {
    c.kind = MonoidKind::FreeMonoid;
  } else if (kind == "free_abelian") {
    c.kind = MonoidKind::FreeAbelian;
  } else if (kind == "divisibility") {
    c.kind = MonoidKind::Divisibility;
  } else if (kind == "half_line") {
    c.kind = MonoidKind::HalfLine;
  } else {
    throw ConfigError("unknown instance kind '" + kind + "'");
  }
  auto read_int = [&](const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) throw ConfigError(std::string("'") + key + "' must be an integer");
    return j[key].get<int>();
  };
  c.rank = read_int("rank", c.kind == MonoidKind::FreeMonoid ? 2 : 1);
  c.denominator_bound = read_int("denominator_bound", 1);
  if ((c.kind == MonoidKind::FreeMonoid || c.kind == MonoidKind::FreeAbelian) &&
      (c.rank < 1 || c.rank > 25)) {
    throw ConfigError("rank must lie in 1..25");
  }
  if (c.kind == MonoidKind::HalfLine && (c.denominator_bound < 1 || c.denominator_bound > 64)) {
    throw ConfigError("denominator_bound must lie in 1..64");
  }
  if (c.kind == MonoidKind::Divisibility || c.kind == MonoidKind::HalfLine) c.rank = 1;
  if (c.kind != MonoidKind::HalfLine) c.denominator_bound = 1;
  return c;
}

nlohmann::json InstanceConfig::to_json() const {
  nlohmann::json j;
  j["kind"] = std::string(kind_name(kind));
  if (kind == MonoidKind::FreeMonoid || kind == MonoidKind::FreeAbelian) j["rank"] = rank;
  if (kind == MonoidKind::HalfLine) j["denominator_bound"] = denominator_bound;
  return j;
}

std::optional<Element> Monoid::lub_in_positive(const Label& g) const {
  if (!capabilities().lub_of_quotient) {
    throw Unsupported(name() + " does not support least upper bounds of quotients");
  }
  validate(g);
  return lub_impl(g);
}

JoinResult Monoid::label_join(const Label& g, const Label& h) const {
  auto pg = label_in_positive(g);
  auto ph = label_in_positive(h);
  if (!pg && !ph) throw InvalidArgument("label_join needs at least one argument in P");
  // Every common upper bound dominates the argument lying in P, hence e,
  // so g v h = sigma(g) v sigma(h).
  auto sg = pg ? pg : lub_in_positive(g);
  auto sh = ph ? ph : lub_in_positive(h);
  if (!sg || !sh) return JoinResult::infinity();
  return join(*sg, *sh);
}

MonoidPtr make_monoid(const InstanceConfig& c) {
  switch (c.kind) {
    case MonoidKind::FreeMonoid: return std::make_shared<detail::FreeMonoid>(c.rank);
    case MonoidKind::FreeAbelian: return std::make_shared<detail::FreeAbelian>(c.rank);
    case MonoidKind::Divisibility: return std::make_shared<detail::Divisibility>();
    case MonoidKind::HalfLine: return std::make_shared<detail::HalfLine>(c.denominator_bound);
  }
  throw ConfigError("unknown instance kind");
}

MonoidPtr make_monoid(const nlohmann::json& config) {
  return make_monoid(InstanceConfig::from_json(config));
}

MonoidPtr free_monoid(int rank) { return make_monoid(InstanceConfig{MonoidKind::FreeMonoid, rank, 1}); }
MonoidPtr free_abelian(int rank) { return make_monoid(InstanceConfig{MonoidKind::FreeAbelian, rank, 1}); }
MonoidPtr divisibility() { return make_monoid(InstanceConfig{MonoidKind::Divisibility, 1, 1}); }
MonoidPtr half_line(int bound) { return make_monoid(InstanceConfig{MonoidKind::HalfLine, 1, bound}); }

namespace detail {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("integer overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("integer overflow");
  return r;
}

}  // namespace detail
}  // namespace qlat
