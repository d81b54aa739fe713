#pragma once

// Positive cones of quasi-lattice ordered groups (G, P).
//
// Each instance fixes an encoding for elements of P and for elements of G
// reachable as quotients st^{-1}. The order is the left-invariant one,
// p <= q iff p^{-1}q lies in P.

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/element.hpp"
#include "qlat/rational.hpp"

namespace qlat {

enum class MonoidKind { FreeMonoid, FreeAbelian, Divisibility, HalfLine };

std::string_view kind_name(MonoidKind kind);

/// Configuration record {kind, rank?, denominator_bound?}.
struct InstanceConfig {
  MonoidKind kind = MonoidKind::FreeMonoid;
  int rank = 1;
  int denominator_bound = 1;

  static InstanceConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const InstanceConfig&, const InstanceConfig&) = default;
};

struct Capabilities {
  bool lub_of_quotient = false;
  bool complete_enumeration = false;
};

/// Least common upper bound, or infinity when none exists.
class JoinResult {
 public:
  static JoinResult infinity() { return JoinResult(); }
  static JoinResult finite(Element e) { return JoinResult(std::move(e)); }

  bool is_finite() const { return value_.has_value(); }
  const Element& value() const { return *value_; }

  friend bool operator==(const JoinResult&, const JoinResult&) = default;

 private:
  JoinResult() = default;
  explicit JoinResult(Element e) : value_(std::move(e)) {}

  std::optional<Element> value_;
};

class Monoid {
 public:
  virtual ~Monoid() = default;

  virtual const InstanceConfig& config() const = 0;
  MonoidKind kind() const { return config().kind; }

  /// Short human name such as "F2+", "N^2", "divisibility".
  virtual std::string name() const = 0;
  virtual Capabilities capabilities() const = 0;

  virtual Element identity() const = 0;
  bool is_identity(const Element& p) const { return p == identity(); }

  /// Throws InstanceMismatch when `p` is not a valid payload for this instance.
  virtual void validate(const Element& p) const = 0;
  virtual void validate(const Label& g) const = 0;

  virtual Element compose(const Element& p, const Element& q) const = 0;

  /// p^{-1}q when p <= q.
  virtual std::optional<Element> left_divide(const Element& p, const Element& q) const = 0;
  bool leq(const Element& p, const Element& q) const { return left_divide(p, q).has_value(); }

  virtual JoinResult join(const Element& p, const Element& q) const = 0;

  /// Canonical form of st^{-1}.
  virtual Label quotient_label(const Element& s, const Element& t) const = 0;
  virtual Label label_mul(const Label& g, const Label& h) const = 0;
  virtual Label label_inverse(const Label& g) const = 0;
  Label embed(const Element& p) const { return quotient_label(p, identity()); }
  Label identity_label() const { return embed(identity()); }

  /// The element of P represented by `g`, when g lies in P.
  virtual std::optional<Element> label_in_positive(const Label& g) const = 0;

  /// sigma(g) = g v e, the least element of P dominating g.
  /// Throws Unsupported without the lub_of_quotient capability.
  std::optional<Element> lub_in_positive(const Label& g) const;

  /// Join of two group elements, at least one of which lies in P.
  JoinResult label_join(const Label& g, const Label& h) const;

  /// Hereditary enumeration of {p : size(p) <= n}, sorted so that every
  /// prefix is again hereditary.
  virtual std::vector<Element> enumerate_ball(int n) const = 0;

  /// All s with s <= t (inside the enumeration universe of the instance).
  virtual std::vector<Element> lower_set(const Element& t) const = 0;

  /// Size measure compatible with enumerate_ball; strictly increasing along
  /// strict order relations.
  virtual Rational size(const Element& p) const = 0;

  virtual std::string format(const Element& p) const = 0;
  virtual std::string format(const Label& g) const = 0;
  /// Parses one element; throws ParseError with positions relative to `text`.
  virtual Element parse(std::string_view text) const = 0;

 protected:
  virtual std::optional<Element> lub_impl(const Label& g) const = 0;
};

using MonoidPtr = std::shared_ptr<const Monoid>;

MonoidPtr make_monoid(const InstanceConfig& config);
MonoidPtr make_monoid(const nlohmann::json& config);

// Convenience constructors.
MonoidPtr free_monoid(int rank);
MonoidPtr free_abelian(int rank);
MonoidPtr divisibility();
MonoidPtr half_line(int denominator_bound);

}  // namespace qlat
