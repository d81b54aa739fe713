#pragma once

// Concrete quasi-lattice ordered instances. Internal to the core library.

#include "qlat/monoid.hpp"

namespace qlat::detail {

/// Free monoid F_n^+ inside the free group F_n. Elements are words over
/// generator indices 0..rank-1; labels are reduced free-group words with
/// letters +(i+1) / -(i+1).
class FreeMonoid final : public Monoid {
 public:
  explicit FreeMonoid(int rank);

  const InstanceConfig& config() const override { return config_; }
  std::string name() const override;
  Capabilities capabilities() const override { return {true, true}; }
  Element identity() const override { return Element(); }
  void validate(const Element& p) const override;
  void validate(const Label& g) const override;
  Element compose(const Element& p, const Element& q) const override;
  std::optional<Element> left_divide(const Element& p, const Element& q) const override;
  JoinResult join(const Element& p, const Element& q) const override;
  Label quotient_label(const Element& s, const Element& t) const override;
  Label label_mul(const Label& g, const Label& h) const override;
  Label label_inverse(const Label& g) const override;
  std::optional<Element> label_in_positive(const Label& g) const override;
  std::vector<Element> enumerate_ball(int n) const override;
  std::vector<Element> lower_set(const Element& t) const override;
  Rational size(const Element& p) const override;
  std::string format(const Element& p) const override;
  std::string format(const Label& g) const override;
  Element parse(std::string_view text) const override;

  char letter(std::int64_t generator) const;

 protected:
  std::optional<Element> lub_impl(const Label& g) const override;

 private:
  InstanceConfig config_;
};

/// (Z^r, N^r) with the componentwise order.
class FreeAbelian final : public Monoid {
 public:
  explicit FreeAbelian(int rank);

  const InstanceConfig& config() const override { return config_; }
  std::string name() const override;
  Capabilities capabilities() const override { return {true, true}; }
  Element identity() const override;
  void validate(const Element& p) const override;
  void validate(const Label& g) const override;
  Element compose(const Element& p, const Element& q) const override;
  std::optional<Element> left_divide(const Element& p, const Element& q) const override;
  JoinResult join(const Element& p, const Element& q) const override;
  Label quotient_label(const Element& s, const Element& t) const override;
  Label label_mul(const Label& g, const Label& h) const override;
  Label label_inverse(const Label& g) const override;
  std::optional<Element> label_in_positive(const Label& g) const override;
  std::vector<Element> enumerate_ball(int n) const override;
  std::vector<Element> lower_set(const Element& t) const override;
  Rational size(const Element& p) const override;
  std::string format(const Element& p) const override;
  std::string format(const Label& g) const override;
  Element parse(std::string_view text) const override;

 protected:
  std::optional<Element> lub_impl(const Label& g) const override;

 private:
  InstanceConfig config_;
};

/// (Q_+^*, N^x) ordered by divisibility. Elements {n}; labels reduced
/// fractions {num, den}.
class Divisibility final : public Monoid {
 public:
  Divisibility();

  const InstanceConfig& config() const override { return config_; }
  std::string name() const override { return "divisibility"; }
  Capabilities capabilities() const override { return {true, true}; }
  Element identity() const override { return Element{1}; }
  void validate(const Element& p) const override;
  void validate(const Label& g) const override;
  Element compose(const Element& p, const Element& q) const override;
  std::optional<Element> left_divide(const Element& p, const Element& q) const override;
  JoinResult join(const Element& p, const Element& q) const override;
  Label quotient_label(const Element& s, const Element& t) const override;
  Label label_mul(const Label& g, const Label& h) const override;
  Label label_inverse(const Label& g) const override;
  std::optional<Element> label_in_positive(const Label& g) const override;
  std::vector<Element> enumerate_ball(int n) const override;
  std::vector<Element> lower_set(const Element& t) const override;
  Rational size(const Element& p) const override;
  std::string format(const Element& p) const override;
  std::string format(const Label& g) const override;
  Element parse(std::string_view text) const override;

 protected:
  std::optional<Element> lub_impl(const Label& g) const override;

 private:
  InstanceConfig config_;
};

/// (R, {0} u [1, inf)) restricted to exact rationals. Elements and labels
/// are reduced fractions {num, den}. Enumeration uses denominators up to
/// the configured bound.
class HalfLine final : public Monoid {
 public:
  explicit HalfLine(int denominator_bound);

  const InstanceConfig& config() const override { return config_; }
  std::string name() const override;
  Capabilities capabilities() const override { return {false, false}; }
  Element identity() const override { return Element{0, 1}; }
  void validate(const Element& p) const override;
  void validate(const Label& g) const override;
  Element compose(const Element& p, const Element& q) const override;
  std::optional<Element> left_divide(const Element& p, const Element& q) const override;
  JoinResult join(const Element& p, const Element& q) const override;
  Label quotient_label(const Element& s, const Element& t) const override;
  Label label_mul(const Label& g, const Label& h) const override;
  Label label_inverse(const Label& g) const override;
  std::optional<Element> label_in_positive(const Label& g) const override;
  std::vector<Element> enumerate_ball(int n) const override;
  std::vector<Element> lower_set(const Element& t) const override;
  Rational size(const Element& p) const override;
  std::string format(const Element& p) const override;
  std::string format(const Label& g) const override;
  Element parse(std::string_view text) const override;

 protected:
  std::optional<Element> lub_impl(const Label& g) const override;

 private:
  InstanceConfig config_;
};

// Checked int64 arithmetic; throws InvalidArgument on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// {num, den} payloads with den > 0 and gcd(num, den) = 1.
Payload fraction_payload(const Rational& q);
Rational fraction_value(const Payload& p);

}  // namespace qlat::detail
