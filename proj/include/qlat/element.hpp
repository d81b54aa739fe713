#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace qlat {

using Payload = boost::container::small_vector<std::int64_t, 6>;

namespace detail {

// Shared storage for the two value types below. The payload is interpreted
// by the owning monoid instance: a word over generator indices, an integer
// vector, a positive integer, or a reduced fraction {num, den}.
template <class Tag>
class Coded {
 public:
  Coded() = default;
  explicit Coded(Payload data) : data_(std::move(data)) {}
  Coded(std::initializer_list<std::int64_t> data) : data_(data) {}

  const Payload& data() const { return data_; }
  std::size_t length() const { return data_.size(); }

  friend bool operator==(const Coded& a, const Coded& b) {
    return a.data_ == b.data_;
  }
  friend std::strong_ordering operator<=>(const Coded& a, const Coded& b) {
    return std::lexicographical_compare_three_way(
        a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull ^ data_.size();
    for (auto v : data_) {
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  Payload data_;
};

struct ElementTag {};
struct LabelTag {};

}  // namespace detail

/// An element of the positive cone P.
using Element = detail::Coded<detail::ElementTag>;

/// Canonical form of a group element st^{-1}; the degree of a monomial.
using Label = detail::Coded<detail::LabelTag>;

}  // namespace qlat

template <class Tag>
struct std::hash<qlat::detail::Coded<Tag>> {
  std::size_t operator()(const qlat::detail::Coded<Tag>& c) const { return c.hash(); }
};
