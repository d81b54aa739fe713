#pragma once

// Exact finite matrices of algebra elements compressed to span{e_t : t in S}
// for a hereditary finite S, used as an independent oracle.

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlat/algebra.hpp"
#include "qlat/report.hpp"

namespace qlat {

class Truncation {
 public:
  /// Throws InvalidArgument when `elements` is not hereditary or has duplicates.
  Truncation(MonoidPtr monoid, std::vector<Element> elements);

  /// The ball of radius n.
  static Truncation ball(MonoidPtr monoid, int n);

  const Monoid& monoid() const { return *monoid_; }
  const MonoidPtr& monoid_ptr() const { return monoid_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const Element& t) const;

 private:
  MonoidPtr monoid_;
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t> index_;
};

class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);
  /// Unit entry at (row, col).
  static ExactMatrix elementary(std::size_t n, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactMatrix conjugate_transpose() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  /// Dense row-major dump, one row per line, entries as exact strings.
  std::string dump() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Rank over Q(i) by exact Gaussian elimination.
std::size_t rank(std::vector<std::vector<Scalar>> rows);

struct TruncatedOperator {
  ExactMatrix matrix;
  /// Columns t for which some monomial maps e_t outside S.
  std::set<std::size_t> escapes;
};

TruncatedOperator truncate(const AlgebraElement& x, const Truncation& S);

/// truncate(x y) = truncate(x) truncate(y) on columns whose orbit stays in S,
/// and truncate(x^*) = truncate(x)^* on escape-free columns of x^*.
CheckReport verify_against_matrices(const AlgebraElement& x, const AlgebraElement& y, const Truncation& S);

/// Dimension of the commutant of {truncate(V(p,p)) : p in S}.
std::size_t diagonal_commutant_dimension(const Truncation& S);

}  // namespace qlat
