#include "qlat/truncation.hpp"

#include <unordered_set>

#include "qlat/errors.hpp"

namespace qlat {

Truncation::Truncation(MonoidPtr monoid, std::vector<Element> elements)
    : monoid_(std::move(monoid)), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    monoid_->validate(elements_[i]);
    if (!index_.emplace(elements_[i], i).second) {
      throw InvalidArgument("duplicate element " + monoid_->format(elements_[i]) + " in truncation");
    }
  }
  for (const auto& t : elements_) {
    for (const auto& s : monoid_->lower_set(t)) {
      if (!index_.count(s)) {
        throw InvalidArgument("truncation is not hereditary: " + monoid_->format(s) + " <= " +
                              monoid_->format(t) + " is missing");
      }
    }
  }
}

Truncation Truncation::ball(MonoidPtr monoid, int n) {
  auto elements = monoid->enumerate_ball(n);
  return Truncation(std::move(monoid), std::move(elements));
}

std::optional<std::size_t> Truncation::index_of(const Element& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::elementary(std::size_t n, std::size_t row, std::size_t col) {
  ExactMatrix m(n, n);
  m.at(row, col) = 1;
  return m;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c).conj();
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shapes do not match");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

std::string ExactMatrix::dump() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ' ';
      s += at(r, c).to_string();
    }
    s += '\n';
  }
  return s;
}

std::size_t rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Scalar inv = Scalar(1) / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
      }
    }
    ++r;
  }
  return r;
}

TruncatedOperator truncate(const AlgebraElement& x, const Truncation& S) {
  if (x.monoid().config() != S.monoid().config()) {
    throw InstanceMismatch("element and truncation belong to different instances");
  }
  TruncatedOperator out{ExactMatrix(S.size(), S.size()), {}};
  for (std::size_t col = 0; col < S.size(); ++col) {
    const auto& t = S.elements()[col];
    for (const auto& [k, c] : x.terms()) {
      auto image = apply(x.monoid(), Monomial(k.first, k.second), t);
      if (!image) continue;
      if (auto row = S.index_of(*image)) {
        out.matrix.at(*row, col) += c;
      } else {
        out.escapes.insert(col);
      }
    }
  }
  return out;
}

CheckReport verify_against_matrices(const AlgebraElement& x, const AlgebraElement& y, const Truncation& S) {
  CheckReport r;
  r.check = "matrix-oracle";
  r.instance = S.monoid().name();
  r.parameters["size"] = S.size();
  const auto& m = S.monoid();

  const auto X = truncate(x, S);
  const auto Y = truncate(y, S);
  const auto XY = truncate(x * y, S);
  const auto product = X.matrix * Y.matrix;
  std::size_t excluded = 0;
  for (std::size_t col = 0; col < S.size(); ++col) {
    const auto& t = S.elements()[col];
    bool inside = !Y.escapes.count(col);
    for (auto it = y.terms().begin(); inside && it != y.terms().end(); ++it) {
      auto image = apply(m, Monomial(it->first.first, it->first.second), t);
      if (image) inside = !X.escapes.count(*S.index_of(*image));
    }
    if (!inside) {
      ++excluded;
      continue;
    }
    for (std::size_t row = 0; row < S.size(); ++row) {
      ++r.cases;
      if (XY.matrix.at(row, col) != product.at(row, col)) {
        r.fail({{"relation", "product"}, {"row", m.format(S.elements()[row])}, {"column", m.format(t)},
                {"symbolic", XY.matrix.at(row, col).to_string()}, {"matrix", product.at(row, col).to_string()}});
      }
    }
  }

  const auto Xstar = truncate(x.star(), S);
  const auto adjoint = X.matrix.conjugate_transpose();
  for (std::size_t col = 0; col < S.size(); ++col) {
    if (Xstar.escapes.count(col)) {
      ++excluded;
      continue;
    }
    for (std::size_t row = 0; row < S.size(); ++row) {
      ++r.cases;
      if (Xstar.matrix.at(row, col) != adjoint.at(row, col)) {
        r.fail({{"relation", "star"}, {"row", m.format(S.elements()[row])},
                {"column", m.format(S.elements()[col])}});
      }
    }
  }
  r.parameters["excluded_columns"] = excluded;
  return r;
}

std::size_t diagonal_commutant_dimension(const Truncation& S) {
  const std::size_t n = S.size();
  const std::size_t unknowns = n * n;
  std::vector<std::vector<Scalar>> rows;
  std::unordered_set<std::string> seen;
  for (const auto& p : S.elements()) {
    auto D = truncate(AlgebraElement::range_projection(S.monoid_ptr(), p), S).matrix;
    // (MD - DM)_{ij} = sum_k M_ik D_kj - D_ik M_kj
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> row(unknowns);
        bool nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
          if (!D.at(k, j).is_zero()) {
            row[i * n + k] += D.at(k, j);
            nonzero = true;
          }
          if (!D.at(i, k).is_zero()) {
            row[k * n + j] -= D.at(i, k);
            nonzero = true;
          }
        }
        if (!nonzero) continue;
        std::string key;
        bool all_zero = true;
        for (std::size_t u = 0; u < unknowns; ++u) {
          if (row[u].is_zero()) continue;
          all_zero = false;
          key += std::to_string(u) + ":" + row[u].to_string() + ";";
        }
        if (all_zero || !seen.insert(key).second) continue;
        rows.push_back(std::move(row));
      }
    }
  }
  return unknowns - rank(std::move(rows));
}

}  // namespace qlat
