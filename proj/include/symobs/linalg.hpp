#pragma once

// Exact dense linear algebra over a field (Rational or GaussRational).
// Reduced row echelon form with first-nonzero pivoting, so every result
// is canonical for a given input ordering.

#include "symobs/exact.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symobs {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<T> row(std::size_t r) const {
    return Vec<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// In-place reduction to reduced row echelon form; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    T inv = T(1) / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || is_zero(m(r, c))) continue;
      T f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!is_zero(m(lead, k))) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

// Basis of the null space {x : m x = 0}, one vector per free column.
template <class T>
std::vector<Vec<T>> kernel(Matrix<T> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incrementally maintained echelon basis of a subspace of T^n.
// Rows are kept fully reduced against each other.
template <class T>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n = 0) : n_(n) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<T>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduces v modulo the span in place; v is zero afterwards iff it was in the span.
  void reduce(Vec<T>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T& f = v[pivots_[r]];
      if (is_zero(f)) continue;
      T c = f;
      const auto& row = rows_[r];
      for (std::size_t k = 0; k < n_; ++k)
        if (!is_zero(row[k])) v[k] -= c * row[k];
    }
  }

  bool contains(Vec<T> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  // Adds v to the span; returns true when it was independent.
  bool add(Vec<T> v) {
    if (v.size() != n_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && is_zero(v[p])) ++p;
    if (p == n_) return false;
    T inv = T(1) / v[p];
    for (auto& x : v)
      if (!is_zero(x)) x *= inv;
    for (auto& row : rows_) {
      if (is_zero(row[p])) continue;
      T c = row[p];
      for (std::size_t k = 0; k < n_; ++k)
        if (!is_zero(v[k])) row[k] -= c * v[k];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  // Coordinates of v against rows(), or nullopt when v is outside the span.
  std::optional<Vec<T>> coordinates(const Vec<T>& v) const {
    Vec<T> coords(rows_.size(), T(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) coords[r] = v[pivots_[r]];
    Vec<T> rest = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (is_zero(coords[r])) continue;
      for (std::size_t k = 0; k < n_; ++k)
        if (!is_zero(rows_[r][k])) rest[k] -= coords[r] * rows_[r][k];
    }
    for (const auto& x : rest)
      if (!is_zero(x)) return std::nullopt;
    return coords;
  }

 private:
  std::size_t n_;
  std::vector<Vec<T>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class T>
std::size_t span_rank(const std::vector<Vec<T>>& vs, std::size_t n) {
  EchelonBasis<T> b(n);
  for (const auto& v : vs) b.add(v);
  return b.dim();
}

// Nonzero linear combinations c with sum_i c_i vs[i] = 0, as a basis of the relation space.
template <class T>
std::vector<Vec<T>> relations(const std::vector<Vec<T>>& vs, std::size_t n) {
  Matrix<T> m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  return kernel(std::move(m));
}

}  // namespace symobs
