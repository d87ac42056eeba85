#pragma once

// Sparse multivariate polynomials with rational coefficients, plus the
// Gaussian pairs used to carry complex-valued invariants.

#include "symobs/exact.hpp"
#include "symobs/linalg.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symobs {

// A monomial packs its sorted variable indices, six bits each (index + 1).
using Monomial = std::uint64_t;
constexpr int kMaxVariables = 63;
constexpr int kMaxMonomialDegree = 10;

Monomial make_monomial(std::vector<int> vars);
std::vector<int> monomial_vars(Monomial m);
int monomial_degree(Monomial m);
Monomial monomial_product(Monomial a, Monomial b);

struct Poly {
  std::map<Monomial, Rational> terms;  // zero coefficients never stored

  Poly() = default;
  Poly(long c);
  Poly(const Rational& c);
  static Poly variable(int i);

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int d) const;
  Rational coefficient(Monomial m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  bool operator==(const Poly& o) const { return terms == o.terms; }
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(Poly a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rational& c);
inline bool is_zero(const Poly& p) { return p.is_zero(); }

Rational evaluate(const Poly& p, const Vec<Rational>& x);

// Replaces x_i by the linear form images[i] in new variables.
using LinearForm = std::vector<std::pair<int, Rational>>;
Poly substitute(const Poly& p, const std::vector<LinearForm>& images);

// Value of the symmetric multilinear form of a homogeneous polynomial of degree
// vars.size() on the basis vectors e_{vars[0]}, ..., e_{vars[d-1]}.
Rational polarized(const Poly& p, std::vector<int> vars);

// Linear algebra on polynomials viewed as coefficient vectors.
std::size_t poly_rank(const std::vector<Poly>& ps);
bool poly_in_span(const std::vector<Poly>& ps, const Poly& q);
// Basis of the relations sum c_i ps[i] = 0.
std::vector<Vec<Rational>> poly_relations(const std::vector<Poly>& ps);

struct GaussPoly {
  Poly re;
  Poly im;

  GaussPoly() = default;
  GaussPoly(long c) : re(c) {}
  GaussPoly(Poly r, Poly i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussPoly& operator+=(const GaussPoly& o);
  GaussPoly& operator-=(const GaussPoly& o);
};

GaussPoly operator+(GaussPoly a, const GaussPoly& b);
GaussPoly operator-(GaussPoly a, const GaussPoly& b);
GaussPoly operator-(const GaussPoly& a);
GaussPoly operator*(const GaussPoly& a, const GaussPoly& b);
inline bool is_zero(const GaussPoly& p) { return p.is_zero(); }

inline Rational divide_by(const Rational& x, long k) { return x / k; }
inline GaussRational divide_by(const GaussRational& x, long k) { return {x.re / k, x.im / k}; }
inline Poly divide_by(const Poly& x, long k) { return x * (Rational(1) / k); }
inline GaussPoly divide_by(const GaussPoly& x, long k) { return {divide_by(x.re, k), divide_by(x.im, k)}; }

// Coefficients c_1..c_n of det(lambda I - A) = lambda^n + c_1 lambda^{n-1} + ... + c_n,
// by the Faddeev-LeVerrier recursion.
template <class T>
std::vector<T> char_poly_coefficients(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<T> c;
  Matrix<T> m(n, n);  // M_0 = 0
  T prev(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (is_zero(a(i, l))) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(m(l, j))) next(i, j) += a(i, l) * m(l, j);
      }
    for (std::size_t i = 0; i < n; ++i) next(i, i) += prev;
    T tr(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (!is_zero(a(i, l)) && !is_zero(next(l, i))) tr += a(i, l) * next(l, i);
    T ck = -divide_by(tr, static_cast<long>(k));
    c.push_back(ck);
    prev = ck;
    m = std::move(next);
  }
  return c;
}

// Pfaffian by expansion along the first row; requires an even skew-symmetric matrix.
template <class T>
T pfaffian(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n || n % 2 != 0) throw std::invalid_argument("pfaffian: even square matrix required");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(a(i, j) + a(j, i))) throw std::invalid_argument("pfaffian: matrix is not skew");
  if (n == 0) return T(1);
  T total(0);
  for (std::size_t j = 1; j < n; ++j) {
    if (is_zero(a(0, j))) continue;
    Matrix<T> minor(n - 2, n - 2);
    std::size_t r = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (i == j) continue;
      std::size_t c = 0;
      for (std::size_t k = 1; k < n; ++k) {
        if (k == j) continue;
        minor(r, c++) = a(i, k);
      }
      ++r;
    }
    T term = a(0, j) * pfaffian(minor);
    if (j % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

template <class T>
T determinant(Matrix<T> a) {
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    T inv = T(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(a(r, c))) continue;
      T f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

}  // namespace symobs
