#pragma once

// Brute-force reference computations used only by tests. None of them share
// code paths with the engines they check.

#include "symobs/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using symobs::Matrix;
using symobs::Rational;
using symobs::Vec;

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Leibniz expansion.
template <class T>
T leibniz_det(const Matrix<T>& a) {
  std::vector<int> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  T total(0);
  do {
    T t(permutation_sign(p));
    for (std::size_t i = 0; i < p.size(); ++i) t = t * a(i, p[i]);
    total = total + t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Coefficients of det(lambda I - A) by expanding over subsets: c_k = (-1)^k sum of principal k-minors.
inline std::vector<Rational> char_poly_by_minors(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n, Rational(0));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Matrix<Rational> m(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = a(idx[i], idx[j]);
    Rational d = leibniz_det(m);
    c[idx.size() - 1] += (idx.size() % 2 ? Rational(-d) : d);
  }
  return c;
}

// Coordinates of [b_i, b_j] computed from the basis matrices directly.
inline Vec<Rational> bracket(const symobs::MatrixAlgebra& a, const Vec<Rational>& x, const Vec<Rational>& y) {
  auto c = a.coordinates(symobs::commutator(a.element(x), a.element(y)));
  if (!c) throw std::runtime_error("oracle: bracket left the algebra");
  return *c;
}

inline Vec<Rational> unit(int n, int i) {
  Vec<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

// Symmetric multilinear form of a homogeneous polynomial by full symmetrization
// over monomial coefficients: P~(v_1..v_d) = (1/d!) sum_sigma partial derivatives.
inline Rational polarized_multilinear(const symobs::Poly& p, const std::vector<Vec<Rational>>& vs) {
  const int d = static_cast<int>(vs.size());
  Rational total = 0;
  for (const auto& [m, c] : p.terms) {
    auto vars = symobs::monomial_vars(m);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    Rational s = 0;
    do {
      Rational t = 1;
      for (int i = 0; i < d; ++i) t *= vs[perm[i]][vars[i]];
      s += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += c * s;
  }
  Rational fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return total / fact;
}

// rho(P)(X_1..X_{2d-1}) by the sum over the full symmetric group.
inline Rational cartan_by_permutations(const symobs::MatrixAlgebra& a, const symobs::Poly& p, int d,
                                       const std::vector<Vec<Rational>>& xs) {
  const int m = 2 * d - 1;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    std::vector<Vec<Rational>> args{xs[perm[0]]};
    for (int k = 1; k < m; k += 2) args.push_back(bracket(a, xs[perm[k]], xs[perm[k + 1]]));
    Rational v = polarized_multilinear(p, args);
    total += permutation_sign(perm) == 1 ? v : Rational(-v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Dense relative Chevalley-Eilenberg cohomology of (g, sub), cochains enumerated
// as functions on sorted index tuples of a complement, via evaluation formulas.
struct DenseCohomology {
  std::vector<int> invariant_dims;
  std::vector<int> betti;
};

inline DenseCohomology dense_relative_cohomology(const symobs::MatrixAlgebra& a, const std::vector<Vec<Rational>>& sub) {
  const int n = a.dim();
  // Basis: independent sub vectors, then unit vectors.
  std::vector<Vec<Rational>> basis;
  auto try_add = [&](const Vec<Rational>& v) {
    auto all = basis;
    all.push_back(v);
    if (symobs::span_rank(all, n) > basis.size()) basis.push_back(v);
  };
  for (const auto& v : sub) try_add(v);
  const int s = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i) try_add(unit(n, i));
  // Coordinates in the new basis by solving.
  Matrix<Rational> bm(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) bm(i, j) = basis[j][i];
  auto coords = [&](const Vec<Rational>& v) {
    Matrix<Rational> aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = bm(i, j);
      aug(i, n) = v[i];
    }
    symobs::rref(aug);
    Vec<Rational> out(n);
    for (int i = 0; i < n; ++i) out[i] = aug(i, n);
    return out;
  };
  std::vector<std::vector<Vec<Rational>>> br(n, std::vector<Vec<Rational>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) br[i][j] = coords(bracket(a, basis[i], basis[j]));

  const int q = n - s;
  // Tuples of quotient indices s..n-1 of each size.
  std::vector<std::vector<std::vector<int>>> tuples(q + 1);
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    std::vector<int> t;
    for (int i = 0; i < q; ++i)
      if (mask & (1u << i)) t.push_back(s + i);
    tuples[t.size()].push_back(t);
  }
  auto index_of = [&](const std::vector<int>& t) {
    return static_cast<std::size_t>(std::find(tuples[t.size()].begin(), tuples[t.size()].end(), t) -
                                    tuples[t.size()].begin());
  };
  // Value of a cochain (vector over tuples[p]) on basis vectors with arbitrary indices.
  auto value = [&](const Vec<Rational>& f, std::vector<int> idx) -> Rational {
    for (int i : idx)
      if (i < s) return 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (idx[i] == idx[j]) return 0;
    int sign = permutation_sign(idx);
    std::sort(idx.begin(), idx.end());
    Rational v = f[index_of(idx)];
    return sign == 1 ? v : Rational(-v);
  };
  // Multilinear extension in the adapted basis.
  auto eval = [&](const Vec<Rational>& f, const std::vector<Vec<Rational>>& args) {
    Rational total = 0;
    std::vector<int> idx(args.size());
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational c) {
      if (k == args.size()) {
        total += c * value(f, idx);
        return;
      }
      for (int i = 0; i < n; ++i) {
        if (symobs::is_zero(args[k][i])) continue;
        idx[k] = i;
        rec(k + 1, c * args[k][i]);
      }
    };
    rec(0, Rational(1));
    return total;
  };

  DenseCohomology out;
  std::vector<std::vector<Vec<Rational>>> inv(q + 1);
  for (int p = 0; p <= q; ++p) {
    const std::size_t dim = tuples[p].size();
    // (L_m f)(t) = -sum_k f(t_1, .., [e_m, e_tk], .., t_p)
    std::vector<Vec<Rational>> rows;
    for (int m = 0; m < s; ++m)
      for (const auto& t : tuples[p]) {
        Vec<Rational> row(dim, Rational(0));
        for (std::size_t c = 0; c < dim; ++c) {
          Vec<Rational> f(dim, Rational(0));
          f[c] = 1;
          Rational v = 0;
          for (std::size_t k = 0; k < t.size(); ++k) {
            std::vector<Vec<Rational>> args;
            for (std::size_t l = 0; l < t.size(); ++l) args.push_back(l == k ? br[m][t[l]] : unit(n, t[l]));
            v -= eval(f, args);
          }
          row[c] = v;
        }
        rows.push_back(std::move(row));
      }
    inv[p] = symobs::kernel(Matrix<Rational>::from_rows(rows, dim));
    out.invariant_dims.push_back(static_cast<int>(inv[p].size()));
  }
  // (df)(x_0..x_p) = sum_{i<j} (-1)^{i+j} f([x_i,x_j], x_0..^i..^j..x_p)
  std::vector<int> ranks;
  for (int p = 0; p < q; ++p) {
    std::vector<Vec<Rational>> images;
    for (const auto& f : inv[p]) {
      Vec<Rational> df(tuples[p + 1].size(), Rational(0));
      for (std::size_t r = 0; r < tuples[p + 1].size(); ++r) {
        const auto& t = tuples[p + 1][r];
        Rational v = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
          for (std::size_t j = i + 1; j < t.size(); ++j) {
            std::vector<Vec<Rational>> args{br[t[i]][t[j]]};
            for (std::size_t k = 0; k < t.size(); ++k)
              if (k != i && k != j) args.push_back(unit(n, t[k]));
            Rational e = eval(f, args);
            v += ((i + j) % 2) ? Rational(-e) : e;
          }
        df[r] = v;
      }
      images.push_back(std::move(df));
    }
    ranks.push_back(static_cast<int>(symobs::span_rank(images, tuples[p + 1].size())));
  }
  for (int p = 0; p <= q; ++p) {
    int h = out.invariant_dims[p];
    if (p < q) h -= ranks[p];
    if (p > 0) h -= ranks[p - 1];
    out.betti.push_back(h);
  }
  return out;
}

}  // namespace oracle
