#include "symobs/cohomology.hpp"

#include <algorithm>
#include <bit>

namespace symobs {

namespace {

using Key = std::uint64_t;
using SparseRow = std::map<int, Rational>;

constexpr Key bit(int i) { return Key{1} << i; }

std::vector<Key> subsets(int lo, int hi, int p) {
  std::vector<Key> out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = lo + i;
  if (p > hi - lo) return out;
  while (true) {
    Key k = 0;
    for (int i : idx) k |= bit(i);
    out.push_back(k);
    int i = p - 1;
    while (i >= 0 && idx[i] == hi - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

void axpy(SparseRow& r, const Rational& c, const SparseRow& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = r.emplace(k, -c * v);
    if (inserted) continue;
    it->second -= c * v;
    if (is_zero(it->second)) r.erase(it);
  }
}

// Null space of sparse rows over ncols columns; vector j is 1 at free column free[j]
// and 0 at the other free columns.
std::vector<SparseRow> sparse_kernel(std::vector<SparseRow> rows, int ncols, std::vector<int>& free) {
  std::map<int, SparseRow> pivots;
  for (auto& r : rows) {
    while (!r.empty()) {
      int c = r.begin()->first;
      auto it = pivots.find(c);
      if (it == pivots.end()) {
        Rational inv = 1 / r.begin()->second;
        for (auto& [k, v] : r) v *= inv;
        pivots.emplace(c, std::move(r));
        break;
      }
      Rational f = r.begin()->second;
      axpy(r, f, it->second);
    }
  }
  free.clear();
  for (int c = 0; c < ncols; ++c)
    if (!pivots.count(c)) free.push_back(c);
  std::vector<SparseRow> out;
  for (int f : free) {
    SparseRow v{{f, Rational(1)}};
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational s = 0;
      for (const auto& [k, c] : it->second)
        if (k != it->first)
          if (auto vk = v.find(k); vk != v.end()) s += c * vk->second;
      if (!is_zero(s)) v[it->first] = -s;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec<Rational>> independent(const std::vector<Vec<Rational>>& vs, std::size_t n) {
  EchelonBasis<Rational> e(n);
  std::vector<Vec<Rational>> out;
  for (const auto& v : vs)
    if (e.add(v)) out.push_back(v);
  return out;
}

AlternatingForm combine(const std::vector<AlternatingForm>& basis, const Vec<Rational>& coords, int degree, int n) {
  AlternatingForm out{degree, n, {}};
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (!is_zero(coords[j])) out = out + basis[j] * coords[j];
  return out;
}

Matrix<Rational> compose(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Matrix<Rational> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool all_zero(const Matrix<Rational>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

// Closed and exact cochains of degree p as forms.
std::vector<AlternatingForm> cocycles(const CochainComplex& c, std::size_t p) {
  const auto& basis = c.cochains[p];
  if (p >= c.differential.size()) return basis;
  std::vector<AlternatingForm> out;
  for (const auto& v : kernel(c.differential[p])) out.push_back(combine(basis, v, static_cast<int>(p), c.dim));
  return out;
}

std::vector<AlternatingForm> coboundaries(const CochainComplex& c, std::size_t p) {
  std::vector<AlternatingForm> out;
  if (p == 0 || p >= c.cochains.size()) return out;
  const auto& d = c.differential[p - 1];
  for (std::size_t j = 0; j < d.cols(); ++j) {
    Vec<Rational> col(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) col[i] = d(i, j);
    out.push_back(combine(c.cochains[p], col, static_cast<int>(p), c.dim));
  }
  return out;
}

std::vector<Vec<Rational>> columns(const Matrix<Rational>& m) {
  std::vector<Vec<Rational>> out(m.cols(), Vec<Rational>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j][i] = m(i, j);
  return out;
}

}  // namespace

CochainComplex relative_complex(const MatrixAlgebra& a, const std::vector<Vec<Rational>>& sub, const Caps& caps,
                                const std::vector<Vec<Rational>>& next) {
  const int n = a.dim();
  auto sub_basis = independent(sub, n);
  const int s = static_cast<int>(sub_basis.size());
  if (n - s > caps.max_quotient_dim)
    throw CapExceeded("relative complex: quotient dimension " + std::to_string(n - s) + " exceeds cap " +
                      std::to_string(caps.max_quotient_dim));
  EchelonBasis<Rational> span(n);
  for (const auto& v : sub_basis) span.add(v);
  for (const auto& x : sub_basis)
    for (const auto& y : sub_basis)
      if (!span.contains(a.bracket(x, y))) throw std::invalid_argument("relative complex: not a subalgebra");

  std::vector<Vec<Rational>> order = sub_basis;
  order.insert(order.end(), next.begin(), next.end());
  for (int i = 0; i < n; ++i) {
    Vec<Rational> e(n, Rational(0));
    e[i] = 1;
    order.push_back(std::move(e));
  }
  CochainComplex c;
  c.dim = n;
  c.sub_dim = s;
  c.basis_change = independent(order, n);
  c.structure = structure_constants(a, c.basis_change);
  const auto& st = c.structure;

  // L_m e^l = -sum_j c^l_{mj} e^j for m in sub.
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> dual(s, std::vector<std::vector<std::pair<int, Rational>>>(n));
  for (int m = 0; m < s; ++m)
    for (int j = 0; j < n; ++j)
      for (const auto& [l, v] : st.bracket(m, j)) dual[m][l].emplace_back(j, v);

  for (int p = 0; p <= n - s; ++p) {
    auto keys = subsets(s, n, p);
    std::map<std::pair<int, Key>, SparseRow> rows;
    for (int m = 0; m < s; ++m)
      for (std::size_t ci = 0; ci < keys.size(); ++ci) {
        std::vector<int> idx;
        for (Key k = keys[ci]; k; k &= k - 1) idx.push_back(std::countr_zero(k));
        for (std::size_t q = 0; q < idx.size(); ++q)
          for (const auto& [j, v] : dual[m][idx[q]]) {
            Key rest = keys[ci] & ~bit(idx[q]);
            if (rest & bit(j)) continue;
            if (j < s) throw EngineInconsistency("relative complex: subalgebra action leaves the quotient");
            bool neg = (std::popcount(rest & (bit(idx[q]) - 1)) + std::popcount(rest & (bit(j) - 1))) & 1;
            auto& r = rows[{m, rest | bit(j)}];
            Rational val = neg ? Rational(v) : Rational(-v);
            auto [it, inserted] = r.emplace(static_cast<int>(ci), val);
            if (!inserted) {
              it->second += val;
              if (is_zero(it->second)) r.erase(it);
            }
          }
      }
    std::vector<SparseRow> row_list;
    for (auto& [k, r] : rows)
      if (!r.empty()) row_list.push_back(std::move(r));
    std::vector<int> free;
    auto ker = sparse_kernel(std::move(row_list), static_cast<int>(keys.size()), free);
    std::vector<AlternatingForm> forms;
    std::vector<Key> pivots;
    for (std::size_t j = 0; j < ker.size(); ++j) {
      AlternatingForm f{p, n, {}};
      for (const auto& [ci, v] : ker[j]) f.coeffs.emplace(keys[ci], v);
      for (int m = 0; m < s; ++m)
        if (!lie_derivative(f, m, st).is_zero())
          throw EngineInconsistency("relative complex: cochain is not invariant");
      forms.push_back(std::move(f));
      pivots.push_back(keys[free[j]]);
    }
    c.cochains.push_back(std::move(forms));
    c.pivot_keys.push_back(std::move(pivots));
  }

  for (std::size_t p = 0; p + 1 < c.cochains.size(); ++p) {
    Matrix<Rational> d(c.cochains[p + 1].size(), c.cochains[p].size());
    for (std::size_t j = 0; j < c.cochains[p].size(); ++j) {
      auto w = exterior_derivative(c.cochains[p][j], st);
      auto coords = cochain_coordinates(c, w);
      if (!coords) throw EngineInconsistency("relative complex: differential leaves the invariant cochains");
      for (std::size_t i = 0; i < coords->size(); ++i) d(i, j) = (*coords)[i];
    }
    c.differential.push_back(std::move(d));
  }
  for (std::size_t p = 0; p + 1 < c.differential.size(); ++p)
    if (!all_zero(compose(c.differential[p + 1], c.differential[p])))
      throw EngineInconsistency("relative complex: d^2 != 0");
  return c;
}

std::optional<Vec<Rational>> cochain_coordinates(const CochainComplex& c, const AlternatingForm& f) {
  const auto p = static_cast<std::size_t>(f.degree);
  if (p >= c.cochains.size()) {
    if (f.is_zero()) return Vec<Rational>{};
    return std::nullopt;
  }
  const auto& keys = c.pivot_keys[p];
  Vec<Rational> coords(keys.size(), Rational(0));
  for (std::size_t j = 0; j < keys.size(); ++j)
    if (auto it = f.coeffs.find(keys[j]); it != f.coeffs.end()) coords[j] = it->second;
  if (!(combine(c.cochains[p], coords, f.degree, c.dim).coeffs == f.coeffs)) return std::nullopt;
  return coords;
}

std::vector<int> invariant_dims(const CochainComplex& c) {
  std::vector<int> out;
  for (const auto& v : c.cochains) out.push_back(static_cast<int>(v.size()));
  return out;
}

std::vector<int> cohomology_dims(const CochainComplex& c) {
  std::vector<int> ranks;
  for (const auto& d : c.differential) ranks.push_back(static_cast<int>(rank(d)));
  std::vector<int> out;
  for (std::size_t p = 0; p < c.cochains.size(); ++p) {
    int h = static_cast<int>(c.cochains[p].size());
    if (p < ranks.size()) h -= ranks[p];
    if (p > 0) h -= ranks[p - 1];
    out.push_back(h);
  }
  return out;
}

AlternatingForm to_adapted(const AlternatingForm& f, const CochainComplex& c) {
  Matrix<Rational> b(c.dim, c.dim);
  for (int j = 0; j < c.dim; ++j)
    for (int i = 0; i < c.dim; ++i) b(i, j) = c.basis_change[j][i];
  return pullback(f, b);
}

CohomologyReport injectivity_i(const MatrixAlgebra& a, const std::vector<Vec<Rational>>& h,
                               const std::vector<Vec<Rational>>& k_h, const Caps& caps) {
  const int n = a.dim();
  EchelonBasis<Rational> hb(n);
  for (const auto& v : h) hb.add(v);
  for (const auto& v : k_h)
    if (!hb.contains(v)) throw std::invalid_argument("injectivity_i: k_H is not contained in h");

  std::vector<Vec<Rational>> flag = k_h;
  flag.insert(flag.end(), h.begin(), h.end());
  auto ch = relative_complex(a, flag, caps);
  auto ck = relative_complex(a, k_h, caps, h);
  if (ch.basis_change != ck.basis_change) throw EngineInconsistency("injectivity_i: adapted bases differ");

  CohomologyReport rep;
  rep.h_dims = cohomology_dims(ch);
  rep.kh_dims = cohomology_dims(ck);
  for (std::size_t p = 0; p < ch.cochains.size(); ++p) {
    auto z_h = cocycles(ch, p);
    auto b_h = coboundaries(ch, p);
    auto b_k = coboundaries(ck, p);
    auto both = z_h;
    both.insert(both.end(), b_k.begin(), b_k.end());
    std::size_t meet = forms_rank(z_h) + forms_rank(b_k) - forms_rank(both);
    bool inj = meet == forms_rank(b_h);
    rep.injective_in_degree.push_back(inj);
    rep.injective = rep.injective && inj;
  }
  return rep;
}

CohomologyReport injectivity_i(const PairRealization& r, const Caps& caps) {
  auto h = columns(r.embed);
  std::vector<Vec<Rational>> k_h;
  for (const auto& v : r.h.theta_fixed_basis()) {
    Vec<Rational> x(r.g.dim(), Rational(0));
    for (int i = 0; i < r.g.dim(); ++i)
      for (int j = 0; j < r.h.dim(); ++j) x[i] += r.embed(i, j) * v[j];
    k_h.push_back(std::move(x));
  }
  return injectivity_i(r.g, h, k_h, caps);
}

KaehlerReport kaehler_check(const MatrixAlgebra& a, const Caps& caps) {
  const int n = a.dim();
  auto k = a.theta_fixed_basis();
  KaehlerReport rep;
  rep.quotient_dim = n - static_cast<int>(k.size());

  // Center of k.
  std::vector<Vec<Rational>> rows;
  for (std::size_t j = 0; j < k.size(); ++j) {
    std::vector<Vec<Rational>> br;
    for (const auto& ki : k) br.push_back(a.bracket(ki, k[j]));
    for (int r = 0; r < n; ++r) {
      Vec<Rational> row(k.size());
      for (std::size_t i = 0; i < k.size(); ++i) row[i] = br[i][r];
      rows.push_back(std::move(row));
    }
  }
  auto center = kernel(Matrix<Rational>::from_rows(rows, k.size()));
  rep.center_dim = static_cast<int>(center.size());
  if (rep.center_dim != 1)
    throw std::invalid_argument("kaehler_check: center of k has dimension " + std::to_string(rep.center_dim));
  Vec<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < k.size(); ++i)
    for (int r = 0; r < n; ++r) x[r] += center[0][i] * k[i][r];

  const CMatrix xm = a.element(x);
  AlternatingForm f{1, n, {}};
  for (int j = 0; j < n; ++j) f.set(Key{1} << j, trace(multiply(xm, a.basis()[j])).re);
  auto omega = exterior_derivative(f, a);

  auto ck = relative_complex(a, k, caps);
  auto omega_k = to_adapted(omega, ck);
  if (!cochain_coordinates(ck, omega_k)) throw EngineInconsistency("kaehler_check: omega is not a (g,k) cochain");
  rep.class_nonzero = !omega.is_zero() && !form_in_span(coboundaries(ck, 2), omega_k);

  std::vector<Vec<Rational>> kss;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) kss.push_back(a.bracket(k[i], k[j]));
  auto cs = relative_complex(a, kss, caps);
  auto f_s = to_adapted(f, cs);
  rep.exact_mod_kss = cochain_coordinates(cs, f_s).has_value() && exterior_derivative(f_s, cs.structure) == to_adapted(omega, cs);

  // Stab_g(F) = {Y : F([Y, Z]) = 0 for all Z}.
  Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [l, c] : a.bracket(i, j))
        if (auto it = f.coeffs.find(Key{1} << l); it != f.coeffs.end()) m(j, i) += c * it->second;
  auto stab = kernel(std::move(m));
  auto joint = stab;
  joint.insert(joint.end(), k.begin(), k.end());
  rep.stabilizer_is_k = span_rank(stab, n) == k.size() && span_rank(joint, n) == k.size();

  if (rep.quotient_dim <= 6 && rep.quotient_dim % 2 == 0) {
    AlternatingForm power{0, n, {{Key{0}, Rational(1)}}};
    for (int i = 0; i < rep.quotient_dim / 2; ++i) power = wedge(power, omega);
    rep.top_power_nonzero = !power.is_zero();
  }
  return rep;
}

nlohmann::json to_json(const CohomologyReport& r) {
  return {{"h_dims", r.h_dims},
          {"kh_dims", r.kh_dims},
          {"injective_in_degree", r.injective_in_degree},
          {"injective", r.injective}};
}

nlohmann::json to_json(const KaehlerReport& r) {
  nlohmann::json j = {{"center_dim", r.center_dim},
                      {"quotient_dim", r.quotient_dim},
                      {"class_nonzero", r.class_nonzero},
                      {"exact_mod_kss", r.exact_mod_kss},
                      {"stabilizer_is_k", r.stabilizer_is_k},
                      {"passed", r.passed()}};
  j["top_power_nonzero"] = r.top_power_nonzero ? nlohmann::json(*r.top_power_nonzero) : nlohmann::json(nullptr);
  return j;
}

}  // namespace symobs
