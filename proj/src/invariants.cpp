#include "symobs/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace symobs {

namespace {

using Key = std::uint64_t;

constexpr Key bit(int i) { return Key{1} << i; }

void add_to(std::map<Key, Rational>& m, Key k, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = m.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (is_zero(it->second)) m.erase(it);
}

// Sorts a sequence of distinct indices into a key; false when an index repeats.
bool sequence_key(const std::vector<int>& seq, Key& key, bool& negative) {
  key = 0;
  negative = false;
  for (int x : seq) {
    if (key & bit(x)) return false;
    if (std::popcount(key >> (x + 1)) & 1) negative = !negative;
    key |= bit(x);
  }
  return true;
}

void add_sequence(std::map<Key, Rational>& m, const std::vector<int>& seq, const Rational& c) {
  Key k;
  bool neg;
  if (!sequence_key(seq, k, neg)) return;
  add_to(m, k, neg ? Rational(-c) : c);
}

std::vector<int> key_indices(Key k) {
  std::vector<int> out;
  while (k) {
    int i = std::countr_zero(k);
    out.push_back(i);
    k &= k - 1;
  }
  return out;
}


std::vector<SparseVec> sparse_rows(const Matrix<Rational>& m) {
  std::vector<SparseVec> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) out[i].emplace_back(static_cast<int>(j), m(i, j));
  return out;
}

// Omega^l as (i, j, c^l_ij) with i < j.
struct StructureTerm {
  int i, j;
  Rational c;
};

std::vector<std::vector<StructureTerm>> structure_by_target(const StructureConstants& a) {
  std::vector<std::vector<StructureTerm>> out(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j)
      for (const auto& [l, c] : a.bracket(i, j)) out[l].push_back({i, j, c});
  return out;
}

Poly linear_poly(const Vec<Rational>& v) {
  Poly p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) p += Poly::variable(static_cast<int>(i)) * v[i];
  return p;
}

Poly partial(const Poly& p, int var) {
  Poly out;
  for (const auto& [m, c] : p.terms) {
    auto vars = monomial_vars(m);
    long mult = std::count(vars.begin(), vars.end(), var);
    if (!mult) continue;
    vars.erase(std::find(vars.begin(), vars.end(), var));
    Poly t;
    t.terms.emplace(make_monomial(vars), c * mult);
    out += t;
  }
  return out;
}

struct NamedPoly {
  std::string name;
  Poly poly;
};

std::vector<NamedPoly> named_products(const std::vector<InvariantPolynomial>& gens, int d) {
  std::vector<NamedPoly> out;
  std::function<void(std::size_t, int, NamedPoly)> rec = [&](std::size_t start, int left, NamedPoly acc) {
    if (left == 0) {
      out.push_back(std::move(acc));
      return;
    }
    for (std::size_t g = start; g < gens.size(); ++g) {
      if (gens[g].degree > left) continue;
      NamedPoly next{acc.name.empty() ? gens[g].name : acc.name + "*" + gens[g].name,
                     acc.name.empty() ? gens[g].poly : acc.poly * gens[g].poly};
      rec(g, left - gens[g].degree, std::move(next));
    }
  };
  if (d > 0) rec(0, d, NamedPoly{"", Poly(1)});
  return out;
}

}  // namespace

Matrix<GaussPoly> generic_block(const MatrixAlgebra& a, const Block& b) {
  Matrix<GaussPoly> x(b.size, b.size);
  for (int k = 0; k < a.dim(); ++k) {
    const CMatrix& m = a.basis()[k];
    Poly var = Poly::variable(k);
    for (int r = 0; r < b.size; ++r)
      for (int c = 0; c < b.size; ++c) {
        const auto& z = m(b.offset + r, b.offset + c);
        if (!is_zero(z.re)) x(r, c).re += var * z.re;
        if (!is_zero(z.im)) x(r, c).im += var * z.im;
      }
  }
  return x;
}

std::vector<InvariantPolynomial> char_poly_invariants(const MatrixAlgebra& a) {
  std::vector<InvariantPolynomial> out;
  const auto& blocks = a.blocks();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& b = blocks[bi];
    auto x = generic_block(a, b);
    auto coeffs = char_poly_coefficients(x);
    std::string suffix = "[" + std::to_string(bi) + "]";
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      int deg = static_cast<int>(k + 1);
      out.push_back({"Re f" + std::to_string(deg) + suffix, deg, coeffs[k].re});
      out.push_back({"Im f" + std::to_string(deg) + suffix, deg, coeffs[k].im});
    }
    if (b.pfaffian_form) {
      Matrix<GaussPoly> y(b.size, b.size);
      const CMatrix& f = *b.pfaffian_form;
      for (int r = 0; r < b.size; ++r)
        for (int l = 0; l < b.size; ++l) {
          const auto& z = f(r, l);
          if (z.is_zero()) continue;
          GaussPoly s(Poly(z.re), Poly(z.im));
          for (int c = 0; c < b.size; ++c)
            if (!x(l, c).is_zero()) y(r, c) += s * x(l, c);
        }
      auto pf = pfaffian(y);
      out.push_back({"Re pf" + suffix, b.size / 2, pf.re});
      out.push_back({"Im pf" + suffix, b.size / 2, pf.im});
    }
  }
  return out;
}

std::vector<InvariantPolynomial> linear_invariants(const MatrixAlgebra& a) {
  const int n = a.dim();
  std::vector<Vec<Rational>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a.bracket(i, j).empty()) continue;
      Vec<Rational> v(n, Rational(0));
      for (const auto& [l, c] : a.bracket(i, j)) v[l] = c;
      rows.push_back(std::move(v));
    }
  std::vector<InvariantPolynomial> out;
  int k = 0;
  for (const auto& phi : kernel(Matrix<Rational>::from_rows(rows, n)))
    out.push_back({"lin" + std::to_string(k++), 1, linear_poly(phi)});
  return out;
}

std::vector<InvariantPolynomial> generators(const MatrixAlgebra& a) {
  auto cands = linear_invariants(a);
  for (auto& c : char_poly_invariants(a))
    if (!c.poly.is_zero()) cands.push_back(std::move(c));
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& x, const auto& y) { return x.degree < y.degree; });
  std::vector<InvariantPolynomial> kept;
  for (auto& c : cands) {
    if (c.poly.is_zero()) continue;
    if (!poly_in_span(products_of_degree(kept, c.degree), c.poly)) kept.push_back(std::move(c));
  }
  return kept;
}

std::vector<Poly> products_of_degree(const std::vector<InvariantPolynomial>& gens, int d) {
  std::vector<Poly> out;
  for (auto& np : named_products(gens, d)) out.push_back(std::move(np.poly));
  return out;
}

bool is_ad_invariant(const Poly& p, const MatrixAlgebra& a) {
  const int n = a.dim();
  std::vector<Poly> partials(n);
  for (int j = 0; j < n; ++j) partials[j] = partial(p, j);
  for (int i = 0; i < n; ++i) {
    // ([e_i, X])_j = sum_k x_k c^j_{ik}
    std::vector<Poly> ad(n);
    for (int k = 0; k < n; ++k)
      for (const auto& [j, c] : a.bracket(i, k)) ad[j] += Poly::variable(k) * c;
    Poly total;
    for (int j = 0; j < n; ++j)
      if (!partials[j].is_zero() && !ad[j].is_zero()) total += partials[j] * ad[j];
    if (!total.is_zero()) return false;
  }
  return true;
}

void AlternatingForm::set(std::uint64_t key, const Rational& v) {
  if (symobs::is_zero(v)) coeffs.erase(key);
  else coeffs[key] = v;
}

Rational evaluate_basis(const AlternatingForm& f, const std::vector<int>& idx) {
  Key k;
  bool neg;
  if (!sequence_key(idx, k, neg)) return 0;
  auto it = f.coeffs.find(k);
  if (it == f.coeffs.end()) return 0;
  return neg ? Rational(-it->second) : it->second;
}

Rational evaluate(const AlternatingForm& f, const std::vector<SparseVec>& vs) {
  if (static_cast<int>(vs.size()) != f.degree) throw std::invalid_argument("evaluate: wrong number of arguments");
  Rational total = 0;
  std::function<void(std::size_t, Key, bool, Rational)> rec = [&](std::size_t p, Key key, bool neg, Rational c) {
    if (p == vs.size()) {
      auto it = f.coeffs.find(key);
      if (it != f.coeffs.end()) total += neg ? Rational(-c * it->second) : Rational(c * it->second);
      return;
    }
    for (const auto& [i, v] : vs[p]) {
      if (key & bit(i)) continue;
      bool flip = std::popcount(key >> (i + 1)) & 1;
      rec(p + 1, key | bit(i), neg != flip, c * v);
    }
  };
  rec(0, 0, false, Rational(1));
  return total;
}

AlternatingForm operator+(const AlternatingForm& a, const AlternatingForm& b) {
  if (a.degree != b.degree) throw std::invalid_argument("form degrees differ");
  AlternatingForm out = a;
  for (const auto& [k, c] : b.coeffs) add_to(out.coeffs, k, c);
  return out;
}

AlternatingForm operator*(const AlternatingForm& a, const Rational& c) {
  AlternatingForm out{a.degree, a.n, {}};
  if (is_zero(c)) return out;
  for (const auto& [k, v] : a.coeffs) out.coeffs.emplace(k, v * c);
  return out;
}

AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b) {
  AlternatingForm out{a.degree + b.degree, std::max(a.n, b.n), {}};
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs) {
      if (ka & kb) continue;
      int inv = 0;
      for (Key r = kb; r; r &= r - 1) inv += std::popcount(ka >> (std::countr_zero(r) + 1));
      add_to(out.coeffs, ka | kb, (inv & 1) ? Rational(-ca * cb) : Rational(ca * cb));
    }
  return out;
}

namespace {

std::vector<Vec<Rational>> form_vectors(const std::vector<AlternatingForm>& fs, std::size_t& n) {
  std::map<Key, std::size_t> index;
  for (const auto& f : fs)
    for (const auto& [k, c] : f.coeffs) index.emplace(k, 0);
  n = 0;
  for (auto& [k, i] : index) i = n++;
  std::vector<Vec<Rational>> out;
  for (const auto& f : fs) {
    Vec<Rational> v(n, Rational(0));
    for (const auto& [k, c] : f.coeffs) v[index[k]] = c;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::size_t forms_rank(const std::vector<AlternatingForm>& fs) {
  std::size_t n = 0;
  auto vs = form_vectors(fs, n);
  return span_rank(vs, n);
}

bool form_in_span(const std::vector<AlternatingForm>& fs, const AlternatingForm& f) {
  if (f.is_zero()) return true;
  auto all = fs;
  all.push_back(f);
  return forms_rank(all) == forms_rank(fs);
}

StructureConstants structure_constants(const MatrixAlgebra& a) {
  StructureConstants s;
  s.dim = a.dim();
  s.brackets.reserve(static_cast<std::size_t>(s.dim) * s.dim);
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) s.brackets.push_back(a.bracket(i, j));
  return s;
}

StructureConstants structure_constants(const MatrixAlgebra& a, const std::vector<Vec<Rational>>& basis) {
  const int n = static_cast<int>(basis.size());
  if (n != a.dim()) throw std::invalid_argument("structure_constants: basis has wrong size");
  // Coordinates in the new basis: solve [basis | v].
  Matrix<Rational> m(n, 2 * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = basis[j][i];
  for (int i = 0; i < n; ++i) m(i, n + i) = 1;
  if (rref(m).size() != static_cast<std::size_t>(n) || is_zero(m(n - 1, n - 1)))
    throw std::invalid_argument("structure_constants: vectors do not form a basis");
  StructureConstants s;
  s.dim = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto v = a.bracket(basis[i], basis[j]);
      SparseVec out;
      for (int r = 0; r < n; ++r) {
        Rational c = 0;
        for (int k = 0; k < n; ++k)
          if (!is_zero(v[k])) c += m(r, n + k) * v[k];
        if (!is_zero(c)) out.emplace_back(r, c);
      }
      s.brackets.push_back(std::move(out));
    }
  return s;
}

AlternatingForm exterior_derivative(const AlternatingForm& f, const MatrixAlgebra& a) {
  return exterior_derivative(f, structure_constants(a));
}

AlternatingForm lie_derivative(const AlternatingForm& f, int m, const MatrixAlgebra& a) {
  return lie_derivative(f, m, structure_constants(a));
}

AlternatingForm exterior_derivative(const AlternatingForm& f, const StructureConstants& a) {
  auto omega = structure_by_target(a);
  AlternatingForm out{f.degree + 1, a.dim, {}};
  std::vector<int> seq;
  for (const auto& [key, c] : f.coeffs) {
    auto s = key_indices(key);
    for (std::size_t p = 0; p < s.size(); ++p) {
      // d e^l = -Omega^l
      Rational sign = (p % 2 == 0) ? Rational(-c) : Rational(c);
      for (const auto& t : omega[s[p]]) {
        seq.assign(s.begin(), s.begin() + p);
        seq.push_back(t.i);
        seq.push_back(t.j);
        seq.insert(seq.end(), s.begin() + p + 1, s.end());
        add_sequence(out.coeffs, seq, sign * t.c);
      }
    }
  }
  return out;
}

AlternatingForm lie_derivative(const AlternatingForm& f, int m, const StructureConstants& a) {
  // L_m e^l = -sum_j c^l_{mj} e^j
  std::vector<std::vector<std::pair<int, Rational>>> dual(a.dim);
  for (int j = 0; j < a.dim; ++j)
    for (const auto& [l, c] : a.bracket(m, j)) dual[l].emplace_back(j, c);
  AlternatingForm out{f.degree, a.dim, {}};
  for (const auto& [key, c] : f.coeffs) {
    auto s = key_indices(key);
    for (std::size_t p = 0; p < s.size(); ++p)
      for (const auto& [j, cc] : dual[s[p]]) {
        auto seq = s;
        seq[p] = j;
        add_sequence(out.coeffs, seq, -c * cc);
      }
  }
  return out;
}

bool is_invariant(const AlternatingForm& f, const MatrixAlgebra& a) {
  auto s = structure_constants(a);
  for (int m = 0; m < s.dim; ++m)
    if (!lie_derivative(f, m, s).is_zero()) return false;
  return true;
}

bool is_closed(const AlternatingForm& f, const MatrixAlgebra& a) { return exterior_derivative(f, a).is_zero(); }

AlternatingForm pullback(const AlternatingForm& f, const Matrix<Rational>& map) {
  // e^s pulls back to sum_j map(s, j) e^j.
  auto rows = sparse_rows(map);
  AlternatingForm out{f.degree, static_cast<int>(map.cols()), {}};
  for (const auto& [key, c] : f.coeffs) {
    auto s = key_indices(key);
    std::function<void(std::size_t, Key, bool, Rational)> rec = [&](std::size_t p, Key k, bool neg, Rational v) {
      if (p == s.size()) {
        add_to(out.coeffs, k, neg ? Rational(-v) : v);
        return;
      }
      for (const auto& [j, w] : rows[s[p]]) {
        if (k & bit(j)) continue;
        bool flip = std::popcount(k >> (j + 1)) & 1;
        rec(p + 1, k | bit(j), neg != flip, v * w);
      }
    };
    rec(0, 0, false, c);
  }
  return out;
}

AlternatingForm theta_pullback(const AlternatingForm& f, const MatrixAlgebra& a) { return pullback(f, a.theta()); }

AlternatingForm cartan_map(const Poly& p, int degree, const MatrixAlgebra& a, const Caps& caps) {
  if (degree < 1) throw std::invalid_argument("cartan_map: degree must be positive");
  if (2 * degree - 1 > caps.max_form_degree)
    throw CapExceeded("cartan_map: form degree " + std::to_string(2 * degree - 1) + " exceeds cap " +
                      std::to_string(caps.max_form_degree));
  if (a.dim() > caps.max_dim) throw CapExceeded("cartan_map: dimension exceeds cap");
  if (!p.is_homogeneous(degree)) throw std::invalid_argument("cartan_map: polynomial is not homogeneous");
  const int n = a.dim();

  std::vector<AlternatingForm> omega(n, AlternatingForm{2, n, {}});
  {
    auto st = structure_by_target(structure_constants(a));
    for (int l = 0; l < n; ++l)
      for (const auto& t : st[l]) add_to(omega[l].coeffs, bit(t.i) | bit(t.j), t.c);
  }
  std::map<Monomial, AlternatingForm> products;
  std::function<const AlternatingForm&(const std::vector<int>&)> product =
      [&](const std::vector<int>& ls) -> const AlternatingForm& {
    Monomial key = make_monomial(ls);
    if (auto it = products.find(key); it != products.end()) return it->second;
    AlternatingForm f;
    if (ls.empty()) {
      f = AlternatingForm{0, n, {{Key{0}, Rational(1)}}};
    } else {
      std::vector<int> rest(ls.begin(), ls.end() - 1);
      f = wedge(product(rest), omega[ls.back()]);
    }
    return products.emplace(key, std::move(f)).first->second;
  };

  Rational scale = Rational(mpz_class(1) << (degree - 1)) / degree;
  AlternatingForm out{2 * degree - 1, n, {}};
  for (const auto& [m, c] : p.terms) {
    auto vars = monomial_vars(m);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i > 0 && vars[i] == vars[i - 1]) continue;
      long mult = std::count(vars.begin(), vars.end(), vars[i]);
      std::vector<int> rest = vars;
      rest.erase(rest.begin() + i);
      const auto& w = product(rest);
      if (w.is_zero()) continue;
      AlternatingForm ea{1, n, {{bit(vars[i]), Rational(1)}}};
      auto term = wedge(ea, w);
      Rational f = c * scale * mult;
      for (const auto& [k, v] : term.coeffs) add_to(out.coeffs, k, v * f);
    }
  }
  return out;
}

std::vector<PrimitiveForm> primitive_minus_theta_basis(const MatrixAlgebra& a, const Caps& caps) {
  if (a.dim() > caps.max_dim) throw CapExceeded("primitive basis: dimension exceeds cap");
  auto gens = generators(a);
  int max_deg = 0;
  for (const auto& g : gens) max_deg = std::max(max_deg, g.degree);

  auto k_basis = a.theta_fixed_basis();
  std::vector<LinearForm> to_k(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < k_basis.size(); ++j)
      if (!is_zero(k_basis[j][i])) to_k[i].emplace_back(static_cast<int>(j), k_basis[j][i]);

  std::vector<PrimitiveForm> out;
  for (int d = 1; d <= max_deg; ++d) {
    auto span = named_products(gens, d);
    if (span.empty()) continue;
    std::vector<Poly> restricted;
    for (const auto& s : span) restricted.push_back(substitute(s.poly, to_k));
    std::vector<AlternatingForm> found;
    for (const auto& rel : poly_relations(restricted)) {
      Poly poly;
      std::string name;
      for (std::size_t i = 0; i < rel.size(); ++i) {
        if (is_zero(rel[i])) continue;
        poly += span[i].poly * rel[i];
        name += (name.empty() ? "" : " + ") + (rel[i] == 1 ? "" : rel[i].get_str() + " ") + span[i].name;
      }
      if (poly.is_zero()) continue;
      auto form = cartan_map(poly, d, a, caps);
      if (form.is_zero() || form_in_span(found, form)) continue;
      if (!(theta_pullback(form, a) == form * Rational(-1)))
        throw EngineInconsistency("rho(" + name + ") is not theta-anti-invariant on " + a.name());
      found.push_back(form);
      out.push_back({2 * d - 1, name, std::move(form)});
    }
  }
  return out;
}

GradedDims graded_dims(const std::vector<PrimitiveForm>& forms) {
  GradedDims g;
  for (const auto& f : forms) g.add(f.degree);
  return g;
}

RestrictionReport restriction_surjective(const PairRealization& r, const Caps& caps) {
  // theta-stability of h: theta_g restricted to h is theta_h.
  const auto& theta_g = r.g.theta();
  const auto& theta_h = r.h.theta();
  for (int j = 0; j < r.h.dim(); ++j)
    for (int i = 0; i < r.g.dim(); ++i) {
      Rational lhs = 0, rhs = 0;
      for (int k = 0; k < r.g.dim(); ++k) lhs += theta_g(i, k) * r.embed(k, j);
      for (int k = 0; k < r.h.dim(); ++k) rhs += r.embed(i, k) * theta_h(k, j);
      if (lhs != rhs) throw RealizationError("subalgebra is not theta-stable: " + r.h.name());
    }

  auto g_forms = primitive_minus_theta_basis(r.g, caps);
  auto h_forms = primitive_minus_theta_basis(r.h, caps);
  RestrictionReport rep;
  rep.g_profile = graded_dims(g_forms);
  rep.h_profile = graded_dims(h_forms);
  int expected = rank(r.pair.h) - compact_rank(r.pair.h);
  if (rep.h_profile.total() != expected)
    throw EngineInconsistency("primitive basis of " + r.h.name() + " has " + std::to_string(rep.h_profile.total()) +
                              " elements, expected " + std::to_string(expected));

  std::map<int, std::vector<AlternatingForm>> target, images;
  for (const auto& f : h_forms) target[f.degree].push_back(f.form);
  for (const auto& f : g_forms) {
    auto img = pullback(f.form, r.embed);
    if (!form_in_span(target[f.degree], img))
      throw EngineInconsistency("restriction of rho(" + f.source + ") leaves the primitive forms of " + r.h.name());
    images[f.degree].push_back(std::move(img));
  }
  for (const auto& [deg, imgs] : images)
    if (auto rk = forms_rank(imgs)) rep.image.add(deg, static_cast<int>(rk));
  rep.surjective = rep.image == rep.h_profile;
  return rep;
}

}  // namespace symobs

namespace symobs {

nlohmann::json to_json(const AlternatingForm& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : f.coeffs) terms.push_back({{"indices", key_indices(key)}, {"coefficient", c.get_str()}});
  return {{"degree", f.degree}, {"dim", f.n}, {"terms", terms}};
}

nlohmann::json to_json(const MatrixAlgebra& a) {
  auto matrix = [](const CMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
      rows.push_back(row);
    }
    return rows;
  };
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : a.basis()) basis.push_back(matrix(b));
  nlohmann::json brackets = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      for (const auto& [k, c] : a.bracket(i, j)) brackets.push_back({i, j, k, c.get_str()});
  nlohmann::json theta = nlohmann::json::array();
  for (std::size_t i = 0; i < a.theta().rows(); ++i)
    for (std::size_t j = 0; j < a.theta().cols(); ++j)
      if (!is_zero(a.theta()(i, j))) theta.push_back({i, j, a.theta()(i, j).get_str()});
  return {{"name", a.name()},  {"matrix_size", a.matrix_size()}, {"dim", a.dim()},
          {"basis", basis},    {"structure_constants", brackets}, {"theta", theta}};
}

}  // namespace symobs
