#include "symobs/polynomial.hpp"

#include <algorithm>

namespace symobs {

Monomial make_monomial(std::vector<int> vars) {
  if (static_cast<int>(vars.size()) > kMaxMonomialDegree)
    throw std::invalid_argument("monomial degree too large");
  std::sort(vars.begin(), vars.end());
  Monomial m = 0;
  for (std::size_t i = vars.size(); i-- > 0;) {
    if (vars[i] < 0 || vars[i] >= kMaxVariables) throw std::invalid_argument("variable index out of range");
    m = (m << 6) | static_cast<Monomial>(vars[i] + 1);
  }
  return m;
}

std::vector<int> monomial_vars(Monomial m) {
  std::vector<int> out;
  while (m) {
    out.push_back(static_cast<int>(m & 63) - 1);
    m >>= 6;
  }
  return out;
}

int monomial_degree(Monomial m) {
  int d = 0;
  while (m) {
    ++d;
    m >>= 6;
  }
  return d;
}

Monomial monomial_product(Monomial a, Monomial b) {
  if (!a) return b;
  if (!b) return a;
  auto va = monomial_vars(a);
  auto vb = monomial_vars(b);
  va.insert(va.end(), vb.begin(), vb.end());
  return make_monomial(std::move(va));
}

Poly::Poly(long c) {
  if (c) terms.emplace(0, Rational(c));
}

Poly::Poly(const Rational& c) {
  if (!symobs::is_zero(c)) terms.emplace(0, c);
}

Poly Poly::variable(int i) {
  Poly p;
  p.terms.emplace(make_monomial({i}), Rational(1));
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, monomial_degree(m));
  return d;
}

bool Poly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms)
    if (monomial_degree(m) != d) return false;
  return true;
}

Rational Poly::coefficient(Monomial m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

namespace {

void add_term(std::map<Monomial, Rational>& t, Monomial m, const Rational& c) {
  auto [it, inserted] = t.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (symobs::is_zero(it->second)) t.erase(it);
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms) add_term(terms, m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms) add_term(terms, m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (symobs::is_zero(c)) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(Poly a) { return a *= Rational(-1); }
Poly operator*(Poly a, const Rational& c) { return a *= c; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) add_term(out.terms, monomial_product(ma, mb), ca * cb);
  return out;
}

Rational evaluate(const Poly& p, const Vec<Rational>& x) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms) {
    Rational t = c;
    for (int v : monomial_vars(m)) t *= x.at(v);
    total += t;
  }
  return total;
}

Poly substitute(const Poly& p, const std::vector<LinearForm>& images) {
  std::vector<Poly> lin(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& [j, c] : images[i]) lin[i] += Poly::variable(j) * c;
  Poly out;
  for (const auto& [m, c] : p.terms) {
    Poly t(c);
    for (int v : monomial_vars(m)) {
      t = t * lin.at(v);
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

Rational polarized(const Poly& p, std::vector<int> vars) {
  const int d = static_cast<int>(vars.size());
  Rational c = p.coefficient(make_monomial(vars));
  if (symobs::is_zero(c)) return c;
  std::sort(vars.begin(), vars.end());
  mpz_class num = 1, den = 1;
  for (int k = 2; k <= d; ++k) den *= k;
  for (std::size_t i = 0; i < vars.size();) {
    std::size_t j = i;
    while (j < vars.size() && vars[j] == vars[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) num *= static_cast<long>(k);
    i = j;
  }
  return c * Rational(num) / Rational(den);
}

namespace {

std::vector<Vec<Rational>> as_vectors(const std::vector<Poly>& ps, std::size_t& n) {
  std::map<Monomial, std::size_t> index;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms) index.emplace(m, 0);
  n = 0;
  for (auto& [m, i] : index) i = n++;
  std::vector<Vec<Rational>> out;
  for (const auto& p : ps) {
    Vec<Rational> v(n, Rational(0));
    for (const auto& [m, c] : p.terms) v[index[m]] = c;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::size_t poly_rank(const std::vector<Poly>& ps) {
  std::size_t n = 0;
  auto vs = as_vectors(ps, n);
  return span_rank(vs, n);
}

bool poly_in_span(const std::vector<Poly>& ps, const Poly& q) {
  auto all = ps;
  all.push_back(q);
  return poly_rank(all) == poly_rank(ps);
}

std::vector<Vec<Rational>> poly_relations(const std::vector<Poly>& ps) {
  std::size_t n = 0;
  auto vs = as_vectors(ps, n);
  return relations(vs, n);
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussPoly& GaussPoly::operator-=(const GaussPoly& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussPoly operator+(GaussPoly a, const GaussPoly& b) { return a += b; }
GaussPoly operator-(GaussPoly a, const GaussPoly& b) { return a -= b; }
GaussPoly operator-(const GaussPoly& a) { return {-a.re, -a.im}; }

GaussPoly operator*(const GaussPoly& a, const GaussPoly& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace symobs
