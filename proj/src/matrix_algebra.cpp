#include "symobs/matrix_algebra.hpp"

namespace symobs {

CMatrix identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

CMatrix signature_matrix(int p, int q) {
  CMatrix m(p + q, p + q);
  for (int i = 0; i < p + q; ++i) m(i, i) = i < p ? 1 : -1;
  return m;
}

CMatrix symplectic_form(int n) {
  CMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = -1;
  }
  return m;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
  CMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

CMatrix scale(const CMatrix& a, const GaussRational& s) {
  CMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  return add(multiply(a, b), scale(multiply(b, a), -1));
}

CMatrix conjugate(const CMatrix& a) {
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j).conj();
  return c;
}

CMatrix transpose(const CMatrix& a) { return a.transpose(); }
CMatrix adjoint(const CMatrix& a) { return conjugate(a).transpose(); }

GaussRational trace(const CMatrix& a) {
  GaussRational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

bool is_zero(const CMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

MatrixAlgebra::MatrixAlgebra(std::string name, int n, std::vector<LinearConstraint> constraints,
                             std::vector<Block> blocks)
    : name_(std::move(name)), n_(n), constraints_(std::move(constraints)), blocks_(std::move(blocks)) {
  const std::size_t slots = 2 * static_cast<std::size_t>(n) * n;
  auto unit = [&](std::size_t s) {
    CMatrix e(n, n);
    std::size_t cell = s / 2;
    e(cell / n, cell % n) = s % 2 == 0 ? GaussRational(1) : GaussRational::i();
    return e;
  };
  std::vector<Vec<Rational>> columns(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    CMatrix e = unit(s);
    for (const auto& c : constraints_) {
      CMatrix out = c(e);
      for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) {
          columns[s].push_back(out(i, j).re);
          columns[s].push_back(out(i, j).im);
        }
    }
  }
  std::size_t rows = slots ? columns[0].size() : 0;
  Matrix<Rational> m(rows, slots);
  for (std::size_t s = 0; s < slots; ++s)
    for (std::size_t r = 0; r < rows; ++r) m(r, s) = columns[s][r];
  auto pivots = rref(m);
  std::vector<bool> is_pivot(slots, false);
  for (auto p : pivots) is_pivot[p] = true;
  // One basis element per free slot: 1 there, 0 at every other free slot.
  for (std::size_t f = 0; f < slots; ++f) {
    if (is_pivot[f]) continue;
    free_slots_.push_back(f);
    Vec<Rational> v(slots);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    CMatrix x(n, n);
    for (std::size_t s = 0; s < slots; ++s) {
      if (is_zero(v[s])) continue;
      std::size_t cell = s / 2;
      if (s % 2 == 0) x(cell / n, cell % n).re = v[s];
      else x(cell / n, cell % n).im = v[s];
    }
    basis_.push_back(std::move(x));
  }

  const int d = dim();
  brackets_.resize(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto c = coordinates(commutator(basis_[i], basis_[j]));
      if (!c) throw RealizationError(name_ + ": basis is not closed under the bracket");
      SparseVec sv, neg;
      for (int k = 0; k < d; ++k)
        if (!is_zero((*c)[k])) {
          sv.push_back({k, (*c)[k]});
          neg.push_back({k, -(*c)[k]});
        }
      brackets_[i * d + j] = std::move(sv);
      brackets_[j * d + i] = std::move(neg);
    }
  theta_ = Matrix<Rational>(d, d);
  for (int j = 0; j < d; ++j) {
    auto c = coordinates(scale(adjoint(basis_[j]), -1));
    if (!c) throw RealizationError(name_ + ": not stable under theta(X) = -X^*");
    for (int i = 0; i < d; ++i) theta_(i, j) = (*c)[i];
  }
}

std::optional<Vec<Rational>> MatrixAlgebra::coordinates(const CMatrix& x) const {
  if (static_cast<int>(x.rows()) != n_ || static_cast<int>(x.cols()) != n_) return std::nullopt;
  Vec<Rational> c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t s = free_slots_[i], cell = s / 2;
    const auto& z = x(cell / n_, cell % n_);
    c[i] = s % 2 == 0 ? z.re : z.im;
  }
  if (!is_zero(add(element(c), scale(x, -1)))) return std::nullopt;
  return c;
}

CMatrix MatrixAlgebra::element(const Vec<Rational>& coords) const {
  CMatrix x(n_, n_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (is_zero(coords[i])) continue;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (!is_zero(basis_[i](r, c))) x(r, c) += basis_[i](r, c) * GaussRational(coords[i]);
  }
  return x;
}

Vec<Rational> MatrixAlgebra::bracket(const Vec<Rational>& x, const Vec<Rational>& y) const {
  const int d = dim();
  Vec<Rational> out(d);
  for (int i = 0; i < d; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < d; ++j) {
      if (is_zero(y[j])) continue;
      Rational f = x[i] * y[j];
      for (const auto& [k, c] : bracket(i, j)) out[k] += f * c;
    }
  }
  return out;
}

Vec<Rational> MatrixAlgebra::apply_theta(const Vec<Rational>& x) const {
  const int d = dim();
  Vec<Rational> out(d);
  for (int j = 0; j < d; ++j) {
    if (is_zero(x[j])) continue;
    for (int i = 0; i < d; ++i)
      if (!is_zero(theta_(i, j))) out[i] += theta_(i, j) * x[j];
  }
  return out;
}

std::vector<Vec<Rational>> MatrixAlgebra::theta_fixed_basis() const {
  Matrix<Rational> m = theta_;
  for (int i = 0; i < dim(); ++i) m(i, i) -= 1;
  return kernel(std::move(m));
}

namespace {

LinearConstraint real_entries() {
  return [](const CMatrix& x) {
    CMatrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = GaussRational(x(i, j).im);
    return out;
  };
}

LinearConstraint traceless() {
  return [](const CMatrix& x) {
    CMatrix out(1, 1);
    out(0, 0) = trace(x);
    return out;
  };
}

// X^T F + F X = 0
LinearConstraint preserves_bilinear(CMatrix f) {
  return [f](const CMatrix& x) { return add(multiply(transpose(x), f), multiply(f, x)); };
}

// X^* F + F X = 0
LinearConstraint preserves_hermitian(CMatrix f) {
  return [f](const CMatrix& x) { return add(multiply(adjoint(x), f), multiply(f, x)); };
}

// X J = J conj(X): commutes with the quaternionic structure.
LinearConstraint quaternionic(int n) {
  CMatrix j = symplectic_form(n);
  return [j](const CMatrix& x) { return add(multiply(x, j), scale(multiply(j, conjugate(x)), -1)); };
}

LinearConstraint off_blocks_zero(std::vector<int> sizes) {
  return [sizes](const CMatrix& x) {
    CMatrix out = x;
    int off = 0;
    for (int s : sizes) {
      for (int i = off; i < off + s; ++i)
        for (int j = off; j < off + s; ++j) out(i, j) = GaussRational();
      off += s;
    }
    return out;
  };
}

CMatrix sub_block(const CMatrix& x, int off, int size) {
  CMatrix out(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out(i, j) = x(off + i, off + j);
  return out;
}

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  int na = static_cast<int>(a.rows()), nb = static_cast<int>(b.rows());
  CMatrix out(na + nb, na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) out(i, j) = a(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) out(na + i, na + j) = b(i, j);
  return out;
}

// Complex-linear constraints define the complexification; real_form adds the rest.
struct FamilyModel {
  int n = 0;
  std::vector<LinearConstraint> complex_linear;
  std::vector<LinearConstraint> real_form;
  std::optional<CMatrix> pfaffian_form;
};

FamilyModel model(const SimpleFactor& f) {
  FamilyModel m;
  auto orth = [&](CMatrix form) {
    m.complex_linear.push_back(preserves_bilinear(form));
    if (m.n % 2 == 0) m.pfaffian_form = form;
  };
  switch (f.family) {
    case Family::SlR:
      m.n = f.p;
      m.complex_linear = {traceless()};
      m.real_form = {real_entries()};
      break;
    case Family::SlC:
      m.n = f.p;
      m.complex_linear = {traceless()};
      break;
    case Family::SlH:
      m.n = 2 * f.p;
      m.complex_linear = {traceless()};
      m.real_form = {quaternionic(f.p)};
      break;
    case Family::SU:
      m.n = f.p + f.q;
      m.complex_linear = {traceless()};
      m.real_form = {preserves_hermitian(signature_matrix(f.p, f.q))};
      break;
    case Family::SO:
      m.n = f.p + f.q;
      orth(signature_matrix(f.p, f.q));
      m.real_form = {real_entries()};
      break;
    case Family::SoC:
      m.n = f.p;
      orth(identity(f.p));
      break;
    case Family::SOStar:
      m.n = 2 * f.p;
      orth(identity(2 * f.p));
      m.real_form = {quaternionic(f.p)};
      break;
    case Family::SpR:
      m.n = 2 * f.p;
      m.complex_linear = {preserves_bilinear(symplectic_form(f.p))};
      m.real_form = {real_entries()};
      break;
    case Family::SpC:
      m.n = 2 * f.p;
      m.complex_linear = {preserves_bilinear(symplectic_form(f.p))};
      break;
    case Family::Sp: {
      m.n = 2 * (f.p + f.q);
      m.complex_linear = {preserves_bilinear(symplectic_form(f.p + f.q))};
      auto s = signature_matrix(f.p, f.q);
      m.real_form = {preserves_hermitian(block_diag(s, s))};
      break;
    }
    default:
      throw RealizationError("no matrix model for " + to_string(f));
  }
  return m;
}

std::vector<LinearConstraint> all_constraints(const FamilyModel& m) {
  auto c = m.complex_linear;
  c.insert(c.end(), m.real_form.begin(), m.real_form.end());
  return c;
}

std::vector<Block> whole_block(const FamilyModel& m) { return {Block{0, m.n, m.pfaffian_form}}; }

void check_cap(int dim, const Caps& caps, const std::string& what) {
  if (dim > caps.max_dim)
    throw CapExceeded(what + " has dimension " + std::to_string(dim) + " above the cap " +
                      std::to_string(caps.max_dim));
}

// Model of the complexification of a real form, keeping the matrix size of the real form.
FamilyModel complexified_model(const SimpleFactor& l) {
  auto m = model(l);
  m.real_form.clear();
  return m;
}

}  // namespace

MatrixAlgebra realize(const SimpleFactor& f, const Caps& caps) {
  check_cap(dimension(f), caps, to_string(f));
  auto m = model(f);
  return MatrixAlgebra(to_string(f), m.n, all_constraints(m), whole_block(m));
}

MatrixAlgebra direct_sum(const MatrixAlgebra& a, const MatrixAlgebra& b) {
  int na = a.matrix_size(), nb = b.matrix_size();
  std::vector<LinearConstraint> cs = {off_blocks_zero({na, nb})};
  for (const auto& c : a.constraints())
    cs.push_back([c, na](const CMatrix& x) { return c(sub_block(x, 0, na)); });
  for (const auto& c : b.constraints())
    cs.push_back([c, na, nb](const CMatrix& x) { return c(sub_block(x, na, nb)); });
  auto blocks = a.blocks();
  for (auto bl : b.blocks()) {
    bl.offset += na;
    blocks.push_back(bl);
  }
  return MatrixAlgebra(a.name() + " + " + b.name(), na + nb, cs, blocks);
}

MatrixAlgebra subalgebra(const MatrixAlgebra& g, std::string name, std::vector<LinearConstraint> extra,
                         std::vector<Block> blocks) {
  auto cs = g.constraints();
  cs.insert(cs.end(), extra.begin(), extra.end());
  return MatrixAlgebra(std::move(name), g.matrix_size(), cs, std::move(blocks));
}

Matrix<Rational> embedding(const MatrixAlgebra& h, const MatrixAlgebra& g) {
  Matrix<Rational> e(g.dim(), h.dim());
  for (int j = 0; j < h.dim(); ++j) {
    auto c = g.coordinates(h.basis()[j]);
    if (!c) throw RealizationError(h.name() + " is not contained in " + g.name());
    for (int i = 0; i < g.dim(); ++i) e(i, j) = (*c)[i];
  }
  return e;
}

PairRealization realize_pair(const IrreduciblePair& p, const Caps& caps) {
  check_cap(dimension(p.g), caps, to_string(p.g));
  auto name_h = to_string(p.h_defining);
  auto finish = [&](MatrixAlgebra g, MatrixAlgebra h) {
    auto e = embedding(h, g);
    return PairRealization{p, std::move(g), std::move(h), std::move(e)};
  };
  const auto& v = p.params;
  switch (p.family) {
    case PairFamily::Trivial: {
      auto g = realize(p.l, caps);
      MatrixAlgebra h = g;
      return finish(std::move(g), std::move(h));
    }
    case PairFamily::Diagonal: {
      auto l = realize(p.l, caps);
      auto g = direct_sum(l, l);
      int n = l.matrix_size();
      LinearConstraint equal = [n](const CMatrix& x) {
        return add(sub_block(x, 0, n), scale(sub_block(x, n, n), -1));
      };
      auto h = subalgebra(g, "diag " + l.name(), {equal}, l.blocks());
      return finish(std::move(g), std::move(h));
    }
    case PairFamily::Complexification: {
      auto m = complexified_model(p.l);
      auto full = model(p.l);
      MatrixAlgebra g(to_string(p.g), m.n, m.complex_linear, whole_block(m));
      auto h = subalgebra(g, to_string(p.l), full.real_form, whole_block(full));
      return finish(std::move(g), std::move(h));
    }
    case PairFamily::SlC_SoC: {
      auto g = realize(sl_c(v[0]), caps);
      std::optional<CMatrix> pf;
      if (v[0] % 2 == 0) pf = identity(v[0]);
      auto h = subalgebra(g, name_h, {preserves_bilinear(identity(v[0]))}, {Block{0, v[0], pf}});
      return finish(std::move(g), std::move(h));
    }
    case PairFamily::SlC_SpC: {
      auto g = realize(sl_c(2 * v[0]), caps);
      auto h = subalgebra(g, name_h, {preserves_bilinear(symplectic_form(v[0]))}, {Block{0, 2 * v[0], {}}});
      return finish(std::move(g), std::move(h));
    }
    case PairFamily::SlR_SO:
    case PairFamily::SU_SO: {
      int n = v[0] + v[1];
      auto g = realize(p.family == PairFamily::SlR_SO ? sl_r(n) : su(v[0], v[1]), caps);
      std::optional<CMatrix> pf;
      if (n % 2 == 0) pf = signature_matrix(v[0], v[1]);
      LinearConstraint extra = p.family == PairFamily::SlR_SO
                                   ? preserves_bilinear(signature_matrix(v[0], v[1]))
                                   : real_entries();
      auto h = subalgebra(g, name_h, {extra}, {Block{0, n, pf}});
      return finish(std::move(g), std::move(h));
    }
    case PairFamily::SO_SOSO: {
      // Signature ordered as (a, b | c, d) so that h is block diagonal.
      int a = v[0], b = v[1], c = v[2], d = v[3];
      CMatrix form = block_diag(signature_matrix(a, b), signature_matrix(c, d));
      int n = a + b + c + d;
      std::optional<CMatrix> pf;
      if (n % 2 == 0) pf = form;
      MatrixAlgebra g(to_string(p.g_defining), n, {preserves_bilinear(form), real_entries()},
                      {Block{0, n, pf}});
      std::vector<Block> hb;
      int off = 0;
      for (auto [x, y] : {std::pair{a, b}, std::pair{c, d}}) {
        std::optional<CMatrix> f;
        if ((x + y) % 2 == 0) f = signature_matrix(x, y);
        hb.push_back(Block{off, x + y, f});
        off += x + y;
      }
      auto h = subalgebra(g, name_h, {off_blocks_zero({a + b, c + d})}, hb);
      return finish(std::move(g), std::move(h));
    }
    default:
      throw RealizationError("no explicit embedding for the family " + family_label(p.family));
  }
}

}  // namespace symobs
