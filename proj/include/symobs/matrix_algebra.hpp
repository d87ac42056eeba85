#pragma once

// Real Lie algebras realized as exact spans of N x N Gaussian-rational
// matrices cut out by real-linear constraints, with theta(X) = -X^*.

#include "symobs/catalog.hpp"
#include "symobs/linalg.hpp"
#include "symobs/pairs.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace symobs {

using CMatrix = Matrix<GaussRational>;
using SparseVec = std::vector<std::pair<int, Rational>>;

class RealizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Caps {
  int max_dim = 36;          // dim g for the realization engine
  int max_form_degree = 7;   // 2k - 1
  int max_quotient_dim = 16; // dim g/k_H for the cohomology engine
};

// Real-linear map on matrices; the algebra is the common kernel.
using LinearConstraint = std::function<CMatrix(const CMatrix&)>;

// Diagonal block on which characteristic-polynomial invariants are taken.
// When pfaffian_form is set, J * X is skew on the block and pf(J X) is a candidate.
struct Block {
  int offset = 0;
  int size = 0;
  std::optional<CMatrix> pfaffian_form;
};

class MatrixAlgebra {
 public:
  MatrixAlgebra(std::string name, int n, std::vector<LinearConstraint> constraints,
                std::vector<Block> blocks);

  const std::string& name() const { return name_; }
  int matrix_size() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<CMatrix>& basis() const { return basis_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  // Coordinates of X, or nullopt when X is not in the algebra.
  std::optional<Vec<Rational>> coordinates(const CMatrix& x) const;
  CMatrix element(const Vec<Rational>& coords) const;

  const SparseVec& bracket(int i, int j) const { return brackets_[i * dim() + j]; }
  Vec<Rational> bracket(const Vec<Rational>& x, const Vec<Rational>& y) const;

  // Column j holds the coordinates of theta(b_j).
  const Matrix<Rational>& theta() const { return theta_; }
  Vec<Rational> apply_theta(const Vec<Rational>& x) const;

  // Coordinates of a basis of the theta-fixed subalgebra.
  std::vector<Vec<Rational>> theta_fixed_basis() const;

 private:
  std::string name_;
  int n_;
  std::vector<LinearConstraint> constraints_;
  std::vector<Block> blocks_;
  std::vector<CMatrix> basis_;
  std::vector<std::size_t> free_slots_;
  std::vector<SparseVec> brackets_;
  Matrix<Rational> theta_;
};

CMatrix identity(int n);
CMatrix signature_matrix(int p, int q);  // diag(1^p, (-1)^q)
CMatrix symplectic_form(int n);          // [[0, I_n], [-I_n, 0]]
CMatrix multiply(const CMatrix& a, const CMatrix& b);
CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix scale(const CMatrix& a, const GaussRational& s);
CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);    // conjugate transpose
CMatrix conjugate(const CMatrix& a);  // entrywise
CMatrix transpose(const CMatrix& a);
GaussRational trace(const CMatrix& a);
bool is_zero(const CMatrix& a);

// Standard models of the classical simple families; throws RealizationError
// for exceptional families and CapExceeded above caps.max_dim.
MatrixAlgebra realize(const SimpleFactor& f, const Caps& caps = {});

// Block-diagonal direct sum.
MatrixAlgebra direct_sum(const MatrixAlgebra& a, const MatrixAlgebra& b);

// The subalgebra of g cut out by additional constraints.
MatrixAlgebra subalgebra(const MatrixAlgebra& g, std::string name,
                         std::vector<LinearConstraint> extra, std::vector<Block> blocks);

// Column j holds the g-coordinates of the j-th basis element of h.
Matrix<Rational> embedding(const MatrixAlgebra& h, const MatrixAlgebra& g);

struct PairRealization {
  IrreduciblePair pair;
  MatrixAlgebra g;
  MatrixAlgebra h;
  Matrix<Rational> embed;
};

// Explicit embeddings for the pair families the engines support.
PairRealization realize_pair(const IrreduciblePair& p, const Caps& caps = {});

}  // namespace symobs
