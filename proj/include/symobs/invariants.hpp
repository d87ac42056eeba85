#pragma once

// Invariant polynomials of realized Lie algebras, their images under the
// Cartan map, and the theta-anti-invariant primitive forms built from them.

#include "symobs/matrix_algebra.hpp"
#include "symobs/polynomial.hpp"
#include "symobs/profiles.hpp"

#include <cstdint>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

namespace symobs {

class EngineInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvariantPolynomial {
  std::string name;  // "Re f2[0]", "pf[1]", "lin0", ...
  int degree = 0;
  Poly poly;         // in the basis coordinates of the algebra
};

// Generic element X = sum x_i b_i restricted to one diagonal block.
Matrix<GaussPoly> generic_block(const MatrixAlgebra& a, const Block& b);

// Real and imaginary parts of the characteristic coefficients of every block,
// then Pfaffians where a block carries a skew form. Zero candidates are kept.
std::vector<InvariantPolynomial> char_poly_invariants(const MatrixAlgebra& a);

// Linear functionals vanishing on [g,g].
std::vector<InvariantPolynomial> linear_invariants(const MatrixAlgebra& a);

// Candidates kept in increasing degree when not polynomial in the earlier ones.
std::vector<InvariantPolynomial> generators(const MatrixAlgebra& a);

// All products of the given polynomials of total degree d.
std::vector<Poly> products_of_degree(const std::vector<InvariantPolynomial>& gens, int d);

bool is_ad_invariant(const Poly& p, const MatrixAlgebra& a);

// Alternating multilinear form on R^n; bit i of a key marks basis vector i.
struct AlternatingForm {
  int degree = 0;
  int n = 0;
  std::map<std::uint64_t, Rational> coeffs;  // value on e_{i1} ^ ... ^ e_{ik}, i1 < ... < ik

  bool is_zero() const { return coeffs.empty(); }
  void set(std::uint64_t key, const Rational& v);
  bool operator==(const AlternatingForm&) const = default;
};

// Value on basis vectors in the given order (sign included).
Rational evaluate_basis(const AlternatingForm& f, const std::vector<int>& idx);
// Multilinear value on sparse vectors.
Rational evaluate(const AlternatingForm& f, const std::vector<SparseVec>& vs);

AlternatingForm operator+(const AlternatingForm& a, const AlternatingForm& b);
AlternatingForm operator*(const AlternatingForm& a, const Rational& c);
AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b);

std::size_t forms_rank(const std::vector<AlternatingForm>& fs);
bool form_in_span(const std::vector<AlternatingForm>& fs, const AlternatingForm& f);

// Bracket table of a Lie algebra in some basis.
struct StructureConstants {
  int dim = 0;
  std::vector<SparseVec> brackets;  // index i * dim + j

  const SparseVec& bracket(int i, int j) const { return brackets[i * dim + j]; }
};

StructureConstants structure_constants(const MatrixAlgebra& a);
// Structure constants in the basis whose j-th element has a-coordinates basis[j].
StructureConstants structure_constants(const MatrixAlgebra& a, const std::vector<Vec<Rational>>& basis);

// Chevalley-Eilenberg differential and Lie derivative for the trivial module.
AlternatingForm exterior_derivative(const AlternatingForm& f, const StructureConstants& s);
AlternatingForm exterior_derivative(const AlternatingForm& f, const MatrixAlgebra& a);
AlternatingForm lie_derivative(const AlternatingForm& f, int basis_index, const StructureConstants& s);
AlternatingForm lie_derivative(const AlternatingForm& f, int basis_index, const MatrixAlgebra& a);
bool is_invariant(const AlternatingForm& f, const MatrixAlgebra& a);
bool is_closed(const AlternatingForm& f, const MatrixAlgebra& a);

// Pullback along the map whose column j is the image of the j-th source basis vector.
AlternatingForm pullback(const AlternatingForm& f, const Matrix<Rational>& map);
AlternatingForm theta_pullback(const AlternatingForm& f, const MatrixAlgebra& a);

// rho(P)(X_1..X_{2d-1}) = sum over S_{2d-1} of sign * P~(X_s1, [X_s2,X_s3], ..., [X_s(2d-2),X_s(2d-1)]),
// computed as 2^{d-1} sum P~(e_a, e_l1, ...) e^a ^ Omega^l1 ^ ... with Omega^l = -d e^l.
// Debug serialization; scalars are exact strings such as "-3/2".
nlohmann::json to_json(const AlternatingForm& f);
nlohmann::json to_json(const MatrixAlgebra& a);

AlternatingForm cartan_map(const Poly& p, int degree, const MatrixAlgebra& a, const Caps& caps = {});

struct PrimitiveForm {
  int degree = 0;  // form degree 2d - 1
  std::string source;
  AlternatingForm form;
};

// Basis of the theta-anti-invariant primitive forms: rho applied to invariant
// polynomials of each degree that vanish on the theta-fixed subalgebra.
std::vector<PrimitiveForm> primitive_minus_theta_basis(const MatrixAlgebra& a, const Caps& caps = {});
GradedDims graded_dims(const std::vector<PrimitiveForm>& forms);

struct RestrictionReport {
  bool surjective = false;
  GradedDims g_profile;
  GradedDims h_profile;
  GradedDims image;  // rank of the restriction per form degree
};

// Restriction of the theta-anti-invariant primitive forms from g to h.
RestrictionReport restriction_surjective(const PairRealization& r, const Caps& caps = {});

}  // namespace symobs
