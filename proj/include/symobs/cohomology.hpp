#pragma once

// Relative Chevalley-Eilenberg cohomology by brute force, the map
// H(g,h) -> H(g,k_H), and the hermitian Kaehler-class check.

#include "symobs/invariants.hpp"

#include <optional>
#include <vector>

#include <json.hpp>

namespace symobs {

// Cochains are forms on g written in an adapted basis whose first sub_dim
// vectors span the subalgebra; relative cochains only involve the remaining ones.
struct CochainComplex {
  int dim = 0;
  int sub_dim = 0;
  std::vector<Vec<Rational>> basis_change;  // adapted basis in original coordinates
  StructureConstants structure;             // in the adapted basis
  std::vector<std::vector<AlternatingForm>> cochains;  // per degree, invariant basis
  std::vector<Matrix<Rational>> differential;          // d_p: coords in degree p -> degree p + 1
  std::vector<std::vector<std::uint64_t>> pivot_keys;   // basis cochain j is 1 here, the others 0
};

// sub is spanned by the given vectors; dependent ones are skipped. The vectors in
// next follow it in the adapted basis, so several complexes can share one basis.
CochainComplex relative_complex(const MatrixAlgebra& a, const std::vector<Vec<Rational>>& sub,
                                const Caps& caps = {}, const std::vector<Vec<Rational>>& next = {});

std::vector<int> invariant_dims(const CochainComplex& c);
std::vector<int> cohomology_dims(const CochainComplex& c);

// Expresses a form given in the algebra's own basis in the adapted basis of c.
AlternatingForm to_adapted(const AlternatingForm& f, const CochainComplex& c);
// Coordinates against c.cochains[degree], or nullopt outside the span.
std::optional<Vec<Rational>> cochain_coordinates(const CochainComplex& c, const AlternatingForm& adapted);

struct CohomologyReport {
  std::vector<int> h_dims;   // H^p(g,h)
  std::vector<int> kh_dims;  // H^p(g,k_H)
  std::vector<bool> injective_in_degree;
  bool injective = true;
};

// i: H(g,h) -> H(g,k_H) for k_H inside h.
CohomologyReport injectivity_i(const MatrixAlgebra& a, const std::vector<Vec<Rational>>& h,
                               const std::vector<Vec<Rational>>& k_h, const Caps& caps = {});
CohomologyReport injectivity_i(const PairRealization& r, const Caps& caps = {});

struct KaehlerReport {
  int center_dim = 0;
  int quotient_dim = 0;          // N = dim g/k
  bool class_nonzero = false;    // [omega] != 0 in H^2(g,k)
  bool exact_mod_kss = false;    // omega = dF with F a (g,k_ss) cochain
  bool stabilizer_is_k = false;  // Stab_g(F) = k
  std::optional<bool> top_power_nonzero;  // omega^{N/2} != 0, when N <= 6

  bool passed() const {
    return center_dim == 1 && class_nonzero && exact_mod_kss && stabilizer_is_k && top_power_nonzero.value_or(true);
  }
};

// F = Re tr(X .) for X spanning the center of k, and omega = dF.
KaehlerReport kaehler_check(const MatrixAlgebra& a, const Caps& caps = {});

nlohmann::json to_json(const CohomologyReport& r);
nlohmann::json to_json(const KaehlerReport& r);

}  // namespace symobs
