#pragma once

// Structural descriptions of real reductive Lie algebras: split and compact
// abelian dimensions plus a multiset of simple factors, canonicalized up to
// the low-dimensional accidental isomorphisms.

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace symobs {

enum class Family {
  // classical real forms; q = 0 gives the compact form su(n), so(n), sp(n)
  SlR,     // sl(n,R)        p = n
  SlH,     // sl(n,H)        p = n
  SU,      // su(p,q)
  SO,      // so(p,q)
  SpR,     // sp(n,R)        p = n
  Sp,      // sp(p,q)
  SOStar,  // so*(2n)        p = n
  // exceptional real forms
  E6_6, E6_2, E6_m14, E6_m26,
  E7_7, E7_m5, E7_m25,
  E8_8, E8_m24,
  F4_4, F4_m20,
  G2_2,
  // compact exceptional
  E6, E7, E8, F4, G2,
  // complex simple algebras regarded as real
  SlC,  // sl(n,C) p = n
  SoC,  // so(n,C) p = n
  SpC,  // sp(n,C) p = n
  E6C, E7C, E8C, F4C, G2C,
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimpleFactor {
  Family family = Family::SlR;
  int p = 0;
  int q = 0;

  auto operator<=>(const SimpleFactor&) const = default;
  bool operator==(const SimpleFactor&) const = default;
};

bool is_complex(Family f);
bool is_exceptional(Family f);
bool is_compact(const SimpleFactor& f);

SimpleFactor sl_r(int n);
SimpleFactor sl_h(int n);
SimpleFactor su(int p, int q = 0);
SimpleFactor so(int p, int q = 0);
SimpleFactor sp_r(int n);
SimpleFactor sp(int p, int q = 0);
SimpleFactor so_star(int n);  // so*(2n)
SimpleFactor sl_c(int n);
SimpleFactor so_c(int n);
SimpleFactor sp_c(int n);
SimpleFactor exceptional(Family f);

struct ReductiveDescriptor {
  int split_abelian = 0;    // R-summands, anti-invariant under the Cartan involution
  int compact_abelian = 0;  // sqrt(-1) R-summands, invariant under it
  std::vector<SimpleFactor> simples;

  bool operator==(const ReductiveDescriptor&) const = default;

  bool is_zero() const { return split_abelian == 0 && compact_abelian == 0 && simples.empty(); }
  bool is_simple() const {
    return split_abelian == 0 && compact_abelian == 0 && simples.size() == 1;
  }
};

ReductiveDescriptor descriptor(SimpleFactor f);
ReductiveDescriptor abelian(int split, int compact);
ReductiveDescriptor direct_sum(const ReductiveDescriptor& a, const ReductiveDescriptor& b);
ReductiveDescriptor operator+(const ReductiveDescriptor& a, const ReductiveDescriptor& b);
ReductiveDescriptor operator+(const ReductiveDescriptor& a, SimpleFactor b);
ReductiveDescriptor operator+(SimpleFactor a, SimpleFactor b);

ReductiveDescriptor normalize(const ReductiveDescriptor& d);
ReductiveDescriptor normalize(SimpleFactor f);

// Real dimension of a Cartan subalgebra; a complex factor of complex rank r counts 2r.
int rank(const SimpleFactor& f);
int rank(const ReductiveDescriptor& d);
// Rank of a maximal compact subalgebra.
int compact_rank(const SimpleFactor& f);
int compact_rank(const ReductiveDescriptor& d);
// Real dimension.
int dimension(const SimpleFactor& f);
int dimension(const ReductiveDescriptor& d);

// Complex rank of a complex simple family.
int complex_rank(const SimpleFactor& f);
// Degrees of algebraically independent generators of the invariant polynomials.
std::vector<int> generator_degrees(const SimpleFactor& complex_factor);
// Degrees of a basis of the primitive elements (2 * degree - 1).
std::vector<int> exponents(const SimpleFactor& complex_factor);

ReductiveDescriptor complexify(const SimpleFactor& f);
ReductiveDescriptor complexify(const ReductiveDescriptor& d);

std::string family_tag(Family f);
Family family_from_tag(std::string_view tag);

std::string to_string(const SimpleFactor& f);
std::string to_string(const ReductiveDescriptor& d);
SimpleFactor parse_factor(std::string_view text);
ReductiveDescriptor parse_descriptor(std::string_view text);

nlohmann::json to_json(const SimpleFactor& f);
nlohmann::json to_json(const ReductiveDescriptor& d);
ReductiveDescriptor descriptor_from_json(const nlohmann::json& j);

}  // namespace symobs
