#pragma once

// Registry of irreducible semisimple symmetric pairs, organized by Berger
// family label, with c-dual links and the structural (B) tests.

#include "symobs/catalog.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace symobs {

enum class PairFamily {
  Trivial,           // (l, l)
  Diagonal,          // (l + l, diag l)
  Complexification,  // (l_C, l), l a real form
  // complex pairs
  SlC_SoC,       // (sl(n,C), so(n,C))                         [n]
  SlC_SpC,       // (sl(2n,C), sp(n,C))                        [n]
  SlC_SlCSlC,    // (sl(p+q,C), sl(p,C)+sl(q,C)+C)             [p,q]
  SoC_SoCSoC,    // (so(p+q,C), so(p,C)+so(q,C))               [p,q]
  SoC_SlC,       // (so(2n,C), sl(n,C)+C)                      [n]
  SpC_SlC,       // (sp(n,C), sl(n,C)+C)                       [n]
  SpC_SpCSpC,    // (sp(p+q,C), sp(p,C)+sp(q,C))               [p,q]
  // real classical pairs
  SlR_SO,        // (sl(p+q,R), so(p,q))                       [p,q]
  SlR_SlRSlR,    // (sl(p+q,R), sl(p,R)+sl(q,R)+R)             [p,q]
  SlR_SlC,       // (sl(2n,R), sl(n,C)+T)                      [n]
  SlR_SpR,       // (sl(2n,R), sp(n,R))                        [n]
  SlH_Sp,        // (sl(p+q,H), sp(p,q))                       [p,q]
  SlH_SlHSlH,    // (sl(p+q,H), sl(p,H)+sl(q,H)+R)             [p,q]
  SlH_SlC,       // (sl(n,H), sl(n,C)+T)                       [n]
  SlH_SOStar,    // (sl(n,H), so*(2n))                         [n]
  SU_SO,         // (su(p,q), so(p,q))                         [p,q]
  SU_Sp,         // (su(2p,2q), sp(p,q))                       [p,q]
  SU_SUSU,       // (su(a+c,b+d), su(a,b)+su(c,d)+T)           [a,b,c,d]
  SU_SlC,        // (su(n,n), sl(n,C)+R)                       [n]
  SU_SOStar,     // (su(n,n), so*(2n))                         [n]
  SU_SpR,        // (su(n,n), sp(n,R))                         [n]
  SO_SOSO,       // (so(a+c,b+d), so(a,b)+so(c,d))             [a,b,c,d]
  SO_SU,         // (so(2p,2q), su(p,q)+T)                     [p,q]
  SO_SlR,        // (so(n,n), sl(n,R)+R)                       [n]
  SO_SoC,        // (so(n,n), so(n,C))                         [n]
  SOStar_SOStarSOStar,  // (so*(2p+2q), so*(2p)+so*(2q))      [p,q]
  SOStar_SU,     // (so*(2p+2q), su(p,q)+T)                    [p,q]
  SOStar_SoC,    // (so*(2n), so(n,C))                         [n]
  SOStar_SlH,    // (so*(4n), sl(n,H)+R)                       [n]
  SpR_SpRSpR,    // (sp(p+q,R), sp(p,R)+sp(q,R))               [p,q]
  SpR_SU,        // (sp(p+q,R), su(p,q)+T)                     [p,q]
  SpR_SlR,       // (sp(n,R), sl(n,R)+R)                       [n]
  SpR_SpC,       // (sp(2n,R), sp(n,C))                        [n]
  Sp_SpSp,       // (sp(a+c,b+d), sp(a,b)+sp(c,d))             [a,b,c,d]
  Sp_SU,         // (sp(p,q), su(p,q)+T)                       [p,q]
  Sp_SlH,        // (sp(n,n), sl(n,H)+R)                       [n]
  Sp_SpC,        // (sp(n,n), sp(n,C))                         [n]
  Exceptional,   // table-driven exceptional pair              [index]
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IrreduciblePair {
  PairFamily family = PairFamily::Trivial;
  std::vector<int> params;
  SimpleFactor l{};  // for Trivial, Diagonal, Complexification

  // Defining (unnormalized) descriptors, as written in the family, and their
  // normalized forms.
  ReductiveDescriptor g_defining;
  ReductiveDescriptor h_defining;
  ReductiveDescriptor g;
  ReductiveDescriptor h;

  bool operator==(const IrreduciblePair& o) const {
    return family == o.family && params == o.params && l == o.l;
  }
};

struct SymmetricPairDescriptor {
  std::vector<IrreduciblePair> summands;
};

std::string family_label(PairFamily f);
PairFamily pair_family_from_label(std::string_view label);

// Builds a pair from its label; throws RegistryError if the parameters give a
// non-simple g, a trivial involution outside the Trivial family, or are out of range.
IrreduciblePair make_pair(PairFamily family, std::vector<int> params, SimpleFactor l = {});
IrreduciblePair make_trivial(SimpleFactor l);
IrreduciblePair make_diagonal(SimpleFactor l);
IrreduciblePair make_complexification(SimpleFactor l);

struct ExceptionalPairEntry {
  const char* g;
  const char* h;
};
const std::vector<ExceptionalPairEntry>& exceptional_pairs();

// Every simple factor (normalized, deduplicated) with parameters <= bound.
std::vector<SimpleFactor> simple_factors_up_to(int bound);

std::vector<IrreduciblePair> berger_enumerate(int param_bound);

std::optional<IrreduciblePair> c_dual(const IrreduciblePair& p);

enum class BLabel { B1, B2, B3, B4, B5 };
std::string to_string(BLabel b);
std::set<BLabel> condition_B(const IrreduciblePair& p);
bool satisfies_B(const SymmetricPairDescriptor& p);

std::string to_string(const IrreduciblePair& p);
std::string to_string(const SymmetricPairDescriptor& p);
nlohmann::json to_json(const IrreduciblePair& p);

// Parses "(g, h)" or "(g1, h1) + (g2, h2)" and resolves each summand against
// the registry by normalized descriptors.
SymmetricPairDescriptor parse_pair(std::string_view text);
IrreduciblePair resolve_pair(const ReductiveDescriptor& g, const ReductiveDescriptor& h);

}  // namespace symobs
