#include "symobs/pairs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace symobs {

namespace {

struct FamilyInfo {
  PairFamily family;
  const char* label;
  int arity;  // number of integer parameters
};

constexpr std::array kFamilies = {
    FamilyInfo{PairFamily::Trivial, "trivial", 0},
    FamilyInfo{PairFamily::Diagonal, "diagonal", 0},
    FamilyInfo{PairFamily::Complexification, "complexification", 0},
    FamilyInfo{PairFamily::SlC_SoC, "slC/soC", 1},
    FamilyInfo{PairFamily::SlC_SpC, "slC/spC", 1},
    FamilyInfo{PairFamily::SlC_SlCSlC, "slC/slC+slC", 2},
    FamilyInfo{PairFamily::SoC_SoCSoC, "soC/soC+soC", 2},
    FamilyInfo{PairFamily::SoC_SlC, "soC/glC", 1},
    FamilyInfo{PairFamily::SpC_SlC, "spC/glC", 1},
    FamilyInfo{PairFamily::SpC_SpCSpC, "spC/spC+spC", 2},
    FamilyInfo{PairFamily::SlR_SO, "slR/so", 2},
    FamilyInfo{PairFamily::SlR_SlRSlR, "slR/slR+slR", 2},
    FamilyInfo{PairFamily::SlR_SlC, "slR/slC", 1},
    FamilyInfo{PairFamily::SlR_SpR, "slR/spR", 1},
    FamilyInfo{PairFamily::SlH_Sp, "slH/sp", 2},
    FamilyInfo{PairFamily::SlH_SlHSlH, "slH/slH+slH", 2},
    FamilyInfo{PairFamily::SlH_SlC, "slH/slC", 1},
    FamilyInfo{PairFamily::SlH_SOStar, "slH/so*", 1},
    FamilyInfo{PairFamily::SU_SO, "su/so", 2},
    FamilyInfo{PairFamily::SU_Sp, "su/sp", 2},
    FamilyInfo{PairFamily::SU_SUSU, "su/su+su", 4},
    FamilyInfo{PairFamily::SU_SlC, "su/slC", 1},
    FamilyInfo{PairFamily::SU_SOStar, "su/so*", 1},
    FamilyInfo{PairFamily::SU_SpR, "su/spR", 1},
    FamilyInfo{PairFamily::SO_SOSO, "so/so+so", 4},
    FamilyInfo{PairFamily::SO_SU, "so/u", 2},
    FamilyInfo{PairFamily::SO_SlR, "so/glR", 1},
    FamilyInfo{PairFamily::SO_SoC, "so/soC", 1},
    FamilyInfo{PairFamily::SOStar_SOStarSOStar, "so*/so*+so*", 2},
    FamilyInfo{PairFamily::SOStar_SU, "so*/u", 2},
    FamilyInfo{PairFamily::SOStar_SoC, "so*/soC", 1},
    FamilyInfo{PairFamily::SOStar_SlH, "so*/slH", 1},
    FamilyInfo{PairFamily::SpR_SpRSpR, "spR/spR+spR", 2},
    FamilyInfo{PairFamily::SpR_SU, "spR/u", 2},
    FamilyInfo{PairFamily::SpR_SlR, "spR/glR", 1},
    FamilyInfo{PairFamily::SpR_SpC, "spR/spC", 1},
    FamilyInfo{PairFamily::Sp_SpSp, "sp/sp+sp", 4},
    FamilyInfo{PairFamily::Sp_SU, "sp/u", 2},
    FamilyInfo{PairFamily::Sp_SlH, "sp/slH", 1},
    FamilyInfo{PairFamily::Sp_SpC, "sp/spC", 1},
    FamilyInfo{PairFamily::Exceptional, "exceptional", 1},
};

const FamilyInfo& info(PairFamily f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw RegistryError("unknown pair family");
}

// dual: name of the algebra carrying the c-dual with the same h, "self", or nullptr.
struct ExceptionalRow {
  const char* g;
  const char* h;
  const char* dual;
};

const std::vector<ExceptionalRow>& exceptional_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {"e6C", "sp(4,C)", "self"},
      {"e6C", "sl(6,C)+sl(2,C)", "self"},
      {"e6C", "so(10,C)+C", "self"},
      {"e6C", "f4C", "self"},
      {"e7C", "sl(8,C)", "self"},
      {"e7C", "so(12,C)+sl(2,C)", "self"},
      {"e7C", "e6C+C", "self"},
      {"e8C", "so(16,C)", "self"},
      {"e8C", "e7C+sl(2,C)", "self"},
      {"f4C", "sp(3,C)+sl(2,C)", "self"},
      {"f4C", "so(9,C)", "self"},
      {"g2C", "sl(2,C)+sl(2,C)", "self"},

      {"e6(6)", "sp(4)", "e6"},
      {"e6(6)", "sp(2,2)", nullptr},
      {"e6(6)", "sp(4,R)", nullptr},
      {"e6(6)", "sl(3,H)+su(2)", nullptr},
      {"e6(6)", "sl(6,R)+sl(2,R)", nullptr},
      {"e6(6)", "so(5,5)+R", nullptr},
      {"e6(6)", "f4(4)", nullptr},
      {"e6(2)", "su(6)+su(2)", "e6"},
      {"e6(2)", "su(4,2)+su(2)", nullptr},
      {"e6(2)", "su(3,3)+sl(2,R)", nullptr},
      {"e6(2)", "so(6,4)+T", nullptr},
      {"e6(2)", "so*(10)+T", nullptr},
      {"e6(2)", "sp(3,1)", nullptr},
      {"e6(2)", "sp(4,R)", nullptr},
      {"e6(2)", "f4(4)", nullptr},
      {"e6(-14)", "so(10)+T", "e6"},
      {"e6(-14)", "su(5,1)+sl(2,R)", nullptr},
      {"e6(-14)", "su(4,2)+su(2)", nullptr},
      {"e6(-14)", "so(8,2)+T", nullptr},
      {"e6(-14)", "so*(10)+T", nullptr},
      {"e6(-14)", "sp(2,2)", nullptr},
      {"e6(-14)", "f4(-20)", nullptr},
      {"e6(-26)", "f4", "e6"},
      {"e6(-26)", "sl(3,H)+su(2)", nullptr},
      {"e6(-26)", "so(9,1)+R", nullptr},
      {"e6(-26)", "sp(3,1)", nullptr},
      {"e6(-26)", "f4(-20)", nullptr},
      {"e6", "sp(4)", "e6(6)"},
      {"e6", "su(6)+su(2)", "e6(2)"},
      {"e6", "so(10)+T", "e6(-14)"},
      {"e6", "f4", "e6(-26)"},

      {"e7(7)", "su(8)", "e7"},
      {"e7(7)", "sl(8,R)", nullptr},
      {"e7(7)", "sl(4,H)", nullptr},
      {"e7(7)", "su(4,4)", nullptr},
      {"e7(7)", "so(6,6)+sl(2,R)", nullptr},
      {"e7(7)", "so*(12)+su(2)", nullptr},
      {"e7(7)", "e6(6)+R", nullptr},
      {"e7(7)", "e6(2)+T", nullptr},
      {"e7(-5)", "so(12)+su(2)", "e7"},
      {"e7(-5)", "su(6,2)", nullptr},
      {"e7(-5)", "su(4,4)", nullptr},
      {"e7(-5)", "so(8,4)+su(2)", nullptr},
      {"e7(-5)", "so*(12)+sl(2,R)", nullptr},
      {"e7(-5)", "e6(2)+T", nullptr},
      {"e7(-5)", "e6(-14)+T", nullptr},
      {"e7(-25)", "e6+T", "e7"},
      {"e7(-25)", "su(6,2)", nullptr},
      {"e7(-25)", "sl(4,H)", nullptr},
      {"e7(-25)", "so(10,2)+sl(2,R)", nullptr},
      {"e7(-25)", "so*(12)+su(2)", nullptr},
      {"e7(-25)", "e6(-14)+T", nullptr},
      {"e7(-25)", "e6(-26)+R", nullptr},
      {"e7", "su(8)", "e7(7)"},
      {"e7", "so(12)+su(2)", "e7(-5)"},
      {"e7", "e6+T", "e7(-25)"},

      {"e8(8)", "so(16)", "e8"},
      {"e8(8)", "so*(16)", nullptr},
      {"e8(8)", "so(8,8)", nullptr},
      {"e8(8)", "e7(7)+sl(2,R)", nullptr},
      {"e8(8)", "e7(-5)+su(2)", nullptr},
      {"e8(-24)", "e7+su(2)", "e8"},
      {"e8(-24)", "so(12,4)", nullptr},
      {"e8(-24)", "so*(16)", nullptr},
      {"e8(-24)", "e7(-5)+su(2)", nullptr},
      {"e8(-24)", "e7(-25)+sl(2,R)", nullptr},
      {"e8", "so(16)", "e8(8)"},
      {"e8", "e7+su(2)", "e8(-24)"},

      {"f4(4)", "sp(3)+su(2)", "f4"},
      {"f4(4)", "sp(2,1)+su(2)", nullptr},
      {"f4(4)", "sp(3,R)+sl(2,R)", nullptr},
      {"f4(4)", "so(5,4)", nullptr},
      {"f4(-20)", "so(9)", "f4"},
      {"f4(-20)", "sp(2,1)+su(2)", nullptr},
      {"f4(-20)", "so(8,1)", nullptr},
      {"f4", "sp(3)+su(2)", "f4(4)"},
      {"f4", "so(9)", "f4(-20)"},

      {"g2(2)", "su(2)+su(2)", "g2"},
      {"g2(2)", "sl(2,R)+sl(2,R)", nullptr},
      {"g2", "su(2)+su(2)", "g2(2)"},
  };
  return rows;
}

std::array<int, 4> canonical_quad(int a, int b, int c, int d) {
  std::array<std::array<int, 4>, 4> variants = {{{a, b, c, d}, {c, d, a, b}, {b, a, d, c}, {d, c, b, a}}};
  return *std::min_element(variants.begin(), variants.end());
}

bool symmetric_pair_params(PairFamily f) {
  switch (f) {
    case PairFamily::SlC_SlCSlC:
    case PairFamily::SoC_SoCSoC:
    case PairFamily::SpC_SpCSpC:
    case PairFamily::SlR_SlRSlR:
    case PairFamily::SlH_SlHSlH:
    case PairFamily::SOStar_SOStarSOStar:
    case PairFamily::SpR_SpRSpR:
      return true;
    default:
      return false;
  }
}

// Descriptors as written in the family definition.
std::pair<ReductiveDescriptor, ReductiveDescriptor> defining(PairFamily f, const std::vector<int>& v,
                                                             SimpleFactor l) {
  using D = ReductiveDescriptor;
  auto T = abelian(0, 1);
  auto R = abelian(1, 0);
  auto C = abelian(1, 1);
  auto d = [](SimpleFactor s) { return descriptor(s); };
  switch (f) {
    case PairFamily::Trivial: return {d(l), d(l)};
    case PairFamily::Diagonal: return {l + l, d(l)};
    case PairFamily::Complexification: return {complexify(l), d(l)};
    case PairFamily::SlC_SoC: return {d(sl_c(v[0])), d(so_c(v[0]))};
    case PairFamily::SlC_SpC: return {d(sl_c(2 * v[0])), d(sp_c(v[0]))};
    case PairFamily::SlC_SlCSlC: return {d(sl_c(v[0] + v[1])), sl_c(v[0]) + sl_c(v[1]) + C};
    case PairFamily::SoC_SoCSoC: return {d(so_c(v[0] + v[1])), so_c(v[0]) + so_c(v[1])};
    case PairFamily::SoC_SlC: return {d(so_c(2 * v[0])), d(sl_c(v[0])) + C};
    case PairFamily::SpC_SlC: return {d(sp_c(v[0])), d(sl_c(v[0])) + C};
    case PairFamily::SpC_SpCSpC: return {d(sp_c(v[0] + v[1])), sp_c(v[0]) + sp_c(v[1])};
    case PairFamily::SlR_SO: return {d(sl_r(v[0] + v[1])), d(so(v[0], v[1]))};
    case PairFamily::SlR_SlRSlR: return {d(sl_r(v[0] + v[1])), sl_r(v[0]) + sl_r(v[1]) + R};
    case PairFamily::SlR_SlC: return {d(sl_r(2 * v[0])), d(sl_c(v[0])) + T};
    case PairFamily::SlR_SpR: return {d(sl_r(2 * v[0])), d(sp_r(v[0]))};
    case PairFamily::SlH_Sp: return {d(sl_h(v[0] + v[1])), d(sp(v[0], v[1]))};
    case PairFamily::SlH_SlHSlH: return {d(sl_h(v[0] + v[1])), sl_h(v[0]) + sl_h(v[1]) + R};
    case PairFamily::SlH_SlC: return {d(sl_h(v[0])), d(sl_c(v[0])) + T};
    case PairFamily::SlH_SOStar: return {d(sl_h(v[0])), d(so_star(v[0]))};
    case PairFamily::SU_SO: return {d(su(v[0], v[1])), d(so(v[0], v[1]))};
    case PairFamily::SU_Sp: return {d(su(2 * v[0], 2 * v[1])), d(sp(v[0], v[1]))};
    case PairFamily::SU_SUSU:
      return {d(su(v[0] + v[2], v[1] + v[3])), su(v[0], v[1]) + su(v[2], v[3]) + T};
    case PairFamily::SU_SlC: return {d(su(v[0], v[0])), d(sl_c(v[0])) + R};
    case PairFamily::SU_SOStar: return {d(su(v[0], v[0])), d(so_star(v[0]))};
    case PairFamily::SU_SpR: return {d(su(v[0], v[0])), d(sp_r(v[0]))};
    case PairFamily::SO_SOSO: return {d(so(v[0] + v[2], v[1] + v[3])), so(v[0], v[1]) + so(v[2], v[3])};
    case PairFamily::SO_SU: return {d(so(2 * v[0], 2 * v[1])), d(su(v[0], v[1])) + T};
    case PairFamily::SO_SlR: return {d(so(v[0], v[0])), d(sl_r(v[0])) + R};
    case PairFamily::SO_SoC: return {d(so(v[0], v[0])), d(so_c(v[0]))};
    case PairFamily::SOStar_SOStarSOStar:
      return {d(so_star(v[0] + v[1])), so_star(v[0]) + so_star(v[1])};
    case PairFamily::SOStar_SU: return {d(so_star(v[0] + v[1])), d(su(v[0], v[1])) + T};
    case PairFamily::SOStar_SoC: return {d(so_star(v[0])), d(so_c(v[0]))};
    case PairFamily::SOStar_SlH: return {d(so_star(2 * v[0])), d(sl_h(v[0])) + R};
    case PairFamily::SpR_SpRSpR: return {d(sp_r(v[0] + v[1])), sp_r(v[0]) + sp_r(v[1])};
    case PairFamily::SpR_SU: return {d(sp_r(v[0] + v[1])), d(su(v[0], v[1])) + T};
    case PairFamily::SpR_SlR: return {d(sp_r(v[0])), d(sl_r(v[0])) + R};
    case PairFamily::SpR_SpC: return {d(sp_r(2 * v[0])), d(sp_c(v[0]))};
    case PairFamily::Sp_SpSp: return {d(sp(v[0] + v[2], v[1] + v[3])), sp(v[0], v[1]) + sp(v[2], v[3])};
    case PairFamily::Sp_SU: return {d(sp(v[0], v[1])), d(su(v[0], v[1])) + T};
    case PairFamily::Sp_SlH: return {d(sp(v[0], v[0])), d(sl_h(v[0])) + R};
    case PairFamily::Sp_SpC: return {d(sp(v[0], v[0])), d(sp_c(v[0]))};
    case PairFamily::Exceptional: {
      const auto& rows = exceptional_rows();
      if (v[0] < 0 || v[0] >= static_cast<int>(rows.size()))
        throw RegistryError("exceptional pair index out of range");
      return {parse_descriptor(rows[v[0]].g), parse_descriptor(rows[v[0]].h)};
    }
  }
  return {D{}, D{}};
}

// Drops factors that are zero algebras so that display strings stay readable.
ReductiveDescriptor without_zero_factors(const ReductiveDescriptor& d) {
  ReductiveDescriptor out{d.split_abelian, d.compact_abelian, {}};
  for (const auto& f : d.simples)
    if (!normalize(f).is_zero()) out.simples.push_back(f);
  return out;
}

}  // namespace

std::string family_label(PairFamily f) { return info(f).label; }

PairFamily pair_family_from_label(std::string_view label) {
  for (const auto& i : kFamilies)
    if (label == i.label) return i.family;
  throw RegistryError("unknown pair family label '" + std::string(label) + "'");
}

const std::vector<ExceptionalPairEntry>& exceptional_pairs() {
  static const std::vector<ExceptionalPairEntry> entries = [] {
    std::vector<ExceptionalPairEntry> out;
    for (const auto& r : exceptional_rows()) out.push_back({r.g, r.h});
    return out;
  }();
  return entries;
}

IrreduciblePair make_pair(PairFamily family, std::vector<int> params, SimpleFactor l) {
  const auto& fi = info(family);
  if (static_cast<int>(params.size()) != fi.arity)
    throw RegistryError("family " + std::string(fi.label) + " expects " + std::to_string(fi.arity) +
                        " parameters");
  for (int v : params)
    if (v < 0) throw RegistryError("negative pair parameter");
  IrreduciblePair p;
  p.family = family;
  if (family == PairFamily::Trivial || family == PairFamily::Diagonal ||
      family == PairFamily::Complexification) {
    auto nl = normalize(l);
    if (!nl.is_simple()) throw RegistryError("pair requires a simple algebra, got " + to_string(l));
    l = nl.simples.front();
    if (family == PairFamily::Complexification && is_complex(l.family))
      throw RegistryError("complexification pair requires a real form");
    p.l = l;
  } else if (fi.arity == 2 && symmetric_pair_params(family)) {
    if (params[0] < params[1]) std::swap(params[0], params[1]);
  } else if (fi.arity == 4) {
    auto c = canonical_quad(params[0], params[1], params[2], params[3]);
    params.assign(c.begin(), c.end());
  }
  p.params = params;
  auto [g, h] = defining(family, p.params, p.l);
  p.g_defining = without_zero_factors(g);
  p.h_defining = without_zero_factors(h);
  p.g = normalize(g);
  p.h = normalize(h);
  if (family == PairFamily::Diagonal) return p;
  if (!p.g.is_simple())
    throw RegistryError("g is not simple for " + family_label(family));
  if (family != PairFamily::Trivial && p.g == p.h)
    throw RegistryError("trivial involution for " + family_label(family));
  return p;
}

IrreduciblePair make_trivial(SimpleFactor l) { return make_pair(PairFamily::Trivial, {}, l); }
IrreduciblePair make_diagonal(SimpleFactor l) { return make_pair(PairFamily::Diagonal, {}, l); }
IrreduciblePair make_complexification(SimpleFactor l) {
  return make_pair(PairFamily::Complexification, {}, l);
}

std::vector<SimpleFactor> simple_factors_up_to(int bound) {
  std::set<SimpleFactor> out;
  auto add = [&](SimpleFactor f) {
    auto n = normalize(f);
    if (n.is_simple()) out.insert(n.simples.front());
  };
  for (int p = 0; p <= bound; ++p) {
    add(sl_r(p));
    add(sl_h(p));
    add(sp_r(p));
    add(so_star(p));
    add(sl_c(p));
    add(so_c(p));
    add(sp_c(p));
    for (int q = 0; q <= p; ++q) {
      add(su(p, q));
      add(so(p, q));
      add(sp(p, q));
    }
  }
  for (Family f : {Family::E6_6, Family::E6_2, Family::E6_m14, Family::E6_m26, Family::E7_7,
                   Family::E7_m5, Family::E7_m25, Family::E8_8, Family::E8_m24, Family::F4_4,
                   Family::F4_m20, Family::G2_2, Family::E6, Family::E7, Family::E8, Family::F4,
                   Family::G2, Family::E6C, Family::E7C, Family::E8C, Family::F4C, Family::G2C})
    out.insert(exceptional(f));
  return {out.begin(), out.end()};
}

namespace {

std::vector<IrreduciblePair> enumerate_uncached(int bound) {
  std::vector<IrreduciblePair> out;
  auto attempt = [&](PairFamily f, std::vector<int> params, SimpleFactor l = {}) {
    try {
      out.push_back(make_pair(f, std::move(params), l));
    } catch (const RegistryError&) {
    } catch (const CatalogError&) {
    }
  };
  auto factors = simple_factors_up_to(bound);
  for (const auto& l : factors) attempt(PairFamily::Trivial, {}, l);
  for (const auto& l : factors) attempt(PairFamily::Diagonal, {}, l);
  for (const auto& l : factors)
    if (!is_complex(l.family)) attempt(PairFamily::Complexification, {}, l);
  for (const auto& fi : kFamilies) {
    if (fi.family == PairFamily::Trivial || fi.family == PairFamily::Diagonal ||
        fi.family == PairFamily::Complexification || fi.family == PairFamily::Exceptional)
      continue;
    if (fi.arity == 1) {
      for (int n = 1; n <= bound; ++n) attempt(fi.family, {n});
    } else if (fi.arity == 2) {
      int qmin = symmetric_pair_params(fi.family) ? 1 : 0;
      for (int p = 1; p <= bound; ++p)
        for (int q = qmin; q <= p; ++q) attempt(fi.family, {p, q});
    } else {
      for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
          for (int c = 0; c <= bound; ++c)
            for (int d = 0; d <= bound; ++d) {
              if (a + b == 0 || c + d == 0) continue;
              if (canonical_quad(a, b, c, d) != std::array<int, 4>{a, b, c, d}) continue;
              attempt(fi.family, {a, b, c, d});
            }
    }
  }
  for (int i = 0; i < static_cast<int>(exceptional_rows().size()); ++i)
    attempt(PairFamily::Exceptional, {i});
  return out;
}

}  // namespace

std::vector<IrreduciblePair> berger_enumerate(int param_bound) {
  if (param_bound < 1) throw RegistryError("parameter bound must be at least 1");
  static std::mutex mu;
  static std::map<int, std::vector<IrreduciblePair>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(param_bound);
  if (it == cache.end()) it = cache.emplace(param_bound, enumerate_uncached(param_bound)).first;
  return it->second;
}

namespace {

std::optional<IrreduciblePair> c_dual_unchecked(const IrreduciblePair& p) {
  const auto& v = p.params;
  auto same = [&](PairFamily f) { return make_pair(f, v); };
  switch (p.family) {
    case PairFamily::Trivial: return p;
    case PairFamily::Diagonal:
      if (is_complex(p.l.family)) return std::nullopt;
      return make_complexification(p.l);
    case PairFamily::Complexification: return make_diagonal(p.l);
    case PairFamily::SlC_SoC:
    case PairFamily::SlC_SpC:
    case PairFamily::SlC_SlCSlC:
    case PairFamily::SoC_SoCSoC:
    case PairFamily::SoC_SlC:
    case PairFamily::SpC_SlC:
    case PairFamily::SpC_SpCSpC:
      return p;
    case PairFamily::SlR_SO: return same(PairFamily::SU_SO);
    case PairFamily::SU_SO: return same(PairFamily::SlR_SO);
    case PairFamily::SlH_Sp: return same(PairFamily::SU_Sp);
    case PairFamily::SU_Sp: return same(PairFamily::SlH_Sp);
    case PairFamily::SO_SU: return same(PairFamily::SOStar_SU);
    case PairFamily::SOStar_SU: return same(PairFamily::SO_SU);
    case PairFamily::SpR_SU: return same(PairFamily::Sp_SU);
    case PairFamily::Sp_SU: return same(PairFamily::SpR_SU);
    case PairFamily::SU_SUSU:
    case PairFamily::SO_SOSO:
    case PairFamily::Sp_SpSp:
      return make_pair(p.family, {v[0], v[1], v[3], v[2]});
    case PairFamily::Exceptional: {
      const auto& rows = exceptional_rows();
      const auto& row = rows[v[0]];
      if (row.dual == nullptr) return std::nullopt;
      if (std::string_view(row.dual) == "self") return p;
      for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        if (std::string_view(rows[i].g) == row.dual && std::string_view(rows[i].h) == row.h)
          return make_pair(PairFamily::Exceptional, {i});
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

}  // namespace

// A dual whose g degenerates to a non-simple algebra is not in the registry.
std::optional<IrreduciblePair> c_dual(const IrreduciblePair& p) {
  try {
    return c_dual_unchecked(p);
  } catch (const RegistryError&) {
    return std::nullopt;
  }
}

std::string to_string(BLabel b) {
  switch (b) {
    case BLabel::B1: return "B1";
    case BLabel::B2: return "B2";
    case BLabel::B3: return "B3";
    case BLabel::B4: return "B4";
    case BLabel::B5: return "B5";
  }
  return "?";
}

std::set<BLabel> condition_B(const IrreduciblePair& p) {
  std::set<BLabel> out;
  if (p.g == p.h && p.g.is_simple()) out.insert(BLabel::B1);
  if (p.family == PairFamily::Diagonal) out.insert(BLabel::B2);
  if (p.g.is_simple() && is_complex(p.g.simples.front().family) && complexify(p.h) == p.g)
    out.insert(BLabel::B3);
  if (rank(p.h) == compact_rank(p.h)) out.insert(BLabel::B4);
  if (p.g.is_simple()) {
    const auto& g = p.g.simples.front();
    bool b5 = false;
    if (g.family == Family::SlC && g.p >= 3 && g.p % 2 == 1) b5 = p.h == normalize(so_c(g.p));
    if (g.family == Family::SlC && g.p >= 4 && g.p % 2 == 0) b5 = p.h == normalize(sp_c(g.p / 2));
    if (g.family == Family::SoC && g.p >= 8 && g.p % 2 == 0) b5 = p.h == normalize(so_c(g.p - 1));
    if (g.family == Family::E6C) b5 = p.h == descriptor(exceptional(Family::F4C));
    if (b5) out.insert(BLabel::B5);
  }
  return out;
}

bool satisfies_B(const SymmetricPairDescriptor& p) {
  return std::all_of(p.summands.begin(), p.summands.end(),
                     [](const IrreduciblePair& s) { return !condition_B(s).empty(); });
}

std::string to_string(const IrreduciblePair& p) {
  return "(" + to_string(p.g_defining) + ", " + to_string(p.h_defining) + ")";
}

std::string to_string(const SymmetricPairDescriptor& p) {
  std::string out;
  for (std::size_t i = 0; i < p.summands.size(); ++i) {
    if (i) out += " + ";
    out += to_string(p.summands[i]);
  }
  return out;
}

nlohmann::json to_json(const IrreduciblePair& p) {
  nlohmann::json j = {{"label", family_label(p.family)},
                      {"params", p.params},
                      {"name", to_string(p)},
                      {"g", to_json(p.g)},
                      {"h", to_json(p.h)}};
  if (p.family == PairFamily::Trivial || p.family == PairFamily::Diagonal ||
      p.family == PairFamily::Complexification)
    j["l"] = to_json(p.l);
  return j;
}

IrreduciblePair resolve_pair(const ReductiveDescriptor& g_raw, const ReductiveDescriptor& h_raw) {
  const auto g = normalize(g_raw);
  const auto h = normalize(h_raw);
  if (g.simples.size() == 2 && g.split_abelian == 0 && g.compact_abelian == 0 &&
      g.simples[0] == g.simples[1] && h == descriptor(g.simples[0]))
    return make_diagonal(g.simples[0]);
  if (!g.is_simple())
    throw RegistryError("g must be simple or a doubled simple algebra: " + to_string(g_raw));
  // Family parameters never exceed the size of g as written or as normalized.
  int bound = 2;
  for (const ReductiveDescriptor* d : {&g, &g_raw})
    for (const auto& f : d->simples) bound = std::max(bound, f.p + f.q);
  // Prefer the family whose defining descriptors are the ones written.
  auto sorted = [](ReductiveDescriptor d) {
    std::sort(d.simples.begin(), d.simples.end());
    return d;
  };
  std::optional<IrreduciblePair> first;
  for (const auto& p : berger_enumerate(bound)) {
    if (p.g != g || p.h != h) continue;
    if (sorted(p.g_defining) == sorted(g_raw) && sorted(p.h_defining) == sorted(h_raw)) return p;
    if (!first) first = p;
  }
  if (first) return *first;
  throw RegistryError("no symmetric pair (" + to_string(g_raw) + ", " + to_string(h_raw) +
                      ") in the registry");
}

SymmetricPairDescriptor parse_pair(std::string_view raw) {
  std::string text;
  // Accept the direct-sum sign as a separator.
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.substr(i, 3) == "\xE2\x8A\x95") {
      text += '+';
      i += 2;
    } else {
      text += raw[i];
    }
  }
  SymmetricPairDescriptor out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw RegistryError("empty pair");
  while (true) {
    skip_space();
    if (i >= text.size() || text[i] != '(') throw RegistryError("expected '(' in pair '" + text + "'");
    int depth = 0;
    std::size_t open = i, comma = std::string::npos, close = std::string::npos;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '(') ++depth;
      else if (c == ')') {
        if (--depth == 0) {
          close = i;
          break;
        }
      } else if (c == ',' && depth == 1 && comma == std::string::npos) {
        comma = i;
      }
    }
    if (close == std::string::npos || comma == std::string::npos)
      throw RegistryError("malformed pair '" + text + "'");
    auto g = parse_descriptor(std::string_view(text).substr(open + 1, comma - open - 1));
    auto h = parse_descriptor(std::string_view(text).substr(comma + 1, close - comma - 1));
    out.summands.push_back(resolve_pair(g, h));
    ++i;
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '+') throw RegistryError("expected '+' between pairs in '" + text + "'");
    ++i;
  }
  return out;
}

}  // namespace symobs
