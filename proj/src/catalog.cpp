#include "symobs/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <utility>

namespace symobs {

namespace {

struct ExceptionalInfo {
  Family family;
  const char* name;
  int rank;
  int compact_rank;
  int dim;
  Family complex;
};

// dim and rank of the underlying real algebra; for complex entries rank is the real rank 2r.
constexpr std::array<ExceptionalInfo, 22> kExceptional = {{
    {Family::E6_6, "e6(6)", 6, 4, 78, Family::E6C},
    {Family::E6_2, "e6(2)", 6, 6, 78, Family::E6C},
    {Family::E6_m14, "e6(-14)", 6, 6, 78, Family::E6C},
    {Family::E6_m26, "e6(-26)", 6, 4, 78, Family::E6C},
    {Family::E7_7, "e7(7)", 7, 7, 133, Family::E7C},
    {Family::E7_m5, "e7(-5)", 7, 7, 133, Family::E7C},
    {Family::E7_m25, "e7(-25)", 7, 7, 133, Family::E7C},
    {Family::E8_8, "e8(8)", 8, 8, 248, Family::E8C},
    {Family::E8_m24, "e8(-24)", 8, 8, 248, Family::E8C},
    {Family::F4_4, "f4(4)", 4, 4, 52, Family::F4C},
    {Family::F4_m20, "f4(-20)", 4, 4, 52, Family::F4C},
    {Family::G2_2, "g2(2)", 2, 2, 14, Family::G2C},
    {Family::E6, "e6", 6, 6, 78, Family::E6C},
    {Family::E7, "e7", 7, 7, 133, Family::E7C},
    {Family::E8, "e8", 8, 8, 248, Family::E8C},
    {Family::F4, "f4", 4, 4, 52, Family::F4C},
    {Family::G2, "g2", 2, 2, 14, Family::G2C},
    {Family::E6C, "e6C", 12, 6, 156, Family::E6C},
    {Family::E7C, "e7C", 14, 7, 266, Family::E7C},
    {Family::E8C, "e8C", 16, 8, 496, Family::E8C},
    {Family::F4C, "f4C", 8, 4, 104, Family::F4C},
    {Family::G2C, "g2C", 4, 2, 28, Family::G2C},
}};

const ExceptionalInfo& exceptional_info(Family f) {
  for (const auto& e : kExceptional)
    if (e.family == f) return e;
  throw CatalogError("not an exceptional family");
}

struct TagName {
  Family family;
  const char* tag;
};

constexpr std::array<TagName, 7> kClassicalTags = {{
    {Family::SlR, "sl_R"},
    {Family::SlH, "sl_H"},
    {Family::SU, "su"},
    {Family::SO, "so"},
    {Family::SpR, "sp_R"},
    {Family::Sp, "sp"},
    {Family::SOStar, "so_star"},
}};

constexpr std::array<TagName, 3> kComplexTags = {{
    {Family::SlC, "sl_C"},
    {Family::SoC, "so_C"},
    {Family::SpC, "sp_C"},
}};

// Result of rewriting one factor: replacement factors plus abelian contributions.
struct Rewrite {
  std::vector<SimpleFactor> factors;
  int split = 0;
  int compact = 0;
};

Rewrite keep(SimpleFactor f) { return {{f}, 0, 0}; }
Rewrite nothing() { return {}; }
Rewrite repeat(SimpleFactor f, int times) { return {std::vector<SimpleFactor>(times, f), 0, 0}; }

void check_nonnegative(const SimpleFactor& f) {
  if (f.p < 0 || f.q < 0) throw CatalogError("negative parameter in " + family_tag(f.family));
}

Rewrite rewrite(SimpleFactor f) {
  check_nonnegative(f);
  switch (f.family) {
    case Family::SlR:
      if (f.q != 0) throw CatalogError("sl(n,R) takes one parameter");
      return f.p <= 1 ? nothing() : keep(f);
    case Family::SlH:
      if (f.q != 0) throw CatalogError("sl(n,H) takes one parameter");
      if (f.p == 0) return nothing();
      if (f.p == 1) return keep(su(2));
      return keep(f);
    case Family::SU: {
      if (f.p < f.q) std::swap(f.p, f.q);
      int n = f.p + f.q;
      if (n <= 1) return nothing();
      if (f.p == 1 && f.q == 1) return keep(sl_r(2));
      return keep(f);
    }
    case Family::SO: {
      if (f.p < f.q) std::swap(f.p, f.q);
      int n = f.p + f.q;
      if (n <= 1) return nothing();
      if (n == 2) return f.q == 0 ? Rewrite{{}, 0, 1} : Rewrite{{}, 1, 0};
      if (f.p == 3 && f.q == 0) return keep(su(2));
      if (f.p == 2 && f.q == 1) return keep(sl_r(2));
      if (f.p == 4 && f.q == 0) return repeat(su(2), 2);
      if (f.p == 3 && f.q == 1) return keep(sl_c(2));
      if (f.p == 2 && f.q == 2) return repeat(sl_r(2), 2);
      if (f.p == 3 && f.q == 3) return keep(sl_r(4));
      if (f.p == 5 && f.q == 1) return keep(sl_h(2));
      return keep(f);
    }
    case Family::SpR:
      if (f.q != 0) throw CatalogError("sp(n,R) takes one parameter");
      if (f.p == 0) return nothing();
      if (f.p == 1) return keep(sl_r(2));
      return keep(f);
    case Family::Sp:
      if (f.p < f.q) std::swap(f.p, f.q);
      if (f.p + f.q == 0) return nothing();
      if (f.p == 1 && f.q == 0) return keep(su(2));
      return keep(f);
    case Family::SOStar:
      if (f.q != 0) throw CatalogError("so*(2n) takes one parameter");
      if (f.p == 0) return nothing();
      if (f.p == 1) return Rewrite{{}, 0, 1};
      if (f.p == 2) return Rewrite{{sl_r(2), su(2)}, 0, 0};
      return keep(f);
    case Family::SlC:
      if (f.q != 0) throw CatalogError("sl(n,C) takes one parameter");
      return f.p <= 1 ? nothing() : keep(f);
    case Family::SoC:
      if (f.q != 0) throw CatalogError("so(n,C) takes one parameter");
      switch (f.p) {
        case 0:
        case 1: return nothing();
        case 2: return Rewrite{{}, 1, 1};
        case 3: return keep(sl_c(2));
        case 4: return repeat(sl_c(2), 2);
        case 5: return keep(sp_c(2));
        case 6: return keep(sl_c(4));
        default: return keep(f);
      }
    case Family::SpC:
      if (f.q != 0) throw CatalogError("sp(n,C) takes one parameter");
      if (f.p == 0) return nothing();
      if (f.p == 1) return keep(sl_c(2));
      return keep(f);
    default:
      if (f.p != 0 || f.q != 0) throw CatalogError("exceptional families take no parameters");
      return keep(f);
  }
}

int floor_half(int n) { return n / 2; }

}  // namespace

bool is_complex(Family f) {
  switch (f) {
    case Family::SlC:
    case Family::SoC:
    case Family::SpC:
    case Family::E6C:
    case Family::E7C:
    case Family::E8C:
    case Family::F4C:
    case Family::G2C: return true;
    default: return false;
  }
}

bool is_exceptional(Family f) {
  switch (f) {
    case Family::SlR:
    case Family::SlH:
    case Family::SU:
    case Family::SO:
    case Family::SpR:
    case Family::Sp:
    case Family::SOStar:
    case Family::SlC:
    case Family::SoC:
    case Family::SpC: return false;
    default: return true;
  }
}

bool is_compact(const SimpleFactor& f) {
  switch (f.family) {
    case Family::SU:
    case Family::SO:
    case Family::Sp: return f.q == 0;
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
    case Family::G2: return true;
    default: return false;
  }
}

SimpleFactor sl_r(int n) { return {Family::SlR, n, 0}; }
SimpleFactor sl_h(int n) { return {Family::SlH, n, 0}; }
SimpleFactor su(int p, int q) { return {Family::SU, p, q}; }
SimpleFactor so(int p, int q) { return {Family::SO, p, q}; }
SimpleFactor sp_r(int n) { return {Family::SpR, n, 0}; }
SimpleFactor sp(int p, int q) { return {Family::Sp, p, q}; }
SimpleFactor so_star(int n) { return {Family::SOStar, n, 0}; }
SimpleFactor sl_c(int n) { return {Family::SlC, n, 0}; }
SimpleFactor so_c(int n) { return {Family::SoC, n, 0}; }
SimpleFactor sp_c(int n) { return {Family::SpC, n, 0}; }
SimpleFactor exceptional(Family f) {
  if (!is_exceptional(f)) throw CatalogError("not an exceptional family");
  return {f, 0, 0};
}

ReductiveDescriptor descriptor(SimpleFactor f) { return {0, 0, {f}}; }
ReductiveDescriptor abelian(int split, int compact) { return {split, compact, {}}; }

ReductiveDescriptor direct_sum(const ReductiveDescriptor& a, const ReductiveDescriptor& b) {
  ReductiveDescriptor r = a;
  r.split_abelian += b.split_abelian;
  r.compact_abelian += b.compact_abelian;
  r.simples.insert(r.simples.end(), b.simples.begin(), b.simples.end());
  std::sort(r.simples.begin(), r.simples.end());
  return r;
}

ReductiveDescriptor operator+(const ReductiveDescriptor& a, const ReductiveDescriptor& b) {
  return direct_sum(a, b);
}
ReductiveDescriptor operator+(const ReductiveDescriptor& a, SimpleFactor b) {
  return direct_sum(a, descriptor(b));
}
ReductiveDescriptor operator+(SimpleFactor a, SimpleFactor b) {
  return direct_sum(descriptor(a), descriptor(b));
}

ReductiveDescriptor normalize(const ReductiveDescriptor& d) {
  if (d.split_abelian < 0 || d.compact_abelian < 0)
    throw CatalogError("negative abelian dimension");
  ReductiveDescriptor out{d.split_abelian, d.compact_abelian, {}};
  std::vector<SimpleFactor> work = d.simples;
  // Rewrites only ever produce strictly smaller or canonical factors, so this terminates.
  while (!work.empty()) {
    SimpleFactor f = work.back();
    work.pop_back();
    Rewrite r = rewrite(f);
    out.split_abelian += r.split;
    out.compact_abelian += r.compact;
    for (const auto& g : r.factors) {
      SimpleFactor canon = g;
      if ((canon.family == Family::SU || canon.family == Family::SO || canon.family == Family::Sp) &&
          canon.p < canon.q)
        std::swap(canon.p, canon.q);
      if (canon == f)
        out.simples.push_back(canon);
      else
        work.push_back(canon);
    }
  }
  std::sort(out.simples.begin(), out.simples.end());
  return out;
}

ReductiveDescriptor normalize(SimpleFactor f) { return normalize(descriptor(f)); }

int complex_rank(const SimpleFactor& f) {
  switch (f.family) {
    case Family::SlC: return f.p - 1;
    case Family::SoC: return floor_half(f.p);
    case Family::SpC: return f.p;
    case Family::E6C: return 6;
    case Family::E7C: return 7;
    case Family::E8C: return 8;
    case Family::F4C: return 4;
    case Family::G2C: return 2;
    default: throw CatalogError("complex_rank: " + to_string(f) + " is not complex");
  }
}

int rank(const SimpleFactor& f) {
  switch (f.family) {
    case Family::SlR: return f.p - 1;
    case Family::SlH: return 2 * f.p - 1;
    case Family::SU: return f.p + f.q - 1;
    case Family::SO: return floor_half(f.p + f.q);
    case Family::SpR: return f.p;
    case Family::Sp: return f.p + f.q;
    case Family::SOStar: return f.p;
    case Family::SlC:
    case Family::SoC:
    case Family::SpC: return 2 * complex_rank(f);
    default: return exceptional_info(f.family).rank;
  }
}

int compact_rank(const SimpleFactor& f) {
  switch (f.family) {
    case Family::SlR: return floor_half(f.p);
    case Family::SlH: return f.p;
    case Family::SU: return f.p + f.q - 1;
    case Family::SO: return floor_half(f.p) + floor_half(f.q);
    case Family::SpR: return f.p;
    case Family::Sp: return f.p + f.q;
    case Family::SOStar: return f.p;
    case Family::SlC:
    case Family::SoC:
    case Family::SpC: return complex_rank(f);
    default: return exceptional_info(f.family).compact_rank;
  }
}

int dimension(const SimpleFactor& f) {
  switch (f.family) {
    case Family::SlR: return f.p * f.p - 1;
    case Family::SlH: return 4 * f.p * f.p - 1;
    case Family::SU: return (f.p + f.q) * (f.p + f.q) - 1;
    case Family::SO: return (f.p + f.q) * (f.p + f.q - 1) / 2;
    case Family::SpR: return f.p * (2 * f.p + 1);
    case Family::Sp: return (f.p + f.q) * (2 * (f.p + f.q) + 1);
    case Family::SOStar: return f.p * (2 * f.p - 1);
    case Family::SlC: return 2 * (f.p * f.p - 1);
    case Family::SoC: return f.p * (f.p - 1);
    case Family::SpC: return 2 * f.p * (2 * f.p + 1);
    default: return exceptional_info(f.family).dim;
  }
}

int rank(const ReductiveDescriptor& d) {
  int r = d.split_abelian + d.compact_abelian;
  for (const auto& f : d.simples) r += rank(f);
  return r;
}

int compact_rank(const ReductiveDescriptor& d) {
  int r = d.compact_abelian;
  for (const auto& f : d.simples) r += compact_rank(f);
  return r;
}

int dimension(const ReductiveDescriptor& d) {
  int r = d.split_abelian + d.compact_abelian;
  for (const auto& f : d.simples) r += dimension(f);
  return r;
}

std::vector<int> generator_degrees(const SimpleFactor& f) {
  std::vector<int> out;
  switch (f.family) {
    case Family::SlC:
      for (int k = 2; k <= f.p; ++k) out.push_back(k);
      return out;
    case Family::SoC: {
      int m = f.p / 2;
      if (f.p % 2 == 1) {
        for (int k = 1; k <= m; ++k) out.push_back(2 * k);
      } else {
        for (int k = 1; k <= m - 1; ++k) out.push_back(2 * k);
        out.push_back(m);
      }
      return out;
    }
    case Family::SpC:
      for (int k = 1; k <= f.p; ++k) out.push_back(2 * k);
      return out;
    case Family::E6C: return {2, 5, 6, 8, 9, 12};
    case Family::E7C: return {2, 6, 8, 10, 12, 14, 18};
    case Family::E8C: return {2, 8, 12, 14, 18, 20, 24, 30};
    case Family::F4C: return {2, 6, 8, 12};
    case Family::G2C: return {2, 6};
    default: throw CatalogError("generator_degrees: " + to_string(f) + " is not complex");
  }
}

std::vector<int> exponents(const SimpleFactor& f) {
  auto degs = generator_degrees(f);
  for (auto& d : degs) d = 2 * d - 1;
  return degs;
}

ReductiveDescriptor complexify(const SimpleFactor& f) {
  auto one = [](SimpleFactor g) { return normalize(descriptor(g)); };
  switch (f.family) {
    case Family::SlR: return one(sl_c(f.p));
    case Family::SlH: return one(sl_c(2 * f.p));
    case Family::SU: return one(sl_c(f.p + f.q));
    case Family::SO: return one(so_c(f.p + f.q));
    case Family::SpR: return one(sp_c(f.p));
    case Family::Sp: return one(sp_c(f.p + f.q));
    case Family::SOStar: return one(so_c(2 * f.p));
    default:
      if (is_complex(f.family)) return normalize(f + f);
      return one(exceptional(exceptional_info(f.family).complex));
  }
}

ReductiveDescriptor complexify(const ReductiveDescriptor& d) {
  int ab = d.split_abelian + d.compact_abelian;
  ReductiveDescriptor out = abelian(ab, ab);
  for (const auto& f : d.simples) out = direct_sum(out, complexify(f));
  return normalize(out);
}

std::string family_tag(Family f) {
  for (const auto& t : kClassicalTags)
    if (t.family == f) return t.tag;
  for (const auto& t : kComplexTags)
    if (t.family == f) return t.tag;
  return exceptional_info(f).name;
}

Family family_from_tag(std::string_view tag) {
  for (const auto& t : kClassicalTags)
    if (tag == t.tag) return t.family;
  for (const auto& t : kComplexTags)
    if (tag == t.tag) return t.family;
  for (const auto& e : kExceptional)
    if (tag == e.name) return e.family;
  throw CatalogError("unknown family tag '" + std::string(tag) + "'");
}

std::string to_string(const SimpleFactor& f) {
  auto num = [](int v) { return std::to_string(v); };
  auto signature = [&](const char* name) {
    return f.q == 0 ? std::string(name) + "(" + num(f.p) + ")"
                    : std::string(name) + "(" + num(f.p) + "," + num(f.q) + ")";
  };
  switch (f.family) {
    case Family::SlR: return "sl(" + num(f.p) + ",R)";
    case Family::SlH: return "sl(" + num(f.p) + ",H)";
    case Family::SU: return signature("su");
    case Family::SO: return signature("so");
    case Family::SpR: return "sp(" + num(f.p) + ",R)";
    case Family::Sp: return signature("sp");
    case Family::SOStar: return "so*(" + num(2 * f.p) + ")";
    case Family::SlC: return "sl(" + num(f.p) + ",C)";
    case Family::SoC: return "so(" + num(f.p) + ",C)";
    case Family::SpC: return "sp(" + num(f.p) + ",C)";
    default: return exceptional_info(f.family).name;
  }
}

std::string to_string(const ReductiveDescriptor& d) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < d.simples.size();) {
    std::size_t j = i;
    while (j < d.simples.size() && d.simples[j] == d.simples[i]) ++j;
    std::size_t mult = j - i;
    terms.push_back(mult == 1 ? to_string(d.simples[i])
                              : std::to_string(mult) + "*" + to_string(d.simples[i]));
    i = j;
  }
  if (d.split_abelian > 0) terms.push_back("R^" + std::to_string(d.split_abelian));
  if (d.compact_abelian > 0) terms.push_back("iR^" + std::to_string(d.compact_abelian));
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
  return out;
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw CatalogError("expected integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split_args(std::string_view inside) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inside.size(); ++i) {
    if (i == inside.size() || inside[i] == ',') {
      out.emplace_back(inside.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

SimpleFactor parse_factor(std::string_view raw) {
  std::string text = strip(raw);
  for (const auto& e : kExceptional)
    if (text == e.name) return exceptional(e.family);
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw CatalogError("cannot parse algebra '" + text + "'");
  std::string name = text.substr(0, open);
  auto args = split_args(std::string_view(text).substr(open + 1, text.size() - open - 2));
  auto field = args.size() == 2 ? args[1] : std::string();
  if (name == "so*") {
    if (args.size() != 1) throw CatalogError("so*(2n) takes one argument");
    int m = parse_int(args[0]);
    if (m % 2 != 0) throw CatalogError("so*(m) requires even m");
    return so_star(m / 2);
  }
  if (args.size() == 1) {
    int n = parse_int(args[0]);
    if (name == "su") return su(n);
    if (name == "so") return so(n);
    if (name == "sp") return sp(n);
  } else if (args.size() == 2 && (field == "R" || field == "C" || field == "H")) {
    int n = parse_int(args[0]);
    if (name == "sl" && field == "R") return sl_r(n);
    if (name == "sl" && field == "H") return sl_h(n);
    if (name == "sl" && field == "C") return sl_c(n);
    if (name == "so" && field == "C") return so_c(n);
    if (name == "sp" && field == "C") return sp_c(n);
    if (name == "sp" && field == "R") return sp_r(n);
  } else if (args.size() == 2) {
    int p = parse_int(args[0]);
    int q = parse_int(args[1]);
    if (name == "su") return su(p, q);
    if (name == "so") return so(p, q);
    if (name == "sp") return sp(p, q);
  }
  throw CatalogError("unknown family in '" + text + "'");
}

ReductiveDescriptor parse_descriptor(std::string_view raw) {
  std::string text = strip(raw);
  if (text.empty()) throw CatalogError("empty descriptor");
  if (text == "0") return {};
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == '+' && depth == 0)) {
      terms.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  ReductiveDescriptor d;
  for (auto term : terms) {
    if (term.empty()) throw CatalogError("empty term in '" + text + "'");
    int mult = 1;
    auto star = term.find('*');
    if (star != std::string::npos && star > 0 && std::isdigit(static_cast<unsigned char>(term[0]))) {
      mult = parse_int(std::string_view(term).substr(0, star));
      term = term.substr(star + 1);
    }
    auto power = [&](std::string_view prefix) -> std::optional<int> {
      if (term == prefix) return 1;
      if (term.size() > prefix.size() + 1 && term.compare(0, prefix.size(), prefix) == 0 &&
          term[prefix.size()] == '^')
        return parse_int(std::string_view(term).substr(prefix.size() + 1));
      return std::nullopt;
    };
    if (auto k = power("R")) {
      d.split_abelian += mult * *k;
    } else if (auto k2 = power("iR")) {
      d.compact_abelian += mult * *k2;
    } else if (auto k3 = power("T")) {
      d.compact_abelian += mult * *k3;
    } else if (auto k4 = power("C")) {
      d.split_abelian += mult * *k4;
      d.compact_abelian += mult * *k4;
    } else {
      SimpleFactor f = parse_factor(term);
      for (int i = 0; i < mult; ++i) d.simples.push_back(f);
    }
  }
  std::sort(d.simples.begin(), d.simples.end());
  return d;
}

nlohmann::json to_json(const SimpleFactor& f) {
  nlohmann::json params = nlohmann::json::array();
  if (!is_exceptional(f.family)) {
    params.push_back(f.p);
    if (f.family == Family::SU || f.family == Family::SO || f.family == Family::Sp)
      params.push_back(f.q);
  }
  return {{"family", family_tag(f.family)}, {"params", params}, {"name", to_string(f)}};
}

nlohmann::json to_json(const ReductiveDescriptor& d) {
  nlohmann::json simples = nlohmann::json::array();
  for (const auto& f : d.simples) simples.push_back(to_json(f));
  return {{"split", d.split_abelian}, {"compact", d.compact_abelian}, {"simples", simples}};
}

ReductiveDescriptor descriptor_from_json(const nlohmann::json& j) {
  ReductiveDescriptor d;
  d.split_abelian = j.at("split").get<int>();
  d.compact_abelian = j.at("compact").get<int>();
  for (const auto& s : j.at("simples")) {
    SimpleFactor f{family_from_tag(s.at("family").get<std::string>()), 0, 0};
    const auto& params = s.at("params");
    if (params.size() > 0) f.p = params[0].get<int>();
    if (params.size() > 1) f.q = params[1].get<int>();
    d.simples.push_back(f);
  }
  std::sort(d.simples.begin(), d.simples.end());
  return d;
}

}  // namespace symobs
