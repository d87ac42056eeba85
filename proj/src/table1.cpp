#include "symobs/table1.hpp"

#include <functional>

namespace symobs {

namespace {

struct RowMatcher {
  PairFamily family;
  std::function<bool(const std::vector<int>&)> when;
};

bool odd(int x) { return x % 2 == 1; }

// Quadruple rows are stated for one ordering; the registry stores a canonical
// representative of the symmetric variants, so test every variant.
bool any_quad_variant(const std::vector<int>& v, const std::function<bool(int, int, int, int)>& f) {
  int a = v[0], b = v[1], c = v[2], d = v[3];
  return f(a, b, c, d) || f(c, d, a, b) || f(b, a, d, c) || f(d, c, b, a);
}

bool any_pair_variant(const std::vector<int>& v, const std::function<bool(int, int)>& f) {
  return f(v[0], v[1]) || f(v[1], v[0]);
}

struct Entry {
  Table1Row row;
  std::optional<RowMatcher> matcher;  // classical rows
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> rows = [] {
    std::vector<Entry> e;
    int id = 0;
    auto classical = [&](const char* stars, const char* g, const char* h, const char* cond,
                         PairFamily f, std::function<bool(const std::vector<int>&)> when) {
      e.push_back({{++id, stars, g, h, cond}, RowMatcher{f, std::move(when)}});
    };
    auto special = [&](const char* stars, const char* g, const char* h) {
      e.push_back({{++id, stars, g, h, "-"}, std::nullopt});
    };
    classical("*", "sl(2n,C)", "so(2n,C)", "n >= 1", PairFamily::SlC_SoC,
              [](auto& v) { return v[0] >= 2 && v[0] % 2 == 0; });
    classical("", "sl(p+q,C)", "sl(p,C)+sl(q,C)+C", "p,q >= 1", PairFamily::SlC_SlCSlC,
              [](auto& v) { return v[0] >= 1 && v[1] >= 1; });
    classical("**", "sl(p+q,R)", "so(p,q)", "p,q >= 1 odd", PairFamily::SlR_SO,
              [](auto& v) { return odd(v[0]) && odd(v[1]); });
    classical("*", "su(p,q)", "so(p,q)", "p,q >= 1 odd", PairFamily::SU_SO,
              [](auto& v) { return odd(v[0]) && odd(v[1]); });
    classical("", "su(n,n)", "sl(n,C)+R", "n >= 1", PairFamily::SU_SlC,
              [](auto& v) { return v[0] >= 1; });
    classical("**", "sl(2n,R)", "sl(n,C)+T", "n >= 2", PairFamily::SlR_SlC,
              [](auto& v) { return v[0] >= 2; });
    classical("*", "sl(n,H)", "sl(n,C)+T", "n >= 2", PairFamily::SlH_SlC,
              [](auto& v) { return v[0] >= 2; });
    classical("", "sl(p+q,R)", "sl(p,R)+sl(q,R)+R", "p,q >= 1", PairFamily::SlR_SlRSlR,
              [](auto& v) { return v[0] >= 1 && v[1] >= 1; });
    classical("", "sl(p+q,H)", "sl(p,H)+sl(q,H)+R", "p,q >= 1", PairFamily::SlH_SlHSlH,
              [](auto& v) { return v[0] >= 1 && v[1] >= 1; });
    classical("*", "so(p+q,C)", "so(p,C)+so(q,C)", "p,q >= 2, (p,q) != (2,2)",
              PairFamily::SoC_SoCSoC, [](auto& v) {
                return any_pair_variant(v, [](int p, int q) {
                  return p >= 2 && q >= 2 && !(p == 2 && q == 2);
                });
              });
    classical("*", "so(2n+1,C)", "so(2n,C)", "n >= 1", PairFamily::SoC_SoCSoC, [](auto& v) {
      return any_pair_variant(v, [](int p, int q) { return q == 1 && p >= 2 && p % 2 == 0; });
    });
    classical("", "so(2n,C)", "sl(n,C)+C", "n >= 3", PairFamily::SoC_SlC,
              [](auto& v) { return v[0] >= 3; });
    classical("**", "so(n,n)", "so(n,C)", "n >= 3", PairFamily::SO_SoC,
              [](auto& v) { return v[0] >= 3; });
    classical("*", "so*(2n)", "so(n,C)", "n >= 3", PairFamily::SOStar_SoC,
              [](auto& v) { return v[0] >= 3; });
    classical("**", "so(p+r,q+s)", "so(p,q)+so(r,s)",
              "p,q >= 1 odd, r,s >= 0, (r,s) != (0,0), (p,q,r,s) != (1,1,1,1)",
              PairFamily::SO_SOSO, [](auto& v) {
                return any_quad_variant(v, [](int p, int q, int r, int s) {
                  return odd(p) && odd(q) && r >= 0 && s >= 0 && r + s > 0 &&
                         !(p == 1 && q == 1 && r == 1 && s == 1);
                });
              });
    classical("", "so(n,n)", "sl(n,R)+R", "n >= 3", PairFamily::SO_SlR,
              [](auto& v) { return v[0] >= 3; });
    classical("", "so*(4n)", "sl(n,H)+R", "n >= 2", PairFamily::SOStar_SlH,
              [](auto& v) { return v[0] >= 2; });
    classical("", "sp(n,C)", "sl(n,C)+C", "n >= 1", PairFamily::SpC_SlC,
              [](auto& v) { return v[0] >= 1; });
    classical("*", "sp(p+q,C)", "sp(p,C)+sp(q,C)", "p,q >= 1", PairFamily::SpC_SpCSpC,
              [](auto& v) { return v[0] >= 1 && v[1] >= 1; });
    classical("*", "sp(2n,R)", "sp(n,C)", "n >= 1", PairFamily::SpR_SpC,
              [](auto& v) { return v[0] >= 1; });
    classical("*", "sp(n,n)", "sp(n,C)", "n >= 1", PairFamily::Sp_SpC,
              [](auto& v) { return v[0] >= 1; });
    classical("", "sp(n,R)", "sl(n,R)+R", "n >= 1", PairFamily::SpR_SlR,
              [](auto& v) { return v[0] >= 1; });
    classical("", "sp(n,n)", "sl(n,H)+R", "n >= 1", PairFamily::Sp_SlH,
              [](auto& v) { return v[0] >= 1; });
    special("*", "e6C", "sp(4,C)");
    special("*", "e6C", "sl(6,C)+sl(2,C)");
    special("", "e6C", "so(10,C)+C");
    special("*", "e6(6)", "sl(6,R)+sl(2,R)");
    special("**", "e6(6)", "sl(3,H)+su(2)");
    special("*", "e6(-26)", "sl(3,H)+su(2)");
    special("", "e6(6)", "so(5,5)+R");
    special("", "e6(-26)", "so(9,1)+R");
    special("*", "e7C", "sl(8,C)");
    special("*", "e7C", "so(12,C)+sl(2,C)");
    special("", "e7C", "e6C+C");
    special("", "e7(7)", "sl(8,R)");
    special("", "e7(7)", "sl(4,H)");
    special("", "e7(-25)", "sl(4,H)");
    special("", "e7(7)", "e6(6)+R");
    special("", "e7(-25)", "e6(-26)+R");
    special("*", "e8C", "so(16,C)");
    special("*", "e8C", "e7C+sl(2,C)");
    special("*", "f4C", "sp(3,C)+sl(2,C)");
    special("*", "f4C", "so(9,C)");
    special("*", "g2C", "sl(2,C)+sl(2,C)");
    return e;
  }();
  return rows;
}

}  // namespace

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> out;
    for (const auto& e : entries()) out.push_back(e.row);
    return out;
  }();
  return rows;
}

std::optional<int> table1_row_of(const IrreduciblePair& p) {
  for (const auto& e : entries()) {
    if (e.matcher) {
      if (e.matcher->family == p.family && e.matcher->when(p.params)) return e.row.id;
    } else if (p.family == PairFamily::Exceptional) {
      const auto& x = exceptional_pairs()[p.params[0]];
      if (e.row.g == x.g && e.row.h == x.h) return e.row.id;
    }
  }
  return std::nullopt;
}

std::vector<IrreduciblePair> table1_instances(int param_bound) {
  std::vector<IrreduciblePair> out;
  for (const auto& p : berger_enumerate(param_bound))
    if (table1_row_of(p)) out.push_back(p);
  return out;
}

}  // namespace symobs
