#include "symobs/pairs.hpp"
#include "symobs/profiles.hpp"
#include "symobs/table1.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symobs;

namespace {

bool contains(const std::vector<IrreduciblePair>& ps, const char* text) {
  auto p = parse_pair(text).summands.front();
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

}  // namespace

TEST_CASE("enumeration contains the expected small pairs") {
  auto two = berger_enumerate(2);
  CHECK(contains(two, "(su(1,1), so(1,1))"));
  CHECK(contains(two, "(sl(2,C), sl(2,R))"));
  CHECK(contains(berger_enumerate(1), "(e6(6), sl(3,H) + su(2))"));
  CHECK_THROWS(berger_enumerate(0));
}

TEST_CASE("enumerated pairs are consistent") {
  for (const auto& p : berger_enumerate(8)) {
    CHECK(rank(p.h) <= rank(p.g));
    if (p.family != PairFamily::Trivial) CHECK(dimension(p.h) < dimension(p.g));
    CHECK(normalize(p.g_defining) == p.g);
    CHECK(normalize(p.h_defining) == p.h);
  }
}

TEST_CASE("no non-simple g appears as an irreducible pair") {
  for (const auto& p : berger_enumerate(8)) {
    if (p.family == PairFamily::Diagonal) continue;
    CHECK(p.g.is_simple());
    CHECK(p.g_defining.simples.size() == 1);
    for (const char* bad : {"so(4,C)", "so(2,2)", "so*(4)"}) CHECK(p.g_defining != parse_descriptor(bad));
  }
}

TEST_CASE("c-dual examples") {
  auto d = c_dual(parse_pair("(su(3,1), so(3,1))").summands.front());
  REQUIRE(d);
  CHECK(*d == parse_pair("(sl(4,R), so(3,1))").summands.front());
  auto diag = make_diagonal(sl_r(3));
  auto dd = c_dual(diag);
  REQUIRE(dd);
  CHECK(*dd == make_complexification(sl_r(3)));
}

TEST_CASE("c-dual is an involution and preserves condition B") {
  for (const auto& p : berger_enumerate(8)) {
    auto d = c_dual(p);
    if (!d) continue;
    auto dd = c_dual(*d);
    REQUIRE(dd);
    CHECK(*dd == p);
    CHECK(condition_B(p).empty() == condition_B(*d).empty());
  }
}

TEST_CASE("condition B examples") {
  CHECK(condition_B(parse_pair("(sl(5,C), so(5,C))").summands.front()) == std::set<BLabel>{BLabel::B5});
  CHECK(condition_B(parse_pair("(sl(2,C), su(2))").summands.front()) == std::set<BLabel>{BLabel::B3, BLabel::B4});
  CHECK(condition_B(parse_pair("(e6(6), sl(3,H) + su(2))").summands.front()).empty());
  CHECK(condition_B(make_trivial(su(2))).count(BLabel::B1));
}

TEST_CASE("B5 pairs pass both necessary tests") {
  for (const auto& p : berger_enumerate(8))
    if (condition_B(p).count(BLabel::B5)) {
      CHECK(rank_test(p.g, p.h).pass);
      CHECK(degree_test(p.g, p.h).pass);
    }
}

TEST_CASE("condition B fails exactly on hand-entered failing rows") {
  for (const auto& p : berger_enumerate(8)) CHECK(condition_B(p).empty() == table1_row_of(p).has_value());
}

TEST_CASE("pair text parses, prints and resolves") {
  auto p = parse_pair("(sl(2,R) + sl(2,R), sl(2,R)) + (su(2), su(2))");
  REQUIRE(p.summands.size() == 2);
  CHECK(p.summands[0].family == PairFamily::Diagonal);
  CHECK(p.summands[1].family == PairFamily::Trivial);
  CHECK(parse_pair(to_string(p)).summands == p.summands);
  CHECK(to_string(parse_pair("(su(1,1), so(1,1))").summands.front()) == "(su(1,1), so(1,1))");
  CHECK_THROWS_AS(parse_pair("(sl(3,R), su(3))"), RegistryError);
  CHECK_THROWS(parse_pair("(sl(3,R)"));
}
