#include "symobs/classifier.hpp"
#include "symobs/profiles.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace symobs;

namespace {

Certificate cert(const char* text) { return classify(parse_pair(text).summands.front()); }

}  // namespace

TEST_CASE("certificates for small pairs") {
  CHECK(to_string(cert("(su(1,1), so(1,1))")) == "FAIL-rank-test on (su(1,1), so(1,1)) (0 < 1)");
  CHECK(to_string(cert("(sl(4,R), so(3,1))")) ==
        "FAIL-via-c-dual(FAIL-rank-test on (su(3,1), so(3,1)) (0 < 1))");
  CHECK(cert("(sl(3,R), so(3))").labels.count(BLabel::B4));
  CHECK(cert("(so(6,C), so(5,C))").labels.count(BLabel::B5));
  auto c = cert("(sl(6,C), so(6,C))");
  CHECK(c.kind == CertificateKind::FailViaComplexification);
  REQUIRE(c.inner);
  CHECK(c.inner->kind == CertificateKind::FailRankTest);
}

TEST_CASE("verdict over a direct sum") {
  auto v = classify(parse_pair("(su(2), su(2))"));
  CHECK(v.a_holds);
  CHECK(v.per_summand.front().labels.count(BLabel::B1));
  auto w = classify(parse_pair("(su(1,1), so(1,1)) + (su(2), su(2))"));
  CHECK_FALSE(w.a_holds);
  CHECK(w.per_summand.size() == 2);
  CHECK(to_json(w)["certificates"][0]["result"] == "FAIL-rank-test");
}

TEST_CASE("classifier agrees with condition B on the grid") {
  for (const auto& p : berger_enumerate(8)) CHECK(classify(p).success() == !condition_B(p).empty());
}

TEST_CASE("failing certificates are genuine") {
  for (const auto& p : berger_enumerate(6)) {
    auto c = classify(p);
    const Certificate* leaf = &c;
    while (leaf->inner) leaf = leaf->inner.get();
    if (leaf->kind == CertificateKind::FailRankTest) CHECK_FALSE(rank_test(leaf->pair.g, leaf->pair.h).pass);
    if (leaf->kind == CertificateKind::FailDegreeTest) CHECK_FALSE(degree_test(leaf->pair.g, leaf->pair.h).pass);
  }
}

TEST_CASE("failing pairs match the golden table") {
  std::ifstream in(SYMOBS_GOLDEN_DIR "/table1_bound8.csv");
  REQUIRE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(table_csv(table1_reproduce(8), false) == golden.str());
}

TEST_CASE("table emitters are deterministic") {
  auto a = table1_reproduce(4);
  auto b = table1_reproduce(4);
  CHECK(table_csv(a, true) == table_csv(b, true));
  CHECK(table_markdown(a) == table_markdown(b));
  CHECK(table_json(a).dump() == table_json(b).dump());
}
