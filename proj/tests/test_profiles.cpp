#include "symobs/pairs.hpp"
#include "symobs/profiles.hpp"

#include <doctest.h>

using namespace symobs;

TEST_CASE("minus theta profiles from the degree tables") {
  CHECK(minus_theta_profile(descriptor(sl_r(5))) == parse_graded_dims("{5:1, 9:1}"));
  CHECK(minus_theta_profile(normalize(so(5, 3))) == parse_graded_dims("{7:1}"));
  CHECK(minus_theta_profile(descriptor(su(2, 1))).entries.empty());
  CHECK(minus_theta_profile(descriptor(sl_r(2))).entries.empty());
  CHECK(minus_theta_profile(descriptor(sl_c(3))) == parse_graded_dims("{3:1, 5:1}"));
}

TEST_CASE("factor counts d_k") {
  CHECK(d_k(normalize(so(3, 1)), 2) == 1);
  CHECK(d_k(descriptor(so_c(8)), 4) == 2);
  CHECK(d_k(normalize(so(1, 1)), 1) == 1);
}

TEST_CASE("profile total is rank minus compact rank and d_k reads the profile") {
  std::vector<ReductiveDescriptor> all;
  for (const auto& f : simple_factors_up_to(12)) all.push_back(descriptor(f));
  all.push_back(abelian(2, 1));
  all.push_back(descriptor(sl_r(4)) + descriptor(so_c(8)) + abelian(1, 0));
  for (const auto& d : all) {
    auto p = minus_theta_profile(d);
    CHECK(p.total() == rank(d) - compact_rank(d));
    for (int k = 1; k <= 4; ++k) CHECK(d_k(d, k) == p.at(2 * k - 1));
    for (const auto& [deg, n] : p.entries) CHECK((deg == 1 || (deg >= 3 && deg % 2 == 1)));
  }
}

TEST_CASE("rank test and degree test examples") {
  auto r = rank_test(descriptor(su(3, 1)), normalize(so(3, 1)));
  CHECK_FALSE(r.pass);
  CHECK(r.g_side == 0);
  CHECK(r.h_side == 1);
  CHECK(rank_test(descriptor(sl_r(2)) + descriptor(sl_r(2)), descriptor(sl_r(2))).pass);
  auto r2 = rank_test(descriptor(sl_c(3)), descriptor(so_c(3)));
  CHECK(r2.pass);
  CHECK(r2.g_side == 2);
  CHECK(r2.h_side == 1);
  auto d = degree_test(normalize(so(3, 3)), normalize(descriptor(so(1, 1)) + descriptor(so(2, 2))));
  CHECK_FALSE(d.pass);
  CHECK(d.failing_degree == 1);
  auto d2 = degree_test(descriptor(so(8, 2)), normalize(descriptor(so(7, 1)) + descriptor(so(1, 1))));
  CHECK_FALSE(d2.pass);
  CHECK((d2.failing_degree == 1 || d2.failing_degree == 7));
  CHECK(degree_test(descriptor(sl_c(3)), descriptor(so_c(3))).pass);
}

TEST_CASE("a rank test failure implies a degree test failure on the grid") {
  for (const auto& p : berger_enumerate(6)) {
    if (!rank_test(p.g, p.h).pass) CHECK_FALSE(degree_test(p.g, p.h).pass);
  }
}

TEST_CASE("graded dims text round trips") {
  GradedDims g;
  g.add(3);
  g.add(5, 2);
  CHECK(parse_graded_dims(to_string(g)) == g);
  CHECK(to_string(GradedDims{}) == "{}");
}
