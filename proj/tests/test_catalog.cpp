#include "symobs/catalog.hpp"
#include "symobs/pairs.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symobs;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Raw (unnormalized) classical factors with parameters up to bound.
std::vector<SimpleFactor> raw_factors(int bound) {
  std::vector<SimpleFactor> out;
  auto push = [&](auto make) {
    try {
      out.push_back(make());
    } catch (const CatalogError&) {
    }
  };
  for (int n = 1; n <= bound; ++n) {
    push([&] { return sl_r(n); });
    push([&] { return sl_h(n); });
    push([&] { return sp_r(n); });
    push([&] { return so_star(n); });
    push([&] { return sl_c(n); });
    push([&] { return so_c(n); });
    push([&] { return sp_c(n); });
    for (int q = 0; q <= n; ++q) {
      push([&] { return su(n, q); });
      push([&] { return so(n, q); });
      push([&] { return sp(n, q); });
    }
  }
  return out;
}

}  // namespace

TEST_CASE("accidental isomorphisms normalize to one representative") {
  CHECK(normalize(so(3, 1)) == descriptor(sl_c(2)));
  CHECK(normalize(so(1, 1)) == abelian(1, 0));
  CHECK(normalize(sl_r(3)) == descriptor(sl_r(3)));
  CHECK(normalize(so(3)) == normalize(su(2)));
  CHECK(normalize(su(1, 1)) == normalize(sl_r(2)));
  CHECK(normalize(so(2, 1)) == normalize(sl_r(2)));
  CHECK(normalize(so_c(6)) == normalize(sl_c(4)));
}

TEST_CASE("rank and compact rank on small examples") {
  CHECK(rank(descriptor(sl_r(3))) == 2);
  CHECK(rank(descriptor(sl_c(2))) == 2);
  CHECK(rank(descriptor(exceptional(Family::E6_6))) == 6);
  CHECK(compact_rank(descriptor(sl_r(3))) == 1);
  CHECK(compact_rank(descriptor(exceptional(Family::E6_6))) == 4);
  CHECK(compact_rank(descriptor(su(3, 1))) == 3);
}

TEST_CASE("generator degrees of complex simple algebras") {
  CHECK(sorted(generator_degrees(sl_c(4))) == std::vector<int>{2, 3, 4});
  CHECK(sorted(generator_degrees(so_c(8))) == std::vector<int>{2, 4, 4, 6});
  CHECK(sorted(generator_degrees(exceptional(Family::G2C))) == std::vector<int>{2, 6});
  for (const auto& f : simple_factors_up_to(8)) {
    if (!is_complex(f.family)) continue;
    auto deg = generator_degrees(f);
    auto ex = exponents(f);
    CHECK(static_cast<int>(deg.size()) == complex_rank(f));
    REQUIRE(ex.size() == deg.size());
    for (std::size_t i = 0; i < deg.size(); ++i) CHECK(ex[i] == 2 * deg[i] - 1);
  }
}

TEST_CASE("complexification examples") {
  CHECK(complexify(su(2, 1)) == descriptor(sl_c(3)));
  CHECK(complexify(sl_c(2)) == descriptor(sl_c(2)) + descriptor(sl_c(2)));
  CHECK(complexify(normalize(so(3, 1))) == normalize(so_c(4)));
}

TEST_CASE("normalize is idempotent and commutes with complexification") {
  for (const auto& f : raw_factors(12)) {
    auto n = normalize(f);
    CHECK(normalize(n) == n);
    CHECK(normalize(complexify(f)) == complexify(n));
    CHECK(compact_rank(n) <= rank(n));
    CHECK(dimension(n) == dimension(f));
  }
}

TEST_CASE("descriptor text round trips") {
  for (const auto& f : simple_factors_up_to(6)) {
    auto d = descriptor(f) + abelian(1, 2);
    CHECK(normalize(parse_descriptor(to_string(d))) == normalize(d));
    CHECK(descriptor_from_json(to_json(d)) == d);
  }
  CHECK_THROWS_AS(parse_descriptor("sl(3,Q)"), CatalogError);
  CHECK_THROWS_AS(parse_factor("so("), CatalogError);
}
