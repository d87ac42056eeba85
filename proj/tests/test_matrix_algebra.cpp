#include "symobs/matrix_algebra.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace symobs;

namespace {

std::vector<SimpleFactor> small_factors() {
  return {sl_r(2), sl_r(3), su(2), su(2, 1), so(3), so(3, 1), so(2, 3), sp_r(2), sp(1, 1),
          sl_c(2), so_c(3), sp_c(1), sl_h(2), so_star(3)};
}

Vec<Rational> combo(int n, int i, int j) {
  Vec<Rational> v(n, Rational(0));
  v[i] += 2;
  v[j] -= Rational(1) / 3;
  return v;
}

}  // namespace

TEST_CASE("realized algebras match the catalog and are Lie algebras") {
  for (const auto& f : small_factors()) {
    CAPTURE(to_string(f));
    auto a = realize(f);
    const int n = a.dim();
    CHECK(n == dimension(f));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto x = oracle::unit(n, i), y = oracle::unit(n, j);
        auto xy = oracle::bracket(a, x, y);
        CHECK(a.bracket(x, y) == xy);
        auto yx = oracle::bracket(a, y, x);
        for (int k = 0; k < n; ++k) CHECK(xy[k] == -yx[k]);
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          auto x = oracle::unit(n, i), y = oracle::unit(n, j), z = oracle::unit(n, k);
          auto s1 = a.bracket(x, a.bracket(y, z));
          auto s2 = a.bracket(y, a.bracket(z, x));
          auto s3 = a.bracket(z, a.bracket(x, y));
          for (int l = 0; l < n; ++l) CHECK(s1[l] + s2[l] + s3[l] == 0);
        }
  }
}

TEST_CASE("theta is an involutive automorphism with the right fixed rank") {
  for (const auto& f : small_factors()) {
    CAPTURE(to_string(f));
    auto a = realize(f);
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
      auto x = combo(n, i, (i + 1) % n);
      CHECK(a.apply_theta(a.apply_theta(x)) == x);
      for (int j = 0; j < n; ++j) {
        auto y = oracle::unit(n, j);
        CHECK(a.apply_theta(a.bracket(x, y)) == a.bracket(a.apply_theta(x), a.apply_theta(y)));
      }
    }
    auto k = a.theta_fixed_basis();
    CHECK(!k.empty());
    for (const auto& v : k) CHECK(a.apply_theta(v) == v);
    for (const auto& u : k)
      for (const auto& v : k) {
        auto w = a.bracket(u, v);
        CHECK(a.apply_theta(w) == w);
      }
  }
}

TEST_CASE("sl(2,R) has so(2) as its maximal compact subalgebra") {
  auto a = realize(sl_r(2));
  auto k = a.theta_fixed_basis();
  REQUIRE(k.size() == 1);
  auto x = a.element(k[0]);
  CHECK(is_zero(add(x, transpose(x))));
  CHECK_FALSE(is_zero(x));
}

TEST_CASE("compact algebras are theta-fixed") {
  for (const auto& f : {su(2), su(3), so(5), sp(2)}) {
    auto a = realize(f);
    CHECK(static_cast<int>(a.theta_fixed_basis().size()) == a.dim());
  }
}

TEST_CASE("pair realizations embed h as a subalgebra") {
  std::vector<const char*> pairs = {"(su(1,1), so(1,1))", "(sl(3,R), so(3))", "(su(2), su(2))",
                                    "(sl(2,C), sl(2,R))", "(sl(3,C), so(3,C))", "(sl(4,C), sp(2,C))",
                                    "(so(3,1), so(3))", "(sl(2,R) + sl(2,R), sl(2,R))"};
  for (const char* text : pairs) {
    CAPTURE(text);
    auto p = parse_pair(text).summands.front();
    auto r = realize_pair(p);
    CHECK(r.g.dim() == dimension(p.g));
    CHECK(r.h.dim() == dimension(p.h));
    CHECK(r.embed.rows() == static_cast<std::size_t>(r.g.dim()));
    CHECK(rank(r.embed) == static_cast<std::size_t>(r.h.dim()));
    std::vector<Vec<Rational>> cols;
    for (int j = 0; j < r.h.dim(); ++j) {
      Vec<Rational> c(r.g.dim());
      for (int i = 0; i < r.g.dim(); ++i) c[i] = r.embed(i, j);
      cols.push_back(c);
    }
    for (const auto& u : cols)
      for (const auto& v : cols) {
        auto all = cols;
        all.push_back(r.g.bracket(u, v));
        CHECK(span_rank(all, r.g.dim()) == cols.size());
      }
    for (const auto& u : cols) {
      auto all = cols;
      all.push_back(r.g.apply_theta(u));
      CHECK(span_rank(all, r.g.dim()) == cols.size());
    }
  }
}

TEST_CASE("caps and unsupported families") {
  Caps tight;
  tight.max_dim = 5;
  CHECK_THROWS_AS(realize(sl_r(3), tight), CapExceeded);
  CHECK_THROWS_AS(realize(exceptional(Family::G2C)), RealizationError);
  CHECK_THROWS_AS(realize_pair(parse_pair("(sp(2,R), su(1,1) + T)").summands.front()), RealizationError);
}
