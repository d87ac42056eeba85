#include "symobs/cohomology.hpp"
#include "symobs/classifier.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symobs;

namespace {

struct Case {
  SimpleFactor f;
  bool relative_to_k;
};

std::vector<Vec<Rational>> sub_of(const MatrixAlgebra& a, bool relative_to_k) {
  return relative_to_k ? a.theta_fixed_basis() : std::vector<Vec<Rational>>{};
}

}  // namespace

TEST_CASE("relative cohomology of sl(2,R)") {
  auto a = realize(sl_r(2));
  auto rel = relative_complex(a, a.theta_fixed_basis());
  CHECK(invariant_dims(rel) == std::vector<int>{1, 0, 1});
  CHECK(cohomology_dims(rel) == std::vector<int>{1, 0, 1});
  auto abs = relative_complex(a, {});
  CHECK(invariant_dims(abs) == std::vector<int>{1, 3, 3, 1});
  CHECK(cohomology_dims(abs) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("cohomology of su(2)") {
  auto a = realize(su(2));
  CHECK(cohomology_dims(relative_complex(a, {})) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("sparse complex agrees with the dense evaluation oracle") {
  std::vector<Case> cases = {{sl_r(2), false}, {sl_r(2), true}, {su(2), false},   {su(1, 1), true},
                             {sl_c(2), true},  {so(3, 1), true}, {su(2, 1), true}, {sl_r(3), true},
                             {sp_r(2), true},  {sl_r(2), false}};
  for (const auto& c : cases) {
    CAPTURE(to_string(c.f));
    CAPTURE(c.relative_to_k);
    auto a = realize(c.f);
    auto sub = sub_of(a, c.relative_to_k);
    auto sparse = relative_complex(a, sub);
    auto dense = oracle::dense_relative_cohomology(a, sub);
    CHECK(invariant_dims(sparse) == dense.invariant_dims);
    CHECK(cohomology_dims(sparse) == dense.betti);
  }
}

TEST_CASE("Riemannian pairs have closed invariant forms and Poincare duality") {
  for (const auto& f : {sl_r(2), sl_r(3), su(2, 1), sl_c(2), so(3, 1), sp_r(2), so(3, 2)}) {
    CAPTURE(to_string(f));
    auto a = realize(f);
    auto c = relative_complex(a, a.theta_fixed_basis());
    auto h = cohomology_dims(c);
    CHECK(h == invariant_dims(c));
    for (std::size_t p = 0; p < h.size(); ++p) CHECK(h[p] == h[h.size() - 1 - p]);
    CHECK(h.front() == 1);
  }
}

TEST_CASE("differential squares to zero") {
  auto a = realize(su(2, 1));
  auto c = relative_complex(a, {});
  for (std::size_t p = 0; p + 1 < c.differential.size(); ++p) {
    const auto& d0 = c.differential[p];
    const auto& d1 = c.differential[p + 1];
    REQUIRE(d1.cols() == d0.rows());
    for (std::size_t i = 0; i < d1.rows(); ++i)
      for (std::size_t j = 0; j < d0.cols(); ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < d0.rows(); ++k) s += d1(i, k) * d0(k, j);
        CHECK(s == 0);
      }
  }
}

TEST_CASE("injectivity agrees with the classifier") {
  for (const char* text : {"(sl(2,C), so(2,C))", "(sl(2,C), sl(2,R))", "(sl(3,C), so(3,C))", "(sl(2,R), so(2))",
                           "(su(1,1), so(1,1))", "(sl(2,R) + sl(2,R), sl(2,R))"}) {
    CAPTURE(text);
    auto p = parse_pair(text).summands.front();
    auto r = realize_pair(p);
    auto rep = injectivity_i(r);
    CHECK(rep.injective == classify(p).success());
    CHECK(rep.injective == restriction_surjective(r).surjective);
    CHECK(rep.h_dims.front() == 1);
    CHECK(rep.kh_dims.front() == 1);
  }
}

TEST_CASE("trivial pair is injective") {
  auto r = realize_pair(parse_pair("(su(1,1), su(1,1))").summands.front());
  auto rep = injectivity_i(r);
  CHECK(rep.injective);
  CHECK(rep.h_dims == std::vector<int>{1});
}

TEST_CASE("Kaehler checks on Hermitian algebras") {
  for (const auto& f : {su(1, 1), su(2, 1), sp_r(2)}) {
    CAPTURE(to_string(f));
    auto rep = kaehler_check(realize(f));
    CHECK(rep.center_dim == 1);
    CHECK(rep.class_nonzero);
    CHECK(rep.exact_mod_kss);
    CHECK(rep.stabilizer_is_k);
    REQUIRE(rep.top_power_nonzero.has_value());
    CHECK(*rep.top_power_nonzero);
    CHECK(rep.passed());
  }
  CHECK(kaehler_check(realize(su(1, 1))).quotient_dim == 2);
  CHECK(kaehler_check(realize(sp_r(2))).quotient_dim == 6);
  CHECK_THROWS_AS(kaehler_check(realize(sl_c(2))), std::invalid_argument);
}

TEST_CASE("quotient cap and non-subalgebras") {
  Caps caps;
  caps.max_quotient_dim = 4;
  auto a = realize(sl_r(3));
  CHECK_THROWS_AS(relative_complex(a, {}, caps), CapExceeded);
  std::vector<Vec<Rational>> bad{oracle::unit(a.dim(), 0), oracle::unit(a.dim(), 1)};
  bool closed = span_rank(std::vector<Vec<Rational>>{bad[0], bad[1], a.bracket(bad[0], bad[1])}, a.dim()) == 2;
  if (!closed) CHECK_THROWS_AS(relative_complex(a, bad), std::invalid_argument);
}

TEST_CASE("report JSON") {
  auto rep = injectivity_i(realize_pair(parse_pair("(sl(2,R), so(2))").summands.front()));
  auto j = to_json(rep);
  CHECK(j["injective"] == rep.injective);
  CHECK(j.contains("h_dims"));
}

TEST_CASE("overall injectivity is injectivity in every degree") {
  for (const char* text : {"(sl(2,C), so(2,C))", "(sl(2,R), so(2))", "(su(1,1), so(1,1))", "(sl(3,R), so(2,1))"}) {
    CAPTURE(text);
    auto rep = injectivity_i(realize_pair(parse_pair(text).summands.front()));
    bool all = std::all_of(rep.injective_in_degree.begin(), rep.injective_in_degree.end(), [](bool b) { return b; });
    CHECK(rep.injective == all);
  }
}

TEST_CASE("k_H must lie in h") {
  auto a = realize(sl_r(2));
  auto k = a.theta_fixed_basis();
  CHECK_THROWS_AS(injectivity_i(a, {}, k), std::invalid_argument);
}
