#include "symobs/classifier.hpp"
#include "symobs/cohomology.hpp"
#include "symobs/invariants.hpp"
#include "symobs/profiles.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace symobs;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

IrreduciblePair pair_of(const char* text) { return parse_pair(text).summands.front(); }

Outcome table_reproduction() {
  Outcome o;
  int failing = 0, total = 0;
  for (const auto& p : berger_enumerate(8)) {
    ++total;
    bool listed = table1_row_of(p).has_value();
    if (classify(p).success() == listed) o.fail("mismatch on " + to_string(p));
    if (listed) ++failing;
  }
  std::ifstream in(SYMOBS_GOLDEN_DIR "/table1_bound8.csv");
  std::stringstream golden;
  golden << in.rdbuf();
  if (!in || table_csv(table1_reproduce(8), false) != golden.str()) o.fail("golden file differs");
  if (o.pass) o.detail = std::to_string(total) + " pairs, " + std::to_string(failing) + " failing";
  return o;
}

Outcome b_consistency() {
  Outcome o;
  int n = 0;
  for (const auto& p : berger_enumerate(8)) {
    ++n;
    if (condition_B(p).empty() == classify(p).success()) o.fail("disagreement on " + to_string(p));
  }
  if (o.pass) o.detail = std::to_string(n) + " pairs";
  return o;
}

Outcome profile_identity() {
  Outcome o;
  auto check = [&](const ReductiveDescriptor& raw) {
    auto d = normalize(raw);
    auto prof = minus_theta_profile(d);
    if (prof.total() != rank(d) - compact_rank(d)) o.fail("total on " + to_string(d));
    for (int k = 1; k <= 4; ++k)
      if (d_k(d, k) != prof.at(2 * k - 1)) o.fail("d_" + std::to_string(k) + " on " + to_string(d));
  };
  auto factors = simple_factors_up_to(12);
  for (const auto& f : factors) check(descriptor(f));
  for (std::size_t i = 0; i + 1 < factors.size(); i += 7) check(factors[i] + factors[i + 1] + abelian(1, 1));
  if (o.pass) o.detail = std::to_string(factors.size()) + " simple factors";
  return o;
}

Outcome realization_profiles() {
  Outcome o;
  const char* names[] = {"sl(2,R)", "sl(3,R)", "sl(4,R)", "sl(2,H)", "sl(2,C)", "sl(3,C)",
                         "so(3,C)", "sp(1,C)", "so(3,1)", "su(2)",   "su(1,1)"};
  for (const char* name : names) {
    auto f = parse_factor(name);
    auto forms = primitive_minus_theta_basis(realize(f));
    if (graded_dims(forms) != minus_theta_profile(normalize(f)))
      o.fail(std::string(name) + ": " + to_string(graded_dims(forms)));
  }
  if (o.pass) o.detail = "11 algebras";
  return o;
}

Outcome triple_agreement() {
  Outcome o;
  const char* pairs[] = {"(sl(2,C), so(2,C))", "(sl(2,C), sl(2,R))", "(sl(3,C), so(3,C))",
                         "(sl(2,R), so(2))",   "(su(1,1), so(1,1))", "(sl(2,R) + sl(2,R), sl(2,R))"};
  std::string verdicts;
  for (const char* text : pairs) {
    auto p = pair_of(text);
    auto r = realize_pair(p);
    bool a = classify(p).success();
    bool s = restriction_surjective(r).surjective;
    bool i = injectivity_i(r).injective;
    if (a != s || a != i) o.fail(std::string("disagreement on ") + text);
    verdicts += a ? '1' : '0';
  }
  if (o.pass) o.detail = "verdicts " + verdicts;
  return o;
}

std::vector<int> table_degrees(char type, int n) {
  std::vector<int> d;
  switch (type) {
    case 'A':
      for (int k = 2; k <= n; ++k) d.push_back(k);
      break;
    case 'B':  // so(2m+1)
    case 'C':  // sp(m) with n = 2m
      for (int k = 2; k <= n - (n % 2); k += 2) d.push_back(k);
      break;
    case 'D':  // so(2m)
      for (int k = 2; k <= n - 2; k += 2) d.push_back(k);
      d.push_back(n / 2);
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

Outcome chevalley_tables() {
  Outcome o;
  auto degrees = [](const MatrixAlgebra& a) {
    std::vector<int> d;
    for (const auto& g : generators(a)) d.push_back(g.degree);
    std::sort(d.begin(), d.end());
    return d;
  };
  auto coefficient = [](const std::vector<InvariantPolynomial>& ps, const std::string& name) -> const Poly& {
    for (const auto& p : ps)
      if (p.name == name) return p.poly;
    throw std::runtime_error("missing " + name);
  };
  auto odd_vanish = [&](const MatrixAlgebra& a, int n, int upto, const std::string& label) {
    auto ps = char_poly_invariants(a);
    for (int k = 1; k <= upto; k += 2)
      for (const char* part : {"Re f", "Im f"})
        if (!coefficient(ps, part + std::to_string(k) + "[0]").is_zero()) o.fail(label + ": f" + std::to_string(k));
    (void)n;
  };
  for (int n = 2; n <= 5; ++n) {
    auto a = realize(su(n));
    if (degrees(a) != table_degrees('A', n)) o.fail("degrees of su(" + std::to_string(n) + ")");
    odd_vanish(a, n, 1, "su(" + std::to_string(n) + ")");
  }
  for (int n = 3; n <= 5; ++n) {
    auto a = realize(so(n));
    if (degrees(a) != table_degrees(n % 2 ? 'B' : 'D', n)) o.fail("degrees of so(" + std::to_string(n) + ")");
    odd_vanish(a, n, n % 2 ? n : n - 1, "so(" + std::to_string(n) + ")");
    if (n % 2 == 0) {
      auto ps = char_poly_invariants(a);
      const Poly& re = coefficient(ps, "Re pf[0]");
      const Poly& im = coefficient(ps, "Im pf[0]");
      if (coefficient(ps, "Re f" + std::to_string(n) + "[0]") != re * re - im * im) o.fail("f_n = pf^2 on so(4)");
    }
  }
  for (int m = 1; m <= 2; ++m) {
    auto a = realize(sp(m));
    if (degrees(a) != table_degrees('C', 2 * m)) o.fail("degrees of sp(" + std::to_string(m) + ")");
    odd_vanish(a, 2 * m, 2 * m - 1, "sp(" + std::to_string(m) + ")");
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix<Rational> s(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        s(i, j) = Rational(dist(rng)) / (1 + (i * j) % 4);
        s(j, i) = -s(i, j);
      }
    auto pf = pfaffian(s);
    if (pf * pf != oracle::leibniz_det(s)) o.fail("pf^2 != det");
  }
  if (o.pass) o.detail = "su(2..5), so(3..5), sp(1..2), 5 skew 6x6";
  return o;
}

Outcome cartan_properties() {
  Outcome o;
  int forms = 0;
  for (const auto& f : {sl_r(2), su(2), sl_r(3), su(3), su(2, 1), sl_c(2), so(5), so(3, 2), sp(1, 1), sl_r(4), su(4),
                        sl_h(2), su(3, 1), su(2, 2)}) {
    auto a = realize(f);
    if (a.dim() > 16) continue;
    for (const auto& g : generators(a)) {
      auto form = cartan_map(g.poly, g.degree, a);
      ++forms;
      if (form.is_zero() || !is_invariant(form, a) || !is_closed(form, a)) o.fail(g.name + " on " + to_string(f));
    }
  }
  for (const auto& f : {sl_r(2), su(2)}) {
    auto a = realize(f);
    const int n = a.dim();
    for (const auto& g : generators(a)) {
      auto form = cartan_map(g.poly, 2, a);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            auto yz = oracle::bracket(a, oracle::unit(n, j), oracle::unit(n, k));
            if (evaluate_basis(form, {i, j, k}) != 6 * oracle::polarized_multilinear(g.poly, {oracle::unit(n, i), yz}))
              o.fail("three-form identity on " + to_string(f));
          }
    }
  }
  if (o.pass) o.detail = std::to_string(forms) + " forms";
  return o;
}

Outcome kaehler() {
  Outcome o;
  for (const auto& f : {su(1, 1), su(2, 1), sp_r(2)}) {
    auto r = kaehler_check(realize(f));
    if (!r.passed() || !r.top_power_nonzero) o.fail(to_string(f) + ": " + to_json(r).dump());
  }
  if (o.pass) o.detail = "su(1,1), su(2,1), sp(2,R)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "failing pairs reproduce the table", 10, table_reproduction},
      {2, "structural tests agree with the classifier", 0, b_consistency},
      {3, "profile identity", 0, profile_identity},
      {4, "realized primitive forms match profiles", 300, realization_profiles},
      {5, "restriction, cohomology and classifier agree", 600, triple_agreement},
      {6, "invariant polynomial degrees and vanishing", 0, chevalley_tables},
      {7, "Cartan map is invariant and closed", 0, cartan_properties},
      {8, "Kaehler checks", 120, kaehler},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
    if (c.budget_s > 0 && s > c.budget_s) o.fail("over time budget");
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " (" << o.detail
              << ", " << s << " s)" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
