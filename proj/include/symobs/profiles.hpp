#pragma once

// Graded dimensions of the theta-anti-invariant primitive elements of a
// reductive Lie algebra, and the necessary conditions built on them.

#include "symobs/catalog.hpp"

#include <map>
#include <optional>
#include <string>

namespace symobs {

struct GradedDims {
  std::map<int, int> entries;  // degree -> dimension, zero entries omitted

  int at(int degree) const {
    auto it = entries.find(degree);
    return it == entries.end() ? 0 : it->second;
  }
  int total() const;
  void add(int degree, int count = 1);
  bool operator==(const GradedDims&) const = default;
};

std::string to_string(const GradedDims& g);  // "{3:1, 5:1}"
GradedDims parse_graded_dims(const std::string& text);

GradedDims minus_theta_profile(const SimpleFactor& f);
GradedDims minus_theta_profile(const ReductiveDescriptor& d);

// Factor counts d_1..d_4 evaluated literally from the multiplicities.
int d_k(const ReductiveDescriptor& d, int k);

struct RankTest {
  bool pass;
  int g_side;  // rank g - rank k
  int h_side;  // rank h - rank k_H
};
RankTest rank_test(const ReductiveDescriptor& g, const ReductiveDescriptor& h);

struct DegreeTest {
  bool pass;
  std::optional<int> failing_degree;  // smallest degree with profile(g) < profile(h)
};
DegreeTest degree_test(const ReductiveDescriptor& g, const ReductiveDescriptor& h);

}  // namespace symobs
