#pragma once

// Hand-entered rows of the list of irreducible pairs that fail condition (B),
// matched against registry pairs by family label and parameters.

#include "symobs/pairs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symobs {

struct Table1Row {
  int id;
  std::string stars;  // "", "*" or "**"
  std::string g;
  std::string h;
  std::string conditions;
};

const std::vector<Table1Row>& table1_rows();

// Row whose family and parameter conditions the pair instantiates.
std::optional<int> table1_row_of(const IrreduciblePair& p);

// Registry pairs within the bound that instantiate some row.
std::vector<IrreduciblePair> table1_instances(int param_bound);

}  // namespace symobs
