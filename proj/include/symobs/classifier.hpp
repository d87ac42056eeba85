#pragma once

// Decision procedure for injectivity of H(g,h) -> H(g,k_H) on direct sums of
// irreducible symmetric pairs, with a certificate per summand.

#include "symobs/pairs.hpp"
#include "symobs/table1.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace symobs {

class ClassifierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CertificateKind {
  Success,                   // one or more (B) labels
  FailRankTest,
  FailDegreeTest,
  FailViaCDual,
  FailViaComplexification,
};

struct Certificate {
  CertificateKind kind = CertificateKind::Success;
  IrreduciblePair pair;            // the pair this certificate speaks about
  std::set<BLabel> labels;         // Success
  int g_side = 0, h_side = 0;      // FailRankTest
  int degree = 0;                  // FailDegreeTest
  std::shared_ptr<const Certificate> inner;  // reductions

  bool success() const { return kind == CertificateKind::Success; }
};

struct Verdict {
  SymmetricPairDescriptor pair;
  bool a_holds = true;
  std::vector<Certificate> per_summand;
};

Certificate classify(const IrreduciblePair& p);
Verdict classify(const SymmetricPairDescriptor& p);

std::string to_string(const Certificate& c);
std::string success_name(BLabel b);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Verdict& v);

struct TableEntry {
  IrreduciblePair pair;
  Certificate certificate;
  std::optional<int> row;  // matching hand-entered row, if any
  std::string stars;
};

// Irreducible pairs within the bound for which classify reports a failure.
std::vector<TableEntry> table1_reproduce(int param_bound);

std::string table_csv(const std::vector<TableEntry>& entries, bool with_certificates);
std::string table_markdown(const std::vector<TableEntry>& entries);
nlohmann::json table_json(const std::vector<TableEntry>& entries);

// Rows of the same CSV built from the hand-entered rows rather than the classifier.
std::vector<TableEntry> table1_reference(int param_bound);

}  // namespace symobs
