#include "symobs/classifier.hpp"

#include "symobs/profiles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace symobs {

namespace {

std::optional<Certificate> direct_failure(const IrreduciblePair& p, bool degree) {
  if (!degree) {
    auto r = rank_test(p.g, p.h);
    if (r.pass) return std::nullopt;
    Certificate c;
    c.kind = CertificateKind::FailRankTest;
    c.pair = p;
    c.g_side = r.g_side;
    c.h_side = r.h_side;
    return c;
  }
  auto d = degree_test(p.g, p.h);
  if (d.pass) return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::FailDegreeTest;
  c.pair = p;
  c.degree = *d.failing_degree;
  return c;
}

Certificate wrap(CertificateKind kind, const IrreduciblePair& p, Certificate inner) {
  Certificate c;
  c.kind = kind;
  c.pair = p;
  c.inner = std::make_shared<const Certificate>(std::move(inner));
  return c;
}

// Failure from the pair itself or its c-dual, without complexification.
std::optional<Certificate> real_failure(const IrreduciblePair& p) {
  auto dual = c_dual(p);
  bool distinct = dual && !(*dual == p);
  for (bool degree : {false, true}) {
    if (auto c = direct_failure(p, degree)) return c;
    if (distinct)
      if (auto c = direct_failure(*dual, degree))
        return wrap(CertificateKind::FailViaCDual, p, *c);
  }
  return std::nullopt;
}

int max_param(const ReductiveDescriptor& d) {
  int m = 2;
  for (const auto& f : d.simples) m = std::max({m, f.p, f.q, f.p + f.q});
  return m;
}

// Real-form pairs whose complexification is p.
std::vector<IrreduciblePair> complexification_preimages(const IrreduciblePair& p) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::string>, std::vector<IrreduciblePair>> cache;
  auto key = std::make_pair(to_string(p.g), to_string(p.h));
  std::lock_guard lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<IrreduciblePair> out;
  for (const auto& r : berger_enumerate(max_param(p.g))) {
    if (r.family == PairFamily::Diagonal || !r.g.is_simple()) continue;
    if (is_complex(r.g.simples.front().family)) continue;
    if (complexify(r.g) == p.g && complexify(r.h) == p.h) out.push_back(r);
  }
  cache.emplace(key, out);
  return out;
}

}  // namespace

std::string success_name(BLabel b) {
  switch (b) {
    case BLabel::B1: return "B1";
    case BLabel::B2: return "B2";
    case BLabel::B3: return "B3-via-c-dual";
    case BLabel::B4: return "B4-rank-equality";
    case BLabel::B5: return "B5-restriction-surjective";
  }
  return "?";
}

Certificate classify(const IrreduciblePair& p) {
  if (auto labels = condition_B(p); !labels.empty()) {
    Certificate c;
    c.kind = CertificateKind::Success;
    c.pair = p;
    c.labels = std::move(labels);
    return c;
  }
  if (auto c = real_failure(p)) return *c;
  if (p.g.is_simple() && is_complex(p.g.simples.front().family)) {
    auto pre = complexification_preimages(p);
    // Prefer a preimage that fails directly over one that needs its c-dual.
    for (bool allow_dual : {false, true})
      for (const auto& r : pre) {
        std::optional<Certificate> inner;
        if (!allow_dual) {
          inner = direct_failure(r, false);
          if (!inner) inner = direct_failure(r, true);
        } else {
          inner = real_failure(r);
        }
        if (inner) return wrap(CertificateKind::FailViaComplexification, p, *inner);
      }
  }
  throw ClassifierError("no certificate decides " + to_string(p));
}

Verdict classify(const SymmetricPairDescriptor& p) {
  Verdict v;
  v.pair = p;
  for (const auto& s : p.summands) {
    v.per_summand.push_back(classify(s));
    if (!v.per_summand.back().success()) v.a_holds = false;
  }
  return v;
}

std::string to_string(const Certificate& c) {
  switch (c.kind) {
    case CertificateKind::Success: {
      std::string out;
      for (auto b : c.labels) {
        if (!out.empty()) out += ", ";
        out += success_name(b);
      }
      return out;
    }
    case CertificateKind::FailRankTest:
      return "FAIL-rank-test on " + to_string(c.pair) + " (" + std::to_string(c.g_side) + " < " +
             std::to_string(c.h_side) + ")";
    case CertificateKind::FailDegreeTest:
      return "FAIL-degree-test(" + std::to_string(c.degree) + ") on " + to_string(c.pair);
    case CertificateKind::FailViaCDual: return "FAIL-via-c-dual(" + to_string(*c.inner) + ")";
    case CertificateKind::FailViaComplexification:
      return "FAIL-via-complexification(" + to_string(*c.inner) + ")";
  }
  return "?";
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j = {{"pair", to_string(c.pair)}};
  switch (c.kind) {
    case CertificateKind::Success: {
      nlohmann::json labels = nlohmann::json::array();
      for (auto b : c.labels) labels.push_back(success_name(b));
      j["result"] = "success";
      j["labels"] = labels;
      break;
    }
    case CertificateKind::FailRankTest:
      j["result"] = "FAIL-rank-test";
      j["g_side"] = c.g_side;
      j["h_side"] = c.h_side;
      break;
    case CertificateKind::FailDegreeTest:
      j["result"] = "FAIL-degree-test";
      j["degree"] = c.degree;
      break;
    case CertificateKind::FailViaCDual:
      j["result"] = "FAIL-via-c-dual";
      j["inner"] = to_json(*c.inner);
      break;
    case CertificateKind::FailViaComplexification:
      j["result"] = "FAIL-via-complexification";
      j["inner"] = to_json(*c.inner);
      break;
  }
  return j;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : v.per_summand) certs.push_back(to_json(c));
  return {{"pair", to_string(v.pair)}, {"a_holds", v.a_holds}, {"certificates", certs}};
}

namespace {

TableEntry entry_for(const IrreduciblePair& p, Certificate cert) {
  TableEntry e{p, std::move(cert), table1_row_of(p), ""};
  if (e.row) e.stars = table1_rows()[*e.row - 1].stars;
  return e;
}

std::string params_text(const IrreduciblePair& p) {
  std::string out;
  for (std::size_t i = 0; i < p.params.size(); ++i) out += (i ? " " : "") + std::to_string(p.params[i]);
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<TableEntry> table1_reproduce(int param_bound) {
  std::vector<TableEntry> out;
  for (const auto& p : berger_enumerate(param_bound)) {
    auto c = classify(p);
    if (!c.success()) out.push_back(entry_for(p, std::move(c)));
  }
  return out;
}

std::vector<TableEntry> table1_reference(int param_bound) {
  std::vector<TableEntry> out;
  for (const auto& p : table1_instances(param_bound)) out.push_back(entry_for(p, Certificate{}));
  return out;
}

std::string table_csv(const std::vector<TableEntry>& entries, bool with_certificates) {
  std::ostringstream out;
  out << "row,stars,label,params,g,h";
  if (with_certificates) out << ",certificate";
  out << "\n";
  for (const auto& e : entries) {
    out << (e.row ? std::to_string(*e.row) : "") << "," << e.stars << "," << family_label(e.pair.family)
        << "," << params_text(e.pair) << "," << csv_quote(to_string(e.pair.g_defining)) << ","
        << csv_quote(to_string(e.pair.h_defining));
    if (with_certificates) out << "," << csv_quote(to_string(e.certificate));
    out << "\n";
  }
  return out.str();
}

std::string table_markdown(const std::vector<TableEntry>& entries) {
  std::ostringstream out;
  out << "| row | | g | h | certificate |\n|---|---|---|---|---|\n";
  for (const auto& e : entries)
    out << "| " << (e.row ? std::to_string(*e.row) : "-") << " | " << e.stars << " | "
        << to_string(e.pair.g_defining) << " | " << to_string(e.pair.h_defining) << " | "
        << to_string(e.certificate) << " |\n";
  return out.str();
}

nlohmann::json table_json(const std::vector<TableEntry>& entries) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j = to_json(e.pair);
    j["row"] = e.row ? nlohmann::json(*e.row) : nlohmann::json(nullptr);
    j["stars"] = e.stars;
    j["certificate"] = to_json(e.certificate);
    rows.push_back(j);
  }
  return rows;
}

}  // namespace symobs
