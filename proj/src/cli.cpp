#include "symobs/cli.hpp"

#include "symobs/classifier.hpp"
#include "symobs/cohomology.hpp"
#include "symobs/invariants.hpp"
#include "symobs/profiles.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace symobs {

namespace {

constexpr int kSchemaVersion = 1;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json dims_json(const GradedDims& g) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [d, n] : g.entries) j[std::to_string(d)] = n;
  return j;
}

struct ProfileRow {
  std::string algebra;
  int rank, compact_rank;
  std::vector<int> d;
  GradedDims profile;
};

ProfileRow profile_row(const ReductiveDescriptor& raw) {
  auto n = normalize(raw);
  ProfileRow r{to_string(raw), rank(n), compact_rank(n), {}, minus_theta_profile(n)};
  for (int k = 1; k <= 4; ++k) r.d.push_back(d_k(n, k));
  return r;
}

nlohmann::json to_json(const ProfileRow& r) {
  return {{"algebra", r.algebra},
          {"rank", r.rank},
          {"compact_rank", r.compact_rank},
          {"d", r.d},
          {"profile", dims_json(r.profile)}};
}

std::string profile_csv(const std::vector<ProfileRow>& rows) {
  std::ostringstream out;
  out << "algebra,rank,compact_rank,d1,d2,d3,d4,profile\n";
  for (const auto& r : rows) {
    out << csv_field(r.algebra) << "," << r.rank << "," << r.compact_rank;
    for (int x : r.d) out << "," << x;
    out << "," << csv_field(to_string(r.profile)) << "\n";
  }
  return out.str();
}

std::string profile_markdown(const std::vector<ProfileRow>& rows) {
  std::ostringstream out;
  out << "| algebra | rank | compact rank | d1 | d2 | d3 | d4 | profile |\n|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << r.algebra << " | " << r.rank << " | " << r.compact_rank;
    for (int x : r.d) out << " | " << x;
    out << " | " << to_string(r.profile) << " |\n";
  }
  return out.str();
}

void print_classify(const Verdict& v, const std::string& format, std::ostream& out) {
  if (format == "json") {
    auto j = to_json(v);
    j["schema"] = kSchemaVersion;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "pair,a_holds,summand,certificate\n";
    for (const auto& c : v.per_summand)
      out << csv_field(to_string(v.pair)) << "," << (v.a_holds ? "true" : "false") << ","
          << csv_field(to_string(c.pair)) << "," << csv_field(to_string(c)) << "\n";
  } else {
    out << "a_holds: " << (v.a_holds ? "true" : "false") << "\n\n| summand | certificate |\n|---|---|\n";
    for (const auto& c : v.per_summand) out << "| " << to_string(c.pair) << " | " << to_string(c) << " |\n";
  }
}

nlohmann::json restriction_json(const RestrictionReport& r) {
  nlohmann::json ranks = nlohmann::json::array();
  std::set<int> degrees;
  for (const auto& [d, n] : r.g_profile.entries) degrees.insert(d);
  for (const auto& [d, n] : r.h_profile.entries) degrees.insert(d);
  for (int d : degrees)
    ranks.push_back({{"degree", d}, {"g", r.g_profile.at(d)}, {"h", r.h_profile.at(d)}, {"rank", r.image.at(d)}});
  return {{"surjective", r.surjective},
          {"g_basis_degrees", dims_json(r.g_profile)},
          {"h_basis_degrees", dims_json(r.h_profile)},
          {"restriction_rank", ranks}};
}

struct Options {
  Caps caps;
  std::string format = "json";
  std::string pair;
  std::string algebra;
  int bound = 8;
  bool certificates = true;
  bool realization = false;
  bool oracle = false;
  bool timing = false;
  bool realize = false;
};

int cmd_classify(const Options& o, std::ostream& out) {
  print_classify(classify(parse_pair(o.pair)), o.format, out);
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  auto entries = table1_reproduce(o.bound);
  std::vector<ProfileRow> profiles;
  for (const auto& f : simple_factors_up_to(o.bound)) profiles.push_back(profile_row(descriptor(f)));
  if (o.format == "json") {
    nlohmann::json j = {{"schema", kSchemaVersion}, {"bound", o.bound}, {"table1", table_json(entries)}};
    nlohmann::json p = nlohmann::json::array();
    for (const auto& r : profiles) p.push_back(to_json(r));
    j["profiles"] = p;
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << table_csv(entries, o.certificates) << "\n" << profile_csv(profiles);
  } else {
    out << table_markdown(entries) << "\n" << profile_markdown(profiles);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  bool run_real = o.realization || !o.oracle;
  bool run_oracle = o.oracle || !o.realization;
  auto pair = parse_pair(o.pair);
  nlohmann::json summands = nlohmann::json::array();
  bool consistent = true;
  bool a_holds = true;
  for (const auto& s : pair.summands) {
    auto cert = classify(s);
    a_holds = a_holds && cert.success();
    nlohmann::json j = {{"pair", to_string(s)}, {"classify", cert.success()}, {"certificate", to_string(cert)}};
    auto r = realize_pair(s, o.caps);
    if (run_real) {
      auto t = std::chrono::steady_clock::now();
      auto rep = restriction_surjective(r, o.caps);
      j["realization"] = restriction_json(rep);
      if (o.timing)
        j["realization"]["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
      if (rep.surjective != cert.success()) consistent = false;
    }
    if (run_oracle) {
      auto t = std::chrono::steady_clock::now();
      auto rep = injectivity_i(r, o.caps);
      j["oracle"] = to_json(rep);
      if (o.timing)
        j["oracle"]["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
      if (rep.injective != cert.success()) consistent = false;
    }
    summands.push_back(j);
  }
  nlohmann::json j = {{"schema", kSchemaVersion},
                      {"pair", to_string(pair)},
                      {"a_holds", a_holds},
                      {"summands", summands},
                      {"consistent", consistent}};
  out << j.dump(2) << "\n";
  if (!consistent) {
    err << "error: engines disagree with the classifier on " << to_string(pair) << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  auto d = parse_descriptor(o.algebra);
  auto row = profile_row(d);
  nlohmann::json realized;
  if (o.realize) {
    if (!d.is_simple() || d.split_abelian || d.compact_abelian)
      throw RealizationError("--realize needs a single simple factor");
    auto a = realize(d.simples.front(), o.caps);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators(a)) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    auto forms = primitive_minus_theta_basis(a, o.caps);
    realized = {{"dim", a.dim()}, {"generators", gens}, {"primitive_minus_theta", dims_json(graded_dims(forms))}};
    if (graded_dims(forms) != row.profile)
      throw EngineInconsistency("realized profile " + to_string(graded_dims(forms)) + " differs from " +
                                to_string(row.profile));
  }
  if (o.format == "json") {
    auto j = to_json(row);
    j["schema"] = kSchemaVersion;
    j["normalized"] = to_string(normalize(d));
    if (o.realize) j["realization"] = realized;
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << profile_csv({row});
  } else {
    out << profile_markdown({row});
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Injectivity of H(g,h) -> H(g,k_H) for symmetric pairs"};
  app.require_subcommand(1);
  app.add_option("--max-dim", o.caps.max_dim, "Dimension cap for realized algebras");
  app.add_option("--max-form-degree", o.caps.max_form_degree, "Cap on the Cartan-map form degree");
  app.add_option("--max-quotient-dim", o.caps.max_quotient_dim, "Cap on dim g/k_H for the cohomology oracle");
  auto formats = CLI::IsMember({"json", "csv", "markdown"});

  auto* classify_cmd = app.add_subcommand("classify", "Classify a direct sum of symmetric pairs");
  classify_cmd->add_option("pair", o.pair, "\"(g, h)\" or \"(g1, h1) + (g2, h2)\"")->required();
  classify_cmd->add_option("--format", o.format)->check(formats);

  auto* table_cmd = app.add_subcommand("table", "Failing pairs up to a parameter bound, and the profile table");
  table_cmd->add_option("--bound", o.bound, "Parameter bound")->check(CLI::Range(1, 64));
  table_cmd->add_option("--format", o.format)->check(formats);
  table_cmd->add_flag("!--no-certificates", o.certificates, "Omit the certificate column");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the classifier against the exact engines");
  verify_cmd->add_option("pair", o.pair)->required();
  verify_cmd->add_flag("--realization", o.realization, "Restriction of primitive forms");
  verify_cmd->add_flag("--oracle", o.oracle, "Relative cohomology");
  verify_cmd->add_flag("--timing", o.timing, "Add wall-clock times to the report");

  auto* inv_cmd = app.add_subcommand("invariants", "Rank, compact rank, d_1..d_4 and profile of an algebra");
  inv_cmd->add_option("algebra", o.algebra)->required();
  inv_cmd->add_option("--format", o.format)->check(formats);
  inv_cmd->add_flag("--realize", o.realize, "Also compute the profile from a matrix realization");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*table_cmd) return cmd_table(o, out);
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*inv_cmd) return cmd_invariants(o, out);
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const RegistryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const RealizationError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitCap;
  } catch (const EngineInconsistency& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const ClassifierError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitParse;
}

}  // namespace symobs
