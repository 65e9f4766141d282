#include "liesoliton/cli.hpp"

#include "liesoliton/fixtures.hpp"
#include "liesoliton/jsonio.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace liesoliton {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelSelection {
  std::string family;
  std::string model_file;
};

void add_model_arguments(CLI::App* cmd, ModelSelection& sel) {
  cmd->add_option("family", sel.family, "builtin family, one of G1..G7");
  cmd->add_option("--model", sel.model_file,
                  "JSON file describing a custom model (instead of a family)");
}

LieGroupModel load_model(const ModelSelection& sel) {
  if (sel.family.empty() == sel.model_file.empty())
    throw UsageError("give exactly one model: a family name G1..G7 or --model FILE");
  if (!sel.family.empty()) {
    if (!is_builtin_family(sel.family))
      throw UsageError("unknown family '" + sel.family + "' (expected G1..G7)");
    return build_group(sel.family);
  }
  std::ifstream in(sel.model_file);
  if (!in) throw UsageError("cannot open model file " + sel.model_file);
  return model_from_json(nlohmann::json::parse(in));
}

nlohmann::json model_description(const ModelSelection& sel, const LieGroupModel& m) {
  nlohmann::json j;
  j["name"] = m.name;
  j["source"] = sel.family.empty() ? sel.model_file : "builtin";
  return j;
}

/// eta_flag: 0 = not given, otherwise +-1. A model with eta and no flag is
/// reported for both signs; a model without eta rejects the flag.
std::vector<std::optional<int>> requested_etas(const LieGroupModel& m, int eta_flag) {
  const bool has_eta = m.params->eta_index() >= 0;
  if (eta_flag != 0) {
    if (eta_flag != 1 && eta_flag != -1) throw UsageError("--eta must be 1 or -1");
    if (!has_eta) throw UsageError("--eta given, but the model has no eta parameter");
    return {eta_flag};
  }
  if (has_eta) return {1, -1};
  return {std::nullopt};
}

nlohmann::json eta_json(const std::optional<int>& eta) {
  if (!eta) return nullptr;
  return *eta;
}

std::string eta_heading(const LieGroupModel& m, const std::optional<int>& eta) {
  if (!eta) return m.name;
  return m.name + " (eta = " + (*eta > 0 ? "1" : "-1") + ")";
}

LieGroupModel at_eta(const LieGroupModel& m, const std::optional<int>& eta) {
  return eta ? specialize_eta(m, *eta) : m;
}

/// Pretty-print a coefficient vector as a basis combination, e.g.
/// "-alpha*e2 - alpha*e3" or "(alpha - beta)*e1".
std::string basis_combo(const PolyVec3& v) {
  std::string out;
  for (int k = 0; k < 3; ++k) {
    const Poly& p = v(k);
    if (p.is_zero()) continue;
    std::string text;
    if (auto cst = p.constant_value(); cst && (*cst == 1 || *cst == -1))
      text = (*cst == 1 ? "" : "-") + std::string("e") + std::to_string(k + 1);
    else if (p.terms().size() == 1)
      text = to_string(p) + "*e" + std::to_string(k + 1);
    else
      text = "(" + to_string(p) + ")*e" + std::to_string(k + 1);
    if (out.empty())
      out = text;
    else if (text.front() == '-')
      out += " - " + text.substr(1);
    else
      out += " + " + text;
  }
  return out.empty() ? "0" : out;
}

std::string matrix_row(const PolyMat3& m, int i) {
  return "[" + to_string(m(i, 0)) + ", " + to_string(m(i, 1)) + ", " +
         to_string(m(i, 2)) + "]";
}

void print_matrix(std::ostream& os, const std::string& indent, const PolyMat3& m) {
  for (int i = 0; i < 3; ++i) os << indent << matrix_row(m, i) << "\n";
}

std::string point_text(const GridPoint& point) {
  std::string out;
  for (const auto& [name, value] : point) {
    if (!out.empty()) out += ", ";
    out += name + " = " + to_string(value);
  }
  return out;
}

ConnectionCoeffs engine_connection(const LieGroupModel& m, ConnectionChoice which) {
  ConnectionCoeffs lc = levi_civita(m);
  if (which == ConnectionChoice::levi_civita) return lc;
  NablaJ nj = nabla_j(m, lc);
  return which == ConnectionChoice::canonical ? canonical(m, lc, nj)
                                              : kobayashi_nomizu(m, lc, nj);
}

struct CommandOutput {
  nlohmann::json envelope;
  std::string text;
  int exit_code = 0;
};

nlohmann::json make_envelope(const std::string& command, const ModelSelection& sel,
                             const LieGroupModel& m, nlohmann::json options) {
  nlohmann::json env;
  env["engine"] = "liesoliton";
  env["version"] = "0.1.0";
  env["command"] = command;
  env["model"] = model_description(sel, m);
  env["options"] = std::move(options);
  env["results"] = nlohmann::json::array();
  return env;
}

// ---------------------------------------------------------------- connections

struct ConnectionsArgs {
  ModelSelection sel;
  std::string connection = "lc";
  int eta = 0;
};

CommandOutput run_connections(const ConnectionsArgs& args) {
  LieGroupModel base = load_model(args.sel);
  ConnectionChoice which = connection_from_string(args.connection);
  CommandOutput out;
  out.envelope = make_envelope("connections", args.sel, base,
                               {{"connection", to_string(which)}});
  std::ostringstream text;
  for (const std::optional<int>& eta : requested_etas(base, args.eta)) {
    LieGroupModel m = at_eta(base, eta);
    ConnectionCoeffs conn = engine_connection(m, which);
    nlohmann::json block;
    block["eta"] = eta_json(eta);
    block["gamma"] = {mat3_to_json(conn.gamma[0]), mat3_to_json(conn.gamma[1]),
                      mat3_to_json(conn.gamma[2])};
    out.envelope["results"].push_back(std::move(block));

    text << eta_heading(base, eta) << ": " << to_string(which) << " connection\n";
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        text << "  nabla_e" << i + 1 << " e" << j + 1 << " = "
             << basis_combo(PolyVec3(conn.gamma[i].row(j).transpose())) << "\n";
  }
  out.text = text.str();
  return out;
}

// ------------------------------------------------------------------ curvature

CommandOutput run_curvature(const ConnectionsArgs& args) {
  LieGroupModel base = load_model(args.sel);
  ConnectionChoice which = connection_from_string(args.connection);
  CommandOutput out;
  out.envelope = make_envelope("curvature", args.sel, base,
                               {{"connection", to_string(which)}});
  std::ostringstream text;
  const std::array<std::pair<const char*, std::pair<int, int>>, 3> pairs{
      {{"12", {0, 1}}, {"13", {0, 2}}, {"23", {1, 2}}}};
  for (const std::optional<int>& eta : requested_etas(base, args.eta)) {
    LieGroupModel m = at_eta(base, eta);
    CurvatureTensor R = curvature(m, engine_connection(m, which));
    nlohmann::json block;
    block["eta"] = eta_json(eta);
    for (const auto& [key, ij] : pairs)
      block["R"][key] = mat3_to_json(R.R[ij.first][ij.second]);
    out.envelope["results"].push_back(std::move(block));

    text << eta_heading(base, eta) << ": curvature of the " << to_string(which)
         << " connection\n";
    for (const auto& [key, ij] : pairs) {
      const PolyMat3& r = R.R[ij.first][ij.second];
      for (int k = 0; k < 3; ++k)
        text << "  R(e" << key[0] << ",e" << key[1] << ")e" << k + 1 << " = "
             << basis_combo(PolyVec3(r.row(k).transpose())) << "\n";
    }
  }
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------- ricci

struct RicciArgs {
  ModelSelection sel;
  std::string connection = "lc";
  bool symmetrized = false;
  int eta = 0;
};

CommandOutput run_ricci(const RicciArgs& args) {
  LieGroupModel base = load_model(args.sel);
  ConnectionChoice which = connection_from_string(args.connection);
  CommandOutput out;
  out.envelope = make_envelope(
      "ricci", args.sel, base,
      {{"connection", to_string(which)}, {"symmetrized", args.symmetrized}});
  std::ostringstream text;
  for (const std::optional<int>& eta : requested_etas(base, args.eta)) {
    LieGroupModel m = at_eta(base, eta);
    RicciForm rho = ricci_form(m, curvature(m, engine_connection(m, which)));
    if (args.symmetrized) rho = symmetrize(rho);
    RicciOperator ric = ricci_operator(m, rho);
    nlohmann::json block;
    block["eta"] = eta_json(eta);
    block["rho"] = mat3_to_json(rho.rho);
    block["matrix"] = mat3_to_json(ric.ric);
    out.envelope["results"].push_back(std::move(block));

    text << eta_heading(base, eta) << ": " << (args.symmetrized ? "symmetrized " : "")
         << "Ricci operator of the " << to_string(which) << " connection\n";
    for (int i = 0; i < 3; ++i)
      text << "  Ric(e" << i + 1 << ") = "
           << basis_combo(PolyVec3(ric.ric.row(i).transpose())) << "\n";
  }
  out.text = text.str();
  return out;
}

// -------------------------------------------------------------------- soliton

struct SolitonArgs {
  ModelSelection sel;
  std::string connection = "canonical";
  std::string kind = "first";
  int eta = 0;
};

SolitonSpec make_spec(const SolitonArgs& args, const std::optional<int>& eta) {
  SolitonSpec spec;
  spec.connection = connection_from_string(args.connection);
  if (spec.connection == ConnectionChoice::levi_civita)
    throw UsageError("soliton systems are defined for --connection canonical|kn");
  spec.kind = kind_from_string(args.kind);
  spec.eta_value = eta;
  return spec;
}

CommandOutput run_soliton(const SolitonArgs& args) {
  LieGroupModel base = load_model(args.sel);
  CommandOutput out;
  out.envelope = make_envelope("soliton", args.sel, base,
                               {{"connection", to_string(connection_from_string(
                                                   args.connection))},
                                {"kind", args.kind}});
  std::ostringstream text;
  for (const std::optional<int>& eta : requested_etas(base, args.eta)) {
    SolitonSystem sys = build_soliton_system(base, make_spec(args, eta));
    nlohmann::json block;
    block["eta"] = eta_json(eta);
    block["ricci"] = mat3_to_json(sys.ricci.ric);
    block["derivation"] = mat3_to_json(sys.derivation);
    block["equations"] = polys_to_json(sys.equations);
    block["inequations"] = polys_to_json(sys.inequations);
    out.envelope["results"].push_back(std::move(block));

    text << eta_heading(base, eta) << ": " << args.kind << "-kind soliton system, "
         << to_string(sys.spec.connection) << " connection\n";
    text << "  D = Ric - c*Id:\n";
    print_matrix(text, "    ", sys.derivation);
    text << "  equations:\n";
    for (const Poly& e : sys.equations) text << "    " << to_string(e) << " = 0\n";
    if (sys.equations.empty()) text << "    (none: every admissible point solves)\n";
    for (const Poly& q : sys.inequations)
      text << "  nonzero: " << to_string(q) << "\n";
  }
  out.text = text.str();
  return out;
}

// --------------------------------------------------------------------- verify

struct VerifyArgs {
  SolitonArgs soliton;
  std::string family_file;
};

std::vector<SolutionFamily> load_families(const std::string& path,
                                          const TablePtr& table) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open family file " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  const nlohmann::json& list =
      doc.is_object() && doc.contains("families") ? doc.at("families") : doc;
  if (!list.is_array())
    throw UsageError(path + ": expected an array of solution families");
  std::vector<SolutionFamily> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(
        family_from_json(list[i], table, "families[" + std::to_string(i) + "]"));
  return out;
}

CommandOutput run_verify(const VerifyArgs& args) {
  LieGroupModel base = load_model(args.soliton.sel);
  std::vector<SolutionFamily> families = load_families(args.family_file, base.params);
  CommandOutput out;
  out.envelope = make_envelope(
      "verify", args.soliton.sel, base,
      {{"connection", to_string(connection_from_string(args.soliton.connection))},
       {"kind", args.soliton.kind},
       {"family_file", args.family_file}});
  std::ostringstream text;
  for (const std::optional<int>& eta : requested_etas(base, args.soliton.eta)) {
    SolitonSystem sys = build_soliton_system(base, make_spec(args.soliton, eta));
    nlohmann::json block;
    block["eta"] = eta_json(eta);
    block["families"] = nlohmann::json::array();
    text << eta_heading(base, eta) << ": verifying " << families.size()
         << " families against the " << args.soliton.kind << "-kind system ("
         << to_string(sys.spec.connection) << ")\n";
    for (const SolutionFamily& family : families) {
      FamilyReport rep = verify_family(sys, family);
      nlohmann::json f;
      f["label"] = rep.label;
      f["pass"] = rep.pass;
      f["used_constraint_reduction"] = rep.used_constraint_reduction;
      f["failures"] = rep.failures;
      block["families"].push_back(std::move(f));
      text << "  " << (rep.pass ? "PASS" : "FAIL") << "  " << rep.label;
      if (rep.used_constraint_reduction) text << "  (modulo constraints)";
      text << "\n";
      for (const std::string& why : rep.failures) text << "        " << why << "\n";
      if (!rep.pass) out.exit_code = 1;
    }
    out.envelope["results"].push_back(std::move(block));
  }
  out.text = text.str();
  return out;
}

// ----------------------------------------------------------------------- scan

struct ScanArgs {
  SolitonArgs soliton;
  std::string grid_file;
  bool exclude_known = false;
};

GridSpec load_grid(const std::string& path) {
  if (path.empty()) return GridSpec::default_grid();
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open grid file " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  if (!doc.is_array() || doc.empty())
    throw UsageError(path + ": expected a nonempty array of rational strings");
  GridSpec grid;
  for (const nlohmann::json& v : doc) {
    if (!v.is_string()) throw UsageError(path + ": grid values are rational strings");
    grid.values.push_back(rational_from_string(v.get<std::string>()));
  }
  return grid;
}

CommandOutput run_scan(const ScanArgs& args) {
  LieGroupModel base = load_model(args.soliton.sel);
  GridSpec grid = load_grid(args.grid_file);
  ConnectionChoice conn = connection_from_string(args.soliton.connection);
  SolitonKind kind = kind_from_string(args.soliton.kind);

  std::vector<SolutionFamily> known;
  if (args.exclude_known) {
    if (args.soliton.sel.family.empty())
      throw UsageError("--exclude-known needs a builtin family: the known solution "
                       "families come from its reference tables");
    known = known_families(load_all_fixtures(fixture_dir()), args.soliton.sel.family,
                           conn, kind);
  }

  CommandOutput out;
  out.envelope = make_envelope(
      "scan", args.soliton.sel, base,
      {{"connection", to_string(conn)},
       {"kind", args.soliton.kind},
       {"grid", args.grid_file.empty() ? "default" : args.grid_file},
       {"exclude_known", args.exclude_known}});
  std::ostringstream text;
  for (const std::optional<int>& eta : requested_etas(base, args.soliton.eta)) {
    SolitonSystem sys = build_soliton_system(base, make_spec(args.soliton, eta));
    ScanReport rep = falsify_by_sampling(sys, grid, known);
    nlohmann::json block;
    block["eta"] = eta_json(eta);
    block["points_visited"] = rep.points_visited;
    block["points_admissible"] = rep.points_admissible;
    block["solutions_found"] = rep.solutions_found;
    const char* label = args.exclude_known ? "counterexamples" : "solutions";
    if (args.exclude_known) block["solutions_covered"] = rep.solutions_covered;
    block[label] = nlohmann::json::array();
    for (const GridPoint& point : rep.counterexamples)
      block[label].push_back(grid_point_to_json(point));
    out.envelope["results"].push_back(std::move(block));

    text << eta_heading(base, eta) << ": grid scan of the " << args.soliton.kind
         << "-kind system (" << to_string(conn) << ")\n";
    text << "  points visited:    " << rep.points_visited << "\n";
    text << "  admissible points: " << rep.points_admissible << "\n";
    text << "  solutions found:   " << rep.solutions_found << "\n";
    if (args.exclude_known) {
      text << "  covered by known families: " << rep.solutions_covered << "\n";
      if (rep.counterexamples.empty())
        text << "  no uncovered solutions\n";
      else
        out.exit_code = 1;
    }
    for (const GridPoint& point : rep.counterexamples)
      text << "  " << (args.exclude_known ? "UNCOVERED: " : "") << point_text(point)
           << "\n";
  }
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- check-paper

struct CheckArgs {
  std::string only_id;
  std::string fixtures_dir;
};

const char* status_text(FixtureResult::Status s) {
  switch (s) {
    case FixtureResult::Status::pass: return "PASS";
    case FixtureResult::Status::mismatch: return "MISMATCH";
    case FixtureResult::Status::error: return "ERROR";
  }
  return "?";
}

CommandOutput run_check(const CheckArgs& args) {
  std::filesystem::path dir = args.fixtures_dir.empty()
                                  ? fixture_dir()
                                  : std::filesystem::path(args.fixtures_dir);
  CommandOutput out;
  out.envelope["engine"] = "liesoliton";
  out.envelope["version"] = "0.1.0";
  out.envelope["command"] = "check-paper";
  out.envelope["options"] = {{"fixtures", dir.string()},
                             {"only", args.only_id.empty() ? nlohmann::json()
                                                           : nlohmann::json(args.only_id)}};
  std::ostringstream text;

  if (!args.only_id.empty()) {
    std::vector<Fixture> all = load_all_fixtures(dir);
    nlohmann::json results = nlohmann::json::array();
    bool found = false;
    for (const Fixture& f : all) {
      if (f.id != args.only_id) continue;
      found = true;
      FixtureResult r = check_fixture(f);
      nlohmann::json jr;
      jr["id"] = r.id;
      jr["family"] = r.family;
      jr["type"] = r.type;
      jr["status"] = status_text(r.status);
      jr["used_constraint_reduction"] = r.used_constraint_reduction;
      jr["details"] = r.details;
      results.push_back(std::move(jr));
      text << status_text(r.status) << "  " << r.id << "  (" << r.family << " "
           << r.type << ")\n";
      for (const std::string& d : r.details) text << "    " << d << "\n";
      if (r.status != FixtureResult::Status::pass) out.exit_code = 1;
    }
    if (!found) throw UsageError("no reference table has id '" + args.only_id + "'");
    out.envelope["results"] = std::move(results);
    out.text = text.str();
    return out;
  }

  FixtureRunReport report = run_all(dir);
  nlohmann::json results = nlohmann::json::array();
  int passed = 0;
  for (const FixtureResult& r : report.results) {
    nlohmann::json jr;
    jr["id"] = r.id;
    jr["family"] = r.family;
    jr["type"] = r.type;
    jr["status"] = status_text(r.status);
    jr["used_constraint_reduction"] = r.used_constraint_reduction;
    jr["details"] = r.details;
    results.push_back(std::move(jr));
    if (r.status == FixtureResult::Status::pass) ++passed;
    text << status_text(r.status) << "  " << r.id << "  (" << r.family << " "
         << r.type << ")\n";
    for (const std::string& d : r.details) text << "    " << d << "\n";
  }
  out.envelope["results"] = std::move(results);
  out.envelope["coverage"] = {{"missing", report.missing_ids},
                              {"unexpected", report.unexpected_ids}};
  out.envelope["pass"] = report.all_pass();
  for (const std::string& id : report.missing_ids)
    text << "MISSING   " << id << "\n";
  for (const std::string& id : report.unexpected_ids)
    text << "UNEXPECTED  " << id << "\n";
  text << passed << "/" << report.results.size() << " reference tables verified";
  if (!report.missing_ids.empty())
    text << ", " << report.missing_ids.size() << " missing";
  if (!report.unexpected_ids.empty())
    text << ", " << report.unexpected_ids.size() << " unexpected";
  text << "\n";
  if (!report.all_pass()) out.exit_code = 1;
  out.text = text.str();
  return out;
}

// ----------------------------------------------------------------------- main

void emit(const CommandOutput& result, const std::string& format,
          const std::string& output_file, std::ostream& out) {
  std::string rendered = format == "json" ? result.envelope.dump(2) + "\n"
                                          : result.text;
  if (output_file.empty()) {
    out << rendered;
    return;
  }
  std::ofstream file(output_file, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + output_file);
  file << rendered;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic connection, curvature and algebraic Ricci soliton engine\n"
               "for three-dimensional Lorentzian Lie groups"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string output_file;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output_file, "write the report to a file");

  ConnectionsArgs conn_args;
  CLI::App* conn_cmd =
      app.add_subcommand("connections", "print one connection's coefficient table");
  add_model_arguments(conn_cmd, conn_args.sel);
  conn_cmd->add_option("--connection", conn_args.connection, "lc, canonical or kn")
      ->required();
  conn_cmd->add_option("--eta", conn_args.eta, "fix eta to 1 or -1");

  ConnectionsArgs curv_args;
  CLI::App* curv_cmd =
      app.add_subcommand("curvature", "print the curvature of one connection");
  add_model_arguments(curv_cmd, curv_args.sel);
  curv_cmd->add_option("--connection", curv_args.connection, "lc, canonical or kn")
      ->required();
  curv_cmd->add_option("--eta", curv_args.eta, "fix eta to 1 or -1");

  RicciArgs ricci_args;
  CLI::App* ricci_cmd =
      app.add_subcommand("ricci", "print the Ricci operator of one connection");
  add_model_arguments(ricci_cmd, ricci_args.sel);
  ricci_cmd->add_option("--connection", ricci_args.connection, "lc, canonical or kn")
      ->required();
  ricci_cmd->add_flag("--symmetrized", ricci_args.symmetrized,
                      "symmetrize the Ricci form first");
  ricci_cmd->add_option("--eta", ricci_args.eta, "fix eta to 1 or -1");

  SolitonArgs soliton_args;
  CLI::App* soliton_cmd = app.add_subcommand(
      "soliton", "build the algebraic Ricci soliton system of one model");
  add_model_arguments(soliton_cmd, soliton_args.sel);
  soliton_cmd->add_option("--connection", soliton_args.connection, "canonical or kn")
      ->required();
  soliton_cmd->add_option("--kind", soliton_args.kind, "first or second")->required();
  soliton_cmd->add_option("--eta", soliton_args.eta, "fix eta to 1 or -1");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "verify claimed solution families against a soliton system");
  add_model_arguments(verify_cmd, verify_args.soliton.sel);
  verify_cmd->add_option("--connection", verify_args.soliton.connection,
                         "canonical or kn")
      ->required();
  verify_cmd->add_option("--kind", verify_args.soliton.kind, "first or second")
      ->required();
  verify_cmd->add_option("--family-file", verify_args.family_file,
                         "JSON file with the families to verify")
      ->required();
  verify_cmd->add_option("--eta", verify_args.soliton.eta, "fix eta to 1 or -1");

  ScanArgs scan_args;
  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "solve the system exactly over a rational grid");
  add_model_arguments(scan_cmd, scan_args.soliton.sel);
  scan_cmd->add_option("--connection", scan_args.soliton.connection, "canonical or kn")
      ->required();
  scan_cmd->add_option("--kind", scan_args.soliton.kind, "first or second")
      ->required();
  scan_cmd->add_option("--eta", scan_args.soliton.eta, "fix eta to 1 or -1");
  scan_cmd->add_option("--grid", scan_args.grid_file,
                       "JSON array of rational grid values");
  scan_cmd->add_flag("--exclude-known", scan_args.exclude_known,
                     "report only solutions no known family covers");

  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand(
      "check-paper", "recompute and verify the complete reference-table corpus");
  check_cmd->add_option("--only", check_args.only_id, "check a single table by id");
  check_cmd->add_option("--fixtures", check_args.fixtures_dir,
                        "reference-table directory override");

  // --format and --output are global: accept them after the subcommand too.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    CommandOutput result;
    if (conn_cmd->parsed())
      result = run_connections(conn_args);
    else if (curv_cmd->parsed())
      result = run_curvature(curv_args);
    else if (ricci_cmd->parsed())
      result = run_ricci(ricci_args);
    else if (soliton_cmd->parsed())
      result = run_soliton(soliton_args);
    else if (verify_cmd->parsed())
      result = run_verify(verify_args);
    else if (scan_cmd->parsed())
      result = run_scan(scan_args);
    else
      result = run_check(check_args);
    emit(result, format, output_file, out);
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liesoliton
