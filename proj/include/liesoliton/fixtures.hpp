#pragma once

#include "liesoliton/soliton.hpp"

#include <filesystem>

#include <nlohmann/json.hpp>

namespace liesoliton {

/// One entry of the reference-table corpus. `payload` is the complete JSON
/// object; `check_fixture` interprets it according to `type`:
///   brackets       - bracket table plus side conditions of a family
///   connection     - coefficient table of one connection (lc/canonical/kn)
///   nabla_j        - covariant derivatives of J under the Levi-Civita connection
///   curvature      - R(e_i,e_j) matrices of the canonical or KN connection
///   ricci          - Ricci operator matrix (optionally symmetrized)
///   soliton_system - derivation matrix D and/or a derived equation list
///   theorem        - claimed solution families of one soliton problem
///   nonexistence   - claim that one soliton problem has no solutions
struct Fixture {
  std::string id;
  std::string family;
  std::string type;
  nlohmann::json payload;
};

struct FixtureResult {
  enum class Status { pass, mismatch, error };

  std::string id;
  std::string family;
  std::string type;
  Status status = Status::error;
  bool used_constraint_reduction = false;
  std::vector<std::string> details;  // empty iff status == pass
};

struct FixtureRunReport {
  std::vector<FixtureResult> results;
  std::vector<std::string> missing_ids;     // expected but not loaded
  std::vector<std::string> unexpected_ids;  // loaded but not expected
  bool all_pass() const;
};

/// Where the reference tables live: the LIESOLITON_FIXTURES environment
/// variable when set, else the directory baked in at configure time.
std::filesystem::path fixture_dir();

/// The frozen list of reference-table ids the corpus must cover exactly.
const std::vector<std::string>& expected_fixture_ids();

std::vector<Fixture> load_fixture_file(const std::filesystem::path& file);

/// All fixtures from every *.json under dir, in filename order.
std::vector<Fixture> load_all_fixtures(const std::filesystem::path& dir);

/// Parse one claimed solution family from its JSON description:
///   { "label": str, "substitution": {param: polystr}, "constraints": [polystr],
///     "inequations": [polystr], "claimed_d": [[polystr x3] x3]?, "notes": str? }
SolutionFamily family_from_json(const nlohmann::json& j, const TablePtr& table,
                                const std::string& where);

/// Collect the solution families every theorem/nonexistence fixture claims for
/// the given family and soliton problem (used as the known set when scanning).
std::vector<SolutionFamily> known_families(const std::vector<Fixture>& fixtures,
                                           const std::string& family,
                                           ConnectionChoice connection,
                                           SolitonKind kind);

/// Recompute what the fixture describes and compare. Differences that vanish
/// modulo the family's constraints count as matches but are flagged.
FixtureResult check_fixture(const Fixture& f);

/// Check every fixture in dir and reconcile ids against the expected list.
FixtureRunReport run_all(const std::filesystem::path& dir);

}  // namespace liesoliton
