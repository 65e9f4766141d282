#include "liesoliton/fixtures.hpp"

#include "liesoliton/model.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

using namespace liesoliton;

namespace {

// Keys whose string values are labels or prose, not polynomial text.
bool is_prose_key(const std::string& key) {
  static const std::set<std::string> keys = {"id",   "family", "type", "connection",
                                            "kind", "kinds",  "label", "notes"};
  return keys.count(key) != 0;
}

void collect_poly_strings(const nlohmann::json& node, std::vector<std::string>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      if (!is_prose_key(key)) collect_poly_strings(value, out);
  } else if (node.is_array()) {
    for (const nlohmann::json& value : node) collect_poly_strings(value, out);
  } else if (node.is_string()) {
    out.push_back(node.get<std::string>());
  }
}

const Fixture& fixture_by_id(const std::vector<Fixture>& all, const std::string& id) {
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const Fixture& f) { return f.id == id; });
  REQUIRE(it != all.end());
  return *it;
}

struct EnvGuard {
  ~EnvGuard() { unsetenv("LIESOLITON_FIXTURES"); }
};

}  // namespace

TEST_CASE("the expected id list is frozen and duplicate-free") {
  const std::vector<std::string>& ids = expected_fixture_ids();
  CHECK(ids.size() == 116);
  std::set<std::string> unique(ids.begin(), ids.end());
  CHECK(unique.size() == ids.size());
}

TEST_CASE("the shipped corpus covers every id and passes every check") {
  FixtureRunReport report = run_all(fixture_dir());
  CHECK(report.missing_ids.empty());
  CHECK(report.unexpected_ids.empty());
  CHECK(report.results.size() == expected_fixture_ids().size());
  for (const FixtureResult& r : report.results) {
    CAPTURE(r.id);
    for (const std::string& d : r.details) CAPTURE(d);
    CHECK(r.status == FixtureResult::Status::pass);
  }
  CHECK(report.all_pass());

  // Some classification branches only close modulo a bracket constraint
  // (e.g. beta^2 = 2*alpha^2); the report must say when that happened.
  bool any_reduced = std::any_of(
      report.results.begin(), report.results.end(),
      [](const FixtureResult& r) { return r.used_constraint_reduction; });
  CHECK(any_reduced);
}

TEST_CASE("corrupting a single connection entry is pinpointed") {
  std::vector<Fixture> g1 = load_fixture_file(fixture_dir() / "g1.json");
  Fixture broken = fixture_by_id(g1, "Lemma2.2");
  REQUIRE(check_fixture(broken).status == FixtureResult::Status::pass);

  broken.payload["gamma"][0][1][2] = "alpha + 1";
  FixtureResult res = check_fixture(broken);
  CHECK(res.status == FixtureResult::Status::mismatch);
  REQUIRE(res.details.size() == 1);
  CHECK(res.details[0].find("(2,3)") != std::string::npos);
}

TEST_CASE("every polynomial in the corpus survives a parse round trip") {
  std::vector<Fixture> all = load_all_fixtures(fixture_dir());
  REQUIRE(all.size() == expected_fixture_ids().size());
  size_t checked = 0;
  for (const Fixture& f : all) {
    TablePtr table = build_group(f.family).params;
    std::vector<std::string> texts;
    collect_poly_strings(f.payload, texts);
    for (const std::string& text : texts) {
      CAPTURE(f.id);
      CAPTURE(text);
      Poly first = parse_poly(text, table);
      CHECK(parse_poly(to_string(first), table) == first);
      ++checked;
    }
  }
  CHECK(checked > 1000);  // the walker must actually reach the tables
}

TEST_CASE("the environment variable overrides the baked-in corpus location") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "liesoliton-fixture-override";
  fs::create_directories(dir);
  std::vector<Fixture> g1 = load_fixture_file(fixture_dir() / "g1.json");
  {
    std::ofstream out(dir / "only.json");
    out << nlohmann::json::array({fixture_by_id(g1, "Eq2.17").payload});
  }

  EnvGuard guard;
  setenv("LIESOLITON_FIXTURES", dir.c_str(), 1);
  CHECK(fixture_dir() == dir);

  FixtureRunReport report = run_all(fixture_dir());
  REQUIRE(report.results.size() == 1);
  CHECK(report.results[0].id == "Eq2.17");
  CHECK(report.results[0].status == FixtureResult::Status::pass);
  CHECK(report.missing_ids.size() == expected_fixture_ids().size() - 1);
  CHECK(!report.all_pass());
}

TEST_CASE("unreadable corpora are reported, not crashed on") {
  namespace fs = std::filesystem;
  CHECK_THROWS_AS(load_fixture_file("/nonexistent/nope.json"), std::runtime_error);
  CHECK_THROWS_AS(load_all_fixtures("/nonexistent/dir"), std::runtime_error);

  fs::path dir = fs::temp_directory_path() / "liesoliton-fixture-malformed";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "bad.json");
    out << "{\"id\": \"not an array\"}";
  }
  CHECK_THROWS_AS(load_fixture_file(dir / "bad.json"), std::runtime_error);
}
