#include "liesoliton/model.hpp"

#include <nlohmann/json.hpp>

#include "doctest.h"

using namespace liesoliton;

namespace {

PolyVec3 basis(int i) {
  PolyVec3 v = zero_vec3();
  v(i) = Poly(1);
  return v;
}

PolyVec3 combo(const LieGroupModel& m, const char* a, const char* b, const char* c) {
  PolyVec3 v = zero_vec3();
  v(0) = parse_poly(a, m.params);
  v(1) = parse_poly(b, m.params);
  v(2) = parse_poly(c, m.params);
  return v;
}

}  // namespace

TEST_CASE("every builtin family satisfies the Jacobi identity on the nose") {
  for (const char* name : {"G1", "G2", "G3", "G4", "G5", "G6", "G7"}) {
    CAPTURE(name);
    LieGroupModel m = build_group(name);
    CHECK(vec_is_zero(jacobi_residual(m)));
  }
}

TEST_CASE("bracket tables are antisymmetric with zero diagonal") {
  for (const char* name : {"G1", "G2", "G3", "G4", "G5", "G6", "G7"}) {
    CAPTURE(name);
    LieGroupModel m = build_group(name);
    for (int i = 0; i < 3; ++i) {
      CHECK(vec_is_zero(m.structure.C[i][i]));
      for (int j = 0; j < 3; ++j)
        CHECK(vec_is_zero(PolyVec3(m.structure.C[i][j] + m.structure.C[j][i])));
    }
  }
}

TEST_CASE("the G1 bracket matches its defining table") {
  LieGroupModel m = build_group("G1");
  CHECK(vec_equal(bracket(m, basis(0), basis(1)), combo(m, "alpha", "0", "-beta")));
  CHECK(vec_equal(bracket(m, basis(0), basis(2)), combo(m, "-alpha", "-beta", "0")));
  CHECK(vec_equal(bracket(m, basis(1), basis(2)), combo(m, "beta", "alpha", "alpha")));

  // Bilinearity over coefficient vectors.
  PolyVec3 x = basis(0) + basis(1);
  CHECK(vec_equal(bracket(m, x, basis(2)),
                  PolyVec3(bracket(m, basis(0), basis(2)) +
                           bracket(m, basis(1), basis(2)))));
  CHECK(vec_is_zero(bracket(m, x, x)));
}

TEST_CASE("family parameter tables and side conditions") {
  CHECK(build_group("G1").params->names() ==
        std::vector<std::string>{"alpha", "beta", "c"});
  CHECK(build_group("G2").params->names() ==
        std::vector<std::string>{"alpha", "beta", "gamma", "c"});
  CHECK(build_group("G4").params->names() ==
        std::vector<std::string>{"alpha", "beta", "eta", "c"});
  CHECK(build_group("G4").params->eta_involutive());
  CHECK(build_group("G5").params->names() ==
        std::vector<std::string>{"alpha", "beta", "gamma", "delta", "c"});

  LieGroupModel g5 = build_group("G5");
  REQUIRE(g5.constraints.size() == 1);
  CHECK(g5.constraints[0] == parse_poly("alpha*gamma + beta*delta", g5.params));
  REQUIRE(g5.inequations.size() == 1);
  CHECK(g5.inequations[0] == parse_poly("alpha + delta", g5.params));

  LieGroupModel g6 = build_group("G6");
  CHECK(g6.constraints[0] == parse_poly("alpha*gamma - beta*delta", g6.params));
  LieGroupModel g7 = build_group("G7");
  CHECK(g7.constraints[0] == parse_poly("alpha*gamma", g7.params));

  CHECK(is_builtin_family("G1"));
  CHECK(is_builtin_family("G7"));
  CHECK(!is_builtin_family("G8"));
  CHECK(!is_builtin_family("g1"));
  CHECK_THROWS_AS(build_group("G8"), std::invalid_argument);
}

TEST_CASE("the metric pairs diagonally with e3 timelike") {
  LieGroupModel m = build_group("G3");
  CHECK(metric_pairing(m, basis(0), basis(0)) == Poly(1));
  CHECK(metric_pairing(m, basis(1), basis(1)) == Poly(1));
  CHECK(metric_pairing(m, basis(2), basis(2)) == Poly(-1));
  CHECK(metric_pairing(m, basis(0), basis(1)).is_zero());
  CHECK(m.product.j == std::array<int, 3>{1, 1, -1});
  CHECK(m.metric.eps == std::array<int, 3>{1, 1, -1});
}

TEST_CASE("specializing eta bakes a sign into G4") {
  LieGroupModel g4 = build_group("G4");
  LieGroupModel plus = specialize_eta(g4, 1);
  LieGroupModel minus = specialize_eta(g4, -1);
  CHECK(vec_equal(plus.structure.C[0][1], combo(plus, "0", "-1", "2 - beta")));
  CHECK(vec_equal(minus.structure.C[0][1], combo(minus, "0", "-1", "-2 - beta")));
  CHECK(vec_equal(plus.structure.C[0][2], combo(plus, "0", "-beta", "1")));
  CHECK_THROWS_AS(specialize_eta(g4, 0), std::invalid_argument);
  CHECK_THROWS_AS(specialize_eta(build_group("G1"), 1), std::invalid_argument);
}

TEST_CASE("is_zero_mod_constraints accepts exact multiples only") {
  LieGroupModel g5 = build_group("G5");
  Poly q = g5.constraints[0];
  CHECK(is_zero_mod_constraints(g5.constraints, Poly(g5.params, Rational(0))));
  CHECK(is_zero_mod_constraints(g5.constraints, q));
  CHECK(is_zero_mod_constraints(g5.constraints, q * parse_poly("beta - 7", g5.params)));
  CHECK(!is_zero_mod_constraints(g5.constraints, parse_poly("alpha*gamma", g5.params)));
  CHECK(!is_zero_mod_constraints({}, parse_poly("alpha", g5.params)));
}

TEST_CASE("custom models load from JSON and are vetted") {
  nlohmann::json good = {
      {"name", "heisenberg"},
      {"parameters", {"lambda"}},
      {"brackets",
       {{"12", {"0", "0", "lambda"}}, {"13", {"0", "0", "0"}}, {"23", {"0", "0", "0"}}}},
  };
  LieGroupModel m = model_from_json(good);
  CHECK(m.name == "heisenberg");
  CHECK(m.params->names() == std::vector<std::string>{"c", "lambda"});
  CHECK(vec_equal(m.structure.C[0][1], combo(m, "0", "0", "lambda")));
  CHECK(vec_is_zero(jacobi_residual(m)));

  SUBCASE("reserved names are rejected") {
    nlohmann::json bad = good;
    bad["name"] = "G1";
    CHECK_THROWS_AS(model_from_json(bad), std::invalid_argument);
  }
  SUBCASE("c may not appear in bracket data") {
    nlohmann::json bad = good;
    bad["brackets"]["12"][2] = "c";
    CHECK_THROWS_AS(model_from_json(bad), std::invalid_argument);
  }
  SUBCASE("jacobi violations are rejected with the offending component") {
    nlohmann::json bad = good;
    bad["brackets"] = {{"12", {"0", "0", "1"}},
                       {"13", {"1", "0", "0"}},
                       {"23", {"0", "0", "0"}}};
    try {
      model_from_json(bad);
      FAIL("expected a Jacobi rejection");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("Jacobi") != std::string::npos);
    }
  }
  SUBCASE("declared constraints excuse a residual") {
    // [e1,e2] = mu e3, [e1,e3] = lambda e1 fails Jacobi unless lambda mu = 0.
    nlohmann::json constrained = {
        {"name", "pinched"},
        {"parameters", {"lambda", "mu"}},
        {"brackets",
         {{"12", {"0", "0", "mu"}},
          {"13", {"lambda", "0", "0"}},
          {"23", {"0", "0", "0"}}}},
        {"constraints", {"lambda*mu"}},
    };
    LieGroupModel p = model_from_json(constrained);
    CHECK(p.constraints.size() == 1);
  }
  SUBCASE("malformed shapes are rejected") {
    CHECK_THROWS_AS(model_from_json(nlohmann::json::array()), std::invalid_argument);
    nlohmann::json no_name = good;
    no_name.erase("name");
    CHECK_THROWS_AS(model_from_json(no_name), std::invalid_argument);
    nlohmann::json bad_brackets = good;
    bad_brackets["brackets"].erase("23");
    CHECK_THROWS_AS(model_from_json(bad_brackets), std::invalid_argument);
    nlohmann::json short_row = good;
    short_row["brackets"]["12"] = {"0", "0"};
    CHECK_THROWS_AS(model_from_json(short_row), std::invalid_argument);
  }
}
