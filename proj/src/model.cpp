#include "liesoliton/model.hpp"

#include <nlohmann/json.hpp>

namespace liesoliton {

StructureConstants StructureConstants::from_upper(const PolyVec3& c12,
                                                  const PolyVec3& c13,
                                                  const PolyVec3& c23) {
  StructureConstants s;
  for (auto& row : s.C)
    for (auto& v : row) v = zero_vec3();
  s.C[0][1] = c12;
  s.C[0][2] = c13;
  s.C[1][2] = c23;
  s.C[1][0] = -c12;
  s.C[2][0] = -c13;
  s.C[2][1] = -c23;
  return s;
}

namespace {

// Small helper so the bracket tables below read like the source tables.
struct Builder {
  TablePtr t;
  Poly operator()(const std::string& text) const { return parse_poly(text, t); }
  PolyVec3 vec(const std::string& a, const std::string& b, const std::string& c) const {
    PolyVec3 v;
    v << (*this)(a), (*this)(b), (*this)(c);
    return v;
  }
};

}  // namespace

bool is_builtin_family(const std::string& family) {
  return family.size() == 2 && family[0] == 'G' && family[1] >= '1' && family[1] <= '7';
}

LieGroupModel build_group(const std::string& family) {
  LieGroupModel m;
  m.name = family;
  if (family == "G1") {
    m.params = ParamTable::make({"alpha", "beta"});
    Builder b{m.params};
    m.structure = StructureConstants::from_upper(b.vec("alpha", "0", "-beta"),
                                                 b.vec("-alpha", "-beta", "0"),
                                                 b.vec("beta", "alpha", "alpha"));
    m.inequations = {b("alpha")};
  } else if (family == "G2") {
    m.params = ParamTable::make({"alpha", "beta", "gamma"});
    Builder b{m.params};
    m.structure = StructureConstants::from_upper(b.vec("0", "gamma", "-beta"),
                                                 b.vec("0", "-beta", "-gamma"),
                                                 b.vec("alpha", "0", "0"));
    m.inequations = {b("gamma")};
  } else if (family == "G3") {
    m.params = ParamTable::make({"alpha", "beta", "gamma"});
    Builder b{m.params};
    m.structure = StructureConstants::from_upper(b.vec("0", "0", "-gamma"),
                                                 b.vec("0", "-beta", "0"),
                                                 b.vec("alpha", "0", "0"));
  } else if (family == "G4") {
    m.params = ParamTable::make({"alpha", "beta", "eta"}, /*eta_involutive=*/true);
    Builder b{m.params};
    m.structure = StructureConstants::from_upper(b.vec("0", "-1", "2*eta - beta"),
                                                 b.vec("0", "-beta", "1"),
                                                 b.vec("alpha", "0", "0"));
  } else if (family == "G5") {
    m.params = ParamTable::make({"alpha", "beta", "gamma", "delta"});
    Builder b{m.params};
    m.structure = StructureConstants::from_upper(b.vec("0", "0", "0"),
                                                 b.vec("alpha", "beta", "0"),
                                                 b.vec("gamma", "delta", "0"));
    m.constraints = {b("alpha*gamma + beta*delta")};
    m.inequations = {b("alpha + delta")};
  } else if (family == "G6") {
    m.params = ParamTable::make({"alpha", "beta", "gamma", "delta"});
    Builder b{m.params};
    m.structure = StructureConstants::from_upper(b.vec("0", "alpha", "beta"),
                                                 b.vec("0", "gamma", "delta"),
                                                 b.vec("0", "0", "0"));
    m.constraints = {b("alpha*gamma - beta*delta")};
    m.inequations = {b("alpha + delta")};
  } else if (family == "G7") {
    m.params = ParamTable::make({"alpha", "beta", "gamma", "delta"});
    Builder b{m.params};
    m.structure = StructureConstants::from_upper(b.vec("-alpha", "-beta", "-beta"),
                                                 b.vec("alpha", "beta", "beta"),
                                                 b.vec("gamma", "delta", "delta"));
    m.constraints = {b("alpha*gamma")};
    m.inequations = {b("alpha + delta")};
  } else {
    throw std::invalid_argument("unknown family '" + family + "' (expected G1..G7)");
  }
  return m;
}

PolyVec3 bracket(const LieGroupModel& m, const PolyVec3& x, const PolyVec3& y) {
  PolyVec3 out = zero_vec3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Poly coeff = x(i) * y(j);
      for (int k = 0; k < 3; ++k) out(k) += coeff * m.structure.C[i][j](k);
    }
  return out;
}

PolyVec3 jacobi_residual(const LieGroupModel& m) {
  auto basis = [&](int i) {
    PolyVec3 v = zero_vec3();
    v(i) = Poly(1);
    return v;
  };
  PolyVec3 sum = zero_vec3();
  const int triple[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& [i, j, k] : triple)
    sum += bracket(m, basis(i), bracket(m, basis(j), basis(k)));
  return sum;
}

bool is_zero_mod_constraints(const std::vector<Poly>& constraints, const Poly& p) {
  if (p.is_zero()) return true;
  for (const Poly& q : constraints) {
    if (q.is_zero()) continue;
    if (try_divide_exact(p, q)) return true;
  }
  return false;
}

LieGroupModel specialize_eta(const LieGroupModel& m, int value) {
  if (!m.params || m.params->eta_index() < 0)
    throw std::invalid_argument("model '" + m.name + "' has no eta");
  if (value != 1 && value != -1)
    throw std::invalid_argument("eta must be +1 or -1");
  std::map<std::string, Poly> repl{{"eta", Poly(value)}};
  LieGroupModel out = m;
  for (auto& row : out.structure.C)
    for (auto& v : row)
      for (int k = 0; k < 3; ++k) v(k) = v(k).substitute(repl);
  for (auto& q : out.constraints) q = q.substitute(repl);
  for (auto& q : out.inequations) q = q.substitute(repl);
  return out;
}

Poly metric_pairing(const LieGroupModel& m, const PolyVec3& x, const PolyVec3& y) {
  Poly sum;
  for (int k = 0; k < 3; ++k) sum += Poly(m.metric.eps[k]) * x(k) * y(k);
  return sum;
}

namespace {

Poly parse_model_poly(const nlohmann::json& value, const TablePtr& table,
                      const std::string& where) {
  if (!value.is_string())
    throw std::invalid_argument("model " + where + " must be a string");
  Poly p;
  try {
    p = parse_poly(value.get<std::string>(), table);
  } catch (const ParseError& e) {
    throw std::invalid_argument("model " + where + ": " + e.what());
  }
  if (p.degree_in(table->c_index()) > 0)
    throw std::invalid_argument("model " + where + " may not involve c");
  return p;
}

}  // namespace

LieGroupModel model_from_json(const nlohmann::json& spec) {
  if (!spec.is_object()) throw std::invalid_argument("model file: expected an object");
  if (!spec.contains("name") || !spec.at("name").is_string() ||
      spec.at("name").get<std::string>().empty())
    throw std::invalid_argument("model file: missing or empty \"name\"");

  std::vector<std::string> params;
  if (spec.contains("parameters")) {
    if (!spec.at("parameters").is_array())
      throw std::invalid_argument("model file: \"parameters\" must be an array");
    for (const auto& entry : spec.at("parameters")) {
      if (!entry.is_string())
        throw std::invalid_argument("model file: parameter names must be strings");
      params.push_back(entry.get<std::string>());
    }
  }
  bool eta_involutive =
      spec.contains("eta_involutive") && spec.at("eta_involutive").is_boolean()
          ? spec.at("eta_involutive").get<bool>()
          : false;

  LieGroupModel m;
  m.name = spec.at("name").get<std::string>();
  if (is_builtin_family(m.name))
    throw std::invalid_argument("model name '" + m.name + "' is reserved");
  m.params = ParamTable::make(params, eta_involutive);

  if (!spec.contains("brackets") || !spec.at("brackets").is_object())
    throw std::invalid_argument("model file: missing \"brackets\" object");
  const auto& brackets = spec.at("brackets");
  std::array<PolyVec3, 3> upper;
  const char* keys[3] = {"12", "13", "23"};
  for (int p = 0; p < 3; ++p) {
    if (!brackets.contains(keys[p]) || !brackets.at(keys[p]).is_array() ||
        brackets.at(keys[p]).size() != 3)
      throw std::invalid_argument(std::string("model file: brackets[\"") + keys[p] +
                                  "\"] must be an array of three strings");
    for (int k = 0; k < 3; ++k)
      upper[p](k) = parse_model_poly(brackets.at(keys[p]).at(k), m.params,
                                     std::string("bracket ") + keys[p]);
  }
  m.structure = StructureConstants::from_upper(upper[0], upper[1], upper[2]);

  for (const char* field : {"constraints", "inequations"}) {
    if (!spec.contains(field)) continue;
    if (!spec.at(field).is_array())
      throw std::invalid_argument(std::string("model file: \"") + field +
                                  "\" must be an array");
    auto& dst = std::string(field) == "constraints" ? m.constraints : m.inequations;
    for (const auto& entry : spec.at(field))
      dst.push_back(parse_model_poly(entry, m.params, field));
  }

  PolyVec3 jacobi = jacobi_residual(m);
  for (int k = 0; k < 3; ++k)
    if (!is_zero_mod_constraints(m.constraints, jacobi(k)))
      throw std::invalid_argument("model '" + m.name +
                                  "' violates the Jacobi identity: component e" +
                                  std::to_string(k + 1) + " = " + to_string(jacobi(k)));
  return m;
}

}  // namespace liesoliton
