#include "liesoliton/jsonio.hpp"

namespace liesoliton {

nlohmann::json poly_to_json(const Poly& p) { return to_string(p); }

nlohmann::json vec3_to_json(const PolyVec3& v) {
  return nlohmann::json::array({to_string(v(0)), to_string(v(1)), to_string(v(2))});
}

nlohmann::json mat3_to_json(const PolyMat3& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(nlohmann::json::array(
        {to_string(m(i, 0)), to_string(m(i, 1)), to_string(m(i, 2))}));
  return rows;
}

nlohmann::json polys_to_json(const std::vector<Poly>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const Poly& p : ps) out.push_back(to_string(p));
  return out;
}

nlohmann::json grid_point_to_json(const GridPoint& point) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, value] : point) out[name] = to_string(value);
  return out;
}

Poly poly_from_json(const nlohmann::json& j, const TablePtr& table,
                    const std::string& where) {
  if (!j.is_string())
    throw std::invalid_argument(where + ": expected a polynomial string");
  return parse_poly(j.get<std::string>(), table);
}

PolyVec3 vec3_from_json(const nlohmann::json& j, const TablePtr& table,
                        const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(where + ": expected an array of 3 polynomial strings");
  PolyVec3 v = zero_vec3();
  for (int i = 0; i < 3; ++i)
    v(i) = poly_from_json(j[i], table, where + "[" + std::to_string(i) + "]");
  return v;
}

PolyMat3 mat3_from_json(const nlohmann::json& j, const TablePtr& table,
                        const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(where + ": expected an array of 3 rows");
  PolyMat3 m = zero_mat3();
  for (int i = 0; i < 3; ++i) {
    const std::string row = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 3)
      throw std::invalid_argument(row + ": expected an array of 3 polynomial strings");
    for (int k = 0; k < 3; ++k)
      m(i, k) = poly_from_json(j[i][k], table, row + "[" + std::to_string(k) + "]");
  }
  return m;
}

std::vector<Poly> polys_from_json(const nlohmann::json& j, const TablePtr& table,
                                  const std::string& where) {
  if (!j.is_array())
    throw std::invalid_argument(where + ": expected an array of polynomial strings");
  std::vector<Poly> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(poly_from_json(j[i], table, where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace liesoliton
