#pragma once

#include "liesoliton/soliton.hpp"

#include <nlohmann/json.hpp>

namespace liesoliton {

/// Polynomials travel through JSON as canonical strings (the parser grammar
/// and the printer are inverse to each other on canonical forms).
nlohmann::json poly_to_json(const Poly& p);
nlohmann::json vec3_to_json(const PolyVec3& v);
nlohmann::json mat3_to_json(const PolyMat3& m);
nlohmann::json polys_to_json(const std::vector<Poly>& ps);
nlohmann::json grid_point_to_json(const GridPoint& point);

/// Inverse conversions; shape errors raise std::invalid_argument with `where`
/// naming the offending location, parse errors propagate as ParseError.
Poly poly_from_json(const nlohmann::json& j, const TablePtr& table,
                    const std::string& where);
PolyVec3 vec3_from_json(const nlohmann::json& j, const TablePtr& table,
                        const std::string& where);
PolyMat3 mat3_from_json(const nlohmann::json& j, const TablePtr& table,
                        const std::string& where);
std::vector<Poly> polys_from_json(const nlohmann::json& j, const TablePtr& table,
                                  const std::string& where);

}  // namespace liesoliton
