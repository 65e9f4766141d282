#pragma once

#include "liesoliton/linalg.hpp"

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace liesoliton {

/// Diagonal metric signature; the whole classification lives in (+,+,-) with
/// e3 timelike.
struct MetricSignature {
  std::array<int, 3> eps{1, 1, -1};
};

/// Diagonal product structure J with J^2 = Id; fixed to diag(1,1,-1).
struct ProductStructure {
  std::array<int, 3> j{1, 1, -1};
};

/// Structure constants C[i][j] = coefficient vector of [e_i, e_j].
/// Antisymmetry is enforced at construction; the diagonal is zero.
struct StructureConstants {
  std::array<std::array<PolyVec3, 3>, 3> C;

  static StructureConstants from_upper(const PolyVec3& c12, const PolyVec3& c13,
                                       const PolyVec3& c23);
};

/// A left-invariant Lorentzian Lie group model: bracket table over a
/// parameter table, plus the polynomial side conditions of its family
/// (constraints vanish, inequations are declared nonzero).
struct LieGroupModel {
  std::string name;
  TablePtr params;
  StructureConstants structure;
  MetricSignature metric;
  ProductStructure product;
  std::vector<Poly> constraints;
  std::vector<Poly> inequations;
};

/// The seven unimodular/non-unimodular families G1..G7.
/// Throws std::invalid_argument for anything else.
LieGroupModel build_group(const std::string& family);
bool is_builtin_family(const std::string& family);

/// Load a custom model from its JSON description:
///   { "name": str, "parameters": [str], "eta_involutive": bool,
///     "brackets": {"12": [str,str,str], "13": [...], "23": [...]},
///     "constraints": [str], "inequations": [str] }
/// Bracket/constraint/inequation polynomials may not involve c. The Jacobi
/// identity is checked (modulo declared constraints); violations are rejected
/// with the offending residual in the message.
LieGroupModel model_from_json(const nlohmann::json& spec);

/// Bilinear extension of the bracket table to coefficient vectors.
PolyVec3 bracket(const LieGroupModel& m, const PolyVec3& x, const PolyVec3& y);

/// Cyclic Jacobi sum [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]].
PolyVec3 jacobi_residual(const LieGroupModel& m);

/// True when p vanishes identically or is an exact multiple of one of the
/// given constraint polynomials.
bool is_zero_mod_constraints(const std::vector<Poly>& constraints, const Poly& p);

/// Copy of m with eta substituted by +1 or -1 throughout (structure constants,
/// constraints, inequations). Throws when m has no eta or value is not +-1.
LieGroupModel specialize_eta(const LieGroupModel& m, int value);

/// g(x, y) for coefficient vectors, with the model's diagonal metric.
Poly metric_pairing(const LieGroupModel& m, const PolyVec3& x, const PolyVec3& y);

}  // namespace liesoliton
