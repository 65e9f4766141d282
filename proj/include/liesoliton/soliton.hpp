#pragma once

#include "liesoliton/curvature.hpp"

#include <functional>
#include <optional>

namespace liesoliton {

enum class ConnectionChoice { levi_civita, canonical, kobayashi_nomizu };
enum class SolitonKind { first, second };

std::string to_string(ConnectionChoice c);
std::string to_string(SolitonKind k);
ConnectionChoice connection_from_string(const std::string& s);  // "lc"|"canonical"|"kn" and long names
SolitonKind kind_from_string(const std::string& s);

/// What to build: family/model, connection (canonical or KN), first or second
/// kind, and — iff the model declares eta — which sign to bake in.
struct SolitonSpec {
  ConnectionChoice connection = ConnectionChoice::canonical;
  SolitonKind kind = SolitonKind::first;
  std::optional<int> eta_value;
};

/// The polynomial system "D := Ric - c Id is a derivation" for one model and
/// spec. Equations are canonical: primitive, positive leading coefficient,
/// reduced by exact division through declared inequation factors, deduplicated,
/// sorted by (degree, printed form). Inequations carry over from the model.
struct SolitonSystem {
  SolitonSpec spec;
  LieGroupModel model;  // eta-specialized copy used for the computation
  RicciOperator ricci;  // first kind: plain; second kind: symmetrized
  PolyMat3 derivation;  // D = Ric - c Id, c symbolic
  std::vector<Poly> equations;
  std::vector<Poly> inequations;
};

/// A claimed solution branch: bindings for some parameters (and possibly c),
/// leftover polynomial constraints among the free parameters (for branches
/// like beta^2 = 2 alpha^2 that no rational substitution expresses), residual
/// inequations, and optionally the claimed D matrix at the solution.
struct SolutionFamily {
  std::string label;
  std::map<std::string, Poly> substitution;
  std::vector<Poly> constraints;
  std::vector<Poly> inequations;
  std::optional<PolyMat3> claimed_d;
  std::string notes;
};

struct FamilyReport {
  std::string label;
  bool pass = false;
  bool used_constraint_reduction = false;
  std::vector<std::string> failures;  // human-readable, empty iff pass
};

/// One sampling point, parameter name -> value (includes c).
using GridPoint = std::map<std::string, Rational>;

struct GridSpec {
  std::vector<Rational> values;

  /// The default grid: -2, -3/2, -1, -1/2, 0, 1/2, 1, 3/2, 2.
  static GridSpec default_grid();
};

/// Enumerate every assignment of grid values to the table's parameters, last
/// parameter varying fastest. eta is skipped: it is enumerated as +-1 by the
/// surrounding problem, never sampled.
void for_each_grid_point(const TablePtr& params, const GridSpec& grid,
                         const std::function<void(const GridPoint&)>& visit);

struct ScanReport {
  long long points_visited = 0;
  long long points_admissible = 0;  // constraints hold, inequations nonzero
  long long solutions_found = 0;
  long long solutions_covered = 0;
  std::vector<GridPoint> counterexamples;  // solutions no known family covers
};

/// The nine components of D[x,y] - [Dx,y] - [x,Dy] over the basis pairs
/// (e1,e2), (e1,e3), (e2,e3).
std::vector<Poly> derivation_residual(const LieGroupModel& m, const PolyMat3& D);

/// Run the pipeline model -> connection -> curvature -> Ricci (-> symmetrize)
/// -> D -> derivation residual and package the canonicalized system.
/// spec.eta_value must be present exactly when the model declares eta;
/// the Levi-Civita connection is not a soliton target.
SolitonSystem build_soliton_system(const LieGroupModel& m, const SolitonSpec& spec);

/// Substitute the family into every equation; PASS iff each residual vanishes
/// identically or reduces to zero by exact division through a (family or
/// model) constraint, no inequation vanishes identically, and the claimed D
/// matches D = Ric - c Id under the same substitution.
FamilyReport verify_family(const SolitonSystem& sys, const SolutionFamily& family);

/// Exhaustive exact evaluation over the grid (one value per free parameter and
/// c): skip points violating model constraints or inequations, collect the
/// solutions of the system, and report those not covered by any known family.
/// An empty counterexample list corroborates (does not prove) completeness.
ScanReport falsify_by_sampling(const SolitonSystem& sys, const GridSpec& grid,
                               const std::vector<SolutionFamily>& known);

}  // namespace liesoliton
