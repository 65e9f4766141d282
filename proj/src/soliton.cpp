#include "liesoliton/soliton.hpp"

#include <algorithm>
#include <set>

namespace liesoliton {

std::string to_string(ConnectionChoice c) {
  switch (c) {
    case ConnectionChoice::levi_civita: return "levi_civita";
    case ConnectionChoice::canonical: return "canonical";
    case ConnectionChoice::kobayashi_nomizu: return "kobayashi_nomizu";
  }
  return "?";
}

std::string to_string(SolitonKind k) {
  return k == SolitonKind::first ? "first" : "second";
}

ConnectionChoice connection_from_string(const std::string& s) {
  if (s == "lc" || s == "levi_civita") return ConnectionChoice::levi_civita;
  if (s == "canonical") return ConnectionChoice::canonical;
  if (s == "kn" || s == "kobayashi_nomizu") return ConnectionChoice::kobayashi_nomizu;
  throw std::invalid_argument("unknown connection '" + s + "'");
}

SolitonKind kind_from_string(const std::string& s) {
  if (s == "first") return SolitonKind::first;
  if (s == "second") return SolitonKind::second;
  throw std::invalid_argument("unknown soliton kind '" + s + "'");
}

GridSpec GridSpec::default_grid() {
  GridSpec g;
  for (const char* v : {"-2", "-3/2", "-1", "-1/2", "0", "1/2", "1", "3/2", "2"})
    g.values.push_back(rational_from_string(v));
  return g;
}

std::vector<Poly> derivation_residual(const LieGroupModel& m, const PolyMat3& D) {
  auto basis = [&](int i) {
    PolyVec3 v = zero_vec3();
    v(i) = Poly(1);
    return v;
  };
  // Row i of D is D(e_i); applying D to a coefficient vector is D^T v.
  auto apply = [&](const PolyVec3& v) { return PolyVec3(D.transpose() * v); };

  std::vector<Poly> out;
  out.reserve(9);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      PolyVec3 lhs = apply(bracket(m, basis(i), basis(j)));
      PolyVec3 rhs = bracket(m, apply(basis(i)), basis(j)) +
                     bracket(m, basis(i), apply(basis(j)));
      for (int k = 0; k < 3; ++k) out.push_back(lhs(k) - rhs(k));
    }
  return out;
}

namespace {

// Canonicalize one residual component: strip declared-nonzero factors by
// exact division (the standing hypotheses alpha != 0, gamma != 0, alpha+delta
// != 0 of the families), then normalize scale and sign.
Poly canonicalize_equation(Poly e, const std::vector<Poly>& inequations) {
  if (e.is_zero()) return e;
  for (bool progress = true; progress;) {
    progress = false;
    for (const Poly& q : inequations) {
      if (q.is_zero() || q.is_constant()) continue;
      while (auto quotient = try_divide_exact(e, q)) {
        e = *quotient;
        progress = true;
        if (e.is_zero() || e.is_constant()) return primitive_part(e);
      }
    }
  }
  return primitive_part(e);
}

}  // namespace

SolitonSystem build_soliton_system(const LieGroupModel& m, const SolitonSpec& spec) {
  if (spec.connection == ConnectionChoice::levi_civita)
    throw std::invalid_argument("soliton systems are defined for the canonical and "
                                "Kobayashi-Nomizu connections");
  const bool has_eta = m.params && m.params->eta_index() >= 0;
  if (has_eta != spec.eta_value.has_value())
    throw std::invalid_argument(has_eta ? "model declares eta: an eta value is required"
                                        : "eta value given for a model without eta");

  SolitonSystem sys;
  sys.spec = spec;
  sys.model = has_eta ? specialize_eta(m, *spec.eta_value) : m;

  ConnectionCoeffs lc = levi_civita(sys.model);
  NablaJ nj = nabla_j(sys.model, lc);
  ConnectionCoeffs conn = spec.connection == ConnectionChoice::canonical
                              ? canonical(sys.model, lc, nj)
                              : kobayashi_nomizu(sys.model, lc, nj);
  CurvatureTensor R = curvature(sys.model, conn);
  RicciForm rho = ricci_form(sys.model, R);
  if (spec.kind == SolitonKind::second) rho = symmetrize(rho);
  sys.ricci = ricci_operator(sys.model, rho);

  Poly c = Poly::variable(sys.model.params, "c");
  sys.derivation = sys.ricci.ric - PolyMat3(c * identity_mat3());

  sys.inequations = sys.model.inequations;
  std::set<std::string> seen;
  for (Poly& e : derivation_residual(sys.model, sys.derivation)) {
    Poly canon = canonicalize_equation(std::move(e), sys.inequations);
    if (canon.is_zero()) continue;
    if (seen.insert(to_string(canon)).second) sys.equations.push_back(std::move(canon));
  }
  std::sort(sys.equations.begin(), sys.equations.end(), [](const Poly& a, const Poly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return to_string(a) < to_string(b);
  });
  return sys;
}

namespace {

Poly eta_substituted(const Poly& p, const std::optional<int>& eta_value) {
  if (!eta_value) return p;
  return p.substitute({{"eta", Poly(*eta_value)}});
}

}  // namespace

FamilyReport verify_family(const SolitonSystem& sys, const SolutionFamily& family) {
  FamilyReport report;
  report.label = family.label;
  report.pass = true;

  std::map<std::string, Poly> subst;
  for (const auto& [name, rhs] : family.substitution) {
    if (!sys.model.params->index_of(name))
      throw std::invalid_argument("substitution target '" + name +
                                  "' is not a parameter of " + sys.model.name);
    subst.emplace(name, eta_substituted(rhs, sys.spec.eta_value));
  }
  for (const auto& [name, rhs] : subst)
    for (const auto& [bound, unused] : subst) {
      (void)unused;
      auto idx = sys.model.params->index_of(bound);
      if (idx && rhs.degree_in(*idx) > 0)
        throw std::invalid_argument("substitution for '" + name +
                                    "' mentions bound parameter '" + bound + "'");
    }

  std::vector<Poly> moduli;
  for (const Poly& q : family.constraints) {
    Poly s = eta_substituted(q, sys.spec.eta_value).substitute(subst);
    if (!s.is_zero() && !s.is_constant()) moduli.push_back(s);
  }
  for (const Poly& q : sys.model.constraints) {
    Poly s = q.substitute(subst);
    if (!s.is_zero() && !s.is_constant()) moduli.push_back(s);
  }

  auto vanishes = [&](const Poly& residual) {
    if (residual.is_zero()) return true;
    if (is_zero_mod_constraints(moduli, residual)) {
      report.used_constraint_reduction = true;
      return true;
    }
    return false;
  };

  for (const Poly& e : sys.equations) {
    Poly residual = e.substitute(subst);
    if (!vanishes(residual))
      report.failures.push_back("equation " + to_string(e) + " leaves residual " +
                                to_string(residual));
  }

  std::vector<Poly> inequations = sys.inequations;
  for (const Poly& q : family.inequations)
    inequations.push_back(eta_substituted(q, sys.spec.eta_value));
  for (const Poly& q : inequations) {
    if (q.substitute(subst).is_zero())
      report.failures.push_back("inequation " + to_string(q) +
                                " vanishes identically under the family");
  }

  if (family.claimed_d) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Poly want = eta_substituted((*family.claimed_d)(i, j), sys.spec.eta_value)
                        .substitute(subst);
        Poly got = sys.derivation(i, j).substitute(subst);
        if (!vanishes(got - want))
          report.failures.push_back("D(" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") = " + to_string(got) +
                                    " but the claimed value is " + to_string(want));
      }
  }

  report.pass = report.failures.empty();
  return report;
}

namespace {

bool family_covers(const SolitonSystem& sys, const SolutionFamily& family,
                   const GridPoint& point) {
  std::map<std::string, Rational> at(point);
  if (sys.spec.eta_value) at["eta"] = Rational(*sys.spec.eta_value);
  for (const Poly& q : family.constraints)
    if (eta_substituted(q, sys.spec.eta_value).eval(at) != 0) return false;
  for (const Poly& q : family.inequations)
    if (eta_substituted(q, sys.spec.eta_value).eval(at) == 0) return false;
  for (const auto& [name, rhs] : family.substitution) {
    auto it = point.find(name);
    if (it == point.end()) return false;
    if (eta_substituted(rhs, sys.spec.eta_value).eval(at) != it->second) return false;
  }
  return true;
}

}  // namespace

void for_each_grid_point(const TablePtr& params, const GridSpec& grid,
                         const std::function<void(const GridPoint&)>& visit) {
  if (grid.values.empty()) throw std::invalid_argument("empty sampling grid");
  std::vector<std::string> names;
  for (const std::string& name : params->names())
    if (name != "eta") names.push_back(name);

  std::vector<std::size_t> odometer(names.size(), 0);
  for (;;) {
    GridPoint point;
    for (std::size_t k = 0; k < names.size(); ++k)
      point[names[k]] = grid.values[odometer[k]];
    visit(point);

    // Advance the odometer: last parameter fastest, values in grid order.
    std::size_t k = names.size();
    for (;;) {
      if (k == 0) return;
      --k;
      if (++odometer[k] < grid.values.size()) break;
      odometer[k] = 0;
    }
  }
}

ScanReport falsify_by_sampling(const SolitonSystem& sys, const GridSpec& grid,
                               const std::vector<SolutionFamily>& known) {
  ScanReport report;
  for_each_grid_point(sys.model.params, grid, [&](const GridPoint& point) {
    ++report.points_visited;

    std::map<std::string, Rational> at(point);
    if (sys.spec.eta_value) at["eta"] = Rational(*sys.spec.eta_value);

    for (const Poly& q : sys.model.constraints)
      if (q.eval(at) != 0) return;
    for (const Poly& q : sys.inequations)
      if (q.eval(at) == 0) return;
    ++report.points_admissible;

    for (const Poly& e : sys.equations)
      if (e.eval(at) != 0) return;
    ++report.solutions_found;

    for (const SolutionFamily& family : known)
      if (family_covers(sys, family, point)) {
        ++report.solutions_covered;
        return;
      }
    report.counterexamples.push_back(point);
  });
  return report;
}

}  // namespace liesoliton
