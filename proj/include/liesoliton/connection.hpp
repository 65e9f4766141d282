#pragma once

#include "liesoliton/model.hpp"

namespace liesoliton {

/// Connection coefficients gamma[i](j,k): the e_k coefficient of nabla_{e_i} e_j.
struct ConnectionCoeffs {
  std::array<PolyMat3, 3> gamma;
};

/// Coefficients nj[i](j,k) of (nabla_{e_i} J) e_j in the same layout.
struct NablaJ {
  std::array<PolyMat3, 3> nj;
};

/// Levi-Civita connection by the Koszul formula for left-invariant metrics:
///   2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
ConnectionCoeffs levi_civita(const LieGroupModel& m);

/// (nabla J) of any connection; with J diagonal this is
/// nj[i](j,k) = (J_jj - J_kk) * gamma[i](j,k).
NablaJ nabla_j(const LieGroupModel& m, const ConnectionCoeffs& conn);

/// Canonical connection: nabla0_X Y = nabla_X Y - 1/2 (nabla_X J)(J Y).
ConnectionCoeffs canonical(const LieGroupModel& m, const ConnectionCoeffs& lc,
                           const NablaJ& nj);

/// Kobayashi-Nomizu connection:
///   nabla1_X Y = nabla0_X Y - 1/4 [ (nabla_Y J)(J X) - (nabla_{JY} J) X ].
ConnectionCoeffs kobayashi_nomizu(const LieGroupModel& m, const ConnectionCoeffs& lc,
                                  const NablaJ& nj);

/// nabla_{e_i} applied to a coefficient vector (left-invariant frame, so the
/// coefficients pass through as scalars).
PolyVec3 covariant_derivative(const ConnectionCoeffs& conn, int i, const PolyVec3& v);

/// nabla_i e_j - nabla_j e_i = [e_i, e_j] everywhere.
bool is_torsion_free(const LieGroupModel& m, const ConnectionCoeffs& conn);

/// g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) = 0 everywhere.
bool is_metric(const LieGroupModel& m, const ConnectionCoeffs& conn);

}  // namespace liesoliton
