#pragma once

#include "liesoliton/connection.hpp"

namespace liesoliton {

/// Curvature R[i][j](k,l): the e_l coefficient of R(e_i,e_j) e_k with
///   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
struct CurvatureTensor {
  std::array<std::array<PolyMat3, 3>, 3> R;
};

/// Ricci form rho(e_i, e_j) as a matrix (not symmetric in general):
///   rho(X,Y) = -g(R(X,e1)Y,e1) - g(R(X,e2)Y,e2) + g(R(X,e3)Y,e3).
struct RicciForm {
  PolyMat3 rho;
};

/// Ricci operator in the row convention Ric(e_i) = sum_j ric(i,j) e_j,
/// obtained from the form by raising with the metric signs.
struct RicciOperator {
  PolyMat3 ric;
};

CurvatureTensor curvature(const LieGroupModel& m, const ConnectionCoeffs& conn);

RicciForm ricci_form(const LieGroupModel& m, const CurvatureTensor& R);

RicciOperator ricci_operator(const LieGroupModel& m, const RicciForm& rho);

/// Symmetrized form (rho + rho^T)/2.
RicciForm symmetrize(const RicciForm& rho);

/// Lower the operator back to a form (eps round-trip partner of ricci_operator).
RicciForm lower(const LieGroupModel& m, const RicciOperator& op);

}  // namespace liesoliton
