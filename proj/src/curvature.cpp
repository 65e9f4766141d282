#include "liesoliton/curvature.hpp"

namespace liesoliton {

CurvatureTensor curvature(const LieGroupModel& m, const ConnectionCoeffs& conn) {
  CurvatureTensor out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.R[i][j] = zero_mat3();

  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      // Row k of gamma[i] is nabla_{e_i} e_k, so composing connections is a
      // matrix product and nabla_{[e_i,e_j]} expands linearly over the bracket.
      PolyMat3 r = conn.gamma[j] * conn.gamma[i] - conn.gamma[i] * conn.gamma[j];
      for (int mth = 0; mth < 3; ++mth)
        r -= m.structure.C[i][j](mth) * conn.gamma[mth];
      out.R[i][j] = r;
      out.R[j][i] = -r;
    }
  return out;
}

RicciForm ricci_form(const LieGroupModel& m, const CurvatureTensor& R) {
  // rho(X,Y) = -g(R(X,e1)Y,e1) - g(R(X,e2)Y,e2) + g(R(X,e3)Y,e3); with the
  // diagonal metric the eps_a from g cancels the sign pattern, leaving
  // rho(i,j) = -sum_a R[i][a](j,a).
  RicciForm rho;
  rho.rho = zero_mat3();
  (void)m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a) rho.rho(i, j) -= R.R[i][a](j, a);
  return rho;
}

RicciOperator ricci_operator(const LieGroupModel& m, const RicciForm& rho) {
  RicciOperator op;
  op.ric = zero_mat3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      op.ric(i, j) = Poly(m.metric.eps[j]) * rho.rho(i, j);
  return op;
}

RicciForm symmetrize(const RicciForm& rho) {
  RicciForm out;
  out.rho = (rho.rho + PolyMat3(rho.rho.transpose())) * Poly(Rational(1, 2));
  return out;
}

RicciForm lower(const LieGroupModel& m, const RicciOperator& op) {
  RicciForm rho;
  rho.rho = zero_mat3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      rho.rho(i, j) = Poly(m.metric.eps[j]) * op.ric(i, j);
  return rho;
}

}  // namespace liesoliton
