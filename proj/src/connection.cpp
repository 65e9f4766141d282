#include "liesoliton/connection.hpp"

namespace liesoliton {

ConnectionCoeffs levi_civita(const LieGroupModel& m) {
  const auto& C = m.structure.C;
  const auto& eps = m.metric.eps;
  const Poly half(Rational(1, 2));
  ConnectionCoeffs lc;
  for (int i = 0; i < 3; ++i) {
    lc.gamma[i] = zero_mat3();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // Koszul on a left-invariant frame; divide by eps_k to raise the index.
        Poly twice = Poly(eps[k]) * C[i][j](k) - Poly(eps[i]) * C[j][k](i) +
                     Poly(eps[j]) * C[k][i](j);
        lc.gamma[i](j, k) = half * Poly(eps[k]) * twice;
      }
  }
  return lc;
}

NablaJ nabla_j(const LieGroupModel& m, const ConnectionCoeffs& conn) {
  NablaJ out;
  for (int i = 0; i < 3; ++i) {
    out.nj[i] = zero_mat3();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.nj[i](j, k) = Poly(m.product.j[j] - m.product.j[k]) * conn.gamma[i](j, k);
  }
  return out;
}

ConnectionCoeffs canonical(const LieGroupModel& m, const ConnectionCoeffs& lc,
                           const NablaJ& nj) {
  const Poly half(Rational(1, 2));
  ConnectionCoeffs out;
  for (int i = 0; i < 3; ++i) {
    out.gamma[i] = zero_mat3();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.gamma[i](j, k) =
            lc.gamma[i](j, k) - half * Poly(m.product.j[j]) * nj.nj[i](j, k);
  }
  return out;
}

ConnectionCoeffs kobayashi_nomizu(const LieGroupModel& m, const ConnectionCoeffs& lc,
                                  const NablaJ& nj) {
  ConnectionCoeffs can = canonical(m, lc, nj);
  const Poly quarter(Rational(1, 4));
  ConnectionCoeffs out;
  for (int i = 0; i < 3; ++i) {
    out.gamma[i] = zero_mat3();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        // (nabla_{e_j} J)(J e_i) - (nabla_{J e_j} J) e_i collapses to
        // (J_ii - J_jj) * nj[j](i, .) for diagonal J.
        out.gamma[i](j, k) =
            can.gamma[i](j, k) -
            quarter * Poly(m.product.j[i] - m.product.j[j]) * nj.nj[j](i, k);
  }
  return out;
}

PolyVec3 covariant_derivative(const ConnectionCoeffs& conn, int i, const PolyVec3& v) {
  return conn.gamma[i].transpose() * v;
}

bool is_torsion_free(const LieGroupModel& m, const ConnectionCoeffs& conn) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Poly residual =
            conn.gamma[i](j, k) - conn.gamma[j](i, k) - m.structure.C[i][j](k);
        if (!is_zero_mod_constraints(m.constraints, residual)) return false;
      }
  return true;
}

bool is_metric(const LieGroupModel& m, const ConnectionCoeffs& conn) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Poly residual = Poly(m.metric.eps[k]) * conn.gamma[i](j, k) +
                        Poly(m.metric.eps[j]) * conn.gamma[i](k, j);
        if (!is_zero_mod_constraints(m.constraints, residual)) return false;
      }
  return true;
}

}  // namespace liesoliton
