#pragma once

#include "liesoliton/poly.hpp"

#include <Eigen/Core>

namespace Eigen {

// Poly is an exact ring scalar: no epsilons, no sqrt, costs are only advisory.
template <>
struct NumTraits<liesoliton::Poly> {
  using Real = liesoliton::Poly;
  using NonInteger = liesoliton::Poly;
  using Nested = liesoliton::Poly;
  using Literal = liesoliton::Poly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace liesoliton {

template <typename Scalar>
using Vec3T = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3T = Eigen::Matrix<Scalar, 3, 3>;

using PolyVec3 = Vec3T<Poly>;
using PolyMat3 = Mat3T<Poly>;

inline PolyVec3 zero_vec3() { return PolyVec3::Constant(Poly()); }
inline PolyMat3 zero_mat3() { return PolyMat3::Constant(Poly()); }

inline PolyMat3 identity_mat3() {
  PolyMat3 m = zero_mat3();
  for (int i = 0; i < 3; ++i) m(i, i) = Poly(1);
  return m;
}

template <typename Scalar>
bool vec_equal(const Vec3T<Scalar>& a, const Vec3T<Scalar>& b) {
  for (int i = 0; i < 3; ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

template <typename Scalar>
bool mat_equal(const Mat3T<Scalar>& a, const Mat3T<Scalar>& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename Scalar>
bool vec_is_zero(const Vec3T<Scalar>& v) {
  for (int i = 0; i < 3; ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

template <typename Scalar>
bool mat_is_zero(const Mat3T<Scalar>& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace liesoliton
