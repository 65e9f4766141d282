#include "liesoliton/curvature.hpp"

#include "liesoliton/soliton.hpp"

#include "doctest.h"

using namespace liesoliton;

namespace {

const char* const kFamilies[] = {"G1", "G2", "G3", "G4", "G5", "G6", "G7"};

ConnectionCoeffs connection_of(const LieGroupModel& m, ConnectionChoice which) {
  ConnectionCoeffs lc = levi_civita(m);
  if (which == ConnectionChoice::levi_civita) return lc;
  NablaJ nj = nabla_j(m, lc);
  return which == ConnectionChoice::canonical ? canonical(m, lc, nj)
                                              : kobayashi_nomizu(m, lc, nj);
}

CurvatureTensor curvature_of(const LieGroupModel& m, ConnectionChoice which) {
  return curvature(m, connection_of(m, which));
}

PolyMat3 from_strings(const LieGroupModel& m, const char* const (&rows)[3][3]) {
  PolyMat3 out = zero_mat3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = parse_poly(rows[i][j], m.params);
  return out;
}

}  // namespace

TEST_CASE("curvature is antisymmetric in its first two slots") {
  for (const char* name : kFamilies) {
    CAPTURE(name);
    LieGroupModel m = build_group(name);
    for (ConnectionChoice which :
         {ConnectionChoice::levi_civita, ConnectionChoice::canonical,
          ConnectionChoice::kobayashi_nomizu}) {
      CurvatureTensor R = curvature_of(m, which);
      for (int i = 0; i < 3; ++i) {
        CHECK(mat_is_zero(R.R[i][i]));
        for (int j = 0; j < 3; ++j)
          CHECK(mat_is_zero(PolyMat3(R.R[i][j] + R.R[j][i])));
      }
    }
  }
}

TEST_CASE("canonical curvature of G1 matches the hand computation") {
  LieGroupModel m = build_group("G1");
  CurvatureTensor R = curvature_of(m, ConnectionChoice::canonical);
  CHECK(mat_equal(R.R[0][1], from_strings(m, {{"0", "alpha^2 + 1/2*beta^2", "0"},
                                              {"-alpha^2 - 1/2*beta^2", "0", "0"},
                                              {"0", "0", "0"}})));
  CHECK(mat_equal(R.R[0][2], from_strings(m, {{"0", "-alpha^2", "0"},
                                              {"alpha^2", "0", "0"},
                                              {"0", "0", "0"}})));
}

TEST_CASE("the canonical Ricci data of G1 matches the hand computation") {
  LieGroupModel m = build_group("G1");
  RicciForm rho = ricci_form(m, curvature_of(m, ConnectionChoice::canonical));
  CHECK(rho.rho(0, 0) == parse_poly("-alpha^2 - 1/2*beta^2", m.params));
  CHECK(rho.rho(1, 1) == parse_poly("-alpha^2 - 1/2*beta^2", m.params));
  CHECK(rho.rho(2, 0) == parse_poly("1/2*alpha*beta", m.params));
  CHECK(rho.rho(0, 2).is_zero());
  CHECK(rho.rho(2, 2).is_zero());

  // Raising an index against (+,+,-) flips only the e3 column.
  RicciOperator ric = ricci_operator(m, rho);
  CHECK(ric.ric(2, 0) == rho.rho(2, 0));
  CHECK(ric.ric(2, 1) == rho.rho(2, 1));
  for (int i = 0; i < 3; ++i) CHECK(ric.ric(i, 2) == -rho.rho(i, 2));
}

TEST_CASE("both special connections of G5 are flat") {
  LieGroupModel m = build_group("G5");
  for (ConnectionChoice which :
       {ConnectionChoice::canonical, ConnectionChoice::kobayashi_nomizu}) {
    CurvatureTensor R = curvature_of(m, which);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(mat_is_zero(R.R[i][j]));
  }
}

TEST_CASE("the Levi-Civita Ricci form is symmetric for every family") {
  for (const char* name : kFamilies) {
    CAPTURE(name);
    LieGroupModel m = build_group(name);
    RicciForm rho = ricci_form(m, curvature_of(m, ConnectionChoice::levi_civita));
    CHECK(mat_equal(rho.rho, PolyMat3(rho.rho.transpose())));
  }
}

TEST_CASE("the canonical Ricci form of G3 is already symmetric") {
  LieGroupModel m = build_group("G3");
  RicciForm rho = ricci_form(m, curvature_of(m, ConnectionChoice::canonical));
  CHECK(mat_equal(rho.rho, PolyMat3(rho.rho.transpose())));
  CHECK(mat_equal(symmetrize(rho).rho, rho.rho));
}

TEST_CASE("symmetrization is an idempotent projection onto symmetric forms") {
  for (const char* name : kFamilies) {
    CAPTURE(name);
    LieGroupModel m = build_group(name);
    RicciForm rho = ricci_form(m, curvature_of(m, ConnectionChoice::kobayashi_nomizu));
    RicciForm tilde = symmetrize(rho);
    CHECK(mat_equal(tilde.rho, PolyMat3(tilde.rho.transpose())));
    CHECK(mat_equal(symmetrize(tilde).rho, tilde.rho));
    CHECK(mat_equal(PolyMat3(tilde.rho + tilde.rho),
                    PolyMat3(rho.rho + PolyMat3(rho.rho.transpose()))));
  }
}

TEST_CASE("lowering inverts raising") {
  LieGroupModel m = build_group("G2");
  RicciForm rho = ricci_form(m, curvature_of(m, ConnectionChoice::canonical));
  CHECK(mat_equal(lower(m, ricci_operator(m, rho)).rho, rho.rho));
}
