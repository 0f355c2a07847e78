#include <gtest/gtest.h>

#include "qsalg/modspace.hpp"

using namespace qsalg;

namespace {
RatFunc z() { return RatFunc::z(); }
}

TEST(MonomialModule, Shapes) {
  EXPECT_EQ(MonomialModule::type_a(3), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(MonomialModule::type_b(4), (std::vector<int>{0, 1, 2, 4}));
  MonomialModule V({MonomialModule::type_a(2), MonomialModule::type_a(3)});
  EXPECT_EQ(V.dimension(), 5);
  EXPECT_EQ(V.max_degree(), 2);
  EXPECT_EQ(V.basis_vector(2), (PolyVec{{ZPoly(), ZPoly(1)}}));
  EXPECT_THROW(MonomialModule(std::vector<std::vector<int>>{{-1}}), Error);
}

TEST(Invariance, CertificateHoldsTheAction) {
  // z^2 d - 2z preserves polynomials of degree <= 2 (sl(2) raising operator, N = 3)
  ScalarDiffOp raise({-z().scaled(2), z() * z()});
  MonomialModule V({MonomialModule::type_a(3)});
  auto r = invariant(MatrixDiffOp::scalar(1, raise), V);
  ASSERT_TRUE(r.ok());
  // image of z is z^2 * 1 - 2z * z = -z^2
  EXPECT_EQ(r.certificate->matrix[2][1], ParamPoly(-1));
}

TEST(Invariance, WitnessNamesTheEscapingMonomial) {
  ScalarDiffOp raise({-z(), z() * z()}); // wrong weight
  auto r = invariant(MatrixDiffOp::scalar(1, raise), MonomialModule({MonomialModule::type_a(3)}));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.witness->exponent, 3);
  EXPECT_EQ(r.witness->coefficient, ParamPoly(1));
}

TEST(Invariance, FlagOfSolvableOperator) {
  // z d + d^2 preserves every V_N
  ScalarDiffOp L({RatFunc(), z(), RatFunc(1)});
  EXPECT_TRUE(flag_invariant([&](int) { return MatrixDiffOp::scalar(1, L); },
                             [](int N) { return MonomialModule({MonomialModule::type_a(N)}); }, 1, 8));
}

TEST(Kernel, SecondDerivative) {
  auto ker = polynomial_kernel(MatrixDiffOp::scalar(1, ScalarDiffOp::d(2)), 6);
  ASSERT_EQ(ker.size(), 2U);
  std::vector<PolyVec> expected{PolyVec{{ZPoly(1)}}, PolyVec{{ZPoly::z()}}};
  EXPECT_TRUE(same_span(ker, expected));
}

TEST(Kernel, RationalCoefficients) {
  // z d - 2 kills z^2 only
  ScalarDiffOp L({RatFunc(-2), z()});
  auto ker = polynomial_kernel(MatrixDiffOp::scalar(1, L), 5);
  ASSERT_EQ(ker.size(), 1U);
  EXPECT_EQ(ker[0], (PolyVec{{ZPoly::z(2)}}));
  ScalarDiffOp M({RatFunc(1) / z(), RatFunc(1)}); // d + 1/z kills nothing polynomial
  EXPECT_TRUE(polynomial_kernel(MatrixDiffOp::scalar(1, M), 5).empty());
  ScalarDiffOp P({RatFunc(param("a")), RatFunc(1)});
  EXPECT_THROW(polynomial_kernel(MatrixDiffOp::scalar(1, P), 3), NonNumericError);
}

TEST(Span, Membership) {
  PolyVec a{{ZPoly::z(), ZPoly(1)}}, b{{ZPoly(1), ZPoly()}};
  PolyVec c{{ZPoly::z() + ZPoly(2), ZPoly(1)}};
  EXPECT_TRUE(in_span({a, b}, c));
  EXPECT_FALSE(in_span({a}, c));
  EXPECT_TRUE(same_span({a, b}, {c, b}));
  EXPECT_EQ(default_degree_bound(3, MonomialModule({MonomialModule::type_a(2), MonomialModule::type_a(3)})), 7);
}
