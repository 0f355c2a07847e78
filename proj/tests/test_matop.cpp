#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qsalg/matop.hpp"

using namespace qsalg;

namespace {

RatFunc z() { return RatFunc::z(); }

MatrixDiffOp sample(int seed) {
  MatrixDiffOp m(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m(i, j) = ScalarDiffOp({z().pow(static_cast<unsigned>(i + seed)) + RatFunc(j), RatFunc(i - j + seed),
                              i == j ? RatFunc(1) : RatFunc()});
  return m;
}

} // namespace

TEST(MatrixDiffOp, CompositionActsAsSuccessiveApplication) {
  MatrixDiffOp L = sample(1), M = sample(2);
  MatrixDiffOp LM = L * M;
  for (const auto &f : oracle::probe_vectors())
    EXPECT_EQ(LM.apply(f), L.apply(M.apply(f)));
}

TEST(MatrixDiffOp, Brackets) {
  MatrixDiffOp L = sample(1), M = sample(3);
  for (const auto &f : oracle::probe_vectors()) {
    EXPECT_EQ(bracket(L, M, BracketKind::Commutator).apply(f), oracle::bracket_on(L, M, false, f));
    EXPECT_EQ(bracket(L, M, BracketKind::Anticommutator).apply(f), oracle::bracket_on(L, M, true, f));
  }
}

TEST(MatrixDiffOp, TransposeSwapsEntries) {
  MatrixDiffOp L = sample(1);
  MatrixDiffOp T = mat_transpose(L);
  EXPECT_EQ(T(0, 1), L(1, 0).transpose());
  EXPECT_EQ(mat_transpose(T), L);
  EXPECT_EQ(mat_transpose(L * sample(2)), mat_transpose(sample(2)) * T);
}

TEST(MatrixDiffOp, DimensionMismatch) {
  EXPECT_THROW((void)(MatrixDiffOp(2) + MatrixDiffOp(3)), DimensionMismatchError);
  EXPECT_THROW((void)MatrixDiffOp(2).apply({RatFunc(1)}), DimensionMismatchError);
}

TEST(Schrodinger, ExtractAndRebuild) {
  SchrodingerData h{z() * z() + RatFunc(1), Grid<RatFunc>(2), Grid<RatFunc>(2)};
  h.B(0, 0) = z();
  h.B(0, 1) = RatFunc(3);
  h.C(1, 0) = RatFunc(1) / z();
  MatrixDiffOp H = h.rebuild();
  EXPECT_EQ(H(0, 0).coeff(2), -(z() * z() + RatFunc(1)));
  EXPECT_EQ(H(0, 1).coeff(1), RatFunc(-3));
  EXPECT_EQ(extract_schrodinger(H), h);
  MatrixDiffOp bad = H;
  bad(0, 1) += ScalarDiffOp::d(2);
  EXPECT_THROW(extract_schrodinger(bad), NonSchrodingerFormError);
}

TEST(Transposition, ResidualsAgreeWithOperatorConjugation) {
  // scalar part B, antisymmetric part Ba, C chosen to satisfy the rule
  GaugeData g{z() * z() + RatFunc(2), z().scaled(3), 2};
  RatFunc B = g.B(), Ba = z() - RatFunc(1);
  SchrodingerData h{g.A, Grid<RatFunc>(2), Grid<RatFunc>(2)};
  h.B(0, 0) = h.B(1, 1) = B;
  h.B(0, 1) = Ba;
  h.B(1, 0) = -Ba;
  h.C(0, 0) = z();
  h.C(1, 1) = RatFunc(5);
  h.C(0, 1) = z() * z();
  h.C(1, 0) = h.C(0, 1) - Ba.derivative() + (g.A.derivative() - B) / g.A * Ba;
  EXPECT_TRUE(transposition_residuals(h, g).all_zero());
  EXPECT_TRUE(transposition_defect(h.rebuild(), g).is_zero());

  SchrodingerData sym = h;
  sym.B(1, 0) = Ba; // symmetric off-diagonal B
  EXPECT_FALSE(transposition_residuals(sym, g).all_zero());
  EXPECT_FALSE(transposition_defect(sym.rebuild(), g).is_zero());

  SchrodingerData wrongC = h;
  wrongC.C(1, 0) = wrongC.C(1, 0) + RatFunc(1);
  EXPECT_FALSE(transposition_residuals(wrongC, g).all_zero());
  EXPECT_FALSE(transposition_defect(wrongC.rebuild(), g).is_zero());
}
