#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qsalg/suites.hpp"

using namespace qsalg;

namespace {

RatFunc z() { return RatFunc::z(); }

std::vector<RatFunc> scalar_probes() {
  return {z().pow(4) + RatFunc(1), (z() + RatFunc(3)).pow(2) / (z() - RatFunc(1)), RatFunc(1) / z()};
}

std::vector<std::vector<RatFunc>> vec_probes() {
  std::vector<std::vector<RatFunc>> out;
  auto s = scalar_probes();
  out.push_back({s[0], s[1]});
  out.push_back({s[2], s[0]});
  out.push_back({z().pow(3), RatFunc(-2)});
  return out;
}

TypeAData numeric_typeA() {
  TypeAData t;
  t.Q(0, 0) = z() * z() - RatFunc(1);
  t.Q(0, 1) = z().scaled(3);
  t.Q(1, 0) = RatFunc(Rational(2, 5));
  t.Q(1, 1) = -z() + RatFunc(4);
  t.R(0, 0) = RatFunc(2);
  t.R(0, 1) = RatFunc(Rational(1, 2));
  t.R(1, 0) = RatFunc(-6);
  t.R(1, 1) = RatFunc(Rational(-7, 3));
  return t;
}

} // namespace

class RegistrySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(RegistrySuite, EveryCheckPasses) {
  const SuiteInfo *s = find_suite(GetParam());
  ASSERT_NE(s, nullptr);
  for (const auto &r : run_checks(s->build(SuiteOptions{}), 1))
    EXPECT_TRUE(r.pass) << r.name << ": " << r.residual;
}

INSTANTIATE_TEST_SUITE_P(All, RegistrySuite, ::testing::ValuesIn([] {
                           std::vector<std::string> names;
                           for (const auto &s : suite_registry())
                             names.push_back(s.name);
                           return names;
                         }()),
                         [](const auto &info) {
                           std::string n = info.param;
                           for (auto &c : n)
                             if (!std::isalnum(static_cast<unsigned char>(c)))
                               c = '_';
                           return n;
                         });

TEST(TypeA, IntertwinesByAction) {
  // P- H- f against shift(H+) P- f, with everything applied to concrete functions
  for (int N = 1; N <= 3; ++N) {
    GaugeData g{z().pow(3) - z() + RatFunc(2), RatFunc(), N};
    Charge ch = build_charge({ChargeFamily::Q2Diagonal, {}, {}}, g);
    auto [Hm, Hp] = build_typeA_hamiltonians(g, numeric_typeA());
    MatrixDiffOp shifted = Hp.gauge_shift(ch.shift);
    for (const auto &f : vec_probes())
      EXPECT_EQ(ch.minus.apply(Hm.apply(f)), shifted.apply(ch.minus.apply(f))) << "N = " << N;
  }
}

TEST(TypeA, BoundsAreEnforced) {
  TypeAData t = numeric_typeA();
  t.Q(0, 1) = z().pow(3);
  EXPECT_THROW(build_typeA_hamiltonians(GaugeData{z(), RatFunc(), 2}, t), Error);
  EXPECT_THROW(build_typeA_hamiltonians(GaugeData{z().pow(5), RatFunc(), 3}, numeric_typeA()), Error);
  EXPECT_NO_THROW(build_typeA_hamiltonians(GaugeData{z().pow(5), RatFunc(), 1}, t));
}

TEST(TypeA, WrongCouplingBreaksIntertwining) {
  GaugeData g{z() * z() + RatFunc(1), RatFunc(), 2};
  Charge ch = build_charge({ChargeFamily::Q2Diagonal, {}, {}}, g);
  auto [Hm, Hp] = build_typeA_hamiltonians(g, numeric_typeA());
  Hp(0, 1) += ScalarDiffOp(z());
  EXPECT_FALSE(intertwine_residual(ch.minus, ch.shift, Hm, Hp).is_zero());
}

TEST(Conjugate, TransposeOfResidualForSymmetricPair) {
  MatrixDiffOp K(2), L(2), Pm(2);
  K(0, 0) = ScalarDiffOp({z(), RatFunc(1), z() * z()});
  K(0, 1) = ScalarDiffOp({RatFunc(3), z()});
  K(1, 1) = ScalarDiffOp({RatFunc(1) / (z() + RatFunc(2))});
  L(0, 0) = ScalarDiffOp({RatFunc(2), RatFunc(), RatFunc(1)});
  L(1, 0) = ScalarDiffOp({z().pow(2), RatFunc(Rational(1, 3))});
  L(1, 1) = ScalarDiffOp({-z(), z()});
  Pm(0, 0) = ScalarDiffOp::d(2);
  Pm(0, 1) = ScalarDiffOp({z(), RatFunc(1)});
  Pm(1, 0) = ScalarDiffOp({RatFunc(5)});
  Pm(1, 1) = ScalarDiffOp({RatFunc(), z(), RatFunc(1)});
  MatrixDiffOp Hm = K + mat_transpose(K), Hp = L + mat_transpose(L);
  EXPECT_EQ(conjugate_intertwine_residual(Pm, Hm, Hp), -mat_transpose(intertwine_residual(Pm, RatFunc(), Hm, Hp)));
}

TEST(TypeB, ComponentKeepsTheGappedModule) {
  for (int N = 3; N <= 6; ++N) {
    std::vector<ParamPoly> a{ParamPoly(1), ParamPoly(4), ParamPoly(-2), ParamPoly(3), ParamPoly(Rational(1, 7))};
    ScalarDiffOp L = build_typeB_11(N, a, ParamPoly(2), ParamPoly(9));
    // image of z^N by action: must have no z^(N-1) and nothing above z^N
    RatFunc img = L.apply(z().pow(static_cast<unsigned>(N)));
    ASSERT_TRUE(img.is_polynomial());
    ZPoly p = img.as_polynomial();
    EXPECT_LE(p.degree(), N);
    EXPECT_TRUE(p.coeff(N - 1).is_zero()) << "N = " << N;
  }
  EXPECT_THROW(build_typeB_11(2, std::vector<ParamPoly>(5), ParamPoly(), ParamPoly()), Error);
  EXPECT_THROW(build_typeB_11(3, std::vector<ParamPoly>(4), ParamPoly(), ParamPoly()), DimensionMismatchError);
}

TEST(Kernel, ExtensionVectorIsAnnihilated) {
  RatFunc alpha = z() * z() - RatFunc(2);
  for (int N = 1; N <= 4; ++N) {
    Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, GaugeData{RatFunc(1), RatFunc(), N});
    PolyVec psi = kernel_extension_vector(N, alpha, RatFunc());
    auto v = ch.minus.apply(psi.as_ratfuncs());
    EXPECT_TRUE(v[0].is_zero() && v[1].is_zero()) << "N = " << N;
  }
  // beta = -1/z: weight z
  RatFunc beta = RatFunc(-1) / z();
  Charge ch = build_charge({ChargeFamily::Osp, RatFunc(1), beta}, GaugeData{RatFunc(1), RatFunc(), 2});
  PolyVec psi = kernel_extension_vector(2, RatFunc(1), beta);
  auto v = ch.minus.apply(psi.as_ratfuncs());
  EXPECT_TRUE(v[0].is_zero() && v[1].is_zero());
  EXPECT_THROW(kernel_extension_vector(2, RatFunc(1), z()), Error);
  EXPECT_THROW(kernel_extension_vector(0, RatFunc(1), RatFunc()), Error);
}

TEST(Kernel, OspKernelDimension) {
  RatFunc alpha = z() + RatFunc(1);
  Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, GaugeData{RatFunc(1), RatFunc(), 2});
  auto ker = polynomial_kernel(ch.minus, 8);
  EXPECT_EQ(ker.size(), 4U);
  EXPECT_TRUE(in_span(ker, kernel_extension_vector(2, alpha, RatFunc())));
}

TEST(Solved, OspN1IntertwinesByAction) {
  RatFunc A = z() * z() + RatFunc(3), alpha = z().scaled(2) - RatFunc(1);
  Grid<RatFunc> B(2);
  B(0, 0) = z();
  B(0, 1) = RatFunc(2);
  B(1, 0) = z() * z();
  B(1, 1) = RatFunc(-1);
  ParamSet k = osp_n1_constants();
  k.set("C11_0", ParamPoly(1)).set("C12_0", ParamPoly(2)).set("C21_0", ParamPoly(-3)).set("C22_0", ParamPoly(5));
  auto [Hm, Hp] = build_osp_n1_solution(A, B, alpha, k);
  GaugeData g{A, RatFunc(), 1};
  Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, g);
  MatrixDiffOp shifted = Hp.gauge_shift(ch.shift);
  for (const auto &f : vec_probes())
    EXPECT_EQ(ch.minus.apply(Hm.apply(f)), shifted.apply(ch.minus.apply(f)));
}

TEST(Closure, N2FamilyByAction) {
  // (2A)^2 shift(P-)(P+ f) = 4 [(H+ + C0)^2 f + C1 f], and the same with the roles swapped
  GaugeData g{z() * z(), -z(), 2};
  RatFunc alpha = RatFunc(2) / z();
  Grid<ParamPoly> C0(2);
  C0(0, 0) = C0(1, 1) = ParamPoly(Rational(3, 2));
  auto C1 = n2_closure_C1(g, alpha);
  ASSERT_TRUE(C1.has_value());
  auto [Hm, Hp] = build_n2_closure_pair(g, alpha, C0);
  Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, g);
  MatrixDiffOp C0op = ConstantMatrixSet{{C0}}.as_operator(0), C1op = ConstantMatrixSet{{*C1}}.as_operator(0);
  for (const auto &f : vec_probes()) {
    auto [plus, minus] = oracle::nf2_by_action(ch, g.A, Hm, Hp, C0op, C1op, f);
    EXPECT_TRUE(oracle::all_zero(plus));
    EXPECT_TRUE(oracle::all_zero(minus));
  }
  // a shifted Q must break it
  GaugeData bad{g.A, g.Q + RatFunc(1), 2};
  auto [Hm2, Hp2] = build_n2_closure_pair(bad, alpha, C0);
  Charge ch2 = build_charge({ChargeFamily::Osp, alpha, {}}, bad);
  EXPECT_FALSE(oracle::all_zero(oracle::nf2_by_action(ch2, g.A, Hm2, Hp2, C0op, C1op, vec_probes()[2]).first));
}

TEST(Closure, N2ConstraintsPointwise) {
  for (int x : {1, 2, -3, 7}) {
    Rational X(x);
    for (const auto &v : oracle::n2_constraints_at(oracle::A_family(X), oracle::Q_family(X), oracle::alpha_family(X)))
      EXPECT_EQ(v, Rational(0)) << "z = " << x;
  }
  // perturbing Q breaks them
  Rational X(2);
  oracle::Jet Q = oracle::Q_family(X);
  Q.f += Rational(1);
  bool any = false;
  for (const auto &v : oracle::n2_constraints_at(oracle::A_family(X), Q, oracle::alpha_family(X)))
    any = any || v != Rational(0);
  EXPECT_TRUE(any);
}

TEST(Closure, N1SignPinned) {
  GaugeData g{z() * z() + RatFunc(1), z().scaled(3), 1};
  RatFunc alpha = z() + RatFunc(1);
  ParamPoly c0(Rational(5, 2));
  Grid<ParamPoly> C0(2);
  C0(0, 0) = C0(1, 1) = c0;
  auto [Hm, Hp] = build_n1_closure_pair(g, alpha, c0);
  ClosureReport ok = algebraic_residual(g, alpha, Hm, Hp, ConstantMatrixSet{{C0}});
  EXPECT_TRUE(ok.raw_zero());
  EXPECT_TRUE(ok.ok());
  auto [Hm2, Hp2] = build_n1_closure_pair(g, alpha, -c0);
  ClosureReport bad = algebraic_residual(g, alpha, Hm2, Hp2, ConstantMatrixSet{{C0}});
  MatrixDiffOp expected = ConstantMatrixSet{{C0}}.as_operator(0).scaled(RatFunc(-4));
  EXPECT_EQ(bad.raw_plus, expected);
  EXPECT_EQ(bad.raw_minus, expected);
}

TEST(Closure, ArgumentErrors) {
  GaugeData g{z(), RatFunc(), 2};
  MatrixDiffOp H(2);
  EXPECT_THROW(algebraic_residual(g, RatFunc(), H, H, ConstantMatrixSet::zeros(1)), DimensionMismatchError);
  EXPECT_THROW(build_charge({}, GaugeData{z(), RatFunc(), 0}), Error);
  EXPECT_THROW(build_charge({}, GaugeData{RatFunc(), RatFunc(), 1}), Error);
}

TEST(Transposition, SymmetricBranchByDefect) {
  RatFunc QA = z().scaled(2) - RatFunc(1);
  ParamPoly cA(Rational(1, 3)), dR(5);
  for (int N = 1; N <= 4; ++N) {
    auto [A, Q] = transposition_symmetric_solution(QA, cA, dR);
    GaugeData g{A, Q, N};
    TypeAData t = transposition_typeA_data(Q, QA, dR);
    auto [Hm, Hp] = build_typeA_hamiltonians(g, t);
    EXPECT_TRUE(transposition_defect(Hm, g).is_zero()) << "N = " << N;
    auto [A2, Q2] = transposition_nontrivial_solution(QA, cA, N, dR);
    GaugeData g2{A2, Q2, N};
    auto [Hm2, Hp2] = build_typeA_hamiltonians(g2, transposition_typeA_data(Q2, QA, dR));
    EXPECT_FALSE(transposition_defect(Hm2, g2).is_zero()) << "N = " << N;
  }
  EXPECT_THROW(transposition_symmetric_solution(RatFunc(), cA, dR), Error);
  EXPECT_THROW(transposition_nontrivial_solution(z() * z(), cA, 2, dR), Error);
}

TEST(Transposition, ClosedFormExampleLeavesResidual) {
  // A = z^2, Q = 4z from Q_A = z, c_A = 1, dR = 4, N = 1
  auto [A, Q] = transposition_nontrivial_solution(z(), ParamPoly(1), 1, ParamPoly(4));
  EXPECT_EQ(A, z() * z());
  EXPECT_EQ(Q, z().scaled(4));
  SchrodingerData h = extract_schrodinger(
      build_typeA_hamiltonians(GaugeData{A, Q, 1}, transposition_typeA_data(Q, z(), ParamPoly(4))).first);
  auto r = transposition_residuals(h, GaugeData{A, Q, 1});
  EXPECT_FALSE(r.all_zero());
}

TEST(LinearSystems, EquationsAndSolutionSets) {
  ParamPoly x = param("x"), y = param("y");
  // (x - 1) + (x + y) z
  RatFunc r(ZPoly({x - ParamPoly(1), x + y}));
  RationalMatrix m = linear_equations({r}, {x, y});
  ASSERT_EQ(m.size(), 2U);
  EXPECT_EQ(m[0], (std::vector<Rational>{Rational(1), Rational(0), Rational(-1)}));
  EXPECT_TRUE(consistent(m, 2));
  RationalMatrix same = linear_equations({RatFunc(x - ParamPoly(1)), RatFunc(y + ParamPoly(1))}, {x, y});
  EXPECT_TRUE(same_solution_set(m, same, 2));
  RationalMatrix other = linear_equations({RatFunc(x - ParamPoly(2))}, {x, y});
  EXPECT_FALSE(same_solution_set(m, other, 2));
  RationalMatrix inconsistent = linear_equations({RatFunc(x), RatFunc(x - ParamPoly(1))}, {x, y});
  EXPECT_FALSE(consistent(inconsistent, 2));
  EXPECT_THROW(linear_equations({RatFunc(x * y)}, {x, y}), Error);
  EXPECT_THROW(linear_equations({RatFunc(x)}, {x * x}), Error);
}
