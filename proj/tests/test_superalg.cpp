#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qsalg/nfold.hpp"
#include "qsalg/superalg.hpp"

using namespace qsalg;

namespace {

MatrixDiffOp sqrt_sub(const MatrixDiffOp &L, int N) {
  return L.map_coeffs([&](const RatFunc &c) { return c.substitute_square_root("s", Rational(N)); });
}

/// Right-hand side of a relation, applied to f.
std::vector<RatFunc> rhs_on(const Representation &rep, const Relation &r, const std::vector<RatFunc> &f) {
  std::vector<RatFunc> out(f.size());
  for (const auto &[c, g] : r.rhs) {
    auto v = rep.at(g).apply(f);
    for (std::size_t i = 0; i < f.size(); ++i)
      out[i] = out[i] + RatFunc(c) * v[i];
  }
  return out;
}

void relations_by_action(const Representation &rep, const BracketSpec &spec) {
  for (const auto &r : spec.relations)
    for (const auto &f : oracle::probe_vectors())
      EXPECT_EQ(oracle::bracket_on(rep.at(r.lhs1), rep.at(r.lhs2), r.kind == BracketKind::Anticommutator, f),
                rhs_on(rep, r, f))
          << r.str();
}

} // namespace

TEST(Q2, RelationsSymbolic) {
  ParamPoly s = param("s");
  auto res = check_relations(build_q2_rep(s), q2_bracket_spec());
  ASSERT_EQ(res.size(), 15U);
  for (const auto &r : res)
    EXPECT_TRUE(r.residual.is_zero()) << r.name << ": " << r.residual.str();
}

TEST(Q2, RelationsByActionOnProbeVectors) {
  relations_by_action(build_q2_rep(param("s")), q2_bracket_spec());
  relations_by_action(build_q2_rep(ParamPoly(3)), q2_bracket_spec());
}

TEST(Q2, Identities) {
  ParamPoly s = param("s");
  for (const auto &r : check_q2_identities(build_q2_rep(s), s))
    EXPECT_TRUE(r.residual.is_zero()) << r.name;
  // T+T- on (1, 0) by hand at N = 4: T- (1, 0) = 0
  Representation rep = build_q2_rep(ParamPoly(2));
  auto v = rep["T-"].apply({RatFunc(1), RatFunc(0)});
  EXPECT_TRUE(v[0].is_zero() && v[1].is_zero());
}

TEST(Q2, RepresentationPreservesTheModule) {
  // odd generators carry odd powers of s, so take N = s^2 with integer s
  for (int s = 1; s <= 3; ++s)
    for (const auto &[name, X] : build_q2_rep(ParamPoly(s)))
      EXPECT_TRUE(invariant(X, q2_module(s * s)).ok()) << name << " s = " << s;
}

TEST(Q2, SpecValidation) {
  BracketSpec bad = q2_bracket_spec();
  bad.relations.push_back({"T+", "X", BracketKind::Commutator, {}});
  EXPECT_THROW(bad.validate(), Error);
  EXPECT_THROW(generator(build_q2_rep(param("s")), "X"), Error);
}

TEST(Osp, RelationsSymbolicN) {
  auto res = check_relations(build_osp_rep(param("N")), osp_bracket_spec());
  ASSERT_EQ(res.size(), 19U);
  for (const auto &r : res)
    EXPECT_TRUE(r.residual.is_zero()) << r.name << ": " << r.residual.str();
  relations_by_action(build_osp_rep(ParamPoly(3)), osp_bracket_spec());
}

TEST(Osp, RepresentationPreservesTheModule) {
  for (int N = 1; N <= 5; ++N)
    for (const auto &[name, X] : build_osp_rep(ParamPoly(N)))
      EXPECT_TRUE(invariant(X, osp_module(N)).ok()) << name << " N = " << N;
}

TEST(Tables, Q2MatchesExpansion) {
  Q2Params p;
  ParamPoly s = param("s");
  EXPECT_EQ(extract_schrodinger(build_q2_hamiltonian(p, s)), q2_coefficient_table(p, s));
}

TEST(Tables, OspMatchesExpansion) {
  OspParams p;
  ParamPoly N = param("N");
  EXPECT_EQ(extract_schrodinger(build_osp_hamiltonian(p, N)), osp_coefficient_table(p, N));
}

TEST(Tables, SingleCouplingSpotCheck) {
  // only b_00 on: H = -T0 T0 = -z^2 d^2 + ..., so A = z^2
  Q2Params p;
  p.zero_all().set("b_00", ParamPoly(1));
  SchrodingerData h = extract_schrodinger(build_q2_hamiltonian(p, ParamPoly(2)));
  EXPECT_EQ(h.A, RatFunc::z(2));
}

TEST(Params, SetAndSubstitute) {
  Q2Params p;
  EXPECT_EQ(p.names().size(), 21U);
  EXPECT_EQ(osp_param_names().size(), 21U);
  EXPECT_EQ(p["b_J"], param("b_J"));
  p.set("b_J", ParamPoly(3));
  EXPECT_EQ(p["b_J"], ParamPoly(3));
  EXPECT_THROW(p["nope"], UnknownSymbolError);
}

TEST(Flags, SolvableSubfamilies) {
  Q2Params p;
  for (const auto &n : q2_solvable_zeros())
    p.set(n, ParamPoly());
  MatrixDiffOp H = build_q2_hamiltonian(p, param("s"));
  EXPECT_TRUE(flag_invariant([&](int) { return H; }, q2_module, 1, 8));

  OspParams o;
  for (const auto &n : osp_solvable_zeros())
    o.set(n, ParamPoly());
  MatrixDiffOp G = build_osp_hamiltonian(o, param("N"));
  EXPECT_TRUE(flag_invariant([&](int) { return G; }, osp_module, 1, 8));
}

TEST(Flags, GenericHamiltonianIsNotSolvable) {
  Q2Params p;
  MatrixDiffOp H = build_q2_hamiltonian(p, param("s"));
  EXPECT_FALSE(invariant(H, q2_module(2)).ok());
}

TEST(Dictionary, ReproducesTheQ2Hamiltonian) {
  Q2Params p;
  for (int N : {3, 4, 5}) {
    MatrixDiffOp H = sqrt_sub(build_q2_hamiltonian(p, param("s")), N);
    auto [A, t] = typeA_from_dictionary(q2_dictionary(p, ParamPoly(N)));
    EXPECT_TRUE((build_typeA_hamiltonians(A, ParamPoly(N), t).first - H).is_zero()) << "N = " << N;
  }
}

TEST(Dictionary, AlternativeRDoesNotReproduce) {
  // R_ij with the other sign convention miss by a nonzero constant matrix
  Q2Params p;
  int N = 4;
  auto d = q2_dictionary(p, ParamPoly(N));
  for (const auto &[k, v] : q2_dictionary_alt_R(p, ParamPoly(N)))
    d[k] = v;
  auto [A, t] = typeA_from_dictionary(d);
  MatrixDiffOp H = sqrt_sub(build_q2_hamiltonian(p, param("s")), N);
  MatrixDiffOp diff = build_typeA_hamiltonians(A, ParamPoly(N), t).first - H;
  EXPECT_FALSE(diff.is_zero());
  EXPECT_EQ(diff.order(), 0);
}

TEST(Dictionary, InverseRoundTrip) {
  Q2Params p;
  ParamPoly N = param("N");
  Q2Params back = q2_dictionary_inverse(q2_dictionary(p, N), N);
  for (const auto &n : q2_param_names())
    EXPECT_EQ(back[n], p[n]) << n;
}
