#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <atomic>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qsalg/nfold.hpp"
#include "qsalg/scenario.hpp"
#include "qsalg/superalg.hpp"

namespace qsalg {

struct CheckRecord {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string residual;
  double ms = 0;
};

using Check = std::function<CheckRecord()>;

struct SuiteOptions {
  std::optional<std::string> family;
  std::optional<int> n;
  std::optional<int> degree_bound;
  std::optional<Scenario> scenario;
  unsigned seed = 20240521;
};

struct SuiteInfo {
  std::string name;
  std::string anchor;
  std::string summary;
  std::function<std::vector<Check>(const SuiteOptions &)> build;
};

namespace detail {

inline std::string clip(std::string s, std::size_t max = 600) {
  if (s.size() > max)
    s = s.substr(0, max) + " ...";
  return s;
}

/// body returns the residual rendering on failure, nothing on success.
inline Check make_check(std::string name, std::string anchor, std::function<std::optional<std::string>()> body) {
  return [name = std::move(name), anchor = std::move(anchor), body = std::move(body)]() {
    CheckRecord r{name, anchor, false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto res = body();
      r.pass = !res.has_value();
      if (res)
        r.residual = clip(*res);
    } catch (const std::exception &e) {
      r.residual = std::string("error: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
}

inline std::optional<std::string> zero_op(const MatrixDiffOp &r) {
  if (r.is_zero())
    return std::nullopt;
  return r.str();
}
inline std::optional<std::string> zero_fn(const RatFunc &f) {
  if (f.is_zero())
    return std::nullopt;
  return f.str();
}
inline std::optional<std::string> expect(bool ok, const std::string &why) {
  if (ok)
    return std::nullopt;
  return why;
}

inline std::optional<std::string> all_zero(const std::vector<RelationResidual> &rs) {
  std::string out;
  for (const auto &r : rs)
    if (!r.residual.is_zero())
      out += r.name + ": " + r.residual.str() + "; ";
  if (out.empty())
    return std::nullopt;
  return out;
}

inline MatrixDiffOp sqrt_substitute(const MatrixDiffOp &L, const Rational &N) {
  return L.map_coeffs([&](const RatFunc &c) { return c.substitute_square_root("s", N); });
}

inline ParamPoly fold_number(const SuiteOptions &o, const char *symbol) {
  return o.n ? ParamPoly(*o.n) : ParamPoly::symbol(symbol);
}

inline RatFunc generic(const std::string &name, int degree) { return RatFunc(generic_poly(name, degree)); }

inline Grid<RatFunc> generic_grid(const std::string &name, int degree) {
  Grid<RatFunc> g(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      g(i, j) = generic(name + std::to_string(i + 1) + std::to_string(j + 1) + "_", degree);
  return g;
}

inline RatFunc random_poly(std::mt19937 &rng, int degree, bool nonzero_lead = true) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<ParamPoly> c;
  for (int k = 0; k <= degree; ++k)
    c.emplace_back(d(rng));
  if (nonzero_lead && c.back().is_zero())
    c.back() = ParamPoly(1);
  return RatFunc(ZPoly(c));
}

inline PolyVec vec(std::vector<ZPoly> e) { return PolyVec{std::move(e)}; }

inline PolyVec combo(const std::vector<std::pair<RatFunc, PolyVec>> &terms) {
  std::vector<ZPoly> out(2);
  for (const auto &[c, v] : terms)
    for (int i = 0; i < 2; ++i)
      out[static_cast<std::size_t>(i)] =
          out[static_cast<std::size_t>(i)] + (c * RatFunc(v.entries[static_cast<std::size_t>(i)])).as_polynomial();
  return PolyVec{out};
}

inline std::optional<std::string> same_vec(const PolyVec &a, const PolyVec &b) {
  if (a == b)
    return std::nullopt;
  return a.str() + " != " + b.str();
}

} // namespace detail

// ------------------------------------------------------ shared constructions

/// Pair fixed by the N = 2 closure conditions for given (A, Q, alpha) and C0.
inline std::pair<MatrixDiffOp, MatrixDiffOp> build_n2_closure_pair(const GaugeData &g, const RatFunc &alpha,
                                                                   const Grid<ParamPoly> &C0) {
  const RatFunc &A = g.A, &Q = g.Q, &a = alpha;
  RatFunc A1 = A.derivative(), Q1 = Q.derivative(), a1 = a.derivative(), aa = a * a;
  auto c = [&](int i, int j) { return RatFunc(C0(i, j)); };
  Grid<RatFunc> B(2), Cm(2), Cp(2);
  B(0, 0) = B(1, 1) = Q;
  B(0, 1) = -(A * a).scaled(Rational(1, 2));
  B(1, 0) = (A * a).scaled(Rational(1, 2));
  RatFunc base = Q1.scaled(Rational(3, 2)) - A1 * Q / A;
  Cp(0, 0) = base + (A * aa).scaled(Rational(1, 8)) + c(0, 0);
  Cp(0, 1) = -(A1 * a).scaled(Rational(1, 4)) - A * a1 + c(0, 1);
  Cp(1, 0) = (Q * a).scaled(Rational(1, 2)) - (A1 * a).scaled(Rational(1, 4)) - (A * a1).scaled(Rational(1, 2)) + c(1, 0);
  Cp(1, 1) = base - (A * aa).scaled(Rational(3, 8)) + c(1, 1);
  Cm(0, 0) = -Q1.scaled(Rational(1, 2)) - (A * aa).scaled(Rational(3, 8)) + c(0, 0);
  Cm(0, 1) = (A1 * a).scaled(Rational(1, 4)) + c(0, 1);
  Cm(1, 0) = (Q * a).scaled(Rational(1, 2)) + (A1 * a).scaled(Rational(1, 4)) + (A * a1).scaled(Rational(1, 2)) + c(1, 0);
  Cm(1, 1) = -Q1.scaled(Rational(1, 2)) + (A * aa).scaled(Rational(1, 8)) + c(1, 1);
  return assemble_pair(A, B, Cm, Cp);
}

/// Pair fixed by the N = 1 closure conditions with C0 = c0 I.
inline std::pair<MatrixDiffOp, MatrixDiffOp> build_n1_closure_pair(const GaugeData &g, const RatFunc &alpha,
                                                                   const ParamPoly &c0) {
  Grid<RatFunc> B(2);
  B(0, 0) = B(1, 1) = g.Q + g.A.derivative().scaled(Rational(1, 2));
  B(0, 1) = -(g.A * alpha);
  B(1, 0) = g.A * alpha;
  ParamSet k = osp_n1_constants();
  k.set("C12_0", ParamPoly()).set("C21_0", ParamPoly()).set("C11_0", c0).set("C22_0", c0);
  return build_osp_n1_solution(g.A, B, alpha, k);
}

inline Grid<ParamPoly> symmetric_c0(const std::string &prefix) {
  Grid<ParamPoly> C0(2);
  C0(0, 0) = ParamPoly::symbol(prefix + "11");
  C0(0, 1) = C0(1, 0) = ParamPoly::symbol(prefix + "12");
  C0(1, 1) = ParamPoly::symbol(prefix + "22");
  return C0;
}

/// C1 of the N = 2 closure on (A, Q, alpha), when it is constant.
inline std::optional<Grid<ParamPoly>> n2_closure_C1(const GaugeData &g, const RatFunc &alpha) {
  auto [Hm, Hp] = build_n2_closure_pair(g, alpha, Grid<ParamPoly>(2));
  ClosureReport r = algebraic_residual(g, alpha, Hm, Hp, ConstantMatrixSet::zeros(2));
  Grid<ParamPoly> C1(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const RatFunc &v = (*r.C1)(i, j);
      if (!v.is_polynomial() || v.as_polynomial().degree() > 0)
        return std::nullopt;
      C1(i, j) = v.as_polynomial().coeff(0);
    }
  return C1;
}

// ------------------------------------------------------------ suite bodies

namespace suites {

inline const char *A_Q2_REL = "q(2) differential representation: (anti)commutation relations";
inline const char *A_Q2_ID = "q(2) differential representation: product identities";
inline const char *A_OSP_REL = "osp(2/2) differential representation: (anti)commutation relations";
inline const char *A_TABLES = "enveloping Hamiltonians: closed-form coefficient tables";
inline const char *A_DICT = "type-A intertwining solution = q(2) model (21-parameter correspondence)";
inline const char *A_INV = "quasi-solvability: invariant monomial modules and solvable flags";
inline const char *A_TYPEA = "type-A N-fold intertwining of the 2x2 system";
inline const char *A_TYPEB = "alpha = 0 reduction: scalar type-B component";
inline const char *A_KERNEL = "kernel of the osp(2/2) supercharge and its extension vector";
inline const char *A_SOLVED = "osp(2/2) intertwining solved for N = 1, 2 and flag actions";
inline const char *A_CL1 = "N = 1 closure of the N-fold superalgebra";
inline const char *A_CL2 = "N = 2 closure of the N-fold superalgebra on A = z^2, alpha = 2/z, Q = -z";
inline const char *A_NEG = "negative controls";
inline const char *A_TRANS = "transposition symmetry: non-trivial antisymmetric Q_A branch";

inline std::vector<Check> q2_relations(const SuiteOptions &o) {
  std::vector<Check> out;
  BracketSpec spec = q2_bracket_spec();
  for (std::size_t i = 0; i < spec.relations.size(); ++i)
    out.push_back(detail::make_check(spec.relations[i].str(), A_Q2_REL, [o, i]() -> std::optional<std::string> {
      ParamPoly s = ParamPoly::symbol("s");
      BracketSpec sp = q2_bracket_spec();
      BracketSpec one{sp.generators, {sp.relations[i]}};
      auto res = check_relations(build_q2_rep(s), one);
      if (o.n)
        for (auto &r : res)
          r.residual = detail::sqrt_substitute(r.residual, Rational(*o.n));
      return detail::all_zero(res);
    }));
  return out;
}

inline std::vector<Check> q2_identities(const SuiteOptions &o) {
  return {detail::make_check("product identities (T+T-, Q+Q-, N*Qbar, 2Q+-Q0)", A_Q2_ID,
                             [o]() -> std::optional<std::string> {
                               ParamPoly s = ParamPoly::symbol("s");
                               auto res = check_q2_identities(build_q2_rep(s), s);
                               if (o.n)
                                 for (auto &r : res)
                                   r.residual = detail::sqrt_substitute(r.residual, Rational(*o.n));
                               return detail::all_zero(res);
                             })};
}

inline std::vector<Check> osp_relations(const SuiteOptions &o) {
  std::vector<Check> out;
  BracketSpec spec = osp_bracket_spec();
  for (std::size_t i = 0; i < spec.relations.size(); ++i)
    out.push_back(detail::make_check(spec.relations[i].str(), A_OSP_REL, [o, i]() -> std::optional<std::string> {
      BracketSpec sp = osp_bracket_spec();
      BracketSpec one{sp.generators, {sp.relations[i]}};
      return detail::all_zero(check_relations(build_osp_rep(detail::fold_number(o, "N")), one));
    }));
  return out;
}

inline std::vector<Check> tables(const SuiteOptions &) {
  return {
      detail::make_check("q(2) Hamiltonian = coefficient table (21 parameters, s symbolic)", A_TABLES,
                         []() -> std::optional<std::string> {
                           ParamPoly s = ParamPoly::symbol("s");
                           Q2Params p;
                           SchrodingerData h = extract_schrodinger(build_q2_hamiltonian(p, s));
                           return detail::zero_op(h.rebuild() - q2_coefficient_table(p, s).rebuild());
                         }),
      detail::make_check("osp(2/2) Hamiltonian = coefficient table (21 parameters, N symbolic)", A_TABLES,
                         []() -> std::optional<std::string> {
                           ParamPoly N = ParamPoly::symbol("N");
                           OspParams p;
                           SchrodingerData h = extract_schrodinger(build_osp_hamiltonian(p, N));
                           return detail::zero_op(h.rebuild() - osp_coefficient_table(p, N).rebuild());
                         }),
  };
}

inline std::vector<Check> dictionary(const SuiteOptions &o) {
  std::vector<Check> out;
  std::vector<std::optional<int>> ns;
  if (o.n)
    ns = {o.n};
  else
    ns = {3, 4, 5, std::nullopt};
  for (auto n : ns) {
    std::string tag = n ? "N = " + std::to_string(*n) : "N = s^2 symbolic";
    out.push_back(detail::make_check("type-A pair from the correspondence = q(2) Hamiltonian, " + tag, A_DICT,
                                     [n]() -> std::optional<std::string> {
                                       ParamPoly s = ParamPoly::symbol("s");
                                       Q2Params p;
                                       MatrixDiffOp H = build_q2_hamiltonian(p, s);
                                       ParamPoly N = s * s;
                                       if (n) {
                                         H = detail::sqrt_substitute(H, Rational(*n));
                                         N = ParamPoly(*n);
                                       }
                                       auto [A, t] = typeA_from_dictionary(q2_dictionary(p, N));
                                       return detail::zero_op(build_typeA_hamiltonians(A, N, t).first - H);
                                     }));
    out.push_back(detail::make_check("correspondence round trip, " + tag, A_DICT, [n]() -> std::optional<std::string> {
      ParamPoly N = n ? ParamPoly(*n) : ParamPoly::symbol("N");
      Q2Params p;
      Q2Params back = q2_dictionary_inverse(q2_dictionary(p, N), N);
      std::string bad;
      for (const auto &name : q2_param_names())
        if (!(back[name] == p[name]))
          bad += name + " -> " + back[name].str() + "; ";
      return detail::expect(bad.empty(), bad);
    }));
  }
  return out;
}

inline std::vector<Check> invariance(const SuiteOptions &o) {
  std::vector<Check> out;
  int lo = o.n ? *o.n : 1, hi = o.n ? *o.n : 6;
  for (int N = lo; N <= hi; ++N) {
    out.push_back(detail::make_check("q(2) Hamiltonian preserves (V_N, V_N), N = " + std::to_string(N), A_INV,
                                     [N]() -> std::optional<std::string> {
                                       Q2Params p;
                                       MatrixDiffOp H =
                                           detail::sqrt_substitute(build_q2_hamiltonian(p, ParamPoly::symbol("s")), Rational(N));
                                       auto r = invariant(H, q2_module(N));
                                       return detail::expect(r.ok(), r.ok() ? "" : r.witness->str());
                                     }));
    out.push_back(detail::make_check("osp(2/2) Hamiltonian preserves (V_N-1, V_N), N = " + std::to_string(N), A_INV,
                                     [N]() -> std::optional<std::string> {
                                       OspParams p;
                                       auto r = invariant(build_osp_hamiltonian(p, ParamPoly(N)), osp_module(N));
                                       return detail::expect(r.ok(), r.ok() ? "" : r.witness->str());
                                     }));
  }
  out.push_back(detail::make_check("solvable q(2) subfamily preserves the flag V_1 < ... < V_8", A_INV,
                                   []() -> std::optional<std::string> {
                                     Q2Params p;
                                     for (const auto &n : q2_solvable_zeros())
                                       p.set(n, ParamPoly());
                                     MatrixDiffOp H = build_q2_hamiltonian(p, ParamPoly::symbol("s"));
                                     return detail::expect(
                                         flag_invariant([&](int) { return H; }, q2_module, 1, 8), "flag broken");
                                   }));
  out.push_back(detail::make_check("solvable osp(2/2) subfamily preserves the flag up to M = 8", A_INV,
                                   []() -> std::optional<std::string> {
                                     OspParams p;
                                     for (const auto &n : osp_solvable_zeros())
                                       p.set(n, ParamPoly());
                                     MatrixDiffOp H = build_osp_hamiltonian(p, ParamPoly::symbol("N"));
                                     return detail::expect(
                                         flag_invariant([&](int) { return H; }, osp_module, 1, 8), "flag broken");
                                   }));
  return out;
}

inline std::vector<Check> typeA(const SuiteOptions &o) {
  std::vector<Check> out;
  int lo = o.n ? *o.n : 1, hi = o.n ? *o.n : 4;
  for (int N = lo; N <= hi; ++N)
    out.push_back(detail::make_check("generic type-A pair intertwines, N = " + std::to_string(N), A_TYPEA,
                                     [N]() -> std::optional<std::string> {
                                       TypeAData t;
                                       t.Q = detail::generic_grid("q", 2);
                                       for (int i = 0; i < 2; ++i)
                                         for (int j = 0; j < 2; ++j)
                                           t.R(i, j) = RatFunc(ParamPoly::symbol("r" + std::to_string(i + 1) + std::to_string(j + 1)));
                                       GaugeData g{detail::generic("a", 4), t.Q(0, 0), N};
                                       Charge ch = build_charge({ChargeFamily::Q2Diagonal, {}, {}}, g);
                                       auto [Hm, Hp] = build_typeA_hamiltonians(g, t);
                                       return detail::zero_op(intertwine_residual(ch.minus, ch.shift, Hm, Hp));
                                     }));
  return out;
}

inline std::vector<Check> typeB(const SuiteOptions &o) {
  std::vector<Check> out;
  int lo = o.n ? *o.n : 3, hi = o.n ? *o.n : 5;
  for (int N = lo; N <= hi; ++N)
    out.push_back(detail::make_check("(1,1) component preserves {1, ..., z^(N-2), z^N}, N = " + std::to_string(N),
                                     A_TYPEB, [N]() -> std::optional<std::string> {
                                       std::vector<ParamPoly> a{ParamPoly(2), ParamPoly(-1), ParamPoly(3),
                                                                ParamPoly(Rational(1, 2)), ParamPoly(N)};
                                       ScalarDiffOp L = build_typeB_11(N, a, ParamPoly(7), ParamPoly(Rational(-5, 3)));
                                       auto r = invariant(MatrixDiffOp::scalar(1, L),
                                                          MonomialModule({MonomialModule::type_b(N)}));
                                       if (!r.ok())
                                         return r.witness->str();
                                       // and it genuinely moves z^N off its own line
                                       auto r2 = invariant(MatrixDiffOp::scalar(1, L),
                                                           MonomialModule({MonomialModule::type_a(N)}));
                                       return detail::expect(!r2.ok(), "type-A module unexpectedly invariant");
                                     }));
  return out;
}

inline std::vector<Check> kernel(const SuiteOptions &o) {
  std::vector<Check> out;
  int lo = o.n ? *o.n : 1, hi = o.n ? *o.n : 3;
  for (int N = lo; N <= hi; ++N) {
    out.push_back(detail::make_check("ker P- = (V_N-1, V_N) + <psi>, dim 2N, N = " + std::to_string(N), A_KERNEL,
                                     [N, o]() -> std::optional<std::string> {
                                       RatFunc alpha(ZPoly({ParamPoly(2), ParamPoly(-1), ParamPoly(3)}));
                                       GaugeData g{RatFunc(1), RatFunc(), N};
                                       Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, g);
                                       MonomialModule V = osp_module(N);
                                       int bound = o.degree_bound ? *o.degree_bound : default_degree_bound(N, V) + 3;
                                       auto ker = polynomial_kernel(ch.minus, bound);
                                       if (static_cast<int>(ker.size()) != 2 * N)
                                         return "kernel dimension " + std::to_string(ker.size());
                                       std::vector<PolyVec> expected;
                                       for (std::size_t k = 0; k < static_cast<std::size_t>(V.dimension()); ++k)
                                         expected.push_back(V.basis_vector(k));
                                       PolyVec psi = kernel_extension_vector(N, alpha, RatFunc());
                                       if (!apply_polynomial(ch.minus, psi).is_zero())
                                         return "P- psi != 0";
                                       expected.push_back(psi);
                                       return detail::expect(same_span(ker, expected), "kernel span differs");
                                     }));
    out.push_back(detail::make_check("alpha = 0, beta = -1/z: ker P- = (V_N^B, V_N^A), N = " + std::to_string(N),
                                     A_KERNEL, [N]() -> std::optional<std::string> {
                                       RatFunc beta = RatFunc(-1) / RatFunc::z();
                                       GaugeData g{RatFunc(1), RatFunc(), N};
                                       Charge ch = build_charge({ChargeFamily::Osp, RatFunc(), beta}, g);
                                       MonomialModule V({MonomialModule::type_b(N), MonomialModule::type_a(N)});
                                       auto ker = polynomial_kernel(ch.minus, N + 4);
                                       std::vector<PolyVec> expected;
                                       for (std::size_t k = 0; k < static_cast<std::size_t>(V.dimension()); ++k)
                                         expected.push_back(V.basis_vector(k));
                                       return detail::expect(static_cast<int>(ker.size()) == 2 * N && same_span(ker, expected),
                                                             "kernel differs, dimension " + std::to_string(ker.size()));
                                     }));
  }
  return out;
}

inline std::vector<Check> solved(const SuiteOptions &) {
  std::vector<Check> out;
  out.push_back(detail::make_check("N = 1 solution intertwines (generic A, alpha, B_ij)", A_SOLVED,
                                   []() -> std::optional<std::string> {
                                     RatFunc A = detail::generic("a", 4), alpha = detail::generic("al", 3);
                                     auto [Hm, Hp] = build_osp_n1_solution(A, detail::generic_grid("B", 3), alpha,
                                                                           osp_n1_constants());
                                     Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, GaugeData{A, RatFunc(), 1});
                                     return detail::zero_op(intertwine_residual(ch.minus, ch.shift, Hm, Hp));
                                   }));
  out.push_back(detail::make_check("N = 1 flag actions of H- on (0,1) and psi", A_SOLVED,
                                   []() -> std::optional<std::string> {
                                     RatFunc A = detail::generic("a", 4), alpha = detail::generic("al", 3);
                                     ParamSet k = osp_n1_constants();
                                     auto H = build_osp_n1_solution(A, detail::generic_grid("B", 3), alpha, k).first;
                                     PolyVec psi = kernel_extension_vector(1, alpha, RatFunc());
                                     PolyVec e2 = detail::vec({ZPoly(), ZPoly(1)});
                                     auto r = detail::same_vec(apply_polynomial(H, e2),
                                                               detail::combo({{-RatFunc(k["C12_0"]), psi},
                                                                              {-RatFunc(k["C22_0"]), e2}}));
                                     if (r)
                                       return r;
                                     k.set("C12_0", ParamPoly());
                                     H = build_osp_n1_solution(A, detail::generic_grid("B", 3), alpha, k).first;
                                     return detail::same_vec(apply_polynomial(H, psi),
                                                             detail::combo({{-RatFunc(k["C11_0"]), psi},
                                                                            {-RatFunc(k["C21_0"]), e2}}));
                                   }));
  for (bool constrained : {false, true})
    out.push_back(detail::make_check(std::string("N = 2 solution intertwines (generic A, alpha") +
                                         (constrained ? ", constrained, 13 parameters)" : ", 16 constants)"),
                                     A_SOLVED, [constrained]() -> std::optional<std::string> {
                                       RatFunc A = detail::generic("a", 4), alpha = detail::generic("al", 3);
                                       auto [Hm, Hp] = build_osp_n2_solution(A, alpha, osp_n2_constants(), constrained);
                                       Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, GaugeData{A, RatFunc(), 2});
                                       return detail::zero_op(intertwine_residual(ch.minus, ch.shift, Hm, Hp));
                                     }));
  out.push_back(detail::make_check("N = 2 flag actions of H- on (1,0), (0,z), (0,1) and psi", A_SOLVED,
                                   []() -> std::optional<std::string> {
                                     RatFunc A = detail::generic("a", 4), alpha = detail::generic("al", 3);
                                     ParamSet k = osp_n2_constants();
                                     auto H = build_osp_n2_solution(A, alpha, k, false).first;
                                     PolyVec psi = kernel_extension_vector(2, alpha, RatFunc());
                                     PolyVec e1 = detail::vec({ZPoly(1), ZPoly()}), ez = detail::vec({ZPoly(), ZPoly::z()}),
                                             e2 = detail::vec({ZPoly(), ZPoly(1)});
                                     auto K = [&](const char *n) { return -RatFunc(k[n]); };
                                     auto r = detail::same_vec(
                                         apply_polynomial(H, e1),
                                         detail::combo({{K("C11_1"), psi}, {K("C11_0"), e1}, {K("C21_1"), ez}, {K("C21_0"), e2}}));
                                     if (!r)
                                       r = detail::same_vec(apply_polynomial(H, ez),
                                                            detail::combo({{K("B12_1") + K("C12_0"), psi},
                                                                           {K("B12_0"), e1},
                                                                           {K("B22_1") + K("C22_0"), ez},
                                                                           {K("B22_0"), e2}}));
                                     if (!r)
                                       r = detail::same_vec(
                                           apply_polynomial(H, e2),
                                           detail::combo({{K("C12_1"), psi}, {K("C12_0"), e1}, {K("C22_1"), ez}, {K("C22_0"), e2}}));
                                     if (r)
                                       return r;
                                     // psi is mapped into the kernel once the constraint holds
                                     H = build_osp_n2_solution(A, alpha, k, true).first;
                                     return detail::same_vec(apply_polynomial(H, psi),
                                                             detail::combo({{K("B11_1") + K("C11_0"), psi},
                                                                            {K("B11_0"), e1},
                                                                            {K("B21_1") + K("C21_0"), ez},
                                                                            {K("B21_0"), e2}}));
                                   }));
  out.push_back(detail::make_check("constrained N = 2 solution is an osp(2/2) N = 2 model", A_SOLVED,
                                   []() -> std::optional<std::string> {
                                     RatFunc A = detail::generic("a", 4), alpha = detail::generic("al", 3);
                                     ParamSet k = osp_n2_constants();
                                     MatrixDiffOp H = build_osp_n2_solution(A, alpha, k, true).first;
                                     // parameter relations to the osp(2/2) N = 2 family
                                     OspParams p;
                                     p.set("b_p", -k["C22_1"] * 2).set("b_0", k["B22_1"] * 2).set("b_m", k["B22_0"] * 2);
                                     p.set("fbar_p", -k["C12_0"]).set("fbar_m", -k["B12_0"]);
                                     p.set("f_p", k["C21_1"]).set("f_m", k["C21_0"]);
                                     p.set("b_J", (k["C22_0"] - k["C11_0"] + k["B22_1"] * Rational(1, 2)) * 2);
                                     p.set("b_I", k["C11_0"] + p["b_J"]);
                                     Grid<RatFunc> B = osp_n2_B(A, alpha, k, true);
                                     SchrodingerData t = osp_n2_table(p, A, B(0, 0), B(1, 0));
                                     return detail::zero_op(H - t.rebuild());
                                   }));
  return out;
}

/// N = 1 equivalence on one numeric instance; returns a failure description.
inline std::optional<std::string> n1_equivalence_instance(const RatFunc &A, const RatFunc &Q, const RatFunc &alpha,
                                                          int bdeg) {
  std::vector<ParamPoly> unknowns;
  Grid<RatFunc> B(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::vector<ParamPoly> c;
      for (int k = 0; k <= bdeg; ++k) {
        c.push_back(ParamPoly::symbol("u" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k)));
        unknowns.push_back(c.back());
      }
      B(i, j) = RatFunc(ZPoly(c));
    }
  ParamSet k = osp_n1_constants();
  for (const auto &n : k.names()) {
    k.set(n, ParamPoly::symbol("k" + n));
    unknowns.push_back(k[n]);
  }
  Grid<ParamPoly> C0 = symmetric_c0("w");
  int first_c0 = static_cast<int>(unknowns.size());
  unknowns.push_back(C0(0, 0));
  unknowns.push_back(C0(0, 1));
  unknowns.push_back(C0(1, 1));
  int n = static_cast<int>(unknowns.size());
  GaugeData g{A, Q, 1};
  auto [Hm, Hp] = build_osp_n1_solution(A, B, alpha, k);

  ClosureReport rep = algebraic_residual(g, alpha, Hm, Hp, ConstantMatrixSet{{C0}});
  std::vector<RatFunc> closure;
  for (const auto *ords : {&rep.orders_plus, &rep.orders_minus})
    for (const auto &grid : *ords)
      closure.insert(closure.end(), grid.entries().begin(), grid.entries().end());
  RationalMatrix S_closure = linear_equations(closure, unknowns);

  RatFunc b = Q + A.derivative().scaled(Rational(1, 2));
  std::vector<RatFunc> alg1{B(0, 0) - b, B(1, 1) - b, B(0, 1) + A * alpha, B(1, 0) - A * alpha};
  std::vector<RatFunc> alg = alg1;
  alg.insert(alg.end(), {RatFunc(k["C12_0"]), RatFunc(k["C21_0"]), RatFunc(k["C11_0"] - C0(0, 0)),
                         RatFunc(k["C22_0"] - C0(1, 1)), RatFunc(C0(0, 1)),
                         RatFunc(C0(0, 0) - C0(1, 1))});
  RationalMatrix S_alg = linear_equations(alg, unknowns);
  if (!same_solution_set(S_closure, S_alg, n))
    return "closure zero-set differs from the algebraic conditions";

  std::vector<RatFunc> tp;
  for (const auto *H : {&Hm, &Hp}) {
    TranspositionResiduals r = transposition_residuals(extract_schrodinger(*H), g);
    tp.insert(tp.end(), r.B.entries().begin(), r.B.entries().end());
    tp.insert(tp.end(), r.C.entries().begin(), r.C.entries().end());
  }
  tp.insert(tp.end(), {RatFunc(k["C12_0"]), RatFunc(k["C21_0"]), RatFunc(k["C11_0"] - k["C22_0"])});
  RationalMatrix S_tp = linear_equations(tp, unknowns);
  alg1.insert(alg1.end(), {RatFunc(k["C12_0"]), RatFunc(k["C21_0"]), RatFunc(k["C11_0"] - k["C22_0"])});
  RationalMatrix S_alg_noc0 = linear_equations(alg1, unknowns);
  if (!same_solution_set(S_tp, S_alg_noc0, n))
    return "transposition zero-set differs from the algebraic conditions";
  RationalMatrix proj = eliminate_columns(S_closure, n, {first_c0, first_c0 + 1, first_c0 + 2});
  if (!same_solution_set(proj, S_tp, n))
    return "closure (with C0 eliminated) differs from transposition symmetry";
  return std::nullopt;
}

inline std::vector<Check> closure_n1(const SuiteOptions &o) {
  std::vector<Check> out;
  out.push_back(detail::make_check("closure holds on the algebraic family (generic A, Q, alpha)", A_CL1,
                                   []() -> std::optional<std::string> {
                                     RatFunc A = detail::generic("a", 4), Q = detail::generic("q", 2),
                                             alpha = detail::generic("al", 3);
                                     GaugeData g{A, Q, 1};
                                     ParamPoly c0 = ParamPoly::symbol("c0");
                                     auto [Hm, Hp] = build_n1_closure_pair(g, alpha, c0);
                                     Grid<ParamPoly> C0(2);
                                     C0(0, 0) = C0(1, 1) = c0;
                                     ClosureReport r = algebraic_residual(g, alpha, Hm, Hp, ConstantMatrixSet{{C0}});
                                     auto f = r.failures();
                                     std::string s;
                                     for (const auto &x : f)
                                       s += x + "; ";
                                     return detail::expect(f.empty(), s);
                                   }));
  out.push_back(detail::make_check("C11 = C22 = -C0 instead leaves the residual -4 C0 I on both sides", A_CL1,
                                   []() -> std::optional<std::string> {
                                     RatFunc A = detail::generic("a", 4), Q = detail::generic("q", 2),
                                             alpha = detail::generic("al", 3);
                                     GaugeData g{A, Q, 1};
                                     ParamPoly c0 = ParamPoly::symbol("c0");
                                     auto [Hm, Hp] = build_n1_closure_pair(g, alpha, -c0);
                                     Grid<ParamPoly> C0(2);
                                     C0(0, 0) = C0(1, 1) = c0;
                                     ClosureReport r = algebraic_residual(g, alpha, Hm, Hp, ConstantMatrixSet{{C0}});
                                     MatrixDiffOp expected = ConstantMatrixSet{{C0}}.as_operator(0).scaled(RatFunc(-4));
                                     if (auto e = detail::zero_op(r.raw_plus - expected))
                                       return e;
                                     return detail::zero_op(r.raw_minus - expected);
                                   }));
  for (int inst = 0; inst < 5; ++inst)
    out.push_back(detail::make_check("closure zero-set = algebraic = transposition conditions, instance " +
                                         std::to_string(inst + 1),
                                     A_CL1, [inst, seed = o.seed]() -> std::optional<std::string> {
                                       std::mt19937 rng(seed + static_cast<unsigned>(inst));
                                       RatFunc A = detail::random_poly(rng, 2 + inst % 3);
                                       RatFunc Q = detail::random_poly(rng, 2, false);
                                       RatFunc alpha = detail::random_poly(rng, 1);
                                       return n1_equivalence_instance(A, Q, alpha, A.as_polynomial().degree() + 1);
                                     }));
  return out;
}

inline ClosureReport closure_report_n2(const GaugeData &g, const RatFunc &alpha, const Grid<ParamPoly> &C0) {
  ConstantMatrixSet cs = ConstantMatrixSet::zeros(2);
  cs.C[0] = C0;
  // a non-constant C1 is reported by the C1 constraints against zero
  cs.C[1] = n2_closure_C1(g, alpha).value_or(Grid<ParamPoly>(2));
  auto [Hm, Hp] = build_n2_closure_pair(g, alpha, C0);
  return algebraic_residual(g, alpha, Hm, Hp, cs);
}

inline std::vector<Check> closure_checks(const ClosureReport &r, const char *anchor) {
  std::vector<Check> out;
  out.push_back(detail::make_check("closure residual (H+ side)", anchor, [r]() { return detail::zero_op(r.raw_plus); }));
  out.push_back(detail::make_check("closure residual (H- side)", anchor, [r]() { return detail::zero_op(r.raw_minus); }));
  for (const auto &c : r.constraints)
    out.push_back(detail::make_check(c.name, anchor, [c]() { return detail::zero_op(c.residual); }));
  return out;
}

inline std::vector<Check> closure_n2(const SuiteOptions &) {
  GaugeData g{RatFunc::z(2), -RatFunc::z(), 2};
  RatFunc alpha = RatFunc(2) / RatFunc::z();
  std::vector<Check> out;
  out.push_back(detail::make_check("family data: C1 = 0, D1 = 0, D2 = 0", A_CL2, [g, alpha]() -> std::optional<std::string> {
    ClosureReport r = closure_report_n2(g, alpha, symmetric_c0("c0_"));
    std::string bad;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!(*r.C1)(i, j).is_zero())
          bad += "C1 " + (*r.C1)(i, j).str() + "; ";
    if (!r.D1->is_zero())
      bad += "D1 = " + r.D1->str() + "; ";
    if (!r.D2->is_zero())
      bad += "D2 = " + r.D2->str() + "; ";
    return detail::expect(bad.empty(), bad);
  }));
  out.push_back(detail::make_check("full closure report on the family (C0 symmetric, symbolic)", A_CL2,
                                   [g, alpha]() -> std::optional<std::string> {
                                     ClosureReport r = closure_report_n2(g, alpha, symmetric_c0("c0_"));
                                     std::string s;
                                     for (const auto &x : r.failures())
                                       s += x + "; ";
                                     return detail::expect(r.ok(), s);
                                   }));
  out.push_back(detail::make_check("family pair intertwines for C0 = c I", A_CL2, [g, alpha]() -> std::optional<std::string> {
    Grid<ParamPoly> C0(2);
    C0(0, 0) = C0(1, 1) = ParamPoly::symbol("c0");
    auto [Hm, Hp] = build_n2_closure_pair(g, alpha, C0);
    Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, g);
    return detail::zero_op(intertwine_residual(ch.minus, ch.shift, Hm, Hp));
  }));
  return out;
}

inline std::vector<Check> negative(const SuiteOptions &) {
  std::vector<Check> out;
  // Each check passes when the perturbation is detected with a nonzero residual.
  out.push_back(detail::make_check("perturbed T0 breaks [T0, T+] = T+", A_NEG, []() -> std::optional<std::string> {
    ParamPoly s = ParamPoly::symbol("s");
    Representation rep = build_q2_rep(s);
    rep["T0"](0, 0) += ScalarDiffOp(1);
    auto res = check_relations(rep, BracketSpec{q2_bracket_spec().generators, {q2_bracket_spec().relations[0]}});
    return detail::expect(!res[0].residual.is_zero(), "perturbation not detected");
  }));
  out.push_back(detail::make_check("N = 2 closure with Q != B fails at third order", A_NEG, []() -> std::optional<std::string> {
    GaugeData g{RatFunc::z(2), -RatFunc::z(), 2};
    RatFunc alpha = RatFunc(2) / RatFunc::z();
    auto [Hm, Hp] = build_n2_closure_pair(g, alpha, Grid<ParamPoly>(2));
    // B = Q + 1 on the diagonal
    for (auto *H : {&Hm, &Hp})
      for (int i = 0; i < 2; ++i)
        (*H)(i, i) -= ScalarDiffOp::d();
    ClosureReport r = algebraic_residual(g, alpha, Hm, Hp, ConstantMatrixSet::zeros(2));
    bool third = r.orders_plus.size() > 3 && !(r.orders_plus[3](0, 0).is_zero() && r.orders_plus[3](1, 1).is_zero());
    bool alg3 = false;
    for (const auto &c : r.constraints)
      if (c.name.rfind("alg3", 0) == 0 && !c.zero())
        alg3 = true;
    return detail::expect(third && alg3 && !r.ok(), "third-order violation not detected");
  }));
  out.push_back(detail::make_check("symmetric off-diagonal B violates transposition symmetry", A_NEG,
                                   []() -> std::optional<std::string> {
                                     RatFunc A = RatFunc::z(2) + RatFunc(1), Q = RatFunc::z();
                                     GaugeData g{A, Q, 2};
                                     TypeAData t;
                                     t.Q(0, 0) = t.Q(1, 1) = Q;
                                     t.Q(0, 1) = t.Q(1, 0) = RatFunc::z();
                                     auto H = build_typeA_hamiltonians(g, t).first;
                                     TranspositionResiduals r = transposition_residuals(extract_schrodinger(H), g);
                                     return detail::expect(!r.all_zero() && !r.B(0, 1).is_zero(), "not detected");
                                   }));
  return out;
}

/// Both transposition tests on the type-A pair built over (A, Q); empty when
/// they agree that the pair is symmetric.
inline std::optional<std::string> typeA_transposition(const RatFunc &A, const RatFunc &Q, const RatFunc &QA,
                                                      const ParamPoly &dR, int N) {
  GaugeData g{A, Q, N};
  auto [Hm, Hp] = build_typeA_hamiltonians(g, transposition_typeA_data(Q, QA, dR));
  std::string bad;
  for (auto [tag, H] : {std::pair<const char *, const MatrixDiffOp *>{"H-", &Hm}, {"H+", &Hp}}) {
    TranspositionResiduals r = transposition_residuals(extract_schrodinger(*H), g);
    if (!r.all_zero())
      bad += std::string(tag) + " C12 residual " + r.C(0, 1).str() + "; ";
    if (!transposition_defect(*H, g).is_zero())
      bad += std::string(tag) + " is not conjugate to its transpose; ";
  }
  if (bad.empty())
    return std::nullopt;
  return "A = " + A.str() + ", Q = " + Q.str() + ": " + bad;
}

inline std::vector<Check> transposition(const SuiteOptions &o) {
  std::vector<Check> out;
  out.push_back(detail::make_check("closed-form branch: Q_A = z, c_A = 1, dR = 0, N = 3 gives A = z^2, Q = 4z", A_TRANS,
                                   []() -> std::optional<std::string> {
                                     auto [A, Q] = transposition_nontrivial_solution(RatFunc::z(), ParamPoly(1), 3, ParamPoly());
                                     return detail::expect(A == RatFunc::z(2) && Q == RatFunc::z().scaled(4),
                                                           "A = " + A.str() + ", Q = " + Q.str());
                                   }));
  out.push_back(detail::make_check("trivial branch Q_A = 0, R12 = R21 is symmetric (generic A, Q)", A_TRANS,
                                   []() -> std::optional<std::string> {
                                     return typeA_transposition(detail::generic("a", 4), detail::generic("q", 2), RatFunc(),
                                                                ParamPoly(), 3);
                                   }));
  int lo = o.n ? *o.n : 1, hi = o.n ? *o.n : 4;
  for (int N = lo; N <= hi; ++N) {
    RatFunc QA(ZPoly({ParamPoly::symbol("bA0"), ParamPoly::symbol("bA1"), ParamPoly::symbol("bA2")}));
    ParamPoly cA = ParamPoly::symbol("cA"), dR = ParamPoly::symbol("dR");
    out.push_back(detail::make_check("A = c_A Q_A^2, Q = -c_A dR Q_A is symmetric, N = " + std::to_string(N), A_TRANS,
                                     [=]() -> std::optional<std::string> {
                                       auto [A, Q] = transposition_symmetric_solution(QA, cA, dR);
                                       return typeA_transposition(A, Q, QA, dR, N);
                                     }));
    out.push_back(detail::make_check("closed-form branch leaves the C12 residual dR + Q/(c_A Q_A), N = " + std::to_string(N),
                                     A_TRANS, [=]() -> std::optional<std::string> {
                                       RatFunc QA1(ZPoly({ParamPoly::symbol("bA0"), ParamPoly::symbol("bA1")}));
                                       auto [A, Q] = transposition_nontrivial_solution(QA1, cA, N, dR);
                                       GaugeData g{A, Q, N};
                                       auto [Hm, Hp] = build_typeA_hamiltonians(g, transposition_typeA_data(Q, QA1, dR));
                                       RatFunc expected = RatFunc(dR) + Q / QA1.scaled(cA);
                                       for (const auto *H : {&Hm, &Hp}) {
                                         RatFunc got = transposition_residuals(extract_schrodinger(*H), g).C(0, 1);
                                         if (!(got == expected))
                                           return "C12 residual " + got.str() + ", expected " + expected.str();
                                         if (transposition_defect(*H, g).is_zero())
                                           return std::string("operator-level test unexpectedly passes");
                                       }
                                       return std::nullopt;
                                     }));
  }
  return out;
}

} // namespace suites

// --------------------------------------------------------- scenario suites

namespace detail {

inline ParamSet scenario_params(const Scenario &sc, ParamSet p) {
  for (const auto &[k, v] : sc.values) {
    const auto &names = p.names();
    if (std::find(names.begin(), names.end(), k) != names.end())
      p.set(k, sc.constant(k));
  }
  return p;
}

inline int scenario_n(const Scenario &sc, int fallback = -1) {
  if (sc.N)
    return *sc.N;
  if (fallback > 0)
    return fallback;
  throw Error("scenario must set a numeric N");
}

inline ParamPoly scenario_fold(const Scenario &sc, const char *symbol) {
  return sc.N ? ParamPoly(*sc.N) : ParamPoly::symbol(symbol);
}

} // namespace detail

namespace suites {

inline std::vector<Check> scenario_closure(const Scenario &sc) {
  int N = detail::scenario_n(sc);
  GaugeData g{sc.get("A"), sc.get("Q"), N};
  RatFunc alpha = sc.get_or("alpha", RatFunc());
  if (N == 2)
    return closure_checks(closure_report_n2(g, alpha, symmetric_c0("c0_")), A_CL2);
  if (N == 1) {
    ParamPoly c0 = ParamPoly::symbol("c0");
    auto [Hm, Hp] = build_n1_closure_pair(g, alpha, c0);
    Grid<ParamPoly> C0(2);
    C0(0, 0) = C0(1, 1) = c0;
    return closure_checks(algebraic_residual(g, alpha, Hm, Hp, ConstantMatrixSet{{C0}}), A_CL1);
  }
  throw Error("closure scenarios support N = 1 and N = 2");
}

inline std::vector<Check> scenario_intertwine(const Scenario &sc) {
  std::string fam = sc.family.value_or("q2");
  int N = detail::scenario_n(sc);
  std::vector<Check> out;
  if (fam == "q2") {
    out.push_back(detail::make_check("type-A pair intertwines, N = " + std::to_string(N), A_TYPEA, [sc, N]() {
      TypeAData t;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
          t.Q(i, j) = sc.get_or("Q" + ij, RatFunc());
          t.R(i, j) = sc.get_or("R" + ij, RatFunc());
        }
      GaugeData g{sc.get("A"), t.Q(0, 0), N};
      Charge ch = build_charge({ChargeFamily::Q2Diagonal, {}, {}}, g);
      auto [Hm, Hp] = build_typeA_hamiltonians(g, t);
      return detail::zero_op(intertwine_residual(ch.minus, ch.shift, Hm, Hp));
    }));
    return out;
  }
  out.push_back(detail::make_check("osp(2/2) solved pair intertwines, N = " + std::to_string(N), A_SOLVED, [sc, N]() {
    RatFunc A = sc.get("A"), alpha = sc.get_or("alpha", RatFunc());
    std::pair<MatrixDiffOp, MatrixDiffOp> H;
    if (N == 1) {
      Grid<RatFunc> B(2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          B(i, j) = sc.get_or("B" + std::to_string(i + 1) + std::to_string(j + 1), RatFunc());
      H = build_osp_n1_solution(A, B, alpha, detail::scenario_params(sc, osp_n1_constants()));
    } else if (N == 2) {
      H = build_osp_n2_solution(A, alpha, detail::scenario_params(sc, osp_n2_constants()));
    } else {
      throw Error("osp(2/2) intertwining is solved only for N = 1, 2");
    }
    Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, GaugeData{A, RatFunc(), N});
    return detail::zero_op(intertwine_residual(ch.minus, ch.shift, H.first, H.second));
  }));
  return out;
}

inline std::vector<Check> scenario_hamiltonian(const Scenario &sc) {
  std::string fam = sc.family.value_or("q2");
  std::vector<Check> out;
  if (fam == "q2") {
    out.push_back(detail::make_check("q(2) Hamiltonian = coefficient table", A_TABLES, [sc]() {
      ParamPoly s = ParamPoly::symbol("s");
      ParamSet p = detail::scenario_params(sc, Q2Params());
      MatrixDiffOp diff = build_q2_hamiltonian(p, s) - q2_coefficient_table(p, s).rebuild();
      if (sc.N)
        diff = detail::sqrt_substitute(diff, Rational(*sc.N));
      return detail::zero_op(diff);
    }));
    if (sc.N)
      out.push_back(detail::make_check("q(2) Hamiltonian preserves (V_N, V_N)", A_INV, [sc]() -> std::optional<std::string> {
        ParamSet p = detail::scenario_params(sc, Q2Params());
        MatrixDiffOp H = detail::sqrt_substitute(build_q2_hamiltonian(p, ParamPoly::symbol("s")), Rational(*sc.N));
        auto r = invariant(H, q2_module(*sc.N));
        return detail::expect(r.ok(), r.ok() ? "" : r.witness->str());
      }));
    return out;
  }
  if (!sc.N || *sc.N >= 3)
    out.push_back(detail::make_check("osp(2/2) Hamiltonian = coefficient table", A_TABLES, [sc]() {
      ParamPoly N = detail::scenario_fold(sc, "N");
      ParamSet p = detail::scenario_params(sc, OspParams());
      return detail::zero_op(build_osp_hamiltonian(p, N) - osp_coefficient_table(p, N).rebuild());
    }));
  if (sc.N)
    out.push_back(detail::make_check("osp(2/2) Hamiltonian preserves (V_N-1, V_N)", A_INV, [sc]() -> std::optional<std::string> {
      ParamSet p = detail::scenario_params(sc, OspParams());
      auto r = invariant(build_osp_hamiltonian(p, ParamPoly(*sc.N)), osp_module(*sc.N));
      return detail::expect(r.ok(), r.ok() ? "" : r.witness->str());
    }));
  return out;
}

inline std::vector<Check> scenario_dictionary(const Scenario &sc) {
  return {detail::make_check("type-A pair from the correspondence = q(2) Hamiltonian", A_DICT, [sc]() {
    ParamPoly s = ParamPoly::symbol("s");
    ParamSet p = detail::scenario_params(sc, Q2Params());
    MatrixDiffOp H = build_q2_hamiltonian(p, s);
    ParamPoly N = s * s;
    if (sc.N) {
      H = detail::sqrt_substitute(H, Rational(*sc.N));
      N = ParamPoly(*sc.N);
    }
    auto [A, t] = typeA_from_dictionary(q2_dictionary(p, N));
    return detail::zero_op(build_typeA_hamiltonians(A, N, t).first - H);
  })};
}

inline std::vector<Check> scenario_transposition(const Scenario &sc) {
  return {detail::make_check("A = c_A Q_A^2, Q = -c_A dR Q_A is transposition symmetric", A_TRANS,
                             [sc]() -> std::optional<std::string> {
                               int N = detail::scenario_n(sc);
                               RatFunc QA = sc.get("Q_A");
                               ParamPoly cA = sc.has("c_A") ? sc.constant("c_A") : ParamPoly(1);
                               ParamPoly dR = sc.has("dR") ? sc.constant("dR") : ParamPoly();
                               auto [A, Q] = transposition_symmetric_solution(QA, cA, dR);
                               return typeA_transposition(A, Q, QA, dR, N);
                             })};
}

inline std::vector<Check> scenario_algebra(const Scenario &sc) {
  SuiteOptions o;
  o.n = sc.N;
  if (sc.family.value_or("q2") == "q2") {
    auto a = q2_relations(o), b = q2_identities(o);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  return osp_relations(o);
}

/// Kernel of the charge named by a scenario.
inline Charge scenario_charge(const Scenario &sc) {
  int N = detail::scenario_n(sc);
  ChargeFamily fam = sc.family.value_or("osp22") == "q2" ? ChargeFamily::Q2Diagonal : ChargeFamily::Osp;
  return build_charge({fam, sc.get_or("alpha", RatFunc()), sc.get_or("beta", RatFunc())},
                      GaugeData{sc.get_or("A", RatFunc(1)), sc.get_or("Q", RatFunc()), N});
}

inline std::vector<Check> scenario_kernel(const Scenario &sc, std::optional<int> bound) {
  return {detail::make_check("kernel dimension is 2N", A_KERNEL, [sc, bound]() -> std::optional<std::string> {
    int N = detail::scenario_n(sc);
    Charge ch = scenario_charge(sc);
    int b = bound ? *bound : sc.degree_bound ? *sc.degree_bound : default_degree_bound(N, osp_module(N)) + 3;
    auto ker = polynomial_kernel(ch.minus, b);
    return detail::expect(static_cast<int>(ker.size()) == 2 * N, "dimension " + std::to_string(ker.size()));
  })};
}

} // namespace suites

inline const std::vector<SuiteInfo> &suite_registry() {
  using namespace suites;
  auto both = [](auto f, auto g) {
    return [f, g](const SuiteOptions &o) {
      auto a = f(o), b = g(o);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
  };
  static const std::vector<SuiteInfo> reg{
      {"q2-relations", A_Q2_REL, "q(2) relations, s symbolic (or --n)", q2_relations},
      {"q2-identities", A_Q2_ID, "q(2) product identities", q2_identities},
      {"osp-relations", A_OSP_REL, "osp(2/2) relations, N symbolic (or --n)", osp_relations},
      {"algebra", "superalgebra relations of the differential representations",
       "relations for --family q2 (default) or osp22",
       [both](const SuiteOptions &o) {
         if (o.family.value_or("q2") == "osp22")
           return osp_relations(o);
         return both(q2_relations, q2_identities)(o);
       }},
      {"tables", A_TABLES, "enveloping Hamiltonians vs coefficient tables", tables},
      {"hamiltonian", A_TABLES, "alias of tables", tables},
      {"dictionary", A_DICT, "correspondence, N = 3, 4, 5 and symbolic", dictionary},
      {"invariance", A_INV, "module invariance N = 1..6 and solvable flags", invariance},
      {"intertwine", A_TYPEA, "type-A intertwining, N = 1..4", typeA},
      {"typeB", A_TYPEB, "type-B (1,1) component, N = 3..5", typeB},
      {"kernel", A_KERNEL, "osp(2/2) charge kernel, N = 1..3", kernel},
      {"solutions", A_SOLVED, "osp(2/2) N = 1, 2 solutions and flag actions", solved},
      {"closure-n1", A_CL1, "N = 1 closure equivalence", closure_n1},
      {"closure-n2", A_CL2, "N = 2 closure on the derived family", closure_n2},
      {"closure", "closure of the N-fold superalgebra", "N = 1 and N = 2 closure (or a --scenario)",
       both(closure_n1, closure_n2)},
      {"negative", A_NEG, "perturbations that must fail", negative},
      {"transposition", A_TRANS, "non-trivial transposition branch", transposition},
  };
  return reg;
}

inline const SuiteInfo *find_suite(const std::string &name) {
  for (const auto &s : suite_registry())
    if (s.name == name)
      return &s;
  return nullptr;
}

/// Checks for a scenario file; the suite name selects the task unless the
/// scenario names one itself.
inline std::vector<Check> scenario_checks(const std::string &suite, const Scenario &sc, std::optional<int> bound) {
  std::string task = sc.task.value_or(suite);
  if (sc.task && suite != task && find_suite(suite) && suite != "closure-n1" && suite != "closure-n2")
    throw Error("scenario task '" + task + "' does not match suite '" + suite + "'");
  if (task == "closure" || task == "closure-n1" || task == "closure-n2")
    return suites::scenario_closure(sc);
  if (task == "intertwine")
    return suites::scenario_intertwine(sc);
  if (task == "hamiltonian" || task == "tables")
    return suites::scenario_hamiltonian(sc);
  if (task == "dictionary")
    return suites::scenario_dictionary(sc);
  if (task == "transposition")
    return suites::scenario_transposition(sc);
  if (task == "algebra")
    return suites::scenario_algebra(sc);
  if (task == "kernel")
    return suites::scenario_kernel(sc, bound);
  throw Error("unknown scenario task '" + task + "'");
}

/// Thread cap from QSALG_THREADS, else the hardware count.
inline unsigned thread_cap() {
  if (const char *env = std::getenv("QSALG_THREADS")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs checks with at most `threads` in flight; results keep input order.
inline std::vector<CheckRecord> run_checks(const std::vector<Check> &checks, unsigned threads) {
  std::vector<CheckRecord> out(checks.size());
  if (threads <= 1 || checks.size() <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i)
      out[i] = checks[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < checks.size(); i = next++)
      out[i] = checks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, checks.size()); ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  return out;
}

} // namespace qsalg
