#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsalg/linalg.hpp"
#include "qsalg/matop.hpp"
#include "qsalg/modspace.hpp"
#include "qsalg/superalg.hpp"

namespace qsalg {

inline ScalarDiffOp op_pow(const ScalarDiffOp &L, int k) {
  ScalarDiffOp r(1);
  for (int i = 0; i < k; ++i)
    r = r * L;
  return r;
}
inline MatrixDiffOp op_pow(const MatrixDiffOp &L, int k) {
  MatrixDiffOp r = MatrixDiffOp::identity(L.n());
  for (int i = 0; i < k; ++i)
    r = r * L;
  return r;
}

/// d + g
inline ScalarDiffOp shifted_d(const RatFunc &g) { return ScalarDiffOp(std::vector<RatFunc>{g, RatFunc(1)}); }

// ----------------------------------------------------------------- charges

enum class ChargeFamily { Q2Diagonal, Osp };

struct ChargeData {
  ChargeFamily family = ChargeFamily::Q2Diagonal;
  RatFunc alpha;
  RatFunc beta;
};

/// Stripped charges: the pair's z-space prefactor (z')^N is removed from both.
struct Charge {
  MatrixDiffOp minus;
  MatrixDiffOp plus;
  /// P- H- = shift(H+) P- with shift = N A'/(2A)
  RatFunc shift;
};

inline Charge build_charge(const ChargeData &c, const GaugeData &g) {
  if (g.N < 1)
    throw Error("charge order N must be >= 1");
  g.validate();
  int N = g.N;
  ScalarDiffOp dN = ScalarDiffOp::d(N), dN1 = ScalarDiffOp::d(N - 1);
  ScalarDiffOp D = shifted_d(g.covariant_shift());
  ScalarDiffOp DN = op_pow(D, N), DN1 = op_pow(D, N - 1);
  RatFunc sign(N % 2 ? -1 : 1);
  Charge ch;
  ch.shift = g.intertwining_shift();
  if (c.family == ChargeFamily::Q2Diagonal) {
    ch.minus = MatrixDiffOp::scalar(2, dN);
    ch.plus = MatrixDiffOp::scalar(2, DN).scaled(sign);
    return ch;
  }
  ch.minus = MatrixDiffOp{{dN + dN1.scaled(c.beta), 0}, {dN1.scaled(c.alpha), dN}};
  ch.plus = MatrixDiffOp{{DN - DN1 * ScalarDiffOp(c.beta), -(DN1 * ScalarDiffOp(c.alpha))}, {0, DN}}.scaled(sign);
  return ch;
}

/// P- H- - shift(H+) P-
inline MatrixDiffOp intertwine_residual(const MatrixDiffOp &Pm, const RatFunc &shift, const MatrixDiffOp &Hm,
                                        const MatrixDiffOp &Hp) {
  return Pm * Hm - Hp.gauge_shift(shift) * Pm;
}

/// P+ H+ - H- P+ with P+ the functional transpose of P-.
inline MatrixDiffOp conjugate_intertwine_residual(const MatrixDiffOp &Pm, const MatrixDiffOp &Hm,
                                                  const MatrixDiffOp &Hp) {
  MatrixDiffOp Pp = mat_transpose(Pm);
  return Pp * Hp - Hm * Pp;
}

// ---------------------------------------------------------------- type A

struct TypeAData {
  Grid<RatFunc> Q{2};
  Grid<RatFunc> R{2};
};

inline void check_typeA_bounds(const RatFunc &A, const TypeAData &t, int N) {
  if (N >= 2)
    for (const auto &q : t.Q.entries())
      if (!q.is_polynomial() || q.as_polynomial().degree() > 2)
        throw Error("type-A data: Q_ij must be polynomials of degree <= 2 for N >= 2");
  if (N >= 3 && (!A.is_polynomial() || A.as_polynomial().degree() > 4))
    throw Error("type-A data: A must be a polynomial of degree <= 4 for N >= 3");
}

/// (H-, H+) of type A with fold number N (possibly symbolic).
inline std::pair<MatrixDiffOp, MatrixDiffOp> build_typeA_hamiltonians(const RatFunc &A, const ParamPoly &N,
                                                                      const TypeAData &t) {
  if (N.is_constant()) {
    Rational n = N.constant_term();
    if (n.is_integer())
      check_typeA_bounds(A, t, static_cast<int>(n.numerator().get_si()));
  }
  RatFunc A1 = A.derivative(), A2 = A1.derivative();
  std::pair<MatrixDiffOp, MatrixDiffOp> out{MatrixDiffOp(2), MatrixDiffOp(2)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const RatFunc &Q = t.Q(i, j);
      RatFunc Q1 = Q.derivative();
      RatFunc B = Q;
      RatFunc C = Q1.scaled(-(N - 1) * Rational(1, 2)) + t.R(i, j);
      if (i == j) {
        B = B - A1.scaled((N - 2) * Rational(1, 2));
        C = C + A2.scaled((N - 1) * (N - 2) * Rational(1, 12));
      }
      RatFunc extra = (Q1 - A1 * Q / A.scaled(2)).scaled(N);
      std::vector<RatFunc> base{-C, -B};
      if (i == j)
        base.push_back(-A);
      out.first(i, j) = ScalarDiffOp(base);
      base[0] = base[0] - extra;
      out.second(i, j) = ScalarDiffOp(base);
    }
  return out;
}

inline std::pair<MatrixDiffOp, MatrixDiffOp> build_typeA_hamiltonians(const GaugeData &g, const TypeAData &t) {
  return build_typeA_hamiltonians(g.A, ParamPoly(g.N), t);
}

/// Image of the q(2) parameters: a0..a4, b11_0..b22_2 and R11..R22.
inline std::map<std::string, ParamPoly> q2_dictionary(const ParamSet &p, const ParamPoly &N) {
  auto P = [&](const char *n) { return p[n]; };
  std::map<std::string, ParamPoly> d;
  d["a4"] = P("b_pp");
  d["a3"] = P("b_p0");
  d["a2"] = P("b_00");
  d["a1"] = P("b_0m");
  d["a0"] = P("b_mm");
  d["b11_2"] = -P("b_p0") + P("f_p0") + P("b_p");
  d["b11_1"] = -P("b_00") + P("f_00") + P("b_0");
  d["b11_0"] = -P("b_0m") + P("f_m0") + P("b_m");
  d["b12_2"] = P("f_pm");
  d["b12_1"] = P("b_0m") + P("f_0m");
  d["b12_0"] = P("b_mm") * 2 + P("f_mm");
  d["b21_2"] = -P("b_pp") * 2 + P("f_pp");
  d["b21_1"] = -P("b_p0") + P("f_0p");
  d["b21_0"] = P("f_mp");
  d["b22_2"] = -P("f_p0") + P("b_p");
  d["b22_1"] = P("b_00") - P("f_00") + P("b_0");
  d["b22_0"] = -P("f_m0") + P("b_m");
  ParamPoly diag = (N * N + 2) * Rational(1, 12) * P("b_00");
  d["R11"] = diag - (P("f_00") + P("b_0")) * Rational(1, 2) + P("f_mp") + P("f_0") + P("b_J");
  d["R22"] = diag + (P("b_0") - P("f_00")) * Rational(1, 2) - P("f_pm") - P("f_0") + P("b_J");
  d["R12"] = -(P("b_0m") + P("f_0m")) * Rational(1, 2) + P("b_m") + P("f_m") - P("f_m0");
  d["R21"] = (P("b_p0") + P("f_0p")) * Rational(1, 2) - P("b_p") + P("f_p") - P("f_p0");
  return d;
}

/// R_ij with the opposite overall sign and a -(5N^2-12N+10)/12 b_00 term.
/// These do not reproduce the q(2) Hamiltonian; kept for comparison.
inline std::map<std::string, ParamPoly> q2_dictionary_alt_R(const ParamSet &p, const ParamPoly &N) {
  auto P = [&](const char *n) { return p[n]; };
  ParamPoly diag = -(N * N * 5 - N * 12 + 10) * Rational(1, 12) * P("b_00");
  return {
      {"R11", diag + (P("f_00") + P("b_0")) * Rational(1, 2) - P("f_mp") - P("f_0") - P("b_J")},
      {"R12", (P("b_0m") + P("f_0m")) * Rational(1, 2) + P("f_m0") - P("b_m") - P("f_m")},
      {"R21", -(P("b_p0") + P("f_0p")) * Rational(1, 2) + P("f_p0") + P("b_p") - P("f_p")},
      {"R22", diag + (P("f_00") - P("b_0")) * Rational(1, 2) + P("f_pm") + P("f_0") - P("b_J")},
  };
}

inline Q2Params q2_dictionary_inverse(const std::map<std::string, ParamPoly> &d, const ParamPoly &N) {
  auto D = [&](const char *n) {
    auto it = d.find(n);
    if (it == d.end())
      throw UnknownSymbolError(n);
    return it->second;
  };
  Rational h(1, 2);
  Q2Params p;
  p.set("b_pp", D("a4")).set("b_p0", D("a3")).set("b_00", D("a2")).set("b_0m", D("a1")).set("b_mm", D("a0"));
  p.set("f_pm", D("b12_2")).set("f_0m", D("b12_1") - D("a1")).set("f_mm", D("b12_0") - D("a0") * 2);
  p.set("f_pp", D("b21_2") + D("a4") * 2).set("f_0p", D("b21_1") + D("a3")).set("f_mp", D("b21_0"));
  p.set("b_p", (D("b11_2") + D("a3") + D("b22_2")) * h).set("f_p0", (D("b11_2") + D("a3") - D("b22_2")) * h);
  p.set("b_0", (D("b11_1") + D("b22_1")) * h).set("f_00", (D("b11_1") - D("b22_1")) * h + D("a2"));
  p.set("b_m", (D("b11_0") + D("a1") + D("b22_0")) * h).set("f_m0", (D("b11_0") + D("a1") - D("b22_0")) * h);
  p.set("f_m", D("R12") + (D("a1") + p["f_0m"]) * h - p["b_m"] + p["f_m0"]);
  p.set("f_p", D("R21") - (D("a3") + p["f_0p"]) * h + p["b_p"] + p["f_p0"]);
  p.set("b_J", (D("R11") + D("R22") - (N * N + 2) * Rational(1, 6) * D("a2") + p["f_00"] - p["f_mp"] + p["f_pm"]) * h);
  p.set("f_0", (D("R11") - D("R22") + p["b_0"] - p["f_mp"] - p["f_pm"]) * h);
  return p;
}

/// A and type-A data (Q_ij = b_ij,2 z^2 + b_ij,1 z + b_ij,0) from a dictionary image.
inline std::pair<RatFunc, TypeAData> typeA_from_dictionary(const std::map<std::string, ParamPoly> &d) {
  RatFunc A(ZPoly({d.at("a0"), d.at("a1"), d.at("a2"), d.at("a3"), d.at("a4")}));
  TypeAData t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string k = "b" + std::to_string(i + 1) + std::to_string(j + 1) + "_";
      t.Q(i, j) = RatFunc(ZPoly({d.at(k + "0"), d.at(k + "1"), d.at(k + "2")}));
      t.R(i, j) = RatFunc(d.at("R" + std::to_string(i + 1) + std::to_string(j + 1)));
    }
  return {A, t};
}

// ---------------------------------------------------------------- type B

/// (1,1) component -A d^2 - B11 d - C11 of the alpha = 0, beta = -1/z system.
inline ScalarDiffOp build_typeB_11(int N, const std::vector<ParamPoly> &a, const ParamPoly &b11_1,
                                   const ParamPoly &c11_0) {
  if (N < 3)
    throw Error("type-B reduction needs N >= 3");
  if (a.size() != 5)
    throw DimensionMismatchError("expected coefficients a0..a4");
  ParamPoly n(N);
  RatFunc A{ZPoly(a)};
  RatFunc B(ZPoly({-(n - 1) * a[1], b11_1 - (n - 2) * a[2], -(n * 2 - 3) * a[3], -(n - 2) * 2 * a[4]}));
  RatFunc C(ZPoly({c11_0, n * (n - 2) * a[3], n * (n - 3) * a[4]}));
  return ScalarDiffOp(std::vector<RatFunc>{-C, -B, -A});
}

/// Extra kernel vector of the osp charge. beta must be 0 or m/z with integer m.
inline PolyVec kernel_extension_vector(int N, const RatFunc &alpha, const RatFunc &beta) {
  if (N < 1)
    throw Error("N must be >= 1");
  ZPoly a = alpha.as_polynomial();
  if (beta.is_zero()) {
    ZPoly lower = a;
    for (int k = 0; k < N; ++k)
      lower = lower.antiderivative();
    return PolyVec{{ZPoly::z(N - 1), lower.scaled(-factorial(N - 1))}};
  }
  RatFunc zb = beta * RatFunc::z();
  if (!zb.is_polynomial() || zb.as_polynomial().degree() > 0 || !zb.is_parameter_free() ||
      !zb.as_polynomial().coeff(0).constant_term().is_integer())
    throw Error("unsupported beta: only 0 and m/z with integer m");
  long m = zb.as_polynomial().coeff(0).constant_term().numerator().get_si();
  // e^{-int beta} = z^{-m}
  RatFunc weight = RatFunc::z(0);
  if (m > 0)
    weight = RatFunc(1) / RatFunc::z(static_cast<int>(m));
  else
    weight = RatFunc::z(static_cast<int>(-m));
  RatFunc top = weight * beta, bottom = weight * alpha;
  if (!top.is_polynomial() || !bottom.is_polynomial())
    throw NonPolynomialError("kernel extension vector is not polynomial for this beta");
  ZPoly u = top.as_polynomial(), l = bottom.as_polynomial();
  for (int k = 0; k < N; ++k) {
    u = u.antiderivative();
    l = l.antiderivative();
  }
  return PolyVec{{u, l}};
}

// ------------------------------------------------------- osp solved systems

inline ParamSet osp_n1_constants() { return ParamSet({"C11_0", "C12_0", "C21_0", "C22_0"}); }
inline ParamSet osp_n2_constants() {
  std::vector<std::string> names;
  for (const char *x : {"B", "C"})
    for (const char *ij : {"11", "12", "21", "22"})
      for (const char *k : {"1", "0"})
        names.push_back(std::string(x) + ij + "_" + k);
  return ParamSet(names);
}

inline std::pair<MatrixDiffOp, MatrixDiffOp> assemble_pair(const RatFunc &A, const Grid<RatFunc> &B,
                                                           const Grid<RatFunc> &Cm, const Grid<RatFunc> &Cp) {
  SchrodingerData m{A, B, Cm}, p{A, B, Cp};
  return {m.rebuild(), p.rebuild()};
}

/// N = 1 solution of the osp intertwining with beta = 0.
inline std::pair<MatrixDiffOp, MatrixDiffOp> build_osp_n1_solution(const RatFunc &A, const Grid<RatFunc> &B,
                                                                   const RatFunc &alpha, const ParamSet &k) {
  RatFunc Ia = antiderivative(alpha);
  RatFunc Iaa = antiderivative(alpha * Ia);
  RatFunc A1 = A.derivative(), A2 = A1.derivative();
  RatFunc c11 = RatFunc(k["C11_0"]), c12 = RatFunc(k["C12_0"]), c21 = RatFunc(k["C21_0"]), c22 = RatFunc(k["C22_0"]);
  RatFunc common = -A2.scaled(Rational(1, 2)) + A1 * A1 / A.scaled(4);
  auto shiftB = [&](const RatFunc &b) { return -(b * A1) / A.scaled(2) + b.derivative(); };
  RatFunc tail21 = -(c12 * Iaa).scaled(2) + (c22 - c11) * Ia + c21;
  Grid<RatFunc> Cm(2), Cp(2);
  Cm(0, 0) = B(0, 1) * alpha + c12 * Ia + c11;
  Cm(0, 1) = c12;
  Cm(1, 0) = A * alpha.derivative() + B(1, 1) * alpha + tail21;
  Cm(1, 1) = -(c12 * Ia) + c22;
  Cp(0, 0) = common + shiftB(B(0, 0)) + c12 * Ia + c11;
  Cp(0, 1) = shiftB(B(0, 1)) + c12;
  Cp(1, 0) = shiftB(B(1, 0)) - A1 * alpha - A * alpha.derivative() + B(0, 0) * alpha + tail21;
  Cp(1, 1) = common + shiftB(B(1, 1)) + B(0, 1) * alpha - c12 * Ia + c22;
  return assemble_pair(A, B, Cm, Cp);
}

/// B coefficients of the N = 2 solution; constrained applies
/// C11^(1) = C12^(1) = B12^(1) + C12^(0) = 0.
inline Grid<RatFunc> osp_n2_B(const RatFunc &A, const RatFunc &alpha, const ParamSet &k, bool constrained) {
  RatFunc z = RatFunc::z();
  RatFunc Ia = antiderivative(alpha);
  RatFunc IIa = antiderivative(Ia);
  RatFunc zIaz = z * antiderivative(alpha * z);
  auto K = [&](const char *n) { return RatFunc(k[n]); };
  Grid<RatFunc> B(2);
  if (constrained) {
    RatFunc Iaz = antiderivative(alpha * z);
    B(0, 0) = -(K("C12_0") * Iaz) + K("B12_0") * Ia + K("B11_1") * z + K("B11_0");
    B(0, 1) = -(K("C12_0") * z) + K("B12_0");
    B(1, 0) = -((K("B11_1") + K("C11_0") - K("C22_0")) * IIa) + A * alpha - K("C22_1") * zIaz +
              (K("B22_1") * z + K("B22_0")) * Ia - K("C21_1") * RatFunc::z(2) + K("B21_1") * z + K("B21_0");
    B(1, 1) = -(K("C22_1") * RatFunc::z(2)) + K("B22_1") * z + K("B22_0");
    return B;
  }
  RatFunc lin = K("C12_1") * z - K("B12_1") - K("C12_0");
  B(0, 0) = -(K("C12_1") * zIaz) + K("C12_0") * IIa + (K("B12_1") * z + K("B12_0")) * Ia -
            K("C11_1") * RatFunc::z(2) + K("B11_1") * z + K("B11_0");
  B(0, 1) = -(K("C12_1") * RatFunc::z(2)) + K("B12_1") * z + K("B12_0");
  B(1, 0) = (antiderivative(alpha * lin) + K("C11_1") * z - K("B11_1") - K("C11_0") + K("C22_0")) * IIa + A * alpha -
            K("C22_1") * zIaz + (K("B22_1") * z + K("B22_0")) * Ia - K("C21_1") * RatFunc::z(2) + K("B21_1") * z +
            K("B21_0");
  B(1, 1) = lin * IIa - K("C22_1") * RatFunc::z(2) + K("B22_1") * z + K("B22_0");
  return B;
}

/// N = 2 solution of the osp intertwining with beta = 0.
inline std::pair<MatrixDiffOp, MatrixDiffOp> build_osp_n2_solution(const RatFunc &A, const RatFunc &alpha,
                                                                   const ParamSet &k, bool constrained = false) {
  Grid<RatFunc> B = osp_n2_B(A, alpha, k, constrained);
  RatFunc z = RatFunc::z();
  RatFunc IIa = antiderivative(antiderivative(alpha));
  auto K = [&](const std::string &n) { return RatFunc(k[n]); };
  Grid<RatFunc> Cm(2), Cp(2);
  for (int i = 0; i < 2; ++i) {
    std::string c1 = "C1" + std::to_string(i + 1) + "_", c2 = "C2" + std::to_string(i + 1) + "_";
    if (constrained) {
      Cm(0, i) = K(c1 + "0");
      Cm(1, i) = K(c2 + "1") * z + K(c2 + "0");
    } else {
      Cm(0, i) = K(c1 + "1") * z + K(c1 + "0");
      Cm(1, i) = -(K(c1 + "1") * IIa) + K(c2 + "1") * z + K(c2 + "0");
    }
  }
  RatFunc A1 = A.derivative();
  auto shiftB = [&](const RatFunc &b) { return -(b * A1) / A + b.derivative().scaled(2); };
  Cp(0, 0) = shiftB(B(0, 0)) - B(0, 1) * alpha + Cm(0, 0);
  Cp(0, 1) = shiftB(B(0, 1)) + Cm(0, 1);
  Cp(1, 0) = -(A1 * alpha) - (A * alpha.derivative()).scaled(2) + shiftB(B(1, 0)) - (B(1, 1) - B(0, 0)) * alpha +
             Cm(1, 0);
  Cp(1, 1) = shiftB(B(1, 1)) + B(0, 1) * alpha + Cm(1, 1);
  return assemble_pair(A, B, Cm, Cp);
}

// ------------------------------------------------------------- closure

struct ConstantMatrixSet {
  std::vector<Grid<ParamPoly>> C;

  MatrixDiffOp as_operator(std::size_t k) const {
    const auto &g = C.at(k);
    MatrixDiffOp m(g.n());
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j)
        m(i, j) = ScalarDiffOp(g(i, j));
    return m;
  }
  static ConstantMatrixSet zeros(int N) {
    return ConstantMatrixSet{std::vector<Grid<ParamPoly>>(static_cast<std::size_t>(N), Grid<ParamPoly>(2))};
  }
};

/// Prefactor and both stripped products: plus pairs with H+, minus with H-.
struct SuperchargeProducts {
  RatFunc prefactor;
  MatrixDiffOp plus;
  MatrixDiffOp minus;
};

inline SuperchargeProducts supercharge_products(const GaugeData &g, const RatFunc &alpha) {
  g.validate();
  int N = g.N;
  if (N < 1)
    throw Error("N must be >= 1");
  RatFunc sh = g.intertwining_shift(), cs = g.covariant_shift();
  ScalarDiffOp dn = shifted_d(sh), D = shifted_d(cs), Dn = shifted_d(cs + sh);
  ScalarDiffOp dnN = op_pow(dn, N), dnN1 = op_pow(dn, N - 1), DN = op_pow(D, N), DN1 = op_pow(D, N - 1);
  ScalarDiffOp DnN = op_pow(Dn, N), DnN1 = op_pow(Dn, N - 1);
  ScalarDiffOp dN = ScalarDiffOp::d(N), dN1 = ScalarDiffOp::d(N - 1), a(alpha);
  SuperchargeProducts r;
  r.prefactor = g.A.scaled(-2).pow(static_cast<unsigned>(N));
  r.plus = MatrixDiffOp{{dnN * DN, -(dnN * DN1 * a)}, {a * dnN1 * DN, dnN * DN - a * dnN1 * DN1 * a}};
  r.minus = MatrixDiffOp{{DnN * dN - DnN1 * ScalarDiffOp(alpha * alpha) * dN1, -(DnN1 * a * dN)}, {DnN * a * dN1, DnN * dN}};
  return r;
}

struct NamedResidual {
  std::string name;
  MatrixDiffOp residual;
  bool zero() const { return residual.is_zero(); }
};

inline MatrixDiffOp as_residual(const RatFunc &f) { return MatrixDiffOp::scalar(1, ScalarDiffOp(f)); }

/// Coefficient grids of L, one per derivative order.
inline std::vector<Grid<RatFunc>> order_grids(const MatrixDiffOp &L) {
  std::vector<Grid<RatFunc>> out;
  for (int k = 0; k <= L.order(); ++k)
    out.push_back(L.grid().map([&](const ScalarDiffOp &e) { return e.coeff(k); }));
  return out;
}

struct ClosureReport {
  MatrixDiffOp raw_plus;
  MatrixDiffOp raw_minus;
  std::vector<Grid<RatFunc>> orders_plus;
  std::vector<Grid<RatFunc>> orders_minus;
  std::vector<NamedResidual> constraints;
  std::optional<RatFunc> D1, D2;
  std::optional<Grid<RatFunc>> C1;

  bool raw_zero() const { return raw_plus.is_zero() && raw_minus.is_zero(); }
  std::vector<std::string> failures() const {
    std::vector<std::string> f;
    if (!raw_plus.is_zero())
      f.push_back("closure (+)");
    if (!raw_minus.is_zero())
      f.push_back("closure (-)");
    for (const auto &c : constraints)
      if (!c.zero())
        f.push_back(c.name);
    return f;
  }
  bool ok() const { return failures().empty(); }
};

namespace detail {

inline Grid<RatFunc> transpose_grid(const Grid<ParamPoly> &g) {
  Grid<RatFunc> r(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      r(j, i) = RatFunc(g(i, j));
  return r;
}

inline MatrixDiffOp constant_op(const Grid<RatFunc> &g) {
  MatrixDiffOp m(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      m(i, j) = ScalarDiffOp(g(i, j));
  return m;
}

inline void n2_constraints(ClosureReport &r, const GaugeData &g, const RatFunc &alpha, const MatrixDiffOp &Hm,
                           const MatrixDiffOp &Hp, const ConstantMatrixSet &cs) {
  SchrodingerData m = extract_schrodinger(Hm), p = extract_schrodinger(Hp);
  const RatFunc &A = g.A, &Q = g.Q, &a = alpha;
  RatFunc A1 = A.derivative(), A2 = A1.derivative(), A3 = A2.derivative();
  RatFunc Q1 = Q.derivative(), Q2 = Q1.derivative(), Q3 = Q2.derivative();
  RatFunc a1 = a.derivative(), a2 = a1.derivative();
  RatFunc aa = a * a, Aa = A * a;
  auto add = [&](std::string name, const RatFunc &v) { r.constraints.push_back({std::move(name), as_residual(v)}); };
  auto c0 = [&](int i, int j) { return RatFunc(cs.C[0](i, j)); };

  add("alg3 B11 = Q", m.B(0, 0) - Q);
  add("alg3 B22 = Q", m.B(1, 1) - Q);
  add("alg3 2B12 = -A alpha", m.B(0, 1).scaled(2) + Aa);
  add("alg3 2B21 = A alpha", m.B(1, 0).scaled(2) - Aa);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      add("B+ = B- (" + std::to_string(i + 1) + std::to_string(j + 1) + ")", p.B(i, j) - m.B(i, j));

  RatFunc base = Q1.scaled(Rational(3, 2)) - A1 * Q / A;
  add("C2p 11", p.C(0, 0) - (base + (A * aa).scaled(Rational(1, 8)) + c0(0, 0)));
  add("C2p 12", p.C(0, 1) - (-(A1 * a).scaled(Rational(1, 4)) - A * a1 + c0(0, 1)));
  add("C2p 21", p.C(1, 0) - ((Q * a).scaled(Rational(1, 2)) - (A1 * a).scaled(Rational(1, 4)) -
                             (A * a1).scaled(Rational(1, 2)) + c0(1, 0)));
  add("C2p 22", p.C(1, 1) - (base - (A * aa).scaled(Rational(3, 8)) + c0(1, 1)));
  add("C2m 11", m.C(0, 0) - (-Q1.scaled(Rational(1, 2)) - (A * aa).scaled(Rational(3, 8)) + c0(0, 0)));
  add("C2m 12", m.C(0, 1) - ((A1 * a).scaled(Rational(1, 4)) + c0(0, 1)));
  add("C2m 21", m.C(1, 0) - ((Q * a).scaled(Rational(1, 2)) + (A1 * a).scaled(Rational(1, 4)) +
                             (A * a1).scaled(Rational(1, 2)) + c0(1, 0)));
  add("C2m 22", m.C(1, 1) - (-Q1.scaled(Rational(1, 2)) + (A * aa).scaled(Rational(1, 8)) + c0(1, 1)));

  add("aqab1 A'alpha' + A alpha'' = 0", A1 * a1 + A * a2);
  add("aqab1 4Q alpha' - A alpha^3 = 0", (Q * a1).scaled(4) - A * aa * a);
  add("aqab2", Q3.scaled(4) - (A2 * aa).scaled(3) - (A1 * a * a1).scaled(6) - (A * (a * a2 + a1 * a1)).scaled(2));
  add("aqab4", A3 * a + (A2 * a1).scaled(2) + A1 * a2);
  add("aqab5", (Q * a2).scaled(4) + A1 * aa * a);
  add("aqab6", (A2 * aa).scaled(3) + (A1 * a * a1).scaled(6) + A * (a * a2 + (a1 * a1).scaled(4)));

  RatFunc D1 = -(A2 * Q - A1 * Q1 + A * Q2).scaled(4) + A * A1 * aa + (A * A * a * a1).scaled(2);
  RatFunc D2 = ((A1 * Q).scaled(2) - A * Q1).scaled(2) * aa + (A * Q * a * a1).scaled(2) + A * A * aa * aa;
  r.D1 = D1;
  r.D2 = D2;
  add("D1 = 0", D1);
  add("D2' = 0", D2.derivative());
  RatFunc c22 = ((Q * Q2).scaled(32) - (Q1 * Q1).scaled(16) + ((A * A2).scaled(2) - A1 * A1).scaled(4) * aa -
                 ((A1 * Q).scaled(2) - A * Q1).scaled(8) * aa - (A * Q * a * a1).scaled(16) - A * A * aa * aa)
                    .scaled(Rational(1, 64));
  Grid<RatFunc> C1(2);
  C1(1, 1) = c22;
  C1(0, 0) = c22 + D2.scaled(Rational(1, 8));
  C1(0, 1) = C1(1, 0) = (D1 * a).scaled(Rational(1, 16));
  r.C1 = C1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      add("C1 " + std::to_string(i + 1) + std::to_string(j + 1), C1(i, j) - RatFunc(cs.C[1](i, j)));
}

inline void n1_constraints(ClosureReport &r, const GaugeData &g, const RatFunc &alpha, const MatrixDiffOp &Hm,
                           const ConstantMatrixSet &cs) {
  SchrodingerData m = extract_schrodinger(Hm);
  const RatFunc &A = g.A, &Q = g.Q;
  auto add = [&](std::string name, const RatFunc &v) { r.constraints.push_back({std::move(name), as_residual(v)}); };
  RatFunc b = Q + g.A.derivative().scaled(Rational(1, 2));
  add("alg1 B11", m.B(0, 0) - b);
  add("alg1 B22", m.B(1, 1) - b);
  add("alg1 B12 = -A alpha", m.B(0, 1) + A * alpha);
  add("alg1 B21 = A alpha", m.B(1, 0) - A * alpha);
  // Integration constants read back from the solved form of H-.
  RatFunc Ia = antiderivative(alpha), Iaa = antiderivative(alpha * Ia);
  RatFunc c12 = m.C(0, 1);
  RatFunc c22 = m.C(1, 1) + c12 * Ia;
  RatFunc c11 = m.C(0, 0) - m.B(0, 1) * alpha - c12 * Ia;
  RatFunc c21 = m.C(1, 0) - A * alpha.derivative() - m.B(1, 1) * alpha + (c12 * Iaa).scaled(2) - (c22 - c11) * Ia;
  add("alg2 C12 = 0", c12);
  add("alg2 C21 = 0", c21);
  // The constant enters H with the sign of -C, so closure fixes C11 = C22 = +C0.
  add("alg2 C11 = C0", c11 - RatFunc(cs.C[0](0, 0)));
  add("alg2 C22 = C0", c22 - RatFunc(cs.C[0](1, 1)));
  add("alg2 C0 scalar (offdiagonal)", RatFunc(cs.C[0](0, 1)));
  add("alg2 C0 scalar (diagonal)", RatFunc(cs.C[0](0, 0) - cs.C[0](1, 1)));
}

} // namespace detail

/// Gauged closure residual of the N-fold superalgebra. N = 1 and N = 2 also
/// get the decomposed constraints.
inline ClosureReport algebraic_residual(const GaugeData &g, const RatFunc &alpha, const MatrixDiffOp &Hm,
                                        const MatrixDiffOp &Hp, const ConstantMatrixSet &cs) {
  int N = g.N;
  if (static_cast<int>(cs.C.size()) != N)
    throw DimensionMismatchError("constant matrix set must hold C_0 .. C_{N-1}");
  for (const auto &c : cs.C)
    if (c.n() != Hm.n())
      throw DimensionMismatchError("constant matrices must match the operator dimension");
  SuperchargeProducts prod = supercharge_products(g, alpha);
  MatrixDiffOp C0 = cs.as_operator(0);
  RatFunc two_n = RatFunc(2).pow(static_cast<unsigned>(N));
  auto raw = [&](const MatrixDiffOp &P, const MatrixDiffOp &H) {
    MatrixDiffOp X = H + C0;
    MatrixDiffOp rhs = op_pow(X, N);
    for (int k = 1; k < N; ++k)
      rhs += cs.as_operator(static_cast<std::size_t>(k)) * op_pow(X, N - k - 1);
    return P.scaled(prod.prefactor) - rhs.scaled(two_n);
  };
  ClosureReport r;
  r.raw_plus = raw(prod.plus, Hp);
  r.raw_minus = raw(prod.minus, Hm);
  r.orders_plus = order_grids(r.raw_plus);
  r.orders_minus = order_grids(r.raw_minus);

  r.constraints.push_back({"C0 symmetric", as_residual(RatFunc(cs.C[0](0, 1) - cs.C[0](1, 0)))});
  for (int k = 1; k < N; ++k) {
    MatrixDiffOp Ck = cs.as_operator(static_cast<std::size_t>(k));
    MatrixDiffOp CkT = detail::constant_op(detail::transpose_grid(cs.C[static_cast<std::size_t>(k)]));
    for (auto [tag, H] : {std::pair<const char *, const MatrixDiffOp *>{"+", &Hp}, {"-", &Hm}}) {
      MatrixDiffOp X = *H + C0;
      r.constraints.push_back({"Ccon C" + std::to_string(k) + " (" + tag + ")", X * CkT - Ck * X});
    }
  }
  if (N == 1)
    detail::n1_constraints(r, g, alpha, Hm, cs);
  else if (N == 2)
    detail::n2_constraints(r, g, alpha, Hm, Hp, cs);
  return r;
}

// ------------------------------------------------------- transposition

/// Non-trivial solution A = c_A Q_A^2, Q = c_A Q_A (2(N-1) Q_A' + dR) of the
/// transposition conditions, dR = R21 - R12.
inline std::pair<RatFunc, RatFunc> transposition_nontrivial_solution(const RatFunc &QA, const ParamPoly &cA, int N,
                                                                     const ParamPoly &dR) {
  if (QA.is_zero())
    throw Error("Q_A = 0 is the trivial branch (R21 = R12); no (A, Q) is determined");
  if (N >= 2 && (!QA.is_polynomial() || QA.as_polynomial().degree() > 1))
    throw Error("for N >= 2 a non-trivial Q_A must be at most linear (b_A2 = 0)");
  RatFunc A = (QA * QA).scaled(cA);
  RatFunc Q = (QA * (QA.derivative().scaled(2 * (N - 1)) + RatFunc(dR))).scaled(cA);
  return {A, Q};
}

/// Branch that actually satisfies both transposition conditions on the
/// type-A pair: A = c_A Q_A^2 and Q = -c_A dR Q_A. The formula above
/// leaves a C12 residual of dR + Q/(c_A Q_A).
inline std::pair<RatFunc, RatFunc> transposition_symmetric_solution(const RatFunc &QA, const ParamPoly &cA,
                                                                    const ParamPoly &dR) {
  if (QA.is_zero())
    throw Error("Q_A = 0 is the trivial branch (R21 = R12); no (A, Q) is determined");
  return {(QA * QA).scaled(cA), (QA * RatFunc(dR)).scaled(-cA)};
}

/// Type-A data with Q11 = Q22 = Q, Q12 = -Q21 = Q_A and R21 - R12 = dR.
inline TypeAData transposition_typeA_data(const RatFunc &Q, const RatFunc &QA, const ParamPoly &dR) {
  TypeAData t;
  t.Q(0, 0) = t.Q(1, 1) = Q;
  t.Q(0, 1) = QA;
  t.Q(1, 0) = -QA;
  t.R(1, 0) = RatFunc(dR);
  return t;
}

// ------------------------------------------------------- linear systems

/// Augmented rows [a | c] of sum a_i x_i + c = 0, one per z-coefficient of
/// each residual numerator. Residuals must be affine in the unknowns.
inline RationalMatrix linear_equations(const std::vector<RatFunc> &residuals, const std::vector<ParamPoly> &unknowns) {
  std::map<SymbolId, std::size_t> col;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    const auto &t = unknowns[i].terms();
    if (t.size() != 1 || t.begin()->first.size() != 1 || t.begin()->first[0].second != 1)
      throw Error("unknowns must be plain symbols");
    col[t.begin()->first[0].first] = i;
  }
  std::size_t n = unknowns.size();
  RationalMatrix rows;
  for (const auto &f : residuals) {
    if (f.is_zero())
      continue;
    if (!f.factors().empty())
      throw Error("linear_equations: denominators must be free of unknowns");
    const ZPoly &num = f.num();
    for (int e = 0; e <= num.degree(); ++e) {
      const ParamPoly &c = num.coeff(e);
      if (c.is_zero())
        continue;
      std::vector<Rational> row(n + 1);
      for (const auto &[mono, v] : c.terms()) {
        if (mono.empty()) {
          row[n] += v;
          continue;
        }
        auto it = mono.size() == 1 && mono[0].second == 1 ? col.find(mono[0].first) : col.end();
        if (it == col.end())
          throw Error("linear_equations: residual is not affine in the unknowns");
        row[it->second] += v;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Whether the system (augmented rows over ncols unknowns) has a solution.
inline bool consistent(const RationalMatrix &m, int ncols) {
  RationalMatrix coeff;
  for (const auto &row : m)
    coeff.emplace_back(row.begin(), row.begin() + ncols);
  return rank(coeff, ncols) == rank(m, ncols + 1);
}

/// Equality of the (non-empty) solution sets of two affine systems.
inline bool same_solution_set(const RationalMatrix &a, const RationalMatrix &b, int ncols) {
  if (!consistent(a, ncols) || !consistent(b, ncols))
    return false;
  RationalMatrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  int ra = rank(a, ncols + 1), rb = rank(b, ncols + 1);
  return ra == rb && rank(both, ncols + 1) == ra;
}

} // namespace qsalg
