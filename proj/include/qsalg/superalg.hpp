#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsalg/matop.hpp"
#include "qsalg/modspace.hpp"

namespace qsalg {

using Representation = std::map<std::string, MatrixDiffOp>;

enum class Parity { Bosonic, Fermionic };

struct Relation {
  std::string lhs1, lhs2;
  BracketKind kind;
  std::vector<std::pair<ParamPoly, std::string>> rhs;

  std::string str() const {
    std::string s = (kind == BracketKind::Commutator ? "[" : "{") + lhs1 + ", " + lhs2 +
                    (kind == BracketKind::Commutator ? "]" : "}") + " = ";
    if (rhs.empty())
      return s + "0";
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      std::string c = rhs[i].first.str();
      s += (i ? " + " : "") + (c == "1" ? "" : "(" + c + ")") + rhs[i].second;
    }
    return s;
  }
};

struct BracketSpec {
  std::vector<std::pair<std::string, Parity>> generators;
  std::vector<Relation> relations;

  void validate() const {
    auto declared = [&](const std::string &g) {
      return std::any_of(generators.begin(), generators.end(), [&](const auto &x) { return x.first == g; });
    };
    for (const auto &r : relations) {
      if (!declared(r.lhs1) || !declared(r.lhs2))
        throw Error("relation " + r.str() + " references an undeclared generator");
      for (const auto &[c, g] : r.rhs)
        if (!declared(g))
          throw Error("relation " + r.str() + " references an undeclared generator");
    }
  }
};

struct RelationResidual {
  std::string name;
  MatrixDiffOp residual;
};

inline const MatrixDiffOp &generator(const Representation &rep, const std::string &name) {
  auto it = rep.find(name);
  if (it == rep.end())
    throw Error("representation has no generator '" + name + "'");
  return it->second;
}

/// bracket(lhs) - rhs for every relation.
inline std::vector<RelationResidual> check_relations(const Representation &rep, const BracketSpec &spec) {
  spec.validate();
  std::vector<RelationResidual> out;
  for (const auto &r : spec.relations) {
    MatrixDiffOp res = bracket(generator(rep, r.lhs1), generator(rep, r.lhs2), r.kind);
    for (const auto &[c, g] : r.rhs)
      res -= generator(rep, g).scaled(RatFunc(c));
    out.push_back({r.str(), std::move(res)});
  }
  return out;
}

// ---------------------------------------------------------------- parameters

/// Named parameter values; defaults to one free symbol per name.
class ParamSet {
public:
  explicit ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto &n : names_)
      values_.emplace(n, ParamPoly::symbol(n));
  }

  const std::vector<std::string> &names() const { return names_; }
  const ParamPoly &operator[](const std::string &name) const {
    auto it = values_.find(name);
    if (it == values_.end())
      throw UnknownSymbolError(name);
    return it->second;
  }
  ParamSet &set(const std::string &name, const ParamPoly &v) {
    auto it = values_.find(name);
    if (it == values_.end())
      throw UnknownSymbolError(name);
    it->second = v;
    return *this;
  }
  ParamSet &zero(std::initializer_list<std::string> names) {
    for (const auto &n : names)
      set(n, ParamPoly());
    return *this;
  }
  ParamSet &zero_all() {
    for (const auto &n : names_)
      set(n, ParamPoly());
    return *this;
  }
  ParamSet substitute(const Assignment &a) const {
    ParamSet r = *this;
    for (auto &[n, v] : r.values_)
      v = v.substitute(a);
    return r;
  }

private:
  std::vector<std::string> names_;
  std::map<std::string, ParamPoly> values_;
};

inline const std::vector<std::string> &q2_param_names() {
  static const std::vector<std::string> names{"b_pp", "b_p0", "b_00", "b_0m", "b_mm", "f_pp", "f_pm",
                                              "f_0p", "f_0m", "f_mp", "f_mm", "f_p0", "f_00", "f_m0",
                                              "b_p",  "b_0",  "b_m",  "f_p",  "f_m",  "f_0",  "b_J"};
  return names;
}
inline const std::vector<std::string> &osp_param_names() {
  static const std::vector<std::string> names{"b_pp", "b_p0", "b_pm", "b_0m", "b_mm", "b_pJ", "b_0J",
                                              "b_mJ", "f_pp", "f_pm", "f_0m", "f_mm", "b_p",  "b_0",
                                              "b_m",  "b_J",  "f_p",  "f_m",  "fbar_p", "fbar_m", "b_I"};
  return names;
}

struct Q2Params : ParamSet {
  Q2Params() : ParamSet(q2_param_names()) {}
};
struct OspParams : ParamSet {
  OspParams() : ParamSet(osp_param_names()) {}
};

namespace detail {

inline ScalarDiffOp op(std::initializer_list<RatFunc> coeffs) { return ScalarDiffOp(std::vector<RatFunc>(coeffs)); }
inline RatFunc rf(const ParamPoly &p) { return RatFunc(p); }
inline RatFunc zp(const ParamPoly &c, int k) { return RatFunc(ZPoly::monomial(c, k)); }
inline ParamPoly half(const ParamPoly &p) { return p.scaled(Rational(1, 2)); }

} // namespace detail

// ------------------------------------------------------------------- q(2)

/// The 2x2 differential representation of q(2) on (V_N, V_N) with
/// sqrt(N) = s and N = s^2. s must be invertible (a symbol or nonzero number).
inline Representation build_q2_rep(const ParamPoly &s) {
  using detail::op;
  ParamPoly N = s * s;
  ParamPoly inv_s = s.unit_inverse();
  RatFunc z = RatFunc::z();
  // t = z^2 d - (N-1) z
  ScalarDiffOp t = op({z.scaled(-(N - 1)), RatFunc::z(2)});
  Representation r;
  r["J"] = MatrixDiffOp::scalar(2, ScalarDiffOp(RatFunc(detail::half(N))));
  r["T+"] = MatrixDiffOp{{t, 0}, {-1, t}};
  r["T0"] = MatrixDiffOp{{op({RatFunc(-detail::half(N)), z}), 0},
                         {0, op({RatFunc(-detail::half(N - 2)), z})}};
  r["T-"] = MatrixDiffOp{{ScalarDiffOp::d(), 1}, {0, ScalarDiffOp::d()}};
  r["Q+"] = MatrixDiffOp{{0, 0}, {ScalarDiffOp(s), 0}};
  r["Q0"] = MatrixDiffOp{{ScalarDiffOp(-detail::half(s)), 0}, {0, ScalarDiffOp(detail::half(s))}};
  r["Q-"] = MatrixDiffOp{{0, ScalarDiffOp(s)}, {0, 0}};
  MatrixDiffOp qb{{op({RatFunc(-detail::half(N)), z}), t},
                  {-ScalarDiffOp::d(), op({RatFunc(detail::half(N - 2)), -z})}};
  r["Qbar"] = qb.scaled(RatFunc(-inv_s));
  return r;
}

inline BracketSpec q2_bracket_spec() {
  using K = BracketKind;
  ParamPoly one(1), two(2), mone(-1), mtwo(-2);
  BracketSpec b;
  b.generators = {{"J", Parity::Bosonic},    {"T+", Parity::Bosonic},    {"T0", Parity::Bosonic},
                  {"T-", Parity::Bosonic},   {"Q+", Parity::Fermionic},  {"Q0", Parity::Fermionic},
                  {"Q-", Parity::Fermionic}, {"Qbar", Parity::Fermionic}};
  b.relations = {
      {"T0", "T+", K::Commutator, {{one, "T+"}}},
      {"T0", "T-", K::Commutator, {{mone, "T-"}}},
      {"T+", "T-", K::Commutator, {{mtwo, "T0"}}},
      {"Q+", "T0", K::Commutator, {{mone, "Q+"}}},
      {"Q-", "T0", K::Commutator, {{one, "Q-"}}},
      {"Q+", "T-", K::Commutator, {{two, "Q0"}}},
      {"Q-", "T+", K::Commutator, {{two, "Q0"}}},
      {"Q0", "T+", K::Commutator, {{mone, "Q+"}}},
      {"Q0", "T-", K::Commutator, {{mone, "Q-"}}},
      {"Q+", "Q-", K::Anticommutator, {{two, "J"}}},
      {"Q+", "Qbar", K::Anticommutator, {{mone, "T+"}}},
      {"Q-", "Qbar", K::Anticommutator, {{one, "T-"}}},
      {"Q0", "Q0", K::Anticommutator, {{one, "J"}}},
      {"Qbar", "Qbar", K::Anticommutator, {{one, "J"}}},
      {"Q0", "Qbar", K::Anticommutator, {{one, "T0"}}},
  };
  return b;
}

/// Residuals of the product identities of the q(2) representation.
inline std::vector<RelationResidual> check_q2_identities(const Representation &rep, const ParamPoly &s) {
  const auto &J = generator(rep, "J"), &Tp = generator(rep, "T+"), &T0 = generator(rep, "T0"),
             &Tm = generator(rep, "T-"), &Qp = generator(rep, "Q+"), &Q0 = generator(rep, "Q0"),
             &Qm = generator(rep, "Q-"), &Qb = generator(rep, "Qbar");
  RatFunc S(s);
  MatrixDiffOp I = MatrixDiffOp::identity(J.n());
  std::vector<RelationResidual> out;
  out.push_back({"T+T- = T0^2 - T0 - s*Qbar - J^2", Tp * Tm - (T0 * T0 - T0 - Qb.scaled(S) - J * J)});
  out.push_back({"Q+Q- = J + s*Q0", Qp * Qm - (J + Q0.scaled(S))});
  out.push_back({"N*Qbar = -T+Q- + 2T0Q0 + T-Q+ - s",
                 Qb.scaled(S * S) - (-(Tp * Qm) + (T0 * Q0).scaled(RatFunc(2)) + Tm * Qp - I.scaled(S))});
  out.push_back({"2Q+Q0 = -s*Q+", (Qp * Q0).scaled(RatFunc(2)) + Qp.scaled(S)});
  out.push_back({"2Q-Q0 = s*Q-", (Qm * Q0).scaled(RatFunc(2)) - Qm.scaled(S)});
  return out;
}

/// The enveloping-algebra Hamiltonian built from q(2) generator products.
inline MatrixDiffOp build_q2_hamiltonian(const ParamSet &p, const ParamPoly &s) {
  Representation r = build_q2_rep(s);
  ParamPoly inv_s = s.unit_inverse();
  auto T = [&](const std::string &i) -> const MatrixDiffOp & { return r.at("T" + i); };
  auto Q = [&](const std::string &i) -> const MatrixDiffOp & { return r.at("Q" + i); };
  auto tag = [](const std::string &i) { return i == "+" ? std::string("p") : i == "-" ? std::string("m") : i; };
  MatrixDiffOp H(2);
  for (auto [i, j] : std::vector<std::pair<std::string, std::string>>{{"+", "+"}, {"+", "0"}, {"0", "0"}, {"0", "-"}, {"-", "-"}})
    H -= (T(i) * T(j)).scaled(RatFunc(p["b_" + tag(i) + tag(j)]));
  for (std::string i : {"+", "0", "-"}) {
    for (std::string j : {"+", "-"})
      H -= (T(i) * Q(j)).scaled(RatFunc(p["f_" + tag(i) + tag(j)] * inv_s));
    H += (T(i) * Q("0")).scaled(RatFunc(p["f_" + tag(i) + "0"] * inv_s * 2));
    H -= T(i).scaled(RatFunc(p["b_" + tag(i)]));
  }
  for (std::string i : {"+", "-"})
    H -= Q(i).scaled(RatFunc(p["f_" + tag(i)] * inv_s));
  H += Q("0").scaled(RatFunc(p["f_0"] * inv_s * 2));
  H -= r.at("J").scaled(RatFunc(p["b_J"] * (s * s).unit_inverse() * 2));
  return H;
}

/// The closed-form A, B, C polynomials of the q(2) Hamiltonian.
inline SchrodingerData q2_coefficient_table(const ParamSet &p, const ParamPoly &s) {
  using detail::half;
  ParamPoly N = s * s;
  auto P = [&](const char *n) { return p[n]; };
  auto poly = [](std::vector<ParamPoly> c) { return RatFunc(ZPoly(std::move(c))); };
  SchrodingerData h{poly({P("b_mm"), P("b_0m"), P("b_00"), P("b_p0"), P("b_pp")}), Grid<RatFunc>(2), Grid<RatFunc>(2)};
  h.B(0, 0) = poly({-half(N) * P("b_0m") + P("f_m0") + P("b_m"), -((N - 1) * P("b_00") - P("f_00") - P("b_0")),
                    -(half(N * 3 - 4) * P("b_p0") - P("f_p0") - P("b_p")), -(N - 2) * P("b_pp") * 2});
  h.C(0, 0) = poly({(N * N).scaled(Rational(1, 4)) * P("b_00") - half(N) * (P("f_00") + P("b_0")) + P("f_mp") +
                        P("f_0") + P("b_J"),
                    (N - 1) * (half(N) * P("b_p0") - P("f_p0") - P("b_p")), (N - 1) * (N - 2) * P("b_pp")});
  h.B(0, 1) = poly({P("b_mm") * 2 + P("f_mm"), P("b_0m") + P("f_0m"), P("f_pm")});
  h.C(0, 1) = poly({-half(N) * (P("b_0m") + P("f_0m")) - P("f_m0") + P("b_m") + P("f_m"), -(N - 1) * P("f_pm")});
  h.B(1, 0) = poly({P("f_mp"), -(P("b_p0") - P("f_0p")), -(P("b_pp") * 2 - P("f_pp"))});
  h.C(1, 0) = poly({half(N) * P("b_p0") - half(N - 2) * P("f_0p") - P("f_p0") - P("b_p") + P("f_p"),
                    (N - 1) * (P("b_pp") * 2 - P("f_pp"))});
  h.B(1, 1) = poly({-half(N - 2) * P("b_0m") - P("f_m0") + P("b_m"), -((N - 3) * P("b_00") + P("f_00") - P("b_0")),
                    -(half((N - 2) * 3) * P("b_p0") + P("f_p0") - P("b_p")), -(N - 2) * P("b_pp") * 2});
  h.C(1, 1) = poly({((N - 2) * (N - 2)).scaled(Rational(1, 4)) * P("b_00") + half(N - 2) * (P("f_00") - P("b_0")) -
                        P("f_pm") - P("f_0") + P("b_J"),
                    (N - 1) * (half(N - 2) * P("b_p0") + P("f_p0") - P("b_p")), (N - 1) * (N - 2) * P("b_pp")});
  return h;
}

/// Parameters that must vanish for the q(2) Hamiltonian to preserve the
/// whole flag V_1 < V_2 < ...
inline std::vector<std::string> q2_solvable_zeros() { return {"b_pp", "b_p0", "f_pp", "f_pm", "f_p0", "b_p"}; }

// ------------------------------------------------------------- osp(2/2)

/// The 2x2 differential representation of osp(2/2) on (V_{N-1}, V_N).
inline Representation build_osp_rep(const ParamPoly &N) {
  using detail::op;
  RatFunc z = RatFunc::z();
  Representation r;
  r["J"] = MatrixDiffOp{{ScalarDiffOp(-detail::half(N)), 0}, {0, ScalarDiffOp(-detail::half(N - 1))}};
  r["T+"] = MatrixDiffOp{{op({z.scaled(-(N - 2)), RatFunc::z(2)}), 0}, {0, op({z.scaled(-(N - 1)), RatFunc::z(2)})}};
  r["T0"] = MatrixDiffOp{{op({RatFunc(-detail::half(N - 2)), z}), 0}, {0, op({RatFunc(-detail::half(N - 1)), z})}};
  r["T-"] = MatrixDiffOp::scalar(2, ScalarDiffOp::d());
  r["Q+"] = MatrixDiffOp{{0, 0}, {ScalarDiffOp(z), 0}};
  r["Q-"] = MatrixDiffOp{{0, 0}, {1, 0}};
  r["Qbar+"] = MatrixDiffOp{{0, op({RatFunc(-(N - 1)), z})}, {0, 0}};
  r["Qbar-"] = MatrixDiffOp{{0, -ScalarDiffOp::d()}, {0, 0}};
  return r;
}

inline BracketSpec osp_bracket_spec() {
  using K = BracketKind;
  ParamPoly one(1), mone(-1), mtwo(-2), h(Rational(1, 2)), mh(Rational(-1, 2));
  BracketSpec b;
  b.generators = {{"J", Parity::Bosonic},     {"T+", Parity::Bosonic},    {"T0", Parity::Bosonic},
                  {"T-", Parity::Bosonic},    {"Q+", Parity::Fermionic},  {"Q-", Parity::Fermionic},
                  {"Qbar+", Parity::Fermionic}, {"Qbar-", Parity::Fermionic}};
  b.relations = {
      {"T0", "T+", K::Commutator, {{one, "T+"}}},
      {"T0", "T-", K::Commutator, {{mone, "T-"}}},
      {"T+", "T-", K::Commutator, {{mtwo, "T0"}}},
      {"Qbar+", "T0", K::Commutator, {{mh, "Qbar+"}}},
      {"Qbar-", "T0", K::Commutator, {{h, "Qbar-"}}},
      {"Q+", "J", K::Commutator, {{mh, "Q+"}}},
      {"Q-", "J", K::Commutator, {{mh, "Q-"}}},
      {"Qbar+", "J", K::Commutator, {{h, "Qbar+"}}},
      {"Qbar-", "J", K::Commutator, {{h, "Qbar-"}}},
      {"Q-", "T+", K::Commutator, {{one, "Q+"}}},
      {"Q+", "T-", K::Commutator, {{mone, "Q-"}}},
      {"Qbar-", "T+", K::Commutator, {{mone, "Qbar+"}}},
      {"Qbar+", "T-", K::Commutator, {{one, "Qbar-"}}},
      {"Q+", "T0", K::Commutator, {{mh, "Q+"}}},
      {"Q-", "T0", K::Commutator, {{h, "Q-"}}},
      {"Qbar+", "Q+", K::Anticommutator, {{one, "T+"}}},
      {"Qbar-", "Q-", K::Anticommutator, {{mone, "T-"}}},
      {"Qbar+", "Q-", K::Anticommutator, {{one, "J"}, {one, "T0"}}},
      {"Qbar-", "Q+", K::Anticommutator, {{one, "J"}, {mone, "T0"}}},
  };
  return b;
}

/// The enveloping-algebra Hamiltonian built from osp(2/2) generator products.
inline MatrixDiffOp build_osp_hamiltonian(const ParamSet &p, const ParamPoly &N) {
  Representation r = build_osp_rep(N);
  auto G = [&](const std::string &g) -> const MatrixDiffOp & { return r.at(g); };
  auto c = [&](const char *name) { return RatFunc(p[name]); };
  MatrixDiffOp H(2);
  H -= (G("T+") * G("T+")).scaled(c("b_pp"));
  H -= (G("T+") * G("T0")).scaled(c("b_p0"));
  H -= (G("T+") * G("T-")).scaled(c("b_pm"));
  H -= (G("T0") * G("T-")).scaled(c("b_0m"));
  H -= (G("T-") * G("T-")).scaled(c("b_mm"));
  H -= (G("T+") * G("J")).scaled(c("b_pJ"));
  H -= (G("T0") * G("J")).scaled(c("b_0J"));
  H -= (G("T-") * G("J")).scaled(c("b_mJ"));
  H -= (G("T+") * G("Q+")).scaled(c("f_pp"));
  H -= (G("T+") * G("Q-")).scaled(c("f_pm"));
  H -= (G("T0") * G("Q-")).scaled(c("f_0m"));
  H -= (G("T-") * G("Q-")).scaled(c("f_mm"));
  H -= G("T+").scaled(c("b_p"));
  H -= G("T0").scaled(c("b_0"));
  H -= G("T-").scaled(c("b_m"));
  H -= G("J").scaled(c("b_J"));
  H -= G("Q+").scaled(c("f_p"));
  H -= G("Q-").scaled(c("f_m"));
  H -= G("Qbar+").scaled(c("fbar_p"));
  H -= G("Qbar-").scaled(c("fbar_m"));
  H -= MatrixDiffOp::identity(2).scaled(c("b_I"));
  return H;
}

/// The closed-form coefficient polynomials of the osp(2/2) Hamiltonian for
/// N >= 3 (N may be symbolic).
inline SchrodingerData osp_coefficient_table(const ParamSet &p, const ParamPoly &N) {
  using detail::half;
  auto P = [&](const char *n) { return p[n]; };
  auto poly = [](std::vector<ParamPoly> c) { return RatFunc(ZPoly(std::move(c))); };
  SchrodingerData h{poly({P("b_mm"), P("b_0m"), P("b_pm"), P("b_p0"), P("b_pp")}), Grid<RatFunc>(2), Grid<RatFunc>(2)};
  h.B(0, 0) = poly({-half(N - 2) * P("b_0m") - half(N) * P("b_mJ") + P("b_m"),
                    -((N - 2) * P("b_pm") + half(N) * P("b_0J") - P("b_0")),
                    -(half(N * 3 - 8) * P("b_p0") + half(N) * P("b_pJ") - P("b_p")), -(N - 3) * P("b_pp") * 2});
  h.C(0, 0) = poly({(N * (N - 2)).scaled(Rational(1, 4)) * P("b_0J") - half(N - 2) * P("b_0") - half(N) * P("b_J") + P("b_I"),
                    (N - 2) * (half(N - 2) * P("b_p0") + half(N) * P("b_pJ") - P("b_p")), (N - 2) * (N - 3) * P("b_pp")});
  h.B(0, 1) = poly({-P("fbar_m"), P("fbar_p")});
  h.C(0, 1) = poly({-(N - 1) * P("fbar_p")});
  h.B(1, 0) = poly({P("f_mm"), P("f_0m"), P("f_pm"), P("f_pp")});
  h.C(1, 0) = poly({-half(N - 1) * P("f_0m") + P("f_m"), -((N - 1) * P("f_pm") - P("f_p")), -(N - 2) * P("f_pp")});
  h.B(1, 1) = poly({-half(N - 1) * (P("b_0m") + P("b_mJ")) + P("b_m"),
                    -((N - 1) * P("b_pm") + half(N - 1) * P("b_0J") - P("b_0")),
                    -(half(N * 3 - 5) * P("b_p0") + half(N - 1) * P("b_pJ") - P("b_p")), -(N - 2) * P("b_pp") * 2});
  h.C(1, 1) = poly({((N - 1) * (N - 1)).scaled(Rational(1, 4)) * P("b_0J") - half(N - 1) * (P("b_0") + P("b_J")) + P("b_I"),
                    (N - 1) * (half(N - 1) * (P("b_p0") + P("b_pJ")) - P("b_p")), (N - 1) * (N - 2) * P("b_pp")});
  return h;
}

/// N = 2 family: free functions A, B11ad, B21ad and nine parameters
/// (b_p, b_0, b_m, b_I, b_J, f_p, f_m, fbar_p, fbar_m).
inline SchrodingerData osp_n2_table(const ParamSet &p, const RatFunc &A, const RatFunc &B11ad, const RatFunc &B21ad) {
  using detail::half;
  auto P = [&](const char *n) { return p[n]; };
  auto poly = [](std::vector<ParamPoly> c) { return RatFunc(ZPoly(std::move(c))); };
  SchrodingerData h{A, Grid<RatFunc>(2), Grid<RatFunc>(2)};
  h.B(0, 0) = B11ad;
  h.C(0, 0) = poly({P("b_I") - P("b_J")});
  h.B(0, 1) = poly({-P("fbar_m"), P("fbar_p")});
  h.C(0, 1) = poly({-P("fbar_p")});
  h.B(1, 0) = B21ad;
  h.C(1, 0) = poly({P("f_m"), P("f_p")});
  h.B(1, 1) = poly({half(P("b_m")), half(P("b_0")), half(P("b_p"))});
  h.C(1, 1) = poly({-P("b_0").scaled(Rational(1, 4)) - half(P("b_J")) + P("b_I"), -half(P("b_p"))});
  return h;
}

/// N = 1 family: everything free except C12 = 0 and C22 = c0.
inline SchrodingerData osp_n1_table(const RatFunc &A, const Grid<RatFunc> &B, const RatFunc &C11, const RatFunc &C21,
                                    const ParamPoly &c0) {
  SchrodingerData h{A, B, Grid<RatFunc>(2)};
  h.C(0, 0) = C11;
  h.C(0, 1) = RatFunc();
  h.C(1, 0) = C21;
  h.C(1, 1) = RatFunc(c0);
  return h;
}

/// Parameters that must vanish for the osp(2/2) Hamiltonian to preserve the
/// whole flag. Besides the T+ terms this includes T+J and Qbar+, which also
/// map the top of the flag outside it.
inline std::vector<std::string> osp_solvable_zeros() { return {"b_pp", "b_p0", "b_pJ", "f_pp", "f_pm", "b_p", "fbar_p"}; }

/// Type-A monomial stacks (V_N, V_N) for q(2) and (V_{N-1}, V_N) for osp(2/2).
inline MonomialModule q2_module(int N) { return MonomialModule::stack(MonomialModule::type_a(N), MonomialModule::type_a(N)); }
inline MonomialModule osp_module(int N) {
  return MonomialModule::stack(MonomialModule::type_a(N - 1), MonomialModule::type_a(N));
}

} // namespace qsalg
