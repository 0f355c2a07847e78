#pragma once
// Independent checks used by the tests: plain rational evaluation and
// operator action on concrete functions, never the composition engine.

#include <functional>
#include <vector>

#include "qsalg/rational.hpp"
#include "qsalg/matop.hpp"
#include "qsalg/nfold.hpp"

namespace oracle {

using qsalg::MatrixDiffOp;
using qsalg::RatFunc;
using qsalg::Rational;

/// Value and first three derivatives of a function at a point.
struct Jet {
  Rational f, d1, d2, d3;
};

/// A = z^2, Q = -z, alpha = 2/z, differentiated by hand.
inline Jet A_family(const Rational &z) { return {z * z, z * 2, Rational(2), Rational(0)}; }
inline Jet Q_family(const Rational &z) { return {-z, Rational(-1), Rational(0), Rational(0)}; }
inline Jet alpha_family(const Rational &z) {
  return {Rational(2) / z, Rational(-2) / (z * z), Rational(4) / (z * z * z), Rational(-12) / (z * z * z * z)};
}

/// The N = 2 zeroth/first-order constraints and the C1 entries, evaluated
/// pointwise. Returns every quantity that must vanish.
inline std::vector<Rational> n2_constraints_at(const Jet &A, const Jet &Q, const Jet &a) {
  std::vector<Rational> out;
  Rational a2 = a.f * a.f;
  out.push_back(A.d1 * a.d1 + A.f * a.d2);
  out.push_back(Q.f * a.d1 * 4 - A.f * a2 * a.f);
  out.push_back(Q.d3 * 4 - A.d2 * a2 * 3 - A.d1 * a.f * a.d1 * 6 - A.f * (a.f * a.d2 + a.d1 * a.d1) * 2);
  out.push_back(A.d3 * a.f + A.d2 * a.d1 * 2 + A.d1 * a.d2);
  out.push_back(Q.f * a.d2 * 4 + A.d1 * a2 * a.f);
  out.push_back(A.d2 * a2 * 3 + A.d1 * a.f * a.d1 * 6 + A.f * (a.f * a.d2 + a.d1 * a.d1 * 4));
  Rational D1 = -(A.d2 * Q.f - A.d1 * Q.d1 + A.f * Q.d2) * 4 + A.f * A.d1 * a2 + A.f * A.f * a.f * a.d1 * 2;
  Rational D2 = (A.d1 * Q.f * 2 - A.f * Q.d1) * a2 * 2 + A.f * Q.f * a.f * a.d1 * 2 + A.f * A.f * a2 * a2;
  out.push_back(D1);
  out.push_back(D2);
  Rational c22x64 = Q.f * Q.d2 * 32 - Q.d1 * Q.d1 * 16 + (A.f * A.d2 * 2 - A.d1 * A.d1) * a2 * 4 -
                    (A.d1 * Q.f * 2 - A.f * Q.d1) * a2 * 8 - A.f * Q.f * a.f * a.d1 * 16 - A.f * A.f * a2 * a2;
  out.push_back(c22x64);
  return out;
}

/// [X, Y]_kind f computed through operator action only.
inline std::vector<RatFunc> bracket_on(const MatrixDiffOp &X, const MatrixDiffOp &Y, bool anti,
                                       const std::vector<RatFunc> &f) {
  auto xy = X.apply(Y.apply(f)), yx = Y.apply(X.apply(f));
  for (std::size_t i = 0; i < xy.size(); ++i)
    xy[i] = anti ? xy[i] + yx[i] : xy[i] - yx[i];
  return xy;
}

inline std::vector<std::vector<RatFunc>> probe_vectors() {
  RatFunc z = RatFunc::z();
  return {{RatFunc(1), RatFunc(0)},
          {RatFunc(0), RatFunc(1)},
          {z.pow(3) + RatFunc(2), z - RatFunc(Rational(1, 3))},
          {z.pow(5) - z, z.pow(4) + z.pow(2).scaled(7)},
          {RatFunc(1) / (z + RatFunc(1)), z.pow(2) / (z - RatFunc(2))}};
}

/// N = 2 closure applied to f: (2A)^2 shift(P-)(P+ f) - 4[(H+ + C0)^2 f + C1 f],
/// and the same with the charges and Hamiltonians swapped. Both must vanish.
inline std::pair<std::vector<RatFunc>, std::vector<RatFunc>> nf2_by_action(const qsalg::Charge &ch, const RatFunc &A,
                                                                           const MatrixDiffOp &Hm, const MatrixDiffOp &Hp,
                                                                           const MatrixDiffOp &C0, const MatrixDiffOp &C1,
                                                                           const std::vector<RatFunc> &f) {
  RatFunc pre = A.scaled(2).pow(2);
  auto side = [&](const MatrixDiffOp &H, const MatrixDiffOp &P1, const MatrixDiffOp &P2) {
    auto x = H.apply(f), c = C0.apply(f);
    for (std::size_t i = 0; i < f.size(); ++i)
      x[i] = x[i] + c[i];
    auto xx = H.apply(x), cx = C0.apply(x), c1 = C1.apply(f);
    auto lhs = P1.gauge_shift(ch.shift).apply(P2.apply(f));
    for (std::size_t i = 0; i < f.size(); ++i)
      lhs[i] = pre * lhs[i] - RatFunc(4) * (xx[i] + cx[i] + c1[i]);
    return lhs;
  };
  return {side(Hp, ch.minus, ch.plus), side(Hm, ch.plus, ch.minus)};
}

inline bool all_zero(const std::vector<RatFunc> &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

} // namespace oracle
