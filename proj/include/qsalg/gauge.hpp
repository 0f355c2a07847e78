#pragma once

#include "qsalg/ring.hpp"

namespace qsalg {

/// z-space gauge data: A, Q and the fold number N.
struct GaugeData {
  RatFunc A;
  RatFunc Q;
  int N = 1;

  void validate() const {
    if (A.is_zero())
      throw Error("gauge data requires A != 0");
  }
  /// B = Q - (N-2) A'/2
  RatFunc B() const { return Q - A.derivative().scaled(ParamPoly(Rational(N - 2, 2))); }
  /// dW/dz = (A' - 2B) / (4A)
  RatFunc W_prime() const { return (A.derivative() - B().scaled(ParamPoly(2))) / A.scaled(ParamPoly(4)); }
  /// Shift of the covariant derivative D = d + Q/A.
  RatFunc covariant_shift() const { return Q / A; }
  /// Shift N A' / (2A) relating the stripped charges of the pair.
  RatFunc intertwining_shift() const { return A.derivative().scaled(ParamPoly(Rational(N, 2))) / A; }
};

} // namespace qsalg
