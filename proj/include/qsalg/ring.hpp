#pragma once

#include "qsalg/error.hpp"
#include "qsalg/param_poly.hpp"
#include "qsalg/ratfunc.hpp"
#include "qsalg/rational.hpp"
#include "qsalg/symbol.hpp"
#include "qsalg/zpoly.hpp"

namespace qsalg {

inline ParamPoly substitute_params(const ParamPoly &x, const Assignment &a) { return x.substitute(a); }
inline ZPoly substitute_params(const ZPoly &x, const Assignment &a) { return x.substitute(a); }
inline RatFunc substitute_params(const RatFunc &x, const Assignment &a) { return x.substitute(a); }

inline ParamPoly param(std::string_view name) { return ParamPoly::symbol(name); }

/// Polynomial sum_{k<=degree} name_k z^k with fresh symbolic coefficients.
inline ZPoly generic_poly(const std::string &name, int degree) {
  std::vector<ParamPoly> c;
  for (int k = 0; k <= degree; ++k)
    c.push_back(ParamPoly::symbol(name + std::to_string(k)));
  return ZPoly(std::move(c));
}

} // namespace qsalg
