#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qsalg/error.hpp"
#include "qsalg/param_poly.hpp"
#include "qsalg/rational.hpp"

namespace qsalg {

/// Univariate polynomial in z with ParamPoly coefficients, dense by power.
class ZPoly {
public:
  ZPoly() = default;
  ZPoly(const ParamPoly &c) { // NOLINT(google-explicit-constructor)
    if (!c.is_zero())
      c_.push_back(c);
  }
  ZPoly(const Rational &c) : ZPoly(ParamPoly(c)) {} // NOLINT(google-explicit-constructor)
  ZPoly(long c) : ZPoly(ParamPoly(c)) {}            // NOLINT(google-explicit-constructor)
  ZPoly(int c) : ZPoly(ParamPoly(c)) {}             // NOLINT(google-explicit-constructor)
  explicit ZPoly(std::vector<ParamPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ZPoly monomial(const ParamPoly &c, int k) {
    if (c.is_zero())
      return {};
    std::vector<ParamPoly> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = c;
    return ZPoly(std::move(v));
  }
  static ZPoly z(int k = 1) { return monomial(ParamPoly(1), k); }

  /// Zero polynomial has degree -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<ParamPoly> &coeffs() const { return c_; }
  ParamPoly coeff(int k) const {
    if (k < 0 || k > degree())
      return {};
    return c_[static_cast<std::size_t>(k)];
  }
  const ParamPoly &lead() const { return c_.back(); }

  bool is_parameter_free() const {
    for (const auto &c : c_)
      if (!c.is_constant())
        return false;
    return true;
  }
  bool is_constant() const { return c_.size() <= 1; }

  std::set<std::string> symbols() const {
    std::set<std::string> out;
    for (const auto &c : c_)
      out.merge(c.symbols());
    return out;
  }

  ZPoly operator-() const {
    ZPoly r = *this;
    for (auto &c : r.c_)
      c = -c;
    return r;
  }
  ZPoly &operator+=(const ZPoly &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }
  ZPoly &operator-=(const ZPoly &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  ZPoly &operator*=(const ZPoly &o) {
    *this = *this * o;
    return *this;
  }
  friend ZPoly operator+(ZPoly a, const ZPoly &b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly &b) { return a -= b; }
  friend ZPoly operator*(const ZPoly &a, const ZPoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    if (b.c_.size() == 1)
      return a.scaled(b.c_[0]);
    if (a.c_.size() == 1)
      return b.scaled(a.c_[0]);
    std::vector<ParamPoly> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero())
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero())
          r[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(r));
  }
  friend bool operator==(const ZPoly &a, const ZPoly &b) { return a.c_ == b.c_; }

  ZPoly scaled(const ParamPoly &k) const {
    if (k.is_zero())
      return {};
    ZPoly r = *this;
    for (auto &c : r.c_)
      c *= k;
    r.trim();
    return r;
  }
  ZPoly scaled(const Rational &k) const {
    if (k.is_zero())
      return {};
    ZPoly r = *this;
    for (auto &c : r.c_)
      c = c.scaled(k);
    return r;
  }
  ZPoly shifted(int k) const {
    if (is_zero())
      return {};
    std::vector<ParamPoly> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return ZPoly(std::move(v));
  }

  ZPoly pow(unsigned e) const {
    ZPoly result(1), base = *this;
    while (e) {
      if (e & 1u)
        result *= base;
      e >>= 1u;
      if (e)
        base *= base;
    }
    return result;
  }

  ZPoly derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<ParamPoly> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      v[k - 1] = c_[k].scaled(Rational(static_cast<long>(k)));
    return ZPoly(std::move(v));
  }

  /// Antiderivative with zero constant term.
  ZPoly antiderivative() const {
    if (is_zero())
      return {};
    std::vector<ParamPoly> v(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k)
      v[k + 1] = c_[k].scaled(Rational(1, static_cast<long>(k + 1)));
    return ZPoly(std::move(v));
  }

  /// Division with remainder; needs an invertible (single-term) leading
  /// coefficient in the divisor.
  std::pair<ZPoly, ZPoly> divmod(const ZPoly &d) const {
    if (d.is_zero())
      throw DivisionByZeroError();
    if (!d.lead().is_unit())
      throw Error("divisor leading coefficient is not invertible: " + d.lead().str());
    ParamPoly inv = d.lead().unit_inverse();
    ZPoly r = *this;
    int dd = d.degree();
    if (r.degree() < dd)
      return {ZPoly(), r};
    std::vector<ParamPoly> q(static_cast<std::size_t>(r.degree() - dd + 1));
    while (!r.is_zero() && r.degree() >= dd) {
      int k = r.degree() - dd;
      ParamPoly t = r.lead() * inv;
      q[static_cast<std::size_t>(k)] = t;
      for (int i = 0; i <= dd; ++i)
        r.c_[static_cast<std::size_t>(i + k)] -= t * d.c_[static_cast<std::size_t>(i)];
      r.trim();
    }
    return {ZPoly(std::move(q)), r};
  }

  ZPoly substitute(const Assignment &values) const {
    ZPoly r = *this;
    for (auto &c : r.c_)
      c = c.substitute(values);
    r.trim();
    return r;
  }
  ZPoly substitute_ids(const std::map<SymbolId, Rational> &values) const {
    ZPoly r = *this;
    for (auto &c : r.c_)
      c = c.substitute_ids(values);
    r.trim();
    return r;
  }
  ZPoly substitute_square_root(std::string_view s, const Rational &value) const {
    ZPoly r = *this;
    for (auto &c : r.c_)
      c = c.substitute_square_root(s, value);
    r.trim();
    return r;
  }
  template <class F> ZPoly map_coeffs(F &&f) const {
    ZPoly r = *this;
    for (auto &c : r.c_)
      c = f(c);
    r.trim();
    return r;
  }

  /// Value at a rational point; coefficients must be parameter-free.
  Rational eval(const Rational &x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + it->constant();
    return acc;
  }
  ParamPoly eval(const ParamPoly &x) const {
    ParamPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  /// Scales so that the name-wise leading rational of the leading
  /// coefficient is 1; returns the factor that was divided out.
  Rational normalize_scalar() {
    if (is_zero())
      return Rational(1);
    Rational k = lead().lead_rational();
    if (!k.is_one()) {
      Rational inv = Rational(1) / k;
      for (auto &c : c_)
        c = c.scaled(inv);
    }
    return k;
  }

  std::string str(const std::string &var = "z") const {
    if (is_zero())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const ParamPoly &c = c_[static_cast<std::size_t>(k)];
      if (c.is_zero())
        continue;
      std::string cs = c.str();
      bool compound = c.size() > 1;
      bool negative = !compound && cs[0] == '-';
      if (!first)
        os << (negative ? " - " : " + ");
      else if (negative)
        os << "-";
      if (negative)
        cs = cs.substr(1);
      if (k == 0) {
        os << (compound ? "(" + cs + ")" : cs);
      } else {
        if (compound)
          os << "(" << cs << ")*";
        else if (cs != "1")
          os << cs << "*";
        os << var;
        if (k > 1)
          os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }
  friend std::ostream &operator<<(std::ostream &os, const ZPoly &p) { return os << p.str(); }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero())
      c_.pop_back();
  }

  std::vector<ParamPoly> c_;
};

/// Monic gcd over Q of parameter-free polynomials (Euclid). gcd(0,0) = 0.
inline ZPoly gcd(ZPoly a, ZPoly b) {
  if (!a.is_parameter_free() || !b.is_parameter_free())
    throw Error("gcd requires parameter-free polynomials");
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero())
    return a;
  return a.scaled(Rational(1) / a.lead().constant());
}

} // namespace qsalg
