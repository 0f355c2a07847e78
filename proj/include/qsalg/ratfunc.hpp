#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsalg/error.hpp"
#include "qsalg/param_poly.hpp"
#include "qsalg/zpoly.hpp"

namespace qsalg {

/// Rational function num / den in z. The denominator is kept factored: one
/// monic parameter-free polynomial (gcd-reduced against the numerator) times
/// powers of normalized parametric factors. Equality is decided by the
/// numerator of the difference, never by representation.
class RatFunc {
public:
  using Factor = std::pair<ZPoly, int>;

  RatFunc() = default;
  RatFunc(const ZPoly &p) : num_(p) {}                // NOLINT(google-explicit-constructor)
  RatFunc(const ParamPoly &c) : num_(c) {}            // NOLINT(google-explicit-constructor)
  RatFunc(const Rational &c) : num_(ParamPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(ParamPoly(c)) {}             // NOLINT(google-explicit-constructor)
  RatFunc(int c) : num_(ParamPoly(c)) {}              // NOLINT(google-explicit-constructor)
  RatFunc(const ZPoly &num, const ZPoly &den) { *this = RatFunc(num) / RatFunc(den); }

  static RatFunc z(int k = 1) { return RatFunc(ZPoly::z(k)); }

  const ZPoly &num() const { return num_; }
  const ZPoly &pf_den() const { return pf_; }
  const std::vector<Factor> &factors() const { return factors_; }

  /// Expanded denominator.
  ZPoly den() const {
    ZPoly d = pf_;
    for (const auto &[f, e] : factors_)
      d *= f.pow(static_cast<unsigned>(e));
    return d;
  }

  bool is_zero() const { return num_.is_zero(); }
  bool has_trivial_den() const { return factors_.empty() && pf_.degree() == 0; }

  /// Cancels parametric factors that divide the numerator.
  RatFunc reduced() const {
    RatFunc r = *this;
    for (auto &[f, e] : r.factors_) {
      if (!f.lead().is_unit())
        continue;
      while (e > 0) {
        auto [q, rem] = r.num_.divmod(f);
        if (!rem.is_zero())
          break;
        r.num_ = std::move(q);
        --e;
      }
    }
    std::erase_if(r.factors_, [](const Factor &x) { return x.second == 0; });
    return r;
  }

  bool is_polynomial() const { return reduced().has_trivial_den(); }
  ZPoly as_polynomial() const {
    RatFunc r = reduced();
    if (!r.has_trivial_den())
      throw NonPolynomialError("not a polynomial: " + str());
    return r.num_;
  }

  bool is_parameter_free() const { return num_.is_parameter_free() && factors_.empty(); }

  std::set<std::string> symbols() const {
    auto out = num_.symbols();
    for (const auto &[f, e] : factors_)
      out.merge(f.symbols());
    return out;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc &a, const RatFunc &b) { return combine(a, b, false); }
  friend RatFunc operator-(const RatFunc &a, const RatFunc &b) { return combine(a, b, true); }
  RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
  RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
  RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
  RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

  friend RatFunc operator*(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    if (b.has_trivial_den() && b.num_.degree() == 0)
      return a.scaled(b.num_.coeff(0));
    if (a.has_trivial_den() && a.num_.degree() == 0)
      return b.scaled(a.num_.coeff(0));
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.pf_ = a.pf_ * b.pf_;
    r.factors_ = a.factors_;
    for (const auto &[f, e] : b.factors_)
      r.add_factor(f, e);
    r.reduce_pf();
    return r;
  }

  friend RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.inverse(); }

  RatFunc inverse() const {
    if (is_zero())
      throw DivisionByZeroError();
    RatFunc r;
    r.num_ = pf_;
    for (const auto &[f, e] : factors_)
      r.num_ *= f.pow(static_cast<unsigned>(e));
    r.divide_by_poly(num_);
    r.reduce_pf();
    return r;
  }

  RatFunc scaled(const ParamPoly &k) const {
    if (k.is_zero())
      return {};
    RatFunc r = *this;
    r.num_ = r.num_.scaled(k);
    return r;
  }

  RatFunc pow(unsigned e) const {
    RatFunc result(1), base = *this;
    while (e) {
      if (e & 1u)
        result *= base;
      e >>= 1u;
      if (e)
        base *= base;
    }
    return result;
  }

  friend bool operator==(const RatFunc &a, const RatFunc &b) { return (a - b).is_zero(); }

  RatFunc derivative() const {
    if (is_zero())
      return {};
    if (has_trivial_den())
      return RatFunc(num_.derivative().scaled(Rational(1) / pf_.lead().constant()));
    // f = N / (P * prod F_i^e_i), G = prod F_i
    ZPoly G(1);
    for (const auto &[f, e] : factors_)
      G *= f;
    ZPoly sum;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      ZPoly t = factors_[i].first.derivative().scaled(Rational(factors_[i].second));
      for (std::size_t j = 0; j < factors_.size(); ++j)
        if (j != i)
          t *= factors_[j].first;
      sum += t;
    }
    RatFunc r;
    r.num_ = num_.derivative() * pf_ * G - num_ * (pf_.derivative() * G + pf_ * sum);
    r.pf_ = pf_ * pf_;
    r.factors_ = factors_;
    for (auto &[f, e] : r.factors_)
      ++e;
    r.reduce_pf();
    return r;
  }

  RatFunc substitute(const Assignment &values) const {
    return rebuild([&](const ZPoly &p) { return p.substitute(values); });
  }
  RatFunc substitute_ids(const std::map<SymbolId, Rational> &values) const {
    return rebuild([&](const ZPoly &p) { return p.substitute_ids(values); });
  }
  RatFunc substitute_square_root(std::string_view s, const Rational &value) const {
    return rebuild([&](const ZPoly &p) { return p.substitute_square_root(s, value); });
  }
  /// Applies a ring map to every polynomial piece and reassembles.
  template <class F> RatFunc rebuild(F &&f) const {
    RatFunc r(f(num_));
    if (r.is_zero())
      return r;
    ZPoly p = f(pf_);
    if (p.is_zero())
      throw DivisionByZeroError();
    r.divide_by_poly(p);
    for (const auto &[g, e] : factors_) {
      ZPoly q = f(g);
      if (q.is_zero())
        throw DivisionByZeroError();
      for (int i = 0; i < e; ++i)
        r.divide_by_poly(q);
    }
    r.reduce_pf();
    return r;
  }

  /// Value at a rational point; parameter-free input only.
  Rational eval(const Rational &x) const {
    Rational d = den().eval(x);
    if (d.is_zero())
      throw DivisionByZeroError();
    return num_.eval(x) / d;
  }

  std::string str() const {
    RatFunc r = reduced();
    if (r.has_trivial_den())
      return r.num_.str();
    std::string d;
    int pieces = 0;
    if (r.pf_.degree() > 0) {
      d = r.pf_.str();
      ++pieces;
    }
    for (const auto &[f, e] : r.factors_) {
      std::string fs = "(" + f.str() + ")";
      if (e > 1)
        fs += "^" + std::to_string(e);
      d += (d.empty() ? "" : "*") + fs;
      ++pieces;
    }
    if (pieces == 1 && r.factors_.empty() && r.pf_.coeffs().size() > 1 &&
        std::count_if(r.pf_.coeffs().begin(), r.pf_.coeffs().end(),
                      [](const ParamPoly &c) { return !c.is_zero(); }) > 1)
      d = "(" + d + ")";
    return "(" + r.num_.str() + ")/" + (pieces > 1 ? "(" + d + ")" : d);
  }
  friend std::ostream &operator<<(std::ostream &os, const RatFunc &f) { return os << f.str(); }

private:
  static RatFunc combine(const RatFunc &a, const RatFunc &b, bool subtract) {
    if (b.is_zero())
      return a;
    if (a.is_zero())
      return subtract ? -b : b;
    if (a.has_trivial_den() && b.has_trivial_den())
      return subtract ? RatFunc(a.num_ - b.num_) : RatFunc(a.num_ + b.num_);
    RatFunc r;
    ZPoly ma(1), mb(1);
    if (a.pf_ == b.pf_) {
      r.pf_ = a.pf_;
    } else {
      ZPoly g = gcd(a.pf_, b.pf_);
      ma = b.pf_.divmod(g).first;
      mb = a.pf_.divmod(g).first;
      r.pf_ = a.pf_ * ma;
    }
    r.factors_ = a.factors_;
    for (const auto &[f, e] : b.factors_) {
      auto it = r.find_factor(f);
      if (it == r.factors_.end())
        r.factors_.emplace_back(f, e);
      else
        it->second = std::max(it->second, e);
    }
    for (const auto &[f, e] : r.factors_) {
      int ea = a.factor_exponent(f), eb = b.factor_exponent(f);
      if (e > ea)
        ma *= f.pow(static_cast<unsigned>(e - ea));
      if (e > eb)
        mb *= f.pow(static_cast<unsigned>(e - eb));
    }
    ZPoly na = a.num_ * ma, nb = b.num_ * mb;
    r.num_ = subtract ? na - nb : na + nb;
    if (r.num_.is_zero())
      return {};
    r.reduce_pf();
    return r;
  }

  std::vector<Factor>::iterator find_factor(const ZPoly &f) {
    return std::find_if(factors_.begin(), factors_.end(), [&](const Factor &x) { return x.first == f; });
  }
  int factor_exponent(const ZPoly &f) const {
    for (const auto &[g, e] : factors_)
      if (g == f)
        return e;
    return 0;
  }
  void add_factor(const ZPoly &f, int e) {
    auto it = find_factor(f);
    if (it == factors_.end())
      factors_.emplace_back(f, e);
    else
      it->second += e;
  }

  // Multiplies the denominator by p, splitting off the parameter-free z-power
  // and normalizing what remains.
  void divide_by_poly(ZPoly p) {
    if (p.is_zero())
      throw DivisionByZeroError();
    int low = 0;
    while (p.coeff(low).is_zero())
      ++low;
    if (low > 0) {
      pf_ = pf_.shifted(low);
      std::vector<ParamPoly> rest(p.coeffs().begin() + low, p.coeffs().end());
      p = ZPoly(std::move(rest));
    }
    if (p.is_parameter_free()) {
      Rational k = p.lead().constant();
      num_ = num_.scaled(Rational(1) / k);
      pf_ *= p.scaled(Rational(1) / k);
      return;
    }
    if (p.degree() == 0 && p.lead().is_unit()) {
      num_ = num_.scaled(p.lead().unit_inverse());
      return;
    }
    Rational k = p.normalize_scalar();
    num_ = num_.scaled(Rational(1) / k);
    add_factor(p, 1);
  }

  // gcd-reduces the parameter-free denominator against every parameter
  // slice of the numerator.
  void reduce_pf() {
    if (num_.is_zero()) {
      pf_ = ZPoly(1);
      factors_.clear();
      return;
    }
    if (pf_.degree() <= 0)
      return;
    ZPoly g = pf_;
    if (num_.is_parameter_free()) {
      g = gcd(g, num_);
    } else {
      std::map<Monomial, std::vector<ParamPoly>> slices;
      for (int k = 0; k <= num_.degree(); ++k) {
        for (const auto &[m, c] : num_.coeffs()[static_cast<std::size_t>(k)].terms()) {
          auto &v = slices[m];
          if (v.size() <= static_cast<std::size_t>(k))
            v.resize(static_cast<std::size_t>(k) + 1);
          v[static_cast<std::size_t>(k)] = ParamPoly(c);
        }
      }
      for (auto &[m, v] : slices) {
        g = gcd(g, ZPoly(std::move(v)));
        if (g.degree() == 0)
          break;
      }
    }
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      pf_ = pf_.divmod(g).first;
    }
  }

  ZPoly num_;
  ZPoly pf_{1};
  std::vector<Factor> factors_;
};

inline RatFunc derivative(const RatFunc &f) { return f.derivative(); }

/// Antiderivative of a polynomial-valued RatFunc with zero constant term.
inline RatFunc antiderivative(const RatFunc &f) { return RatFunc(f.as_polynomial().antiderivative()); }

} // namespace qsalg
