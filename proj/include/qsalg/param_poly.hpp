#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qsalg/error.hpp"
#include "qsalg/rational.hpp"
#include "qsalg/symbol.hpp"

namespace qsalg {

/// Sorted (symbol, exponent) list with no zero exponents. Exponents may be
/// negative: parameters live in a Laurent polynomial ring, which lets the
/// q(2) fermion normalization 1/sqrt(N) stay exact with sqrt(N) symbolic.
using Monomial = std::vector<std::pair<SymbolId, int>>;

/// Numeric values for parameters, keyed by name.
using Assignment = std::map<std::string, Rational>;

namespace detail {

inline Monomial monomial_mul(const Monomial &a, const Monomial &b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      r.push_back(*i++);
    } else if (j->first < i->first) {
      r.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0)
        r.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  r.insert(r.end(), i, a.end());
  r.insert(r.end(), j, b.end());
  return r;
}

inline Monomial monomial_inverse(const Monomial &a) {
  Monomial r = a;
  for (auto &[id, e] : r)
    e = -e;
  return r;
}

// Name-based key so that printing and normalization do not depend on the
// order in which symbols happened to be interned.
inline std::vector<std::pair<std::string, int>> monomial_key(const Monomial &m) {
  std::vector<std::pair<std::string, int>> key;
  key.reserve(m.size());
  for (const auto &[id, e] : m)
    key.emplace_back(symbol_name(id), e);
  std::sort(key.begin(), key.end());
  return key;
}

inline int monomial_degree(const Monomial &m) {
  int d = 0;
  for (const auto &[id, e] : m)
    d += e;
  return d;
}

} // namespace detail

/// Multivariate (Laurent) polynomial in named parameters over Rational.
class ParamPoly {
public:
  using Terms = std::map<Monomial, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational &c) { // NOLINT(google-explicit-constructor)
    if (!c.is_zero())
      terms_.emplace(Monomial{}, c);
  }
  ParamPoly(long c) : ParamPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)
  ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ParamPoly symbol(std::string_view name, int exponent = 1) {
    return term(Monomial{{intern(name), exponent}}, Rational(1));
  }

  static ParamPoly term(Monomial m, const Rational &c) {
    ParamPoly p;
    if (!c.is_zero()) {
      std::erase_if(m, [](const auto &x) { return x.second == 0; });
      std::sort(m.begin(), m.end());
      p.terms_.emplace(std::move(m), c);
    }
    return p;
  }

  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// The value of a parameter-free polynomial.
  Rational constant() const {
    if (!is_constant())
      throw NonNumericError("expected a numeric constant, got " + str());
    return constant_term();
  }

  /// A single nonzero term is invertible in the Laurent ring.
  bool is_unit() const { return terms_.size() == 1; }
  ParamPoly unit_inverse() const {
    if (!is_unit())
      throw Error("not an invertible monomial: " + str());
    const auto &[m, c] = *terms_.begin();
    return term(detail::monomial_inverse(m), Rational(1) / c);
  }

  /// Coefficient of the name-wise greatest monomial; used to normalize
  /// polynomials up to a rational scalar.
  Rational lead_rational() const {
    if (terms_.empty())
      return Rational(0);
    auto best = terms_.begin();
    auto best_key = detail::monomial_key(best->first);
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
      auto key = detail::monomial_key(it->first);
      if (key > best_key) {
        best = it;
        best_key = std::move(key);
      }
    }
    return best->second;
  }

  std::set<std::string> symbols() const {
    std::set<std::string> out;
    for (const auto &[m, c] : terms_)
      for (const auto &[id, e] : m)
        out.insert(symbol_name(id));
    return out;
  }

  ParamPoly operator-() const {
    ParamPoly r = *this;
    for (auto &[m, c] : r.terms_)
      c = -c;
    return r;
  }

  ParamPoly &operator+=(const ParamPoly &o) {
    for (const auto &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  ParamPoly &operator-=(const ParamPoly &o) {
    for (const auto &[m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  ParamPoly &operator*=(const ParamPoly &o) {
    *this = *this * o;
    return *this;
  }

  friend ParamPoly operator+(ParamPoly a, const ParamPoly &b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly &b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly &a, const ParamPoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    if (b.is_constant())
      return a.scaled(b.constant_term());
    if (a.is_constant())
      return b.scaled(a.constant_term());
    ParamPoly r;
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_)
        r.add_term(detail::monomial_mul(ma, mb), ca * cb);
    return r;
  }

  ParamPoly scaled(const Rational &k) const {
    if (k.is_zero())
      return {};
    ParamPoly r = *this;
    for (auto &[m, c] : r.terms_)
      c *= k;
    return r;
  }

  ParamPoly pow(unsigned e) const {
    ParamPoly result(1), base = *this;
    while (e) {
      if (e & 1u)
        result *= base;
      e >>= 1u;
      if (e)
        base *= base;
    }
    return result;
  }

  friend bool operator==(const ParamPoly &a, const ParamPoly &b) { return a.terms_ == b.terms_; }

  /// Homomorphic image under numeric values for some parameters; the rest
  /// stay symbolic.
  ParamPoly substitute(const Assignment &values) const {
    std::map<SymbolId, Rational> by_id;
    for (const auto &[name, v] : values) {
      auto id = SymbolTable::instance().find(name);
      if (!id)
        throw UnknownSymbolError(name);
      by_id.emplace(*id, v);
    }
    return substitute_ids(by_id);
  }

  ParamPoly substitute_ids(const std::map<SymbolId, Rational> &by_id) const {
    if (by_id.empty())
      return *this;
    ParamPoly r;
    for (const auto &[m, c] : terms_) {
      Rational coeff = c;
      Monomial rest;
      for (const auto &[id, e] : m) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
          rest.emplace_back(id, e);
        } else {
          if (e < 0 && it->second.is_zero())
            throw DivisionByZeroError();
          coeff *= it->second.pow(e);
        }
      }
      r.add_term(rest, coeff);
    }
    return r;
  }

  /// Replaces one symbol by a polynomial. Negative powers need an invertible
  /// replacement.
  ParamPoly substitute_symbol(SymbolId id, const ParamPoly &replacement) const {
    ParamPoly r;
    for (const auto &[m, c] : terms_) {
      ParamPoly factor = term({}, c);
      Monomial rest;
      for (const auto &[sid, e] : m) {
        if (sid != id) {
          rest.emplace_back(sid, e);
          continue;
        }
        ParamPoly base = e < 0 ? replacement.unit_inverse() : replacement;
        factor *= base.pow(static_cast<unsigned>(e < 0 ? -e : e));
      }
      r += factor * term(rest, Rational(1));
    }
    return r;
  }

  /// Maps s^(2k) to value^k. Fails on odd powers of s, which have no
  /// rational image under s = sqrt(value).
  ParamPoly substitute_square_root(std::string_view s, const Rational &value) const {
    auto id = SymbolTable::instance().find(s);
    if (!id)
      throw UnknownSymbolError(std::string(s));
    ParamPoly r;
    for (const auto &[m, c] : terms_) {
      Rational coeff = c;
      Monomial rest;
      for (const auto &[sid, e] : m) {
        if (sid != *id) {
          rest.emplace_back(sid, e);
          continue;
        }
        if (e % 2 != 0)
          throw NonNumericError("odd power of " + std::string(s) + " has no rational image");
        coeff *= value.pow(e / 2);
      }
      r.add_term(rest, coeff);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty())
      return "0";
    std::vector<std::pair<std::vector<std::pair<std::string, int>>, const Rational *>> sorted;
    for (const auto &[m, c] : terms_)
      sorted.emplace_back(detail::monomial_key(m), &c);
    std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto &[key, cp] : sorted) {
      Rational c = *cp;
      if (!first)
        os << (c.sign() < 0 ? " - " : " + ");
      else if (c.sign() < 0)
        os << "-";
      if (c.sign() < 0)
        c = -c;
      bool unit_coeff = c.is_one() && !key.empty();
      if (!unit_coeff)
        os << c;
      bool need_star = !unit_coeff;
      for (const auto &[name, e] : key) {
        if (need_star)
          os << "*";
        os << name;
        if (e != 1)
          os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        need_star = true;
      }
      first = false;
    }
    return os.str();
  }

  friend std::ostream &operator<<(std::ostream &os, const ParamPoly &p) { return os << p.str(); }

private:
  void add_term(const Monomial &m, const Rational &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  Terms terms_;
};

} // namespace qsalg
