#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qsalg/ring.hpp"

namespace qsalg {

/// Linear differential operator sum_k c_k(z) d^k, coefficients on the left.
class ScalarDiffOp {
public:
  ScalarDiffOp() = default;
  ScalarDiffOp(const RatFunc &c) { // NOLINT(google-explicit-constructor)
    if (!c.is_zero())
      c_.push_back(c);
  }
  ScalarDiffOp(const ZPoly &c) : ScalarDiffOp(RatFunc(c)) {}     // NOLINT(google-explicit-constructor)
  ScalarDiffOp(const ParamPoly &c) : ScalarDiffOp(RatFunc(c)) {} // NOLINT(google-explicit-constructor)
  ScalarDiffOp(const Rational &c) : ScalarDiffOp(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  ScalarDiffOp(long c) : ScalarDiffOp(RatFunc(c)) {}             // NOLINT(google-explicit-constructor)
  ScalarDiffOp(int c) : ScalarDiffOp(RatFunc(c)) {}              // NOLINT(google-explicit-constructor)
  explicit ScalarDiffOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ScalarDiffOp term(const RatFunc &c, int k) {
    if (c.is_zero())
      return {};
    std::vector<RatFunc> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = c;
    return ScalarDiffOp(std::move(v));
  }
  static ScalarDiffOp d(int k = 1) { return term(RatFunc(1), k); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RatFunc> &coeffs() const { return c_; }
  RatFunc coeff(int k) const {
    if (k < 0 || k > order())
      return {};
    return c_[static_cast<std::size_t>(k)];
  }

  ScalarDiffOp operator-() const {
    ScalarDiffOp r = *this;
    for (auto &c : r.c_)
      c = -c;
    return r;
  }
  ScalarDiffOp &operator+=(const ScalarDiffOp &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }
  ScalarDiffOp &operator-=(const ScalarDiffOp &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend ScalarDiffOp operator+(ScalarDiffOp a, const ScalarDiffOp &b) { return a += b; }
  friend ScalarDiffOp operator-(ScalarDiffOp a, const ScalarDiffOp &b) { return a -= b; }
  friend ScalarDiffOp operator*(const ScalarDiffOp &a, const ScalarDiffOp &b) { return compose(a, b); }
  ScalarDiffOp &operator*=(const ScalarDiffOp &o) { return *this = compose(*this, o); }

  /// Left multiplication by a function: f * L.
  ScalarDiffOp scaled(const RatFunc &f) const {
    if (f.is_zero())
      return {};
    ScalarDiffOp r = *this;
    for (auto &c : r.c_)
      c = f * c;
    r.trim();
    return r;
  }

  friend bool operator==(const ScalarDiffOp &a, const ScalarDiffOp &b) { return (a - b).is_zero(); }

  /// L after M. Uses d^i c = sum_k C(i,k) c^(k) d^(i-k).
  friend ScalarDiffOp compose(const ScalarDiffOp &L, const ScalarDiffOp &M) {
    if (L.is_zero() || M.is_zero())
      return {};
    std::vector<RatFunc> out(static_cast<std::size_t>(L.order() + M.order() + 1));
    for (int j = 0; j <= M.order(); ++j) {
      const RatFunc &m = M.c_[static_cast<std::size_t>(j)];
      if (m.is_zero())
        continue;
      RatFunc dm = m; // m^(k)
      for (int k = 0; k <= L.order(); ++k) {
        if (k > 0) {
          dm = dm.derivative();
          if (dm.is_zero())
            break;
        }
        for (int i = k; i <= L.order(); ++i) {
          const RatFunc &l = L.c_[static_cast<std::size_t>(i)];
          if (l.is_zero())
            continue;
          RatFunc t = l * dm;
          Rational b = binomial(i, k);
          if (!b.is_one())
            t = t.scaled(ParamPoly(b));
          out[static_cast<std::size_t>(i - k + j)] += t;
        }
      }
    }
    return ScalarDiffOp(std::move(out));
  }

  /// sum_k c_k f^(k)
  RatFunc apply(const RatFunc &f) const {
    RatFunc acc, df = f;
    for (int k = 0; k <= order(); ++k) {
      if (k > 0)
        df = df.derivative();
      if (df.is_zero())
        break;
      if (!c_[static_cast<std::size_t>(k)].is_zero())
        acc += c_[static_cast<std::size_t>(k)] * df;
    }
    return acc;
  }

  /// (c d^k)^T = (-d)^k o c
  ScalarDiffOp transpose() const {
    std::vector<RatFunc> out(c_.size());
    for (int k = 0; k <= order(); ++k) {
      RatFunc dc = c_[static_cast<std::size_t>(k)];
      for (int m = 0; m <= k && !dc.is_zero(); ++m) {
        if (m > 0)
          dc = dc.derivative();
        Rational b = binomial(k, m);
        if (k % 2)
          b = -b;
        out[static_cast<std::size_t>(k - m)] += dc.scaled(ParamPoly(b));
      }
    }
    return ScalarDiffOp(std::move(out));
  }

  /// Substitutes d -> d + g, i.e. conjugation by exp(-int g).
  ScalarDiffOp gauge_shift(const RatFunc &g) const {
    if (g.is_zero() || is_zero())
      return *this;
    ScalarDiffOp D = d(1) + ScalarDiffOp(g);
    ScalarDiffOp power(1), out;
    for (int k = 0; k <= order(); ++k) {
      if (k > 0)
        power = compose(D, power);
      if (!c_[static_cast<std::size_t>(k)].is_zero())
        out += power.scaled(c_[static_cast<std::size_t>(k)]);
    }
    return out;
  }

  template <class F> ScalarDiffOp map_coeffs(F &&f) const {
    ScalarDiffOp r = *this;
    for (auto &c : r.c_)
      c = f(c);
    r.trim();
    return r;
  }
  ScalarDiffOp substitute(const Assignment &a) const {
    return map_coeffs([&](const RatFunc &c) { return c.substitute(a); });
  }

  std::string str() const {
    if (is_zero())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
      const RatFunc &c = c_[static_cast<std::size_t>(k)];
      if (c.is_zero())
        continue;
      if (!first)
        os << " + ";
      std::string cs = c.str();
      if (k == 0) {
        os << "(" << cs << ")";
      } else {
        if (cs != "1")
          os << "(" << cs << ")*";
        os << "d";
        if (k > 1)
          os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }
  friend std::ostream &operator<<(std::ostream &os, const ScalarDiffOp &L) { return os << L.str(); }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero())
      c_.pop_back();
  }

  std::vector<RatFunc> c_;
};

inline RatFunc apply(const ScalarDiffOp &L, const RatFunc &f) { return L.apply(f); }
inline ScalarDiffOp transpose(const ScalarDiffOp &L) { return L.transpose(); }
inline ScalarDiffOp gauge_shift(const ScalarDiffOp &L, const RatFunc &g) { return L.gauge_shift(g); }

} // namespace qsalg
