#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "qsalg/diffop.hpp"
#include "qsalg/gauge.hpp"

namespace qsalg {

/// Row-major n x n grid of values.
template <class T> class Grid {
public:
  Grid() = default;
  explicit Grid(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}
  Grid(std::initializer_list<std::initializer_list<T>> rows) : n_(static_cast<int>(rows.size())) {
    for (const auto &r : rows) {
      if (static_cast<int>(r.size()) != n_)
        throw DimensionMismatchError("grid rows must have length " + std::to_string(n_));
      e_.insert(e_.end(), r.begin(), r.end());
    }
  }

  int n() const { return n_; }
  T &operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const T &operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<T> &entries() const { return e_; }

  template <class F> auto map(F &&f) const {
    Grid<decltype(f(e_[0]))> r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        r(i, j) = f((*this)(i, j));
    return r;
  }

private:
  int n_ = 0;
  std::vector<T> e_;
};

/// n x n matrix of scalar differential operators.
class MatrixDiffOp {
public:
  MatrixDiffOp() = default;
  explicit MatrixDiffOp(int n) : g_(n) {}
  MatrixDiffOp(std::initializer_list<std::initializer_list<ScalarDiffOp>> rows) : g_(rows) {}
  explicit MatrixDiffOp(Grid<ScalarDiffOp> g) : g_(std::move(g)) {}

  static MatrixDiffOp identity(int n) { return scalar(n, ScalarDiffOp(1)); }
  static MatrixDiffOp scalar(int n, const ScalarDiffOp &L) {
    MatrixDiffOp r(n);
    for (int i = 0; i < n; ++i)
      r(i, i) = L;
    return r;
  }
  static MatrixDiffOp diag(const std::vector<ScalarDiffOp> &d) {
    MatrixDiffOp r(static_cast<int>(d.size()));
    for (int i = 0; i < r.n(); ++i)
      r(i, i) = d[static_cast<std::size_t>(i)];
    return r;
  }

  int n() const { return g_.n(); }
  ScalarDiffOp &operator()(int i, int j) { return g_(i, j); }
  const ScalarDiffOp &operator()(int i, int j) const { return g_(i, j); }
  const Grid<ScalarDiffOp> &grid() const { return g_; }

  int order() const {
    int o = -1;
    for (const auto &e : g_.entries())
      o = std::max(o, e.order());
    return o;
  }
  bool is_zero() const {
    for (const auto &e : g_.entries())
      if (!e.is_zero())
        return false;
    return true;
  }

  MatrixDiffOp operator-() const { return MatrixDiffOp(g_.map([](const ScalarDiffOp &x) { return -x; })); }
  MatrixDiffOp &operator+=(const MatrixDiffOp &o) {
    check_dim(o);
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        g_(i, j) += o(i, j);
    return *this;
  }
  MatrixDiffOp &operator-=(const MatrixDiffOp &o) {
    check_dim(o);
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        g_(i, j) -= o(i, j);
    return *this;
  }
  friend MatrixDiffOp operator+(MatrixDiffOp a, const MatrixDiffOp &b) { return a += b; }
  friend MatrixDiffOp operator-(MatrixDiffOp a, const MatrixDiffOp &b) { return a -= b; }
  friend MatrixDiffOp operator*(const MatrixDiffOp &a, const MatrixDiffOp &b) { return mat_compose(a, b); }

  /// Multiplies every entry on the left by a function.
  MatrixDiffOp scaled(const RatFunc &f) const {
    return MatrixDiffOp(g_.map([&](const ScalarDiffOp &x) { return x.scaled(f); }));
  }

  friend bool operator==(const MatrixDiffOp &a, const MatrixDiffOp &b) {
    return a.n() == b.n() && (a - b).is_zero();
  }

  friend MatrixDiffOp mat_compose(const MatrixDiffOp &L, const MatrixDiffOp &M) {
    L.check_dim(M);
    MatrixDiffOp r(L.n());
    for (int i = 0; i < L.n(); ++i)
      for (int j = 0; j < L.n(); ++j)
        for (int k = 0; k < L.n(); ++k)
          if (!L(i, k).is_zero() && !M(k, j).is_zero())
            r(i, j) += compose(L(i, k), M(k, j));
    return r;
  }

  MatrixDiffOp gauge_shift(const RatFunc &g) const {
    return MatrixDiffOp(g_.map([&](const ScalarDiffOp &x) { return x.gauge_shift(g); }));
  }

  template <class F> MatrixDiffOp map_coeffs(F &&f) const {
    return MatrixDiffOp(g_.map([&](const ScalarDiffOp &x) { return x.map_coeffs(f); }));
  }
  MatrixDiffOp substitute(const Assignment &a) const {
    return map_coeffs([&](const RatFunc &c) { return c.substitute(a); });
  }

  std::vector<RatFunc> apply(const std::vector<RatFunc> &v) const {
    if (static_cast<int>(v.size()) != n())
      throw DimensionMismatchError("vector length does not match operator dimension");
    std::vector<RatFunc> out(v.size());
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        if (!g_(i, j).is_zero())
          out[static_cast<std::size_t>(i)] += g_(i, j).apply(v[static_cast<std::size_t>(j)]);
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n(); ++i) {
      os << (i ? "; " : "") << "[";
      for (int j = 0; j < n(); ++j)
        os << (j ? ", " : "") << g_(i, j).str();
      os << "]";
    }
    os << "]";
    return os.str();
  }
  friend std::ostream &operator<<(std::ostream &os, const MatrixDiffOp &L) { return os << L.str(); }

  void check_dim(const MatrixDiffOp &o) const {
    if (n() != o.n())
      throw DimensionMismatchError("operator dimensions " + std::to_string(n()) + " and " +
                                   std::to_string(o.n()) + " differ");
  }

private:
  Grid<ScalarDiffOp> g_;
};

enum class BracketKind { Commutator, Anticommutator };

inline MatrixDiffOp bracket(const MatrixDiffOp &L, const MatrixDiffOp &M, BracketKind kind) {
  MatrixDiffOp LM = mat_compose(L, M), ML = mat_compose(M, L);
  return kind == BracketKind::Commutator ? LM - ML : LM + ML;
}

/// Functional transpose of each entry combined with the index transpose.
inline MatrixDiffOp mat_transpose(const MatrixDiffOp &L) {
  MatrixDiffOp r(L.n());
  for (int i = 0; i < L.n(); ++i)
    for (int j = 0; j < L.n(); ++j)
      r(j, i) = L(i, j).transpose();
  return r;
}

/// -A I d^2 - B d - C
struct SchrodingerData {
  RatFunc A;
  Grid<RatFunc> B;
  Grid<RatFunc> C;

  int n() const { return B.n(); }

  MatrixDiffOp rebuild() const {
    MatrixDiffOp r(n());
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j) {
        std::vector<RatFunc> c{-C(i, j), -B(i, j)};
        if (i == j)
          c.push_back(-A);
        r(i, j) = ScalarDiffOp(std::move(c));
      }
    return r;
  }

  friend bool operator==(const SchrodingerData &a, const SchrodingerData &b) {
    if (a.n() != b.n() || !(a.A == b.A))
      return false;
    for (int i = 0; i < a.n(); ++i)
      for (int j = 0; j < a.n(); ++j)
        if (!(a.B(i, j) == b.B(i, j)) || !(a.C(i, j) == b.C(i, j)))
          return false;
    return true;
  }
};

inline SchrodingerData extract_schrodinger(const MatrixDiffOp &L) {
  if (L.order() > 2)
    throw NonSchrodingerFormError("operator order " + std::to_string(L.order()) + " exceeds 2");
  int n = L.n();
  SchrodingerData h{-L(0, 0).coeff(2), Grid<RatFunc>(n), Grid<RatFunc>(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFunc a2 = -L(i, j).coeff(2);
      if (i == j ? !(a2 == h.A) : !a2.is_zero())
        throw NonSchrodingerFormError("second-order coefficient matrix is not a multiple of the identity");
      h.B(i, j) = -L(i, j).coeff(1);
      h.C(i, j) = -L(i, j).coeff(0);
    }
  return h;
}

struct TranspositionResiduals {
  Grid<RatFunc> B;
  Grid<RatFunc> C;

  bool all_zero() const {
    for (const auto &x : B.entries())
      if (!x.is_zero())
        return false;
    for (const auto &x : C.entries())
      if (!x.is_zero())
        return false;
    return true;
  }
};

/// Residuals of the transposition-symmetry conditions on (A, B, C). Diagonal
/// B entries must equal the scalar B of the gauge, off-diagonal B entries must
/// be antisymmetric, and C must transform as C^T = C - B_A' + ((A'-B)/A) B_A.
inline TranspositionResiduals transposition_residuals(const SchrodingerData &h, const GaugeData &g) {
  if (h.A.is_zero() || g.A.is_zero())
    throw Error("transposition residuals require A != 0");
  if (!(h.A == g.A))
    throw Error("gauge A does not match the operator's A");
  int n = h.n();
  RatFunc Bs = g.B();
  RatFunc factor = (g.A.derivative() - Bs) / g.A;
  TranspositionResiduals r{Grid<RatFunc>(n), Grid<RatFunc>(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        r.B(i, i) = h.B(i, i) - Bs;
        continue;
      }
      r.B(i, j) = h.B(j, i) + h.B(i, j);
      RatFunc BA = (h.B(i, j) - h.B(j, i)).scaled(ParamPoly(Rational(1, 2)));
      r.C(i, j) = h.C(j, i) - h.C(i, j) + BA.derivative() - factor * BA;
    }
  return r;
}

/// H^T - G H G^-1 with G'/G = (B - A')/A: zero exactly when the q-space
/// operator behind H is transposition symmetric.
inline MatrixDiffOp transposition_defect(const MatrixDiffOp &H, const GaugeData &g) {
  return mat_transpose(H) - H.gauge_shift((g.A.derivative() - g.B()) / g.A);
}

} // namespace qsalg
