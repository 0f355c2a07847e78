#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsalg/linalg.hpp"
#include "qsalg/matop.hpp"

namespace qsalg {

/// Vector of polynomials, one per component.
struct PolyVec {
  std::vector<ZPoly> entries;

  int n() const { return static_cast<int>(entries.size()); }
  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const ZPoly &p) { return p.is_zero(); });
  }
  std::vector<RatFunc> as_ratfuncs() const { return {entries.begin(), entries.end()}; }
  friend bool operator==(const PolyVec &a, const PolyVec &b) { return a.entries == b.entries; }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i)
      s += (i ? ", " : "") + entries[i].str();
    return s + ")";
  }
};

/// Per-component sets of z-exponents spanning a monomial module.
class MonomialModule {
public:
  MonomialModule() = default;
  explicit MonomialModule(std::vector<std::vector<int>> components) : comps_(std::move(components)) {
    for (auto &c : comps_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      if (!c.empty() && c.front() < 0)
        throw Error("monomial exponents must be non-negative");
    }
  }

  /// {0, ..., N-1}
  static std::vector<int> type_a(int N) {
    std::vector<int> e;
    for (int k = 0; k < N; ++k)
      e.push_back(k);
    return e;
  }
  /// {0, ..., N-2, N}
  static std::vector<int> type_b(int N) {
    std::vector<int> e;
    for (int k = 0; k <= N - 2; ++k)
      e.push_back(k);
    e.push_back(N);
    return e;
  }
  static MonomialModule stack(std::vector<int> upper, std::vector<int> lower) {
    return MonomialModule({std::move(upper), std::move(lower)});
  }

  int n() const { return static_cast<int>(comps_.size()); }
  const std::vector<std::vector<int>> &components() const { return comps_; }
  int dimension() const {
    int d = 0;
    for (const auto &c : comps_)
      d += static_cast<int>(c.size());
    return d;
  }
  int max_degree() const {
    int d = -1;
    for (const auto &c : comps_)
      if (!c.empty())
        d = std::max(d, c.back());
    return d;
  }
  bool contains(int component, int exponent) const {
    const auto &c = comps_[static_cast<std::size_t>(component)];
    return std::binary_search(c.begin(), c.end(), exponent);
  }
  /// Basis vectors in component-major order.
  std::vector<std::pair<int, int>> basis() const {
    std::vector<std::pair<int, int>> b;
    for (int i = 0; i < n(); ++i)
      for (int e : comps_[static_cast<std::size_t>(i)])
        b.emplace_back(i, e);
    return b;
  }
  PolyVec basis_vector(std::size_t k) const {
    auto [c, e] = basis().at(k);
    PolyVec v{std::vector<ZPoly>(static_cast<std::size_t>(n()))};
    v.entries[static_cast<std::size_t>(c)] = ZPoly::z(e);
    return v;
  }

private:
  std::vector<std::vector<int>> comps_;
};

/// Column j holds the coordinates of the image of basis vector j.
struct ActionCertificate {
  std::vector<std::vector<ParamPoly>> matrix;
};

struct InvarianceWitness {
  std::size_t basis_index;
  int component;
  int exponent;
  ParamPoly coefficient;

  std::string str() const {
    return "basis vector " + std::to_string(basis_index) + " maps onto z^" + std::to_string(exponent) +
           " in component " + std::to_string(component) + " with coefficient " + coefficient.str();
  }
};

struct InvarianceResult {
  std::optional<ActionCertificate> certificate;
  std::optional<InvarianceWitness> witness;
  bool ok() const { return certificate.has_value(); }
};

inline PolyVec apply_polynomial(const MatrixDiffOp &L, const PolyVec &v) {
  auto image = L.apply(v.as_ratfuncs());
  PolyVec out;
  for (const auto &f : image)
    out.entries.push_back(f.as_polynomial());
  return out;
}

/// Certificate when L maps span(V) into itself, else the first offending
/// monomial. Images must be polynomial.
inline InvarianceResult invariant(const MatrixDiffOp &L, const MonomialModule &V) {
  if (L.n() != V.n())
    throw DimensionMismatchError("module and operator dimensions differ");
  auto basis = V.basis();
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k)
    index[basis[k]] = k;
  ActionCertificate cert{std::vector<std::vector<ParamPoly>>(basis.size(), std::vector<ParamPoly>(basis.size()))};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    PolyVec image = apply_polynomial(L, V.basis_vector(j));
    for (int c = 0; c < image.n(); ++c) {
      const ZPoly &p = image.entries[static_cast<std::size_t>(c)];
      for (int e = 0; e <= p.degree(); ++e) {
        const ParamPoly &coef = p.coeffs()[static_cast<std::size_t>(e)];
        if (coef.is_zero())
          continue;
        auto it = index.find({c, e});
        if (it == index.end())
          return {std::nullopt, InvarianceWitness{j, c, e, coef}};
        cert.matrix[it->second][j] = coef;
      }
    }
  }
  return {std::move(cert), std::nullopt};
}

/// Invariance for every N in [lo, hi].
inline bool flag_invariant(const std::function<MatrixDiffOp(int)> &family,
                           const std::function<MonomialModule(int)> &modules, int lo, int hi) {
  for (int N = lo; N <= hi; ++N)
    if (!invariant(family(N), modules(N)).ok())
      return false;
  return true;
}

/// Basis of polynomial vectors of degree <= degree_bound annihilated by L.
/// Coefficients must be parameter-free.
inline std::vector<PolyVec> polynomial_kernel(const MatrixDiffOp &L, int degree_bound) {
  int n = L.n();
  int per = degree_bound + 1;
  int unknowns = n * per;
  // Image of each unit unknown, as rational functions per component.
  std::vector<std::vector<RatFunc>> images;
  ZPoly common(1);
  for (int u = 0; u < unknowns; ++u) {
    std::vector<RatFunc> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(u / per)] = RatFunc::z(u % per);
    auto img = L.apply(v);
    for (const auto &f : img) {
      if (!f.is_parameter_free())
        throw NonNumericError("polynomial_kernel needs parameter-free coefficients");
      if (f.pf_den().degree() > 0)
        common = common * f.pf_den().divmod(gcd(common, f.pf_den())).first;
    }
    images.push_back(std::move(img));
  }
  // Row (component, power) of the cleared equations.
  std::map<std::pair<int, int>, std::vector<Rational>> rows;
  for (int u = 0; u < unknowns; ++u)
    for (int c = 0; c < n; ++c) {
      const RatFunc &f = images[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
      if (f.is_zero())
        continue;
      ZPoly cleared = f.num() * common.divmod(f.pf_den()).first;
      for (int e = 0; e <= cleared.degree(); ++e) {
        Rational val = cleared.coeff(e).constant_term();
        if (val.is_zero())
          continue;
        auto &row = rows[{c, e}];
        if (row.empty())
          row.resize(static_cast<std::size_t>(unknowns));
        row[static_cast<std::size_t>(u)] = val;
      }
    }
  RationalMatrix m;
  for (auto &[k, row] : rows)
    m.push_back(std::move(row));
  auto ns = nullspace(std::move(m), unknowns);
  // Present the basis in reduced echelon form for stable output.
  rref(ns, unknowns);
  std::vector<PolyVec> out;
  for (const auto &vec : ns) {
    std::vector<std::vector<ParamPoly>> comps(static_cast<std::size_t>(n),
                                             std::vector<ParamPoly>(static_cast<std::size_t>(per)));
    for (int u = 0; u < unknowns; ++u)
      comps[static_cast<std::size_t>(u / per)][static_cast<std::size_t>(u % per)] =
          ParamPoly(vec[static_cast<std::size_t>(u)]);
    PolyVec pv;
    for (auto &c : comps)
      pv.entries.emplace_back(std::move(c));
    out.push_back(std::move(pv));
  }
  return out;
}

/// Default bound N + (max component degree of V) + 2.
inline int default_degree_bound(int N, const MonomialModule &V) { return N + std::max(V.max_degree(), 0) + 2; }

/// Whether v lies in the Q-span of the given parameter-free vectors.
inline bool in_span(const std::vector<PolyVec> &vs, const PolyVec &v) {
  int deg = 0, n = v.n();
  for (const auto &w : vs)
    for (const auto &p : w.entries)
      deg = std::max(deg, p.degree());
  for (const auto &p : v.entries)
    deg = std::max(deg, p.degree());
  int cols = n * (deg + 1);
  auto flatten = [&](const PolyVec &w) {
    std::vector<Rational> r(static_cast<std::size_t>(cols));
    for (int c = 0; c < n; ++c)
      for (int e = 0; e <= w.entries[static_cast<std::size_t>(c)].degree(); ++e)
        r[static_cast<std::size_t>(c * (deg + 1) + e)] = w.entries[static_cast<std::size_t>(c)].coeff(e).constant();
    return r;
  };
  RationalMatrix m;
  for (const auto &w : vs)
    m.push_back(flatten(w));
  int r0 = rank(m, cols);
  m.push_back(flatten(v));
  return rank(m, cols) == r0;
}

/// Equality of the Q-spans of two families of parameter-free vectors.
inline bool same_span(const std::vector<PolyVec> &a, const std::vector<PolyVec> &b) {
  for (const auto &v : a)
    if (!in_span(b, v))
      return false;
  for (const auto &v : b)
    if (!in_span(a, v))
      return false;
  return true;
}

} // namespace qsalg
