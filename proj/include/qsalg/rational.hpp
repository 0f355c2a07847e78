#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "qsalg/error.hpp"

namespace qsalg {

/// Exact arbitrary-precision fraction in lowest terms with positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long v) : v_(v) {} // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0)
      throw DivisionByZeroError();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class &num) : v_(num) {}
  Rational(const mpz_class &num, const mpz_class &den) {
    if (den == 0)
      throw DivisionByZeroError();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" in base 10.
  static Rational parse(std::string_view text) {
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
      throw Error("malformed rational literal '" + std::string(text) + "'");
    if (v.get_den() == 0)
      throw DivisionByZeroError();
    v.canonicalize();
    return Rational(std::move(v));
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Only meaningful when is_integer() and the value fits.
  long to_long() const { return v_.get_num().get_si(); }
  bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
  double to_double() const { return v_.get_d(); }

  const mpq_class &raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o) {
    v_ += o.v_;
    return *this;
  }
  Rational &operator-=(const Rational &o) {
    v_ -= o.v_;
    return *this;
  }
  Rational &operator*=(const Rational &o) {
    v_ *= o.v_;
    return *this;
  }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero())
      throw DivisionByZeroError();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero())
        throw DivisionByZeroError();
      return Rational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }

  std::string str() const { return v_.get_str(10); }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
  mpq_class v_{0};
};

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n)
    return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

inline Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

} // namespace qsalg
