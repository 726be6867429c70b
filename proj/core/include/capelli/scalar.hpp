#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace capelli {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}                   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational parse(const std::string& s);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Throws unless the value is an integer.
  BigInt to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  std::string str() const;

 private:
  mpq_class v_;
};

/// n! as a big integer; n must be >= 0.
BigInt factorial(long n);

/// Binomial coefficient; zero for k < 0, k > n, or n < 0.
BigInt binomial(long n, long k);

/// a^e with the 0^0 = 1 convention; e must be >= 0.
BigInt int_pow(const BigInt& a, long e);

/// Gaussian rational a + b*i; the coefficient field of every algebra here.
///
/// Most coefficients stay real; the imaginary part carries the sqrt(-1)
/// factors of the metaplectic generator images so products fold back to
/// rational values exactly.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& re) : re_(re) {}    // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational parse(const std::string& s);

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Real values print as plain rationals ("3/2"); complex ones as "(re+im i)".
  std::string str() const;

  // Ring-element surface so scalar matrices run through the same
  // determinant machinery as operator-valued ones.
  GaussianRational zero_like() const { return {}; }
  GaussianRational one_like() const { return GaussianRational(1); }
  GaussianRational scaled(const GaussianRational& c) const { return *this * c; }

 private:
  Rational re_;
  Rational im_;
};

using Scalar = GaussianRational;

}  // namespace capelli
