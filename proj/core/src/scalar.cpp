#include "capelli/scalar.hpp"

namespace capelli {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
  return num();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  return v_.get_str();
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt int_pow(const BigInt& a, long e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.re_ * o.re_ + o.im_ * o.im_;
  if (n.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s = "(" + re_.str();
  if (im_.sign() >= 0) s += "+";
  return s + im_.str() + "i)";
}

GaussianRational GaussianRational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("GaussianRational: empty string");
  if (s.front() != '(') return GaussianRational(Rational::parse(s));
  if (s.back() != ')' || s.size() < 4 || s[s.size() - 2] != 'i')
    throw std::invalid_argument("GaussianRational: bad format: " + s);
  std::string body = s.substr(1, s.size() - 3);  // re[+-]im
  // Split at the sign that separates the two parts (skip a leading sign).
  std::size_t pos = std::string::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') pos = k;
  }
  // The last +/- not following '/' splits re from im; exponents never occur here.
  if (pos == std::string::npos) throw std::invalid_argument("GaussianRational: bad format: " + s);
  Rational re = Rational::parse(body.substr(0, pos));
  std::string ims = body.substr(pos);
  if (ims[0] == '+') ims.erase(0, 1);
  return {re, Rational::parse(ims)};
}

}  // namespace capelli
