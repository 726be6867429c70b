#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "capelli/scalar.hpp"

namespace capelli {

/// Exponent vector of a commutative monomial.
struct PolyMonomial {
  std::vector<int> e;
  auto operator<=>(const PolyMonomial&) const = default;
  int degree() const;
};

/// Sparse commutative polynomial in a fixed number of variables.
/// Holds principal symbols and the test polynomials operators act on.
class Polynomial {
 public:
  explicit Polynomial(int vars) : vars_(vars) {}

  static Polynomial zero(int vars) { return Polynomial(vars); }
  static Polynomial constant(int vars, const Scalar& c);
  static Polynomial variable(int vars, int i, int exp = 1);
  static Polynomial monomial(int vars, PolyMonomial m, const Scalar& c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int degree() const;
  const std::map<PolyMonomial, Scalar>& terms() const { return terms_; }
  Scalar coeff(const PolyMonomial& m) const;

  Polynomial zero_like() const { return Polynomial(vars_); }
  Polynomial one_like() const { return constant(vars_, Scalar(1)); }
  Polynomial scaled(const Scalar& c) const;

  Polynomial operator-() const { return scaled(Scalar(-1)); }
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string str(const std::string& var_name = "t") const;

  void add_term(const PolyMonomial& m, const Scalar& c);

 private:
  int vars_;
  std::map<PolyMonomial, Scalar> terms_;
};

/// Normal-ordered monomial x^a d^b: all variables left of all derivatives.
struct WeylMonomial {
  std::vector<int> x;  // variable exponents
  std::vector<int> d;  // derivative exponents
  auto operator<=>(const WeylMonomial&) const = default;
  int order() const;   // sum of d
  int degree() const;  // sum of x
};

/// Element of the Weyl algebra in N variables, kept in canonical normal
/// form: a sparse map from normal-ordered monomials to nonzero scalars.
/// Two elements are equal as operators iff their maps are equal.
class WeylElement {
 public:
  explicit WeylElement(int vars) : vars_(vars) {}

  static WeylElement zero(int vars) { return WeylElement(vars); }
  static WeylElement constant(int vars, const Scalar& c);
  static WeylElement variable(int vars, int i);    // x_i
  static WeylElement derivative(int vars, int i);  // d_i
  static WeylElement monomial(int vars, WeylMonomial m, const Scalar& c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<WeylMonomial, Scalar>& terms() const { return terms_; }
  Scalar coeff(const WeylMonomial& m) const;

  /// Max total derivative order among terms; -1 for the zero element.
  int order() const;
  int degree() const;

  WeylElement zero_like() const { return WeylElement(vars_); }
  WeylElement one_like() const { return constant(vars_, Scalar(1)); }
  WeylElement scaled(const Scalar& c) const;

  WeylElement operator-() const { return scaled(Scalar(-1)); }
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

  /// Operator composition, normal-ordered via
  ///   (x^a d^b)(x^c d^e) = sum_k prod_i C(b_i,k_i) C(c_i,k_i) k_i!
  ///                        x^{a+c-k} d^{b+e-k},  0 <= k <= min(b,c).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  friend bool operator==(const WeylElement& a, const WeylElement& b) = default;

  /// Action on a polynomial in the same variables.
  Polynomial apply(const Polynomial& p) const;

  /// Top-order part with d_i replaced by xi_i; lives in 2N variables
  /// (x_0..x_{N-1}, xi_0..xi_{N-1}).  Zero maps to zero.
  Polynomial principal_symbol() const;

  /// Deterministic text form, e.g. "3/2·x[0]^2·d[1] + 1".
  std::string str() const;
  static WeylElement parse(const std::string& s, int vars);

  void add_term(const WeylMonomial& m, const Scalar& c);

 private:
  int vars_;
  std::map<WeylMonomial, Scalar> terms_;
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// First monomial whose coefficients differ, rendered for reports;
/// empty when equal.
std::string first_difference(const WeylElement& a, const WeylElement& b);

}  // namespace capelli
