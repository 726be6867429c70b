#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "capelli/weyl.hpp"

namespace capelli {

/// Element of the exterior algebra on 2k anti-commuting generators
/// tensored with a Weyl algebra.  Generators 0..k-1 are the e_s, and
/// k..2k-1 the dual e*_s; a term stores the sorted generator subset as a
/// bitmask with the sorting sign folded into the Weyl coefficient.
class GrassmannElement {
 public:
  GrassmannElement(int generators, int weyl_vars)
      : gens_(generators), weyl_vars_(weyl_vars) {
    if (generators < 0 || generators > 62) throw std::invalid_argument("GrassmannElement: generator count");
  }

  static GrassmannElement zero(int generators, int weyl_vars) {
    return GrassmannElement(generators, weyl_vars);
  }
  static GrassmannElement one(int generators, int weyl_vars);
  /// A single generator (index 0..2k-1) with Weyl coefficient 1.
  static GrassmannElement generator(int generators, int weyl_vars, int g);
  /// Purely scalar part: w tensored with the empty wedge.
  static GrassmannElement from_weyl(int generators, const WeylElement& w);

  int generators() const { return gens_; }
  int weyl_vars() const { return weyl_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::uint64_t, WeylElement>& terms() const { return terms_; }

  GrassmannElement zero_like() const { return GrassmannElement(gens_, weyl_vars_); }
  GrassmannElement one_like() const { return one(gens_, weyl_vars_); }
  GrassmannElement scaled(const Scalar& c) const;

  GrassmannElement operator-() const { return scaled(Scalar(-1)); }
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }

  /// Exterior product; Weyl coefficients multiply in the Weyl algebra.
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) = default;

  /// Contraction e_S e*_T -> delta_{S,T}: keeps the Weyl coefficients of
  /// terms whose e-subset equals their e*-subset.
  WeylElement contract() const;

  std::string str() const;

  void add_term(std::uint64_t mask, const WeylElement& w);

 private:
  int gens_;
  int weyl_vars_;
  std::map<std::uint64_t, WeylElement> terms_;
};

/// First (mask, monomial) difference for reports; empty when equal.
std::string first_difference(const GrassmannElement& a, const GrassmannElement& b);

}  // namespace capelli
