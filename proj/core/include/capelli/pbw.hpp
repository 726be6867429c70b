#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "capelli/scalar.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

/// Matrix unit E_{row,col} of one gl summand.  Rows and columns are
/// 1-based; generators are totally ordered by (block, row, col).
struct GlGenerator {
  int block = 0;
  int row = 1;
  int col = 1;
  auto operator<=>(const GlGenerator&) const = default;
};

/// Weakly increasing generator word (a PBW basis element).
struct PbwMonomial {
  std::vector<GlGenerator> w;
  auto operator<=>(const PbwMonomial&) const = default;
  int degree() const { return static_cast<int>(w.size()); }
};

/// Element of U(gl_{n_0} + gl_{n_1} + ...) in PBW normal form over the
/// generator order above.  Equality of term maps is equality in U(g).
class UEnvElement {
 public:
  explicit UEnvElement(std::vector<int> block_sizes) : blocks_(std::move(block_sizes)) {}

  static UEnvElement zero(std::vector<int> blocks) { return UEnvElement(std::move(blocks)); }
  static UEnvElement constant(std::vector<int> blocks, const Scalar& c);
  static UEnvElement generator(std::vector<int> blocks, const GlGenerator& g, const Scalar& c = Scalar(1));

  const std::vector<int>& blocks() const { return blocks_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<PbwMonomial, Scalar>& terms() const { return terms_; }
  int degree() const;

  UEnvElement zero_like() const { return UEnvElement(blocks_); }
  UEnvElement one_like() const { return constant(blocks_, Scalar(1)); }
  UEnvElement scaled(const Scalar& c) const;

  UEnvElement operator-() const { return scaled(Scalar(-1)); }
  UEnvElement& operator+=(const UEnvElement& o);
  UEnvElement& operator-=(const UEnvElement& o);
  friend UEnvElement operator+(UEnvElement a, const UEnvElement& b) { return a += b; }
  friend UEnvElement operator-(UEnvElement a, const UEnvElement& b) { return a -= b; }

  /// Product with PBW straightening via
  ///   [E_ij, E_kl] = delta_jk E_il - delta_li E_kj  (within one block).
  friend UEnvElement operator*(const UEnvElement& a, const UEnvElement& b);

  friend bool operator==(const UEnvElement& a, const UEnvElement& b) = default;

  /// Commutative specialization of the top-degree part: each generator
  /// becomes one polynomial variable (flattened block-major).
  Polynomial top_symbol() const;

  /// Text form like "E0[1,2]·E1[2,1] + 2".
  std::string str() const;

  void add_term(const PbwMonomial& m, const Scalar& c);

  void check_generator(const GlGenerator& g) const;

 private:
  std::vector<int> blocks_;
  std::map<PbwMonomial, Scalar> terms_;
};

UEnvElement ue_commutator(const UEnvElement& a, const UEnvElement& b);

/// True iff x commutes with every element of the given basis.
bool invariance_check(const UEnvElement& x, const std::vector<UEnvElement>& subalgebra_basis);

/// Total number of generator variables across blocks (for top_symbol).
int symbol_var_count(const std::vector<int>& blocks);

/// Flat variable index of a generator in the top_symbol polynomial ring.
int symbol_var_index(const std::vector<int>& blocks, const GlGenerator& g);

}  // namespace capelli
