#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capelli/nc_matrix.hpp"
#include "capelli/pbw.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

enum class CaseKind { R, C, H };

std::string case_name(CaseKind k);

/// Size parameters of one see-saw configuration.  Case C uses (m, p, q);
/// cases R and H use (m, n).
struct CaseConfig {
  CaseKind kind = CaseKind::R;
  int m = 1;
  int n = 1;
  int p = 1;
  int q = 1;

  static CaseConfig case_r(int m, int n) { return {CaseKind::R, m, n, 0, 0}; }
  static CaseConfig case_c(int m, int p, int q) { return {CaseKind::C, m, 0, p, q}; }
  static CaseConfig case_h(int m, int n) { return {CaseKind::H, m, n, 0, 0}; }

  void validate() const;

  /// Number of polynomial variables of C[V].
  int weyl_vars() const;

  /// Block sizes of U(g): {m}, {m, m} or {2m}.
  std::vector<int> g_blocks() const;

  /// Row count of the P and Q matrices (m or 2m).
  int p_rows() const;
  /// Column count of the P and Q matrices (p+q or 2n).
  int p_cols() const;

  std::string str() const;
};

/// One named generator of the m-side Lie algebra together with its 2n x 2n
/// (or (p+q) x (p+q)) matrix realization and its image in the Weyl algebra.
struct MSideGenerator {
  std::string name;
  NcMatrix<Scalar> matrix;
  WeylElement image;
};

/// Everything the Weil representation produces for one configuration:
/// the P/Q matrices, generator images for both sides, and (Case C) the
/// B-matrix images.
struct OmegaImageSet {
  CaseConfig cfg;
  NcMatrix<WeylElement> P;
  NcMatrix<WeylElement> Q;

  /// Image of a U(g) matrix-unit generator.
  WeylElement g_image(const GlGenerator& g) const;

  /// m-side generators with matrix realizations (cases R and H).
  std::vector<MSideGenerator> m_generators;

  /// Case C only: images of the raw B' matrix units and of the folded B.
  std::optional<NcMatrix<WeylElement>> omega_b_prime;
  std::optional<NcMatrix<WeylElement>> omega_b;

  /// Flat variable index of x_{s,i} (1-based s, i).  The layout is
  /// row-major, (s-1)*cols + (i-1); Case C puts all x variables before
  /// the y block.
  int var_x(int s, int i) const;
  /// Case C flat variable index of y_{s,j}.
  int var_y(int s, int j) const;
};

OmegaImageSet build_omega(const CaseConfig& cfg);

/// Extends the generator images to a homomorphism on PBW normal forms:
/// each monomial maps to the ordered product of generator images.
WeylElement omega_hom(const OmegaImageSet& omega, const UEnvElement& x);

/// Case C m-side analogue: U(gl_{p+q}) -> PD(V) through the B' images.
WeylElement omega_hom_m(const OmegaImageSet& omega, const UEnvElement& x);

/// The m-side gl_{p+q} matrix B as an element matrix over U(gl_{p+q}):
/// entries are matrix units scaled by the diagonal folding (1, -i, -1).
NcMatrix<UEnvElement> b_matrix_ue(int p, int q);

/// k-basis inside U(g) for the invariance checks: gl_m diagonal pairs
/// (Case C), o_m (Case R) or sp_{2m} realized inside gl_{2m} (Case H).
std::vector<UEnvElement> k_basis(const CaseConfig& cfg);

/// h = gl_p + gl_q block-diagonal basis inside U(gl_{p+q}) (Case C).
std::vector<UEnvElement> h_basis_c(int p, int q);

struct HomReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks bracket preservation for all generator pairs on both sides,
/// plus the matrix-form identities the construction promises
/// (P/Q commutation, the E-matrix images, and the B shift).
HomReport verify_homomorphism(const OmegaImageSet& omega);

}  // namespace capelli
