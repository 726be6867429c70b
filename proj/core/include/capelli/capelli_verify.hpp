#pragma once

#include <string>
#include <vector>

#include "capelli/pbw.hpp"
#include "capelli/weil_rep.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

enum class TheoremId {
  C1,
  C2,
  R1,
  R2,
  H1,
  H2,
  Classical,
  PropC1Left,
  PropC1Right,
  PropC2Left,
  PropC2Right,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

/// Readings the source leaves ambiguous; both are implemented and the
/// passing one is recorded in reports.
struct VariantFlags {
  /// Diagonal shift of the B matrix: m/2 when true, n/2 = (p+q)/2 when false.
  /// The m/2 reading is the one that verifies (see the C1/C2 reports).
  bool shift_m_half = true;
  /// Case H second form: read the denominator (2m+l-1) as a factorial.
  /// The factorial reading is the one that verifies; the plain reading
  /// already fails at m = n = 1, d = 2.
  bool h2_factorial_denominator = true;
};

struct VerificationReport {
  std::string theorem;
  CaseConfig cfg;
  int d = 0;
  bool equal = false;
  bool invariance_ok = true;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::string difference;  // first differing term; empty when equal
  std::string detail;      // per-leg notes
  VariantFlags variant;
  bool refused = false;    // resource guard tripped
  double estimated_terms = 0.0;
  long long elapsed_ms = 0;

  bool passed() const { return !refused && equal && invariance_ok; }
};

/// Thrown when a verification is refused by the resource guard.
struct ResourceLimitError : std::runtime_error {
  double estimate;
  explicit ResourceLimitError(double est)
      : std::runtime_error("estimated expansion of " + std::to_string(est) +
                           " terms exceeds the configured limit"),
        estimate(est) {}
};

/// Crude upper bound on the number of monomial-coefficient pairs a
/// verification expands; used only by the guard.
double estimate_terms(TheoremId id, const CaseConfig& cfg, int d);

constexpr double kDefaultTermLimit = 1e7;

/// The K-invariant Capelli element X_d in U(g), by the defining formula
/// of the requested theorem.
UEnvElement capelli_x(TheoremId id, const CaseConfig& cfg, int d);

/// The H-invariant element C_d in U(gl_{p+q}) (Case C forms only).
UEnvElement capelli_c(TheoremId id, const CaseConfig& cfg, int d, const VariantFlags& flags);

/// The fully expanded right-hand-side differential operator.
WeylElement rhs_operator(TheoremId id, const CaseConfig& cfg, int d, const OmegaImageSet& omega,
                         const VariantFlags& flags);

VerificationReport verify_theorem(TheoremId id, const CaseConfig& cfg, int d,
                                  const VariantFlags& flags = {},
                                  double term_limit = kDefaultTermLimit);

VerificationReport verify_proposition(TheoremId prop, const CaseConfig& cfg, int d,
                                      const VariantFlags& flags = {},
                                      double term_limit = kDefaultTermLimit);

/// The classical identity det(E + (n-j) delta) = det(x) det(d) = det(E' + (j-1) delta).
VerificationReport verify_classical(int n, double term_limit = kDefaultTermLimit);

struct SymbolCheckReport {
  bool ok = true;
  std::string detail;
};

/// Principal symbol of X_d equals the determinant (or permanent) of the
/// commutative symbol matrix, for 1 <= d <= d_max.
SymbolCheckReport symbol_generator_check(const CaseConfig& cfg, int d_max);

/// C1 and C2 Capelli elements share their top-degree symbol.
SymbolCheckReport symbol_c1_c2_agree(const CaseConfig& cfg, int d_max);

}  // namespace capelli
