#pragma once

#include <string>
#include <vector>

#include "capelli/grassmann.hpp"
#include "capelli/weil_rep.hpp"

namespace capelli {

/// Case C data shared by the exterior-algebra element builders: the
/// e/e* algebra has 2m generators, the f/f* algebra 2(p+q).
struct ExteriorContext {
  CaseConfig cfg;
  OmegaImageSet omega;

  int m() const { return cfg.m; }
  int p() const { return cfg.p; }
  int q() const { return cfg.q; }
  int e_gens() const { return 2 * cfg.m; }
  int f_gens() const { return 2 * (cfg.p + cfg.q); }
  int weyl_vars() const { return cfg.weyl_vars(); }

  /// eps_{j,j} = -1 for j <= p, +1 for j > p.
  int eps(int j) const { return j <= cfg.p ? -1 : 1; }
};

ExteriorContext make_exterior_context(int m, int p, int q);

// Left-half builders (e/e* algebra).
GrassmannElement alpha(const ExteriorContext& ctx, int j);
GrassmannElement beta(const ExteriorContext& ctx, int j);
GrassmannElement alpha_tilde(const ExteriorContext& ctx, int j);
GrassmannElement beta_tilde(const ExteriorContext& ctx, int j);
GrassmannElement tau(const ExteriorContext& ctx);
GrassmannElement xi_x(const ExteriorContext& ctx);
GrassmannElement xi_y(const ExteriorContext& ctx);
GrassmannElement xi(const ExteriorContext& ctx);
GrassmannElement xi_tilde(const ExteriorContext& ctx);
/// gamma(u,v); zero when u or v is negative, one when both are zero.
GrassmannElement gamma(const ExteriorContext& ctx, int u, int v);

// Right-half builders (f/f* algebra).
GrassmannElement eta(const ExteriorContext& ctx, int s);
GrassmannElement zeta(const ExteriorContext& ctx, int s);
GrassmannElement lambda(const ExteriorContext& ctx);
GrassmannElement sigma(const ExteriorContext& ctx);

/// Named-element access for the CLI ("alpha", "beta", "alphaTilde",
/// "betaTilde", "tau", "XiX", "XiY", "Xi", "XiTilde", "gamma", "eta",
/// "zeta", "Lambda", "sigma"); i and j are the optional indices.
GrassmannElement build_element(const ExteriorContext& ctx, const std::string& name, int i = 0,
                               int j = 0);

struct LemmaReport {
  std::string id;
  bool ok = true;
  std::string detail;  // first failing instance
};

/// Known lemma ids, in suite order.
const std::vector<std::string>& lemma_ids();

/// Verifies one lemma at the given sizes (internal degree bounds are
/// documented per lemma in the implementation).
LemmaReport verify_lemma(const std::string& lemma_id, int m, int p, int q);

/// Runs every lemma in lemma_ids(); jobs > 1 fans the independent checks
/// out over that many threads (the shared context is immutable).
std::vector<LemmaReport> run_exterior_suite(int m, int p, int q, int jobs = 1);

}  // namespace capelli
