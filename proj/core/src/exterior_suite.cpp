#include "capelli/exterior_suite.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "capelli/coeffs.hpp"
#include "capelli/indexing.hpp"
#include "capelli/nc_matrix.hpp"

namespace capelli {

ExteriorContext make_exterior_context(int m, int p, int q) {
  CaseConfig cfg = CaseConfig::case_c(m, p, q);
  return ExteriorContext{cfg, build_omega(cfg)};
}

namespace {

std::uint64_t e_bit(int s) { return std::uint64_t{1} << (s - 1); }
std::uint64_t estar_bit(const ExteriorContext& ctx, int s) {
  return std::uint64_t{1} << (ctx.m() + s - 1);
}
std::uint64_t f_bit(int i) { return std::uint64_t{1} << (i - 1); }
std::uint64_t fstar_bit(const ExteriorContext& ctx, int i) {
  return std::uint64_t{1} << (ctx.p() + ctx.q() + i - 1);
}

}  // namespace

GrassmannElement alpha(const ExteriorContext& ctx, int j) {
  GrassmannElement r(ctx.e_gens(), ctx.weyl_vars());
  for (int s = 1; s <= ctx.m(); ++s) r.add_term(e_bit(s), ctx.omega.P.at(s, j));
  return r;
}

GrassmannElement beta(const ExteriorContext& ctx, int j) {
  GrassmannElement r(ctx.e_gens(), ctx.weyl_vars());
  for (int s = 1; s <= ctx.m(); ++s) r.add_term(estar_bit(ctx, s), ctx.omega.Q.at(s, j));
  return r;
}

GrassmannElement alpha_tilde(const ExteriorContext& ctx, int j) {
  return alpha(ctx, j).scaled(Scalar(ctx.eps(j)));
}

GrassmannElement beta_tilde(const ExteriorContext& ctx, int j) {
  return beta(ctx, j).scaled(Scalar(ctx.eps(j)));
}

GrassmannElement tau(const ExteriorContext& ctx) {
  GrassmannElement r(ctx.e_gens(), ctx.weyl_vars());
  for (int s = 1; s <= ctx.m(); ++s)
    r.add_term(e_bit(s) | estar_bit(ctx, s), WeylElement::constant(ctx.weyl_vars(), Scalar(1)));
  return r;
}

GrassmannElement xi_x(const ExteriorContext& ctx) {
  GrassmannElement r(ctx.e_gens(), ctx.weyl_vars());
  for (int j = 1; j <= ctx.p(); ++j) r += alpha(ctx, j) * beta(ctx, j);
  return r;
}

GrassmannElement xi_y(const ExteriorContext& ctx) {
  GrassmannElement r(ctx.e_gens(), ctx.weyl_vars());
  for (int j = ctx.p() + 1; j <= ctx.p() + ctx.q(); ++j) r += alpha(ctx, j) * beta(ctx, j);
  return r;
}

GrassmannElement xi(const ExteriorContext& ctx) { return xi_x(ctx) + xi_y(ctx); }

GrassmannElement xi_tilde(const ExteriorContext& ctx) {
  GrassmannElement r(ctx.e_gens(), ctx.weyl_vars());
  for (int j = 1; j <= ctx.p() + ctx.q(); ++j) r += alpha_tilde(ctx, j) * beta(ctx, j);
  return r;
}

namespace {

// gamma with tildes at an arbitrary subset of the alpha positions
// (bit k of tilde_mask = position k+1 carries the tilde).
GrassmannElement gamma_general(const ExteriorContext& ctx, int w, std::uint64_t tilde_mask) {
  GrassmannElement acc(ctx.e_gens(), ctx.weyl_vars());
  if (w == 0) return GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars());
  const int pq = ctx.p() + ctx.q();
  std::vector<int> js(w, 1);
  while (true) {
    GrassmannElement prod = GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars());
    int eps_weight = 1;
    for (int k = 0; k < w; ++k) {
      prod = prod * alpha(ctx, js[k]);
      if (tilde_mask >> k & 1) eps_weight *= ctx.eps(js[k]);
    }
    for (int k = w - 1; k >= 0; --k) prod = prod * beta(ctx, js[k]);
    acc += eps_weight > 0 ? prod : -prod;
    int k = 0;
    while (k < w && js[k] == pq) js[k++] = 1;
    if (k == w) break;
    ++js[k];
  }
  return acc;
}

}  // namespace

GrassmannElement gamma(const ExteriorContext& ctx, int u, int v) {
  if (u < 0 || v < 0) return GrassmannElement::zero(ctx.e_gens(), ctx.weyl_vars());
  const int w = u + v;
  std::uint64_t tilde_mask = 0;
  for (int k = u; k < w; ++k) tilde_mask |= std::uint64_t{1} << k;
  return gamma_general(ctx, w, tilde_mask);
}

GrassmannElement eta(const ExteriorContext& ctx, int s) {
  GrassmannElement r(ctx.f_gens(), ctx.weyl_vars());
  const int pq = ctx.p() + ctx.q();
  for (int i = 1; i <= pq; ++i) r.add_term(f_bit(i), ctx.omega.P.at(s, i));
  return r;
}

GrassmannElement zeta(const ExteriorContext& ctx, int s) {
  GrassmannElement r(ctx.f_gens(), ctx.weyl_vars());
  const int pq = ctx.p() + ctx.q();
  for (int i = 1; i <= pq; ++i) r.add_term(fstar_bit(ctx, i), ctx.omega.Q.at(s, i));
  return r;
}

GrassmannElement lambda(const ExteriorContext& ctx) {
  GrassmannElement r(ctx.f_gens(), ctx.weyl_vars());
  for (int s = 1; s <= ctx.m(); ++s) r += eta(ctx, s) * zeta(ctx, s);
  return r;
}

GrassmannElement sigma(const ExteriorContext& ctx) {
  GrassmannElement r(ctx.f_gens(), ctx.weyl_vars());
  const int pq = ctx.p() + ctx.q();
  for (int i = 1; i <= pq; ++i) {
    r.add_term(f_bit(i) | fstar_bit(ctx, i),
               WeylElement::constant(ctx.weyl_vars(), Scalar(ctx.eps(i))));
  }
  return r;
}

GrassmannElement build_element(const ExteriorContext& ctx, const std::string& name, int i, int j) {
  if (name == "alpha") return alpha(ctx, i);
  if (name == "beta") return beta(ctx, i);
  if (name == "alphaTilde") return alpha_tilde(ctx, i);
  if (name == "betaTilde") return beta_tilde(ctx, i);
  if (name == "tau") return tau(ctx);
  if (name == "XiX") return xi_x(ctx);
  if (name == "XiY") return xi_y(ctx);
  if (name == "Xi") return xi(ctx);
  if (name == "XiTilde") return xi_tilde(ctx);
  if (name == "gamma") return gamma(ctx, i, j);
  if (name == "eta") return eta(ctx, i);
  if (name == "zeta") return zeta(ctx, i);
  if (name == "Lambda") return lambda(ctx);
  if (name == "sigma") return sigma(ctx);
  throw std::invalid_argument("build_element: unknown name '" + name + "'");
}

namespace {

using Check = std::function<void(const ExteriorContext&, LemmaReport&)>;

void note_failure(LemmaReport& rep, const std::string& where, const std::string& diff) {
  if (!rep.ok) return;
  rep.ok = false;
  rep.detail = where + (diff.empty() ? "" : (": " + diff));
}

void expect_equal(LemmaReport& rep, const GrassmannElement& a, const GrassmannElement& b,
                  const std::string& where) {
  if (!(a == b)) note_failure(rep, where, first_difference(a, b));
}

void expect_equal(LemmaReport& rep, const WeylElement& a, const WeylElement& b,
                  const std::string& where) {
  if (!(a == b)) note_failure(rep, where, first_difference(a, b));
}

// Sample vectors for the diagonal parameters: the constants 0..3 per
// slot, the corners {0,3}^d, and the descending staircase.  Every factor
// is linear in its own u_k, so two values per slot already decide the
// identity; the coverage is asserted.
std::vector<std::vector<Rational>> u_sample_grid(int d) {
  std::vector<std::vector<Rational>> grid;
  for (int c = 0; c <= 3; ++c) grid.emplace_back(d, Rational(c));
  for (int mask = 1; mask + 1 < (1 << d); ++mask) {
    std::vector<Rational> u(d);
    for (int k = 0; k < d; ++k) u[k] = Rational(mask >> k & 1 ? 3 : 0);
    grid.push_back(std::move(u));
  }
  std::vector<Rational> stair(d);
  for (int k = 0; k < d; ++k) stair[k] = Rational(d - 1 - k);
  grid.push_back(std::move(stair));
  for (int k = 0; k < d; ++k) {
    std::set<std::string> distinct;
    for (const auto& u : grid) distinct.insert(u[k].str());
    if (distinct.size() < 2) throw std::logic_error("u_sample_grid: slot undersampled");
  }
  return grid;
}

int half_staircase_sign(int d) { return (d * (d - 1) / 2) % 2 == 0 ? 1 : -1; }

void check_tau_central(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement t = tau(ctx);
  std::vector<std::pair<std::string, GrassmannElement>> elems;
  for (int j = 1; j <= ctx.p() + ctx.q(); ++j) {
    elems.emplace_back("alpha_" + std::to_string(j), alpha(ctx, j));
    elems.emplace_back("beta_" + std::to_string(j), beta(ctx, j));
  }
  elems.emplace_back("XiX", xi_x(ctx));
  elems.emplace_back("XiY", xi_y(ctx));
  elems.emplace_back("XiTilde", xi_tilde(ctx));
  elems.emplace_back("gamma(1,1)", gamma(ctx, 1, 1));
  for (const auto& [name, a] : elems) expect_equal(rep, t * a, a * t, "tau central vs " + name);
}

void check_comm_alpha_alpha(const ExteriorContext& ctx, LemmaReport& rep) {
  const int pq = ctx.p() + ctx.q();
  const GrassmannElement zero(ctx.e_gens(), ctx.weyl_vars());
  for (int i = 1; i <= pq; ++i) {
    for (int j = 1; j <= pq; ++j) {
      expect_equal(rep, alpha(ctx, i) * alpha(ctx, j) + alpha(ctx, j) * alpha(ctx, i), zero,
                   "alpha anti-commutation at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      expect_equal(rep, beta(ctx, i) * beta(ctx, j) + beta(ctx, j) * beta(ctx, i), zero,
                   "beta anti-commutation at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

void check_comm_p_q(const ExteriorContext& ctx, LemmaReport& rep) {
  const int nv = ctx.weyl_vars();
  for (int s = 1; s <= ctx.m(); ++s) {
    for (int t = 1; t <= ctx.m(); ++t) {
      for (int i = 1; i <= ctx.p() + ctx.q(); ++i) {
        for (int j = 1; j <= ctx.p() + ctx.q(); ++j) {
          WeylElement expected(nv);
          if (s == t && i == j) expected = WeylElement::constant(nv, Scalar(ctx.eps(i)));
          expect_equal(rep, commutator(ctx.omega.P.at(s, i), ctx.omega.Q.at(t, j)), expected,
                       "[P,Q] at s=" + std::to_string(s) + ",t=" + std::to_string(t) +
                           ",i=" + std::to_string(i) + ",j=" + std::to_string(j));
        }
      }
    }
  }
}

void check_comm_alpha_beta(const ExteriorContext& ctx, LemmaReport& rep) {
  const int pq = ctx.p() + ctx.q();
  for (int i = 1; i <= pq; ++i) {
    for (int j = 1; j <= pq; ++j) {
      GrassmannElement expected(ctx.e_gens(), ctx.weyl_vars());
      if (i == j) expected = tau(ctx).scaled(Scalar(ctx.eps(i)));
      expect_equal(rep, alpha(ctx, i) * beta(ctx, j) + beta(ctx, j) * alpha(ctx, i), expected,
                   "alpha-beta relation at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

void check_comm_xix_xiy(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement a = xi_x(ctx), b = xi_y(ctx);
  expect_equal(rep, a * b, b * a, "[XiX, XiY] = 0");
}

void check_comm_alpha_xix(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement xx = xi_x(ctx), t = tau(ctx);
  for (int j = 1; j <= ctx.p(); ++j) {
    expect_equal(rep, alpha(ctx, j) * xx, (xx + t) * alpha(ctx, j),
                 "alpha_j XiX = (XiX + tau) alpha_j at j=" + std::to_string(j));
  }
}

void check_comm_alpha_xiy(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement xy = xi_y(ctx), t = tau(ctx);
  for (int j = ctx.p() + 1; j <= ctx.p() + ctx.q(); ++j) {
    expect_equal(rep, alpha(ctx, j) * xy, (xy - t) * alpha(ctx, j),
                 "alpha_j XiY = (XiY - tau) alpha_j at j=" + std::to_string(j));
  }
}

void check_alpha_beta_det(const ExteriorContext& ctx, LemmaReport& rep) {
  const int pq = ctx.p() + ctx.q();
  for (int d = 1; d <= std::min(3, pq); ++d) {
    for (const IndexSet& j : comb(pq, d)) {
      GrassmannElement aj = GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars());
      GrassmannElement bj = GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars());
      for (int k : j.v) aj = aj * alpha(ctx, k);
      for (int k : j.v) bj = bj * beta(ctx, k);
      GrassmannElement arhs(ctx.e_gens(), ctx.weyl_vars());
      GrassmannElement brhs(ctx.e_gens(), ctx.weyl_vars());
      for (const IndexSet& s : comb(ctx.m(), d)) {
        std::uint64_t emask = 0, smask = 0;
        for (int v : s.v) {
          emask |= e_bit(v);
          smask |= estar_bit(ctx, v);
        }
        arhs.add_term(emask, col_det_param(ctx.omega.P, s.v, j.v));
        brhs.add_term(smask, col_det_param(ctx.omega.Q, s.v, j.v));
      }
      expect_equal(rep, aj, arhs, "alpha_J = sum e_S det P_{S,J} at J=" + j.str());
      expect_equal(rep, bj, brhs, "beta_J = sum e*_T det Q_{T,J} at J=" + j.str());
    }
  }
}

void check_xi_to_det(const ExteriorContext& ctx, LemmaReport& rep) {
  const int nv = ctx.weyl_vars();
  auto xtdx = NcMatrix<WeylElement>::build(ctx.m(), ctx.m(), [&](int s, int t) {
    WeylElement w(nv);
    for (int i = 1; i <= ctx.p(); ++i)
      w += ctx.omega.P.at(s, i) * ctx.omega.Q.at(t, i);
    return w;
  });
  auto dyty = NcMatrix<WeylElement>::build(ctx.m(), ctx.m(), [&](int s, int t) {
    WeylElement w(nv);
    for (int i = ctx.p() + 1; i <= ctx.p() + ctx.q(); ++i)
      w += ctx.omega.P.at(s, i) * ctx.omega.Q.at(t, i);
    return w;
  });
  for (int variant = 0; variant < 2; ++variant) {
    const auto& mat = variant == 0 ? xtdx : dyty;
    auto xi_base = variant == 0 ? xi_x(ctx) : xi_y(ctx);
    const std::string which = variant == 0 ? "XiX" : "XiY";
    for (int d = 1; d <= std::min(3, ctx.m()); ++d) {
      for (const auto& u : u_sample_grid(d)) {
        GrassmannElement lhs = GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars());
        for (int k = 0; k < d; ++k) lhs = lhs * (xi_base + tau(ctx).scaled(Scalar(u[k])));
        GrassmannElement rhs(ctx.e_gens(), ctx.weyl_vars());
        for (const IndexSet& s : comb(ctx.m(), d)) {
          for (const IndexSet& t : comb(ctx.m(), d)) {
            std::uint64_t mask = 0;
            for (int v : s.v) mask |= e_bit(v);
            for (int v : t.v) mask |= estar_bit(ctx, v);
            rhs.add_term(mask, sym_det_param(mat, s.v, t.v, u));
          }
        }
        rhs = rhs.scaled(Scalar(Rational(factorial(d) * half_staircase_sign(d))));
        expect_equal(rep, lhs, rhs, which + " product-to-Det at d=" + std::to_string(d));
      }
    }
  }
}

void check_det_to_det(const ExteriorContext& ctx, LemmaReport& rep) {
  // (a) directly in U(gl_n) for n <= 3, d <= 2.
  for (int n = 1; n <= 3; ++n) {
    const std::vector<int> blocks{n};
    auto e_mat = NcMatrix<UEnvElement>::build(n, n, [&](int i, int j) {
      return UEnvElement::generator(blocks, {0, i, j});
    });
    auto te_mat = e_mat.transposed();
    for (int d = 1; d <= std::min(2, n); ++d) {
      for (int u0 = 0; u0 <= 3; ++u0) {
        std::vector<Rational> u_desc(d), u_asc(d);
        for (int k = 0; k < d; ++k) {
          u_desc[k] = Rational(u0 - 1 - k);      // u-1, u-2, ..., u-d
          u_asc[k] = Rational(u0 - d + k);       // u-d, ..., u-1
        }
        for (const IndexSet& is : comb(n, d)) {
          for (const IndexSet& js : comb(n, d)) {
            const UEnvElement a = col_det_param(e_mat, is.v, js.v, u_desc);
            const UEnvElement b = sym_det_param(e_mat, is.v, js.v, u_desc);
            const UEnvElement c = sym_det_param(te_mat, js.v, is.v, u_asc);
            const UEnvElement e = col_det_param(te_mat, js.v, is.v, u_asc);
            if (!(a == b && b == c && c == e)) {
              note_failure(rep, "U(gl_" + std::to_string(n) + ") at d=" + std::to_string(d) +
                                    " u=" + std::to_string(u0) + " I=" + is.str() + " J=" + js.str(),
                           "");
            }
          }
        }
      }
    }
  }
  // (b) in the Weyl realization A = X tdX, whose entries satisfy the same
  //     commutation relations.
  const int nv = ctx.weyl_vars();
  auto a_mat = NcMatrix<WeylElement>::build(ctx.m(), ctx.m(), [&](int s, int t) {
    WeylElement w(nv);
    for (int i = 1; i <= ctx.p(); ++i) w += ctx.omega.P.at(s, i) * ctx.omega.Q.at(t, i);
    return w;
  });
  auto ta_mat = a_mat.transposed();
  for (int d = 1; d <= std::min(3, ctx.m()); ++d) {
    for (int u0 = 0; u0 <= 3; ++u0) {
      std::vector<Rational> u_desc(d), u_asc(d);
      for (int k = 0; k < d; ++k) {
        u_desc[k] = Rational(u0 - 1 - k);
        u_asc[k] = Rational(u0 - d + k);
      }
      for (const IndexSet& is : comb(ctx.m(), d)) {
        for (const IndexSet& js : comb(ctx.m(), d)) {
          const WeylElement a = col_det_param(a_mat, is.v, js.v, u_desc);
          const WeylElement b = sym_det_param(a_mat, is.v, js.v, u_desc);
          const WeylElement c = sym_det_param(ta_mat, js.v, is.v, u_asc);
          const WeylElement e = col_det_param(ta_mat, js.v, is.v, u_asc);
          if (!(a == b && b == c && c == e)) {
            note_failure(rep, "Weyl realization at d=" + std::to_string(d) +
                                  " u=" + std::to_string(u0) + " I=" + is.str() + " J=" + js.str(),
                         first_difference(a, b));
          }
        }
      }
    }
  }
}

void check_right_half_comm_rel(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement zero(ctx.f_gens(), ctx.weyl_vars());
  const GrassmannElement sig = sigma(ctx);
  const GrassmannElement lam = lambda(ctx);
  for (int s = 1; s <= ctx.m(); ++s) {
    for (int t = 1; t <= ctx.m(); ++t) {
      expect_equal(rep, eta(ctx, s) * eta(ctx, t) + eta(ctx, t) * eta(ctx, s), zero,
                   "eta anti-commutation at (" + std::to_string(s) + "," + std::to_string(t) + ")");
      expect_equal(rep, zeta(ctx, s) * zeta(ctx, t) + zeta(ctx, t) * zeta(ctx, s), zero,
                   "zeta anti-commutation at (" + std::to_string(s) + "," + std::to_string(t) + ")");
      GrassmannElement expected = s == t ? sig : zero;
      expect_equal(rep, eta(ctx, s) * zeta(ctx, t) + zeta(ctx, t) * eta(ctx, s), expected,
                   "eta-zeta relation at (" + std::to_string(s) + "," + std::to_string(t) + ")");
    }
  }
  for (int t = 1; t <= ctx.m(); ++t) {
    expect_equal(rep, lam * eta(ctx, t) - eta(ctx, t) * lam, eta(ctx, t) * sig,
                 "[Lambda, eta_t] = eta_t sigma at t=" + std::to_string(t));
  }
}

void check_lambda_to_detpq(const ExteriorContext& ctx, LemmaReport& rep) {
  const int nv = ctx.weyl_vars();
  const int pq = ctx.p() + ctx.q();
  auto b_mat = NcMatrix<WeylElement>::build(pq, pq, [&](int i, int j) {
    WeylElement w(nv);
    for (int s = 1; s <= ctx.m(); ++s) w += ctx.omega.P.at(s, i) * ctx.omega.Q.at(s, j);
    return w;
  });
  const GrassmannElement lam = lambda(ctx), sig = sigma(ctx);
  for (int d = 1; d <= std::min(3, pq); ++d) {
    for (const auto& u : u_sample_grid(d)) {
      GrassmannElement lhs = GrassmannElement::one(ctx.f_gens(), ctx.weyl_vars());
      for (int k = 0; k < d; ++k) lhs = lhs * (lam - sig.scaled(Scalar(u[k])));
      GrassmannElement rhs(ctx.f_gens(), ctx.weyl_vars());
      for (const IndexSet& is : comb(pq, d)) {
        for (const IndexSet& js : comb(pq, d)) {
          std::uint64_t mask = 0;
          for (int v : is.v) mask |= f_bit(v);
          for (int v : js.v) mask |= fstar_bit(ctx, v);
          rhs.add_term(mask, det_pq(b_mat, is.v, js.v, u, ctx.p(), ctx.q()));
        }
      }
      rhs = rhs.scaled(Scalar(Rational(factorial(d) * half_staircase_sign(d))));
      expect_equal(rep, lhs, rhs, "Lambda product to Det_{p,q} at d=" + std::to_string(d));
    }
  }
}

void check_comm_xi_txi(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement a = xi(ctx), b = xi_tilde(ctx);
  expect_equal(rep, a * b, b * a, "[Xi, XiTilde] = 0");
}

void check_comm_xi_alpha_beta(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement x = xi(ctx), t = tau(ctx);
  for (int i = 1; i <= ctx.p() + ctx.q(); ++i) {
    expect_equal(rep, x * alpha(ctx, i) - alpha(ctx, i) * x, alpha_tilde(ctx, i) * t,
                 "[Xi, alpha_i] = alphaTilde_i tau at i=" + std::to_string(i));
    expect_equal(rep, x * beta(ctx, i) - beta(ctx, i) * x, -(beta_tilde(ctx, i) * t),
                 "[Xi, beta_i] = -betaTilde_i tau at i=" + std::to_string(i));
  }
}

void check_gamma_recurrence(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement x = xi(ctx), t = tau(ctx);
  for (int u = 0; u <= 3; ++u) {
    for (int v = 0; u + v <= 3; ++v) {
      GrassmannElement lhs = gamma(ctx, u, v) * x;
      GrassmannElement rhs = gamma(ctx, u + 1, v);
      if (u > 0) rhs += (t * gamma(ctx, u - 1, v + 1)).scaled(Scalar(u));
      if (v > 0) rhs += (t * gamma(ctx, u + 1, v - 1)).scaled(Scalar(v));
      expect_equal(rep, lhs, rhs,
                   "gamma recurrence at (u,v)=(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
}

void check_gamma_to_det(const ExteriorContext& ctx, LemmaReport& rep) {
  const int pq = ctx.p() + ctx.q();
  for (int u = 0; u <= 2; ++u) {
    for (int v = 0; u + v <= 2; ++v) {
      const int w = u + v;
      GrassmannElement rhs(ctx.e_gens(), ctx.weyl_vars());
      for (const IndexSet& j : comb(pq, w)) {
        int a = 0;
        for (int val : j.v) a += val <= ctx.p() ? 1 : 0;
        const BigInt eps = epsilon_coeff(a, w - a, u, v);
        if (eps == 0) continue;
        for (const IndexSet& s : comb(ctx.m(), w)) {
          for (const IndexSet& t : comb(ctx.m(), w)) {
            std::uint64_t mask = 0;
            for (int val : s.v) mask |= e_bit(val);
            for (int val : t.v) mask |= estar_bit(ctx, val);
            rhs.add_term(mask, (col_det_param(ctx.omega.P, s.v, j.v) *
                                col_det_param(ctx.omega.Q, t.v, j.v))
                                   .scaled(Scalar(Rational(eps))));
          }
        }
      }
      rhs = rhs.scaled(Scalar(Rational(half_staircase_sign(w))));
      expect_equal(rep, gamma(ctx, u, v), rhs,
                   "gamma-to-det at (u,v)=(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
}

void check_b_expansion(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement x = xi(ctx), t = tau(ctx);
  GrassmannElement xpow = GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars());
  for (int d = 0; d <= 3; ++d) {
    GrassmannElement rhs(ctx.e_gens(), ctx.weyl_vars());
    for (int u = 0; u <= d; ++u) {
      for (int v = 0; u + v <= d; ++v) {
        const Rational b = b_coeff(d, u, v);
        if (b.is_zero()) continue;
        GrassmannElement term = gamma(ctx, u, v);
        for (int k = 0; k < d - u - v; ++k) term = term * t;
        rhs += term.scaled(Scalar(b));
      }
    }
    expect_equal(rep, xpow, rhs, "Xi^d expansion at d=" + std::to_string(d));
    xpow = xpow * x;
  }
}

void check_tau_power(const ExteriorContext& ctx, LemmaReport& rep) {
  const GrassmannElement t = tau(ctx);
  GrassmannElement tpow = GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars());
  for (int k = 0; k <= std::min(3, ctx.m() + 1); ++k) {
    GrassmannElement rhs(ctx.e_gens(), ctx.weyl_vars());
    for (const IndexSet& us : comb(ctx.m(), k)) {
      std::uint64_t mask = 0;
      for (int v : us.v) mask |= e_bit(v) | estar_bit(ctx, v);
      rhs.add_term(mask, WeylElement::constant(ctx.weyl_vars(), Scalar(1)));
    }
    rhs = rhs.scaled(Scalar(Rational(factorial(k) * half_staircase_sign(k))));
    expect_equal(rep, tpow, rhs, "tau^k at k=" + std::to_string(k));
    const WeylElement contracted = tpow.contract();
    const WeylElement expected = WeylElement::constant(
        ctx.weyl_vars(),
        Scalar(Rational(factorial(k) * binomial(ctx.m(), k) * half_staircase_sign(k))));
    expect_equal(rep, contracted, expected, "contract(tau^k) at k=" + std::to_string(k));
    tpow = tpow * t;
  }
}

void check_xi_d_sym_det(const ExteriorContext& ctx, LemmaReport& rep) {
  const int nv = ctx.weyl_vars();
  auto ptq = NcMatrix<WeylElement>::build(ctx.m(), ctx.m(), [&](int s, int t) {
    WeylElement w(nv);
    for (int j = 1; j <= ctx.p() + ctx.q(); ++j) w += ctx.omega.P.at(s, j) * ctx.omega.Q.at(t, j);
    return w;
  });
  const GrassmannElement x = xi(ctx);
  GrassmannElement xpow = GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars());
  for (int d = 1; d <= std::min(3, ctx.m()); ++d) {
    xpow = xpow * x;
    GrassmannElement rhs(ctx.e_gens(), ctx.weyl_vars());
    for (const IndexSet& s : comb(ctx.m(), d)) {
      for (const IndexSet& t : comb(ctx.m(), d)) {
        std::uint64_t mask = 0;
        for (int v : s.v) mask |= e_bit(v);
        for (int v : t.v) mask |= estar_bit(ctx, v);
        rhs.add_term(mask, sym_det_param(ptq, s.v, t.v));
      }
    }
    rhs = rhs.scaled(Scalar(Rational(factorial(d) * half_staircase_sign(d))));
    expect_equal(rep, xpow, rhs, "Xi^d = sum e_S e*_T d! Det((P tQ)_{S,T}) at d=" + std::to_string(d));
  }
}

void check_gamma_tilde_placement(const ExteriorContext& ctx, LemmaReport& rep) {
  for (int u = 0; u <= 2; ++u) {
    for (int v = 1; u + v <= 2; ++v) {
      const int w = u + v;
      const GrassmannElement canonical = gamma(ctx, u, v);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
        if (std::popcount(mask) != v) continue;
        expect_equal(rep, gamma_general(ctx, w, mask), canonical,
                     "tilde placement (u,v)=(" + std::to_string(u) + "," + std::to_string(v) +
                         ") mask=" + std::to_string(mask));
      }
    }
  }
}

struct LemmaEntry {
  std::string id;
  Check check;
};

const std::vector<LemmaEntry>& lemma_table() {
  static const std::vector<LemmaEntry> table = {
      {"tau-central", check_tau_central},
      {"comm-alpha-alpha", check_comm_alpha_alpha},
      {"comm-P-Q", check_comm_p_q},
      {"comm-alpha-beta", check_comm_alpha_beta},
      {"comm-XiX-XiY", check_comm_xix_xiy},
      {"comm-alpha-XiX", check_comm_alpha_xix},
      {"comm-alpha-XiY", check_comm_alpha_xiy},
      {"alpha-beta-det", check_alpha_beta_det},
      {"Xi-to-Det", check_xi_to_det},
      {"Det-to-det", check_det_to_det},
      {"right-half-comm-rel", check_right_half_comm_rel},
      {"Lambda-to-Detpq", check_lambda_to_detpq},
      {"comm-Xi-tXi", check_comm_xi_txi},
      {"comm-Xi-alpha-beta", check_comm_xi_alpha_beta},
      {"gamma-recurrence", check_gamma_recurrence},
      {"gamma-to-det", check_gamma_to_det},
      {"b-expansion", check_b_expansion},
      {"tau-power", check_tau_power},
      {"Xi-d-sym-det", check_xi_d_sym_det},
      {"gamma-tilde-placement", check_gamma_tilde_placement},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : lemma_table()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

LemmaReport verify_lemma(const std::string& lemma_id, int m, int p, int q) {
  for (const auto& entry : lemma_table()) {
    if (entry.id == lemma_id) {
      ExteriorContext ctx = make_exterior_context(m, p, q);
      LemmaReport rep;
      rep.id = lemma_id;
      entry.check(ctx, rep);
      return rep;
    }
  }
  throw std::invalid_argument("verify_lemma: unknown lemma id '" + lemma_id + "'");
}

std::vector<LemmaReport> run_exterior_suite(int m, int p, int q, int jobs) {
  const ExteriorContext ctx = make_exterior_context(m, p, q);
  const auto& table = lemma_table();
  std::vector<LemmaReport> out(table.size());
  auto run_one = [&](std::size_t i) {
    out[i].id = table[i].id;
    table[i].check(ctx, out[i]);
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < table.size(); ++i) run_one(i);
    return out;
  }
  std::vector<std::future<void>> futs;
  std::size_t next = 0;
  while (next < table.size()) {
    const std::size_t batch = std::min<std::size_t>(jobs, table.size() - next);
    futs.clear();
    for (std::size_t k = 0; k < batch; ++k) {
      futs.push_back(std::async(std::launch::async, run_one, next + k));
    }
    for (auto& f : futs) f.get();
    next += batch;
  }
  return out;
}

}  // namespace capelli
