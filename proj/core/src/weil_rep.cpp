#include "capelli/weil_rep.hpp"

#include <sstream>
#include <stdexcept>

namespace capelli {

std::string case_name(CaseKind k) {
  switch (k) {
    case CaseKind::R: return "R";
    case CaseKind::C: return "C";
    case CaseKind::H: return "H";
  }
  return "?";
}

void CaseConfig::validate() const {
  if (kind == CaseKind::C) {
    if (m < 1 || p < 1 || q < 1) throw std::invalid_argument("CaseConfig: sizes must be >= 1");
  } else {
    if (m < 1 || n < 1) throw std::invalid_argument("CaseConfig: sizes must be >= 1");
  }
}

int CaseConfig::weyl_vars() const {
  switch (kind) {
    case CaseKind::R: return m * n;
    case CaseKind::C: return m * (p + q);
    case CaseKind::H: return 2 * m * n;
  }
  return 0;
}

std::vector<int> CaseConfig::g_blocks() const {
  switch (kind) {
    case CaseKind::R: return {m};
    case CaseKind::C: return {m, m};
    case CaseKind::H: return {2 * m};
  }
  return {};
}

int CaseConfig::p_rows() const { return kind == CaseKind::H ? 2 * m : m; }

int CaseConfig::p_cols() const { return kind == CaseKind::C ? p + q : 2 * n; }

std::string CaseConfig::str() const {
  std::ostringstream os;
  os << "case " << case_name(kind) << " ";
  if (kind == CaseKind::C) {
    os << "m=" << m << " p=" << p << " q=" << q;
  } else {
    os << "m=" << m << " n=" << n;
  }
  return os.str();
}

int OmegaImageSet::var_x(int s, int i) const {
  switch (cfg.kind) {
    case CaseKind::C: return (s - 1) * cfg.p + (i - 1);
    case CaseKind::R: return (s - 1) * cfg.n + (i - 1);
    case CaseKind::H: return (s - 1) * cfg.n + (i - 1);
  }
  return -1;
}

int OmegaImageSet::var_y(int s, int j) const {
  if (cfg.kind != CaseKind::C) throw std::logic_error("var_y: Case C only");
  return cfg.m * cfg.p + (s - 1) * cfg.q + (j - 1);
}

namespace {

WeylElement shift_term(int vars, const Rational& c) {
  return WeylElement::constant(vars, Scalar(c));
}

}  // namespace

WeylElement OmegaImageSet::g_image(const GlGenerator& g) const {
  const int nv = cfg.weyl_vars();
  WeylElement w(nv);
  const int s = g.row, t = g.col;
  switch (cfg.kind) {
    case CaseKind::R: {
      for (int i = 1; i <= cfg.n; ++i)
        w += WeylElement::variable(nv, var_x(s, i)) * WeylElement::derivative(nv, var_x(t, i));
      if (s == t) w += shift_term(nv, Rational(cfg.n, 2));
      return w;
    }
    case CaseKind::H: {
      for (int i = 1; i <= cfg.n; ++i)
        w += WeylElement::variable(nv, var_x(s, i)) * WeylElement::derivative(nv, var_x(t, i));
      if (s == t) w += shift_term(nv, Rational(cfg.n, 2));
      return w;
    }
    case CaseKind::C: {
      if (g.block == 0) {
        for (int i = 1; i <= cfg.p; ++i)
          w += WeylElement::variable(nv, var_x(s, i)) * WeylElement::derivative(nv, var_x(t, i));
        if (s == t) w += shift_term(nv, Rational(cfg.p, 2));
      } else {
        for (int j = 1; j <= cfg.q; ++j)
          w += WeylElement::variable(nv, var_y(s, j)) * WeylElement::derivative(nv, var_y(t, j));
        if (s == t) w += shift_term(nv, Rational(cfg.q, 2));
      }
      return w;
    }
  }
  throw std::logic_error("g_image: unknown case");
}

namespace {

OmegaImageSet build_case_c(const CaseConfig& cfg) {
  const int nv = cfg.weyl_vars();
  const int m = cfg.m, p = cfg.p, q = cfg.q;
  OmegaImageSet o{cfg, NcMatrix<WeylElement>(1, 1, WeylElement(nv)),
                  NcMatrix<WeylElement>(1, 1, WeylElement(nv))};

  // P = (X, dY), Q = (dX, Y).
  o.P = NcMatrix<WeylElement>::build(m, p + q, [&](int s, int j) {
    return j <= p ? WeylElement::variable(nv, o.var_x(s, j))
                  : WeylElement::derivative(nv, o.var_y(s, j - p));
  });
  o.Q = NcMatrix<WeylElement>::build(m, p + q, [&](int s, int j) {
    return j <= p ? WeylElement::derivative(nv, o.var_x(s, j))
                  : WeylElement::variable(nv, o.var_y(s, j - p));
  });

  // Raw B' images; the four blocks of the gl_{p+q} action.
  auto bprime = NcMatrix<WeylElement>::build(p + q, p + q, [&](int i, int j) {
    WeylElement w(nv);
    if (i <= p && j <= p) {
      for (int s = 1; s <= m; ++s)
        w += WeylElement::variable(nv, o.var_x(s, i)) * WeylElement::derivative(nv, o.var_x(s, j));
      if (i == j) w += shift_term(nv, Rational(m, 2));
    } else if (i > p && j > p) {
      for (int s = 1; s <= m; ++s)
        w -= WeylElement::variable(nv, o.var_y(s, j - p)) * WeylElement::derivative(nv, o.var_y(s, i - p));
      if (i == j) w -= shift_term(nv, Rational(m, 2));
    } else if (i <= p && j > p) {
      for (int s = 1; s <= m; ++s)
        w += (WeylElement::variable(nv, o.var_x(s, i)) * WeylElement::variable(nv, o.var_y(s, j - p)))
                 .scaled(Scalar::i());
    } else {  // i > p, j <= p
      for (int s = 1; s <= m; ++s)
        w += (WeylElement::derivative(nv, o.var_x(s, j)) * WeylElement::derivative(nv, o.var_y(s, i - p)))
                 .scaled(Scalar::i());
    }
    return w;
  });
  o.omega_b_prime = bprime;

  // Folded B = diag(1_p, -i 1_q) B' diag(1_p, -i 1_q).
  auto fold = [&](int i) { return i <= p ? Scalar(1) : -Scalar::i(); };
  o.omega_b = NcMatrix<WeylElement>::build(p + q, p + q, [&](int i, int j) {
    return bprime.at(i, j).scaled(fold(i) * fold(j));
  });
  return o;
}

OmegaImageSet build_case_r(const CaseConfig& cfg) {
  const int nv = cfg.weyl_vars();
  const int m = cfg.m, n = cfg.n;
  OmegaImageSet o{cfg, NcMatrix<WeylElement>(1, 1, WeylElement(nv)),
                  NcMatrix<WeylElement>(1, 1, WeylElement(nv))};

  // P = (X, d), Q = (d, X).
  o.P = NcMatrix<WeylElement>::build(m, 2 * n, [&](int s, int j) {
    return j <= n ? WeylElement::variable(nv, o.var_x(s, j))
                  : WeylElement::derivative(nv, o.var_x(s, j - n));
  });
  o.Q = NcMatrix<WeylElement>::build(m, 2 * n, [&](int s, int j) {
    return j <= n ? WeylElement::derivative(nv, o.var_x(s, j))
                  : WeylElement::variable(nv, o.var_x(s, j - n));
  });

  // sp_{2n} root vectors: matrix realizations and their images.
  const Scalar half(Rational(1, 2));
  const Scalar ih = Scalar::i() * half;
  auto zero_mat = NcMatrix<Scalar>(2 * n, 2 * n, Scalar(0));
  auto add_gen = [&](const std::string& name, const NcMatrix<Scalar>& mat, const WeylElement& img) {
    o.m_generators.push_back({name, mat, img});
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      // X_{eps_i - eps_j} = 1/2 [[F_ij, i G_ij], [-i G_ij, F_ij]]
      NcMatrix<Scalar> mat = zero_mat;
      mat.at(i, j) += half;
      mat.at(j, i) -= half;
      mat.at(n + i, n + j) += half;
      mat.at(n + j, n + i) -= half;
      mat.at(i, n + j) += ih;
      mat.at(j, n + i) += ih;
      mat.at(n + i, j) -= ih;
      mat.at(n + j, i) -= ih;
      WeylElement img(nv);
      for (int s = 1; s <= m; ++s)
        img += WeylElement::variable(nv, o.var_x(s, i)) * WeylElement::derivative(nv, o.var_x(s, j));
      if (i == j) img += shift_term(nv, Rational(m, 2));
      add_gen("X[e" + std::to_string(i) + "-e" + std::to_string(j) + "]", mat, img);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      // X_{eps_i + eps_j} = 1/2 [[G_ij, -i G_ij], [-i G_ij, -G_ij]]
      NcMatrix<Scalar> plus = zero_mat;
      plus.at(i, j) += half;
      plus.at(j, i) += half;
      plus.at(n + i, n + j) -= half;
      plus.at(n + j, n + i) -= half;
      plus.at(i, n + j) -= ih;
      plus.at(j, n + i) -= ih;
      plus.at(n + i, j) -= ih;
      plus.at(n + j, i) -= ih;
      WeylElement img_plus(nv);
      for (int s = 1; s <= m; ++s)
        img_plus += WeylElement::variable(nv, o.var_x(s, i)) * WeylElement::variable(nv, o.var_x(s, j));
      add_gen("X[e" + std::to_string(i) + "+e" + std::to_string(j) + "]", plus, img_plus);

      // X_{-eps_i - eps_j} realized as -1/2 [[G_ij, i G_ij], [i G_ij, -G_ij]];
      // the sign makes the matrix bracket match the operator images
      // ([Sum x_i x_j, Sum d_i d_j] pairs negatively with the plus family).
      NcMatrix<Scalar> minus = zero_mat;
      minus.at(i, j) -= half;
      minus.at(j, i) -= half;
      minus.at(n + i, n + j) += half;
      minus.at(n + j, n + i) += half;
      minus.at(i, n + j) -= ih;
      minus.at(j, n + i) -= ih;
      minus.at(n + i, j) -= ih;
      minus.at(n + j, i) -= ih;
      WeylElement img_minus(nv);
      for (int s = 1; s <= m; ++s)
        img_minus += WeylElement::derivative(nv, o.var_x(s, i)) * WeylElement::derivative(nv, o.var_x(s, j));
      add_gen("X[-e" + std::to_string(i) + "-e" + std::to_string(j) + "]", minus, img_minus);
    }
  }
  return o;
}

OmegaImageSet build_case_h(const CaseConfig& cfg) {
  const int nv = cfg.weyl_vars();
  const int m = cfg.m, n = cfg.n;
  OmegaImageSet o{cfg, NcMatrix<WeylElement>(1, 1, WeylElement(nv)),
                  NcMatrix<WeylElement>(1, 1, WeylElement(nv))};

  // J = [[0, 1_m], [-1_m, 0]] acts on the row index: P = (X, Jd), Q = (d, JX).
  auto jsign = [m](int s) { return s <= m ? 1 : -1; };
  auto jflip = [m](int s) { return s <= m ? s + m : s - m; };
  o.P = NcMatrix<WeylElement>::build(2 * m, 2 * n, [&](int s, int j) {
    if (j <= n) return WeylElement::variable(nv, o.var_x(s, j));
    WeylElement d = WeylElement::derivative(nv, o.var_x(jflip(s), j - n));
    return jsign(s) > 0 ? d : -d;
  });
  o.Q = NcMatrix<WeylElement>::build(2 * m, 2 * n, [&](int s, int j) {
    if (j <= n) return WeylElement::derivative(nv, o.var_x(s, j));
    WeylElement x = WeylElement::variable(nv, o.var_x(jflip(s), j - n));
    return jsign(s) > 0 ? x : -x;
  });

  // o_{2n} generators: diagonal gl_n part plus the two alternating blocks.
  auto zero_mat = NcMatrix<Scalar>(2 * n, 2 * n, Scalar(0));
  auto sbar = [m](int s) { return s + m; };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      NcMatrix<Scalar> mat = zero_mat;
      mat.at(i, j) += Scalar(1);
      mat.at(n + j, n + i) -= Scalar(1);
      WeylElement img(nv);
      for (int s = 1; s <= 2 * m; ++s)
        img += WeylElement::variable(nv, o.var_x(s, i)) * WeylElement::derivative(nv, o.var_x(s, j));
      if (i == j) img += shift_term(nv, Rational(m));
      o.m_generators.push_back({"D[" + std::to_string(i) + "," + std::to_string(j) + "]", mat, img});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      NcMatrix<Scalar> up = zero_mat;
      up.at(i, n + j) += Scalar(1);
      up.at(j, n + i) -= Scalar(1);
      WeylElement img_up(nv);
      for (int s = 1; s <= m; ++s) {
        img_up += WeylElement::variable(nv, o.var_x(s, i)) * WeylElement::variable(nv, o.var_x(sbar(s), j));
        img_up -= WeylElement::variable(nv, o.var_x(sbar(s), i)) * WeylElement::variable(nv, o.var_x(s, j));
      }
      img_up = img_up.scaled(Scalar::i());
      o.m_generators.push_back({"U[" + std::to_string(i) + "," + std::to_string(j) + "]", up, img_up});

      NcMatrix<Scalar> low = zero_mat;
      low.at(n + j, i) += Scalar(1);
      low.at(n + i, j) -= Scalar(1);
      WeylElement img_low(nv);
      for (int s = 1; s <= m; ++s) {
        img_low += WeylElement::derivative(nv, o.var_x(s, i)) * WeylElement::derivative(nv, o.var_x(sbar(s), j));
        img_low -= WeylElement::derivative(nv, o.var_x(sbar(s), i)) * WeylElement::derivative(nv, o.var_x(s, j));
      }
      img_low = img_low.scaled(Scalar::i());
      o.m_generators.push_back({"L[" + std::to_string(i) + "," + std::to_string(j) + "]", low, img_low});
    }
  }
  return o;
}

}  // namespace

OmegaImageSet build_omega(const CaseConfig& cfg) {
  cfg.validate();
  switch (cfg.kind) {
    case CaseKind::C: return build_case_c(cfg);
    case CaseKind::R: return build_case_r(cfg);
    case CaseKind::H: return build_case_h(cfg);
  }
  throw std::logic_error("build_omega: unknown case");
}

WeylElement omega_hom(const OmegaImageSet& omega, const UEnvElement& x) {
  if (x.blocks() != omega.cfg.g_blocks())
    throw std::invalid_argument("omega_hom: element structure does not match the case");
  const int nv = omega.cfg.weyl_vars();
  WeylElement out(nv);
  for (const auto& [mono, c] : x.terms()) {
    WeylElement prod = WeylElement::constant(nv, Scalar(1));
    for (const GlGenerator& g : mono.w) prod = prod * omega.g_image(g);
    out += prod.scaled(c);
  }
  return out;
}

WeylElement omega_hom_m(const OmegaImageSet& omega, const UEnvElement& x) {
  if (omega.cfg.kind != CaseKind::C) throw std::logic_error("omega_hom_m: Case C only");
  const int pq = omega.cfg.p + omega.cfg.q;
  if (x.blocks() != std::vector<int>{pq})
    throw std::invalid_argument("omega_hom_m: element structure must be one gl_{p+q} block");
  const int nv = omega.cfg.weyl_vars();
  WeylElement out(nv);
  for (const auto& [mono, c] : x.terms()) {
    WeylElement prod = WeylElement::constant(nv, Scalar(1));
    for (const GlGenerator& g : mono.w) prod = prod * omega.omega_b_prime->at(g.row, g.col);
    out += prod.scaled(c);
  }
  return out;
}

NcMatrix<UEnvElement> b_matrix_ue(int p, int q) {
  const std::vector<int> blocks{p + q};
  auto fold = [&](int i) { return i <= p ? Scalar(1) : -Scalar::i(); };
  return NcMatrix<UEnvElement>::build(p + q, p + q, [&](int i, int j) {
    return UEnvElement::generator(blocks, GlGenerator{0, i, j}, fold(i) * fold(j));
  });
}

std::vector<UEnvElement> k_basis(const CaseConfig& cfg) {
  std::vector<UEnvElement> basis;
  const std::vector<int> blocks = cfg.g_blocks();
  switch (cfg.kind) {
    case CaseKind::C: {
      for (int s = 1; s <= cfg.m; ++s) {
        for (int t = 1; t <= cfg.m; ++t) {
          basis.push_back(UEnvElement::generator(blocks, {0, s, t}) -
                          UEnvElement::generator(blocks, {1, t, s}));
        }
      }
      break;
    }
    case CaseKind::R: {
      for (int s = 1; s <= cfg.m; ++s) {
        for (int t = s + 1; t <= cfg.m; ++t) {
          basis.push_back(UEnvElement::generator(blocks, {0, s, t}) -
                          UEnvElement::generator(blocks, {0, t, s}));
        }
      }
      break;
    }
    case CaseKind::H: {
      const int m = cfg.m;
      for (int a = 1; a <= m; ++a) {
        for (int b = 1; b <= m; ++b) {
          basis.push_back(UEnvElement::generator(blocks, {0, a, b}) -
                          UEnvElement::generator(blocks, {0, m + b, m + a}));
        }
      }
      for (int a = 1; a <= m; ++a) {
        for (int b = a; b <= m; ++b) {
          UEnvElement upper = UEnvElement::generator(blocks, {0, a, m + b});
          if (a != b) upper += UEnvElement::generator(blocks, {0, b, m + a});
          basis.push_back(upper);
          UEnvElement lower = UEnvElement::generator(blocks, {0, m + a, b});
          if (a != b) lower += UEnvElement::generator(blocks, {0, m + b, a});
          basis.push_back(lower);
        }
      }
      break;
    }
  }
  return basis;
}

std::vector<UEnvElement> h_basis_c(int p, int q) {
  const std::vector<int> blocks{p + q};
  std::vector<UEnvElement> basis;
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= p; ++j) basis.push_back(UEnvElement::generator(blocks, {0, i, j}));
  }
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) basis.push_back(UEnvElement::generator(blocks, {0, p + i, p + j}));
  }
  return basis;
}

namespace {

// Coordinates of target in the span of the generator matrices, by exact
// Gaussian elimination over the Gaussian rationals.
std::optional<std::vector<Scalar>> solve_in_span(const std::vector<MSideGenerator>& gens,
                                                 const NcMatrix<Scalar>& target) {
  const int dim = gens.front().matrix.rows();
  const int rows = dim * dim;
  const int cols = static_cast<int>(gens.size());
  std::vector<std::vector<Scalar>> aug(rows, std::vector<Scalar>(cols + 1, Scalar(0)));
  for (int c = 0; c < cols; ++c) {
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j) aug[(i - 1) * dim + (j - 1)][c] = gens[c].matrix.at(i, j);
  }
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) aug[(i - 1) * dim + (j - 1)][cols] = target.at(i, j);

  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!aug[i][c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(aug[r], aug[piv]);
    const Scalar inv = Scalar(1) / aug[r][c];
    for (int j = c; j <= cols; ++j) aug[r][j] = aug[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || aug[i][c].is_zero()) continue;
      const Scalar f = aug[i][c];
      for (int j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  // Inconsistent system -> target not in span.
  for (int i = r; i < rows; ++i) {
    if (!aug[i][cols].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(cols, Scalar(0));
  for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = aug[i][cols];
  return x;
}

NcMatrix<Scalar> mat_commutator(const NcMatrix<Scalar>& a, const NcMatrix<Scalar>& b) {
  auto ab = a * b;
  auto ba = b * a;
  return NcMatrix<Scalar>::build(a.rows(), a.cols(),
                                 [&](int i, int j) { return ab.at(i, j) - ba.at(i, j); });
}

}  // namespace

HomReport verify_homomorphism(const OmegaImageSet& omega) {
  HomReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  const CaseConfig& cfg = omega.cfg;
  const int nv = cfg.weyl_vars();
  const std::vector<int> blocks = cfg.g_blocks();

  // g-side: brackets of matrix units across all blocks.
  std::vector<GlGenerator> ggens;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int i = 1; i <= blocks[b]; ++i)
      for (int j = 1; j <= blocks[b]; ++j) ggens.push_back({b, i, j});
  }
  for (const GlGenerator& a : ggens) {
    for (const GlGenerator& b : ggens) {
      WeylElement lhs = commutator(omega.g_image(a), omega.g_image(b));
      WeylElement rhs(nv);
      if (a.block == b.block) {
        if (a.col == b.row) rhs += omega.g_image({a.block, a.row, b.col});
        if (b.col == a.row) rhs -= omega.g_image({a.block, b.row, a.col});
      }
      if (lhs != rhs) {
        fail("g-side bracket failed at E" + std::to_string(a.block) + "[" + std::to_string(a.row) +
             "," + std::to_string(a.col) + "], E" + std::to_string(b.block) + "[" +
             std::to_string(b.row) + "," + std::to_string(b.col) + "]");
      }
    }
  }

  // m-side.
  if (cfg.kind == CaseKind::C) {
    const int pq = cfg.p + cfg.q;
    const auto& bp = *omega.omega_b_prime;
    for (int i = 1; i <= pq; ++i) {
      for (int j = 1; j <= pq; ++j) {
        for (int k = 1; k <= pq; ++k) {
          for (int l = 1; l <= pq; ++l) {
            WeylElement lhs = commutator(bp.at(i, j), bp.at(k, l));
            WeylElement rhs(nv);
            if (j == k) rhs += bp.at(i, l);
            if (l == i) rhs -= bp.at(k, j);
            if (lhs != rhs) {
              fail("m-side gl bracket failed at B'[" + std::to_string(i) + "," + std::to_string(j) +
                   "], B'[" + std::to_string(k) + "," + std::to_string(l) + "]");
            }
          }
        }
      }
    }
  } else {
    const auto& gens = omega.m_generators;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = 0; b < gens.size(); ++b) {
        auto coords = solve_in_span(gens, mat_commutator(gens[a].matrix, gens[b].matrix));
        if (!coords) {
          fail("m-side bracket [" + gens[a].name + "," + gens[b].name + "] left the span");
          continue;
        }
        WeylElement rhs(nv);
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (!(*coords)[k].is_zero()) rhs += gens[k].image.scaled((*coords)[k]);
        }
        if (commutator(gens[a].image, gens[b].image) != rhs) {
          fail("m-side bracket image failed at [" + gens[a].name + "," + gens[b].name + "]");
        }
      }
    }
  }

  // P/Q commutation relations: [P_{s,i}, Q_{t,j}] = eps_{i,j} delta_{s,t}.
  const int half = cfg.kind == CaseKind::C ? cfg.p : cfg.n;
  for (int s = 1; s <= cfg.p_rows(); ++s) {
    for (int t = 1; t <= cfg.p_rows(); ++t) {
      for (int i = 1; i <= cfg.p_cols(); ++i) {
        for (int j = 1; j <= cfg.p_cols(); ++j) {
          WeylElement lhs = commutator(omega.P.at(s, i), omega.Q.at(t, j));
          WeylElement rhs(nv);
          if (s == t && i == j) rhs = WeylElement::constant(nv, Scalar(i <= half ? -1 : 1));
          if (lhs != rhs) {
            fail("P/Q commutation failed at s=" + std::to_string(s) + " t=" + std::to_string(t) +
                 " i=" + std::to_string(i) + " j=" + std::to_string(j));
          }
        }
      }
    }
  }

  // Matrix-form identities of the construction.
  auto expect = [&](const WeylElement& lhs, const WeylElement& rhs, const std::string& what) {
    if (lhs != rhs) fail(what + ": " + first_difference(lhs, rhs));
  };
  if (cfg.kind == CaseKind::C) {
    const int m = cfg.m, p = cfg.p, q = cfg.q;
    for (int s = 1; s <= m; ++s) {
      for (int t = 1; t <= m; ++t) {
        WeylElement xtdx(nv);
        for (int i = 1; i <= p; ++i)
          xtdx += WeylElement::variable(nv, omega.var_x(s, i)) *
                  WeylElement::derivative(nv, omega.var_x(t, i));
        if (s == t) xtdx += shift_term(nv, Rational(p, 2));
        expect(omega.g_image({0, s, t}), xtdx, "omega(E^X) = X tdX + p/2");

        WeylElement dyty(nv);
        for (int j = 1; j <= q; ++j)
          dyty += WeylElement::derivative(nv, omega.var_y(s, j)) *
                  WeylElement::variable(nv, omega.var_y(t, j));
        if (s == t) dyty -= shift_term(nv, Rational(q, 2));
        expect(omega.g_image({1, t, s}), dyty, "omega(tE^Y) = dY tY - q/2");

        WeylElement ptq(nv);
        for (int j = 1; j <= p + q; ++j) ptq += omega.P.at(s, j) * omega.Q.at(t, j);
        if (s == t) ptq += shift_term(nv, Rational(p - q, 2));
        expect(omega.g_image({0, s, t}) + omega.g_image({1, t, s}), ptq,
               "omega(E^X + tE^Y) = P tQ + (p-q)/2");
      }
    }
    const int pq = p + q;
    for (int i = 1; i <= pq; ++i) {
      for (int j = 1; j <= pq; ++j) {
        WeylElement tpq(nv);
        for (int s = 1; s <= m; ++s) tpq += omega.P.at(s, i) * omega.Q.at(s, j);
        if (i == j) tpq += shift_term(nv, Rational(i <= p ? m : -m, 2));
        expect(omega.omega_b->at(i, j), tpq, "omega(B) = tP Q + (m/2) I_{p,q}");
      }
    }
  } else {
    // R: omega(E + tE) = P tQ;  H: omega(E + J tE J^{-1}) = P tQ.
    const int rows = cfg.p_rows();
    auto jsign = [&](int s) { return s <= cfg.m ? 1 : -1; };
    auto jflip = [&](int s) { return s <= cfg.m ? s + cfg.m : s - cfg.m; };
    for (int s = 1; s <= rows; ++s) {
      for (int t = 1; t <= rows; ++t) {
        WeylElement lhs = omega.g_image({0, s, t});
        if (cfg.kind == CaseKind::R) {
          lhs += omega.g_image({0, t, s});
        } else {
          WeylElement conj = omega.g_image({0, jflip(t), jflip(s)});
          lhs += jsign(s) * jsign(t) > 0 ? conj : -conj;
        }
        WeylElement ptq(nv);
        for (int j = 1; j <= cfg.p_cols(); ++j) ptq += omega.P.at(s, j) * omega.Q.at(t, j);
        expect(lhs, ptq, cfg.kind == CaseKind::R ? "omega(E + tE) = P tQ"
                                                 : "omega(E + J tE J^-1) = P tQ");
      }
    }
  }
  return rep;
}

}  // namespace capelli
