// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.  Every tolerance here is exact equality of canonical
// forms; the budgets are wall-clock ceilings per criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "capelli/capelli_verify.hpp"
#include "capelli/coeffs.hpp"
#include "capelli/exterior_suite.hpp"
#include "capelli/weil_rep.hpp"

using namespace capelli;

namespace {

int failures = 0;

struct Criterion {
  int number;
  std::string description;
  long budget_ms;
  bool ok = true;
  std::string note;
};

void finish(Criterion& c, std::chrono::steady_clock::time_point start) {
  const long elapsed = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                             std::chrono::steady_clock::now() - start)
                                             .count());
  const bool in_budget = elapsed <= c.budget_ms;
  const bool pass = c.ok && in_budget;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s [%ld ms / budget %ld ms]%s%s\n", pass ? "PASS" : "FAIL",
              c.number, c.description.c_str(), elapsed, c.budget_ms,
              c.note.empty() ? "" : " -- ", c.note.c_str());
  std::fflush(stdout);
}

const std::vector<std::array<int, 4>> kCaseCConfigs = {
    {1, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 1, 2}, {2, 2, 1, 1}, {2, 2, 1, 2}, {3, 1, 1, 2}};
const std::vector<std::array<int, 3>> kCaseRConfigs = {
    {1, 1, 1}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}, {3, 1, 2}};
const std::vector<std::array<int, 3>> kCaseHConfigs = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}};

void criterion1_classical() {
  Criterion c{1, "classical identity det(E+(n-j)d) = det(x)det(d) = det(E'+(j-1)d), n = 1..3",
              10'000};
  auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 3 && c.ok; ++n) {
    auto rep = verify_classical(n);
    if (!rep.passed()) {
      c.ok = false;
      c.note = "n=" + std::to_string(n) + ": " + rep.detail;
    }
  }
  finish(c, start);
}

void criterion2_case_c_first_form() {
  Criterion c{2, "Case C first form: omega(X_d) = sum det P det Q = omega(C_d), 6 configurations",
              120'000};
  auto start = std::chrono::steady_clock::now();
  for (const auto& [m, p, q, d] : kCaseCConfigs) {
    auto rep = verify_theorem(TheoremId::C1, CaseConfig::case_c(m, p, q), d);
    if (!rep.passed()) {
      c.ok = false;
      c.note = rep.cfg.str() + " d=" + std::to_string(d) + ": " + rep.detail;
      break;
    }
  }
  if (c.ok) c.note = "C_d leg passes under the m/2 shift reading";
  finish(c, start);
}

void criterion3_case_c_second_form() {
  Criterion c{3, "Case C second form: same configurations, plus equal C1/C2 symbols for d <= 2",
              120'000};
  auto start = std::chrono::steady_clock::now();
  for (const auto& [m, p, q, d] : kCaseCConfigs) {
    auto rep = verify_theorem(TheoremId::C2, CaseConfig::case_c(m, p, q), d);
    if (!rep.passed()) {
      c.ok = false;
      c.note = rep.cfg.str() + " d=" + std::to_string(d) + ": " + rep.detail;
      break;
    }
  }
  if (c.ok) {
    for (const auto& [m, p, q, d] : kCaseCConfigs) {
      auto rep = symbol_c1_c2_agree(CaseConfig::case_c(m, p, q), std::min(d, 2));
      if (!rep.ok) {
        c.ok = false;
        c.note = "symbol agreement failed: " + rep.detail;
        break;
      }
    }
  }
  finish(c, start);
}

void criterion4_case_r() {
  Criterion c{4, "Case R both forms: omega(X_d) = RHS, 6 configurations", 120'000};
  auto start = std::chrono::steady_clock::now();
  for (const auto& [m, n, d] : kCaseRConfigs) {
    for (TheoremId id : {TheoremId::R1, TheoremId::R2}) {
      auto rep = verify_theorem(id, CaseConfig::case_r(m, n), d);
      if (!rep.passed()) {
        c.ok = false;
        c.note = theorem_name(id) + " " + rep.cfg.str() + " d=" + std::to_string(d) + ": " +
                 rep.detail;
      }
    }
  }
  finish(c, start);
}

void criterion5_case_h() {
  Criterion c{5, "Case H both forms: omega(X_d) = RHS, 4 configurations", 300'000};
  auto start = std::chrono::steady_clock::now();
  for (const auto& [m, n, d] : kCaseHConfigs) {
    for (TheoremId id : {TheoremId::H1, TheoremId::H2}) {
      auto rep = verify_theorem(id, CaseConfig::case_h(m, n), d);
      if (!rep.passed()) {
        c.ok = false;
        c.note = theorem_name(id) + " " + rep.cfg.str() + " d=" + std::to_string(d) + ": " +
                 rep.detail;
      }
    }
  }
  if (c.ok) c.note = "H2 passes under the factorial denominator reading (2m+l-1)!";
  finish(c, start);
}

void criterion6_coefficients() {
  Criterion c{6, "coefficient suite: c = sum b*eps for d <= 8, three-way b, eps brute force",
              10'000};
  auto start = std::chrono::steady_clock::now();
  auto cbe = verify_cbe_identity(8);
  if (!cbe.ok) {
    c.ok = false;
    c.note = cbe.counterexample;
  }
  for (int d = 0; d <= 8 && c.ok; ++d) {
    for (int u = 0; u <= 8 && c.ok; ++u) {
      for (int v = 0; v <= 8 && c.ok; ++v) {
        const Rational r = b_coeff(d, u, v, BMethod::Recurrence);
        if (r != b_coeff(d, u, v, BMethod::Closed1) || r != b_coeff(d, u, v, BMethod::Closed2) ||
            !r.is_integer()) {
          c.ok = false;
          c.note = "b mismatch at d=" + std::to_string(d) + " u=" + std::to_string(u) +
                   " v=" + std::to_string(v);
        }
      }
    }
  }
  for (int p = 0; p <= 5 && c.ok; ++p) {
    for (int q = 0; p + q <= 5 && c.ok; ++q) {
      if (p + q == 0) continue;
      for (int w = 0; w <= p + q && c.ok; ++w) {
        for (const IndexSet& j : comb(p + q, w)) {
          int alpha = 0;
          for (int v : j.v) alpha += v <= p ? 1 : 0;
          for (int u = 0; u <= w; ++u) {
            if (epsilon_bruteforce(j, u, w - u, p, q) !=
                epsilon_coeff(alpha, w - alpha, u, w - u)) {
              c.ok = false;
              c.note = "eps mismatch at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                       " J=" + j.str();
            }
          }
        }
      }
    }
  }
  finish(c, start);
}

void criterion7_exterior() {
  Criterion c{7, "exterior lemma suite for m <= 3, p <= 2, q <= 2", 120'000};
  auto start = std::chrono::steady_clock::now();
  for (int m = 1; m <= 3 && c.ok; ++m) {
    for (int p = 1; p <= 2 && c.ok; ++p) {
      for (int q = 1; q <= 2 && c.ok; ++q) {
        for (const auto& rep : run_exterior_suite(m, p, q)) {
          if (!rep.ok) {
            c.ok = false;
            c.note = "m=" + std::to_string(m) + " p=" + std::to_string(p) +
                     " q=" + std::to_string(q) + " " + rep.id + ": " + rep.detail;
            break;
          }
        }
      }
    }
  }
  finish(c, start);
}

void criterion8_invariance() {
  Criterion c{8, "X_d commutes with the k-basis and C_d with the h-basis at all configurations",
              120'000};
  auto start = std::chrono::steady_clock::now();
  for (const auto& [m, p, q, d] : kCaseCConfigs) {
    CaseConfig cfg = CaseConfig::case_c(m, p, q);
    for (TheoremId id : {TheoremId::C1, TheoremId::C2}) {
      if (!invariance_check(capelli_x(id, cfg, d), k_basis(cfg))) {
        c.ok = false;
        c.note = theorem_name(id) + " X_d not invariant at " + cfg.str();
      }
      if (!invariance_check(capelli_c(id, cfg, d, {}), h_basis_c(p, q))) {
        c.ok = false;
        c.note = theorem_name(id) + " C_d not invariant at " + cfg.str();
      }
    }
  }
  for (const auto& [m, n, d] : kCaseRConfigs) {
    CaseConfig cfg = CaseConfig::case_r(m, n);
    for (TheoremId id : {TheoremId::R1, TheoremId::R2}) {
      if (!invariance_check(capelli_x(id, cfg, d), k_basis(cfg))) {
        c.ok = false;
        c.note = theorem_name(id) + " X_d not invariant at " + cfg.str();
      }
    }
  }
  for (const auto& [m, n, d] : kCaseHConfigs) {
    CaseConfig cfg = CaseConfig::case_h(m, n);
    for (TheoremId id : {TheoremId::H1, TheoremId::H2}) {
      if (!invariance_check(capelli_x(id, cfg, d), k_basis(cfg))) {
        c.ok = false;
        c.note = theorem_name(id) + " X_d not invariant at " + cfg.str();
      }
    }
  }
  finish(c, start);
}

void criterion9_kernel_soundness() {
  Criterion c{9, "Weyl associativity + apply oracle on 200 random cases; bracket preservation",
              60'000};
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<int> vars_dist(1, 3);
  std::uniform_int_distribution<int> exp_dist(0, 3);
  std::uniform_int_distribution<long> coeff_dist(-4, 4);
  auto random_element = [&](int vars) {
    WeylElement w(vars);
    for (int t = 0; t < 3; ++t) {
      WeylMonomial mono{std::vector<int>(vars), std::vector<int>(vars)};
      for (int i = 0; i < vars; ++i) {
        mono.x[i] = exp_dist(rng);
        mono.d[i] = exp_dist(rng);
      }
      if (mono.order() > 3 || mono.degree() > 3) {
        --t;
        continue;
      }
      w += WeylElement::monomial(vars, mono, Scalar(coeff_dist(rng)));
    }
    return w;
  };
  for (int t = 0; t < 200 && c.ok; ++t) {
    const int vars = vars_dist(rng);
    WeylElement a = random_element(vars);
    WeylElement b = random_element(vars);
    WeylElement cc = random_element(vars);
    if ((a * b) * cc != a * (b * cc)) {
      c.ok = false;
      c.note = "associativity failed at case " + std::to_string(t);
      break;
    }
    // apply oracle: a*b acts as the composition of the two actions
    std::vector<int> e(vars, 0);
    bool more = true;
    while (more) {
      int total = 0;
      for (int v : e) total += v;
      if (total <= 6) {
        Polynomial mono = Polynomial::monomial(vars, PolyMonomial{e}, Scalar(1));
        if ((a * b).apply(mono) != a.apply(b.apply(mono))) {
          c.ok = false;
          c.note = "apply oracle failed at case " + std::to_string(t);
          break;
        }
      }
      int i = 0;
      while (i < vars && e[i] == 6) e[i++] = 0;
      more = i < vars;
      if (more) ++e[i];
    }
  }
  if (c.ok) {
    std::vector<CaseConfig> cfgs;
    for (const auto& [m, p, q, d] : kCaseCConfigs) cfgs.push_back(CaseConfig::case_c(m, p, q));
    for (const auto& [m, n, d] : kCaseRConfigs) cfgs.push_back(CaseConfig::case_r(m, n));
    for (const auto& [m, n, d] : kCaseHConfigs) cfgs.push_back(CaseConfig::case_h(m, n));
    for (const CaseConfig& cfg : cfgs) {
      auto rep = verify_homomorphism(build_omega(cfg));
      if (!rep.ok) {
        c.ok = false;
        c.note = cfg.str() + ": " + rep.failures.front();
        break;
      }
    }
  }
  finish(c, start);
}

}  // namespace

int main() {
  criterion1_classical();
  criterion2_case_c_first_form();
  criterion3_case_c_second_form();
  criterion4_case_r();
  criterion5_case_h();
  criterion6_coefficients();
  criterion7_exterior();
  criterion8_invariance();
  criterion9_kernel_soundness();
  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
