// Command-line front end: verify operator identities, run lemma suites,
// dump coefficient tables.  Exit codes: 0 all checks passed, 1 identity
// failure, 2 usage error, 3 resource refusal.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <thread>

#include "capelli/capelli_verify.hpp"
#include "capelli/coeffs.hpp"
#include "capelli/exterior_suite.hpp"
#include "report.hpp"

using namespace capelli;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

struct Options {
  std::string format = "text";
  std::string output;
  double limit = kDefaultTermLimit;
  int jobs = 0;  // 0: hardware concurrency
  std::string shift = "m2";
  std::string h2_denominator = "factorial";
  bool no_timing = false;  // zero elapsedMs so identical runs emit identical bytes
};

VariantFlags flags_from(const Options& o) {
  VariantFlags f;
  f.shift_m_half = o.shift != "n2";
  f.h2_factorial_denominator = o.h2_denominator != "plain";
  return f;
}

double env_term_limit() {
  if (const char* env = std::getenv("CAPELLI_TERM_LIMIT")) {
    return std::atof(env);
  }
  return kDefaultTermLimit;
}

// Runs the jobs on a small pool; results come back in submission order so
// reports are deterministic regardless of the pool size.
std::vector<VerificationReport> run_pool(std::vector<std::function<VerificationReport()>> jobs,
                                         int pool_size) {
  if (pool_size <= 0) pool_size = static_cast<int>(std::thread::hardware_concurrency());
  if (pool_size < 1) pool_size = 1;
  std::vector<VerificationReport> results(jobs.size());
  std::size_t next = 0;
  while (next < jobs.size()) {
    const std::size_t batch = std::min<std::size_t>(pool_size, jobs.size() - next);
    std::vector<std::future<VerificationReport>> futs;
    for (std::size_t k = 0; k < batch; ++k) {
      futs.push_back(std::async(std::launch::async, jobs[next + k]));
    }
    for (std::size_t k = 0; k < batch; ++k) results[next + k] = futs[k].get();
    next += batch;
  }
  return results;
}

int emit_reports(std::vector<VerificationReport> reports, const Options& o) {
  std::ostringstream text;
  nlohmann::json arr = nlohmann::json::array();
  bool any_fail = false, any_refused = false;
  for (auto& rep : reports) {
    if (o.no_timing) rep.elapsed_ms = 0;
    text << report_to_text(rep) << "\n";
    arr.push_back(report_to_json(rep));
    any_fail = any_fail || (!rep.refused && !rep.passed());
    any_refused = any_refused || rep.refused;
  }
  std::string payload = o.format == "json" ? arr.dump(2) + "\n" : text.str();
  if (o.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      std::cerr << "cannot open output file: " << o.output << "\n";
      return kExitUsage;
    }
    f << payload;
  }
  if (any_refused) return kExitRefused;
  return any_fail ? kExitFail : kExitPass;
}

struct VerifyArgs {
  std::string theorem;
  std::string preset;
  int m = 0, n = 0, p = 0, q = 0, d = 0;
};

int cmd_verify(const VerifyArgs& a, const Options& o) {
  const VariantFlags flags = flags_from(o);
  std::vector<std::function<VerificationReport()>> jobs;

  auto push_theorem = [&](TheoremId id, CaseConfig cfg, int d) {
    jobs.push_back([=] { return verify_theorem(id, cfg, d, flags, o.limit); });
  };

  if (a.preset == "desk") {
    for (auto [m, p, q, d] : std::vector<std::array<int, 4>>{
             {1, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 1, 2}, {2, 2, 1, 1}, {2, 2, 1, 2}, {3, 1, 1, 2}}) {
      push_theorem(TheoremId::C1, CaseConfig::case_c(m, p, q), d);
      push_theorem(TheoremId::C2, CaseConfig::case_c(m, p, q), d);
    }
    for (auto [m, n, d] : std::vector<std::array<int, 3>>{
             {1, 1, 1}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}, {3, 1, 2}}) {
      push_theorem(TheoremId::R1, CaseConfig::case_r(m, n), d);
      push_theorem(TheoremId::R2, CaseConfig::case_r(m, n), d);
    }
    for (auto [m, n, d] :
         std::vector<std::array<int, 3>>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}}) {
      push_theorem(TheoremId::H1, CaseConfig::case_h(m, n), d);
      push_theorem(TheoremId::H2, CaseConfig::case_h(m, n), d);
    }
    for (int n = 1; n <= 3; ++n) {
      jobs.push_back([=] { return verify_classical(n, o.limit); });
    }
  } else if (a.theorem == "classical") {
    if (a.n < 1) {
      std::cerr << "verify --theorem classical needs --n\n";
      return kExitUsage;
    }
    const int n = a.n;
    jobs.push_back([=] { return verify_classical(n, o.limit); });
  } else if (a.theorem == "props") {
    if (a.m < 1 || a.p < 1 || a.q < 1 || a.d < 1) {
      std::cerr << "verify --theorem props needs --m --p --q --d\n";
      return kExitUsage;
    }
    CaseConfig cfg = CaseConfig::case_c(a.m, a.p, a.q);
    const int d = a.d;
    for (TheoremId id : {TheoremId::PropC1Left, TheoremId::PropC1Right, TheoremId::PropC2Left,
                         TheoremId::PropC2Right}) {
      jobs.push_back([=] { return verify_proposition(id, cfg, d, flags, o.limit); });
    }
  } else {
    TheoremId id;
    try {
      id = theorem_from_name(a.theorem);
    } catch (const std::invalid_argument&) {
      std::cerr << "unknown theorem '" << a.theorem
                << "' (expected C1, C2, R1, R2, H1, H2, classical, props)\n";
      return kExitUsage;
    }
    const bool case_c = id == TheoremId::C1 || id == TheoremId::C2 ||
                        id == TheoremId::PropC1Left || id == TheoremId::PropC1Right ||
                        id == TheoremId::PropC2Left || id == TheoremId::PropC2Right;
    const bool is_prop = id == TheoremId::PropC1Left || id == TheoremId::PropC1Right ||
                         id == TheoremId::PropC2Left || id == TheoremId::PropC2Right;
    CaseConfig cfg;
    if (case_c) {
      if (a.m < 1 || a.p < 1 || a.q < 1) {
        std::cerr << "Case C checks need --m --p --q\n";
        return kExitUsage;
      }
      cfg = CaseConfig::case_c(a.m, a.p, a.q);
    } else {
      if (a.m < 1 || a.n < 1) {
        std::cerr << "Case R/H checks need --m --n\n";
        return kExitUsage;
      }
      cfg = (id == TheoremId::R1 || id == TheoremId::R2) ? CaseConfig::case_r(a.m, a.n)
                                                         : CaseConfig::case_h(a.m, a.n);
    }
    if (a.d < 1) {
      std::cerr << "verify needs --d >= 1\n";
      return kExitUsage;
    }
    const int d = a.d;
    if (is_prop) {
      jobs.push_back([=] { return verify_proposition(id, cfg, d, flags, o.limit); });
    } else {
      push_theorem(id, cfg, d);
    }
  }

  try {
    return emit_reports(run_pool(std::move(jobs), o.jobs), o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

struct LemmaArgs {
  std::string suite;
  std::string lemma;  // optional single lemma id
  int m = 2, n = 1, p = 1, q = 1;
  int max_d = 8;
  std::string kase = "C";
};

int cmd_lemmas(const LemmaArgs& a, const Options& o) {
  std::ostringstream text;
  nlohmann::json arr = nlohmann::json::array();
  bool all_ok = true;
  auto emit = [&](const LemmaReport& rep) {
    text << lemma_report_to_text(rep) << "\n";
    arr.push_back(lemma_report_to_json(rep));
    all_ok = all_ok && rep.ok;
  };

  if (a.suite == "exterior") {
    if (!a.lemma.empty()) {
      try {
        emit(verify_lemma(a.lemma, a.m, a.p, a.q));
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
      }
    } else {
      for (const auto& rep : run_exterior_suite(a.m, a.p, a.q, o.jobs)) emit(rep);
    }
  } else if (a.suite == "coeffs") {
    LemmaReport cbe{"c-equals-sum-b-eps", true, ""};
    auto rep = verify_cbe_identity(a.max_d);
    cbe.ok = rep.ok;
    cbe.detail = rep.counterexample;
    emit(cbe);

    LemmaReport threeway{"b-three-way-agreement", true, ""};
    for (int d = 0; d <= a.max_d && threeway.ok; ++d) {
      for (int u = 0; u <= a.max_d && threeway.ok; ++u) {
        for (int v = 0; v <= a.max_d; ++v) {
          const Rational r = b_coeff(d, u, v, BMethod::Recurrence);
          if (r != b_coeff(d, u, v, BMethod::Closed1) ||
              r != b_coeff(d, u, v, BMethod::Closed2) || !r.is_integer()) {
            threeway.ok = false;
            threeway.detail = "d=" + std::to_string(d) + " u=" + std::to_string(u) +
                              " v=" + std::to_string(v);
            break;
          }
        }
      }
    }
    emit(threeway);

    LemmaReport eps{"eps-brute-force-agreement", true, ""};
    for (int p = 0; p <= 5 && eps.ok; ++p) {
      for (int q = 0; p + q <= 5 && eps.ok; ++q) {
        if (p + q == 0) continue;
        for (int w = 0; w <= p + q && eps.ok; ++w) {
          for (const IndexSet& j : comb(p + q, w)) {
            int alpha = 0;
            for (int v : j.v) alpha += v <= p ? 1 : 0;
            for (int u = 0; u <= w; ++u) {
              if (epsilon_bruteforce(j, u, w - u, p, q) !=
                  epsilon_coeff(alpha, w - alpha, u, w - u)) {
                eps.ok = false;
                eps.detail =
                    "p=" + std::to_string(p) + " q=" + std::to_string(q) + " J=" + j.str();
                break;
              }
            }
          }
        }
      }
    }
    emit(eps);
  } else if (a.suite == "weil") {
    CaseConfig cfg;
    if (a.kase == "C") {
      cfg = CaseConfig::case_c(a.m, a.p, a.q);
    } else if (a.kase == "R") {
      cfg = CaseConfig::case_r(a.m, a.n);
    } else if (a.kase == "H") {
      cfg = CaseConfig::case_h(a.m, a.n);
    } else {
      std::cerr << "unknown case '" << a.kase << "' (expected C, R or H)\n";
      return kExitUsage;
    }
    auto rep = verify_homomorphism(build_omega(cfg));
    emit(LemmaReport{"bracket-preservation " + cfg.str(), rep.ok,
                     rep.ok ? "" : rep.failures.front()});
  } else {
    std::cerr << "unknown suite '" << a.suite << "' (expected exterior, coeffs or weil)\n";
    return kExitUsage;
  }

  std::string payload = o.format == "json" ? arr.dump(2) + "\n" : text.str();
  if (o.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(o.output);
    f << payload;
  }
  return all_ok ? kExitPass : kExitFail;
}

struct TableArgs {
  std::string table;
  int max = 3;
};

int cmd_tables(const TableArgs& a, const Options& o) {
  std::ostringstream text;
  nlohmann::json arr = nlohmann::json::array();
  if (a.table == "c") {
    for (int d = 0; d <= a.max; ++d) {
      for (int alpha = 0; alpha <= a.max; ++alpha) {
        for (int beta = 0; alpha + beta <= a.max; ++beta) {
          const BigInt v = c_coeff(d, alpha, beta);
          text << "c[" << d << "][" << alpha << "," << beta << "] = " << v.get_str() << "\n";
          arr.push_back({{"d", d}, {"alpha", alpha}, {"beta", beta}, {"value", v.get_str()}});
        }
      }
    }
  } else if (a.table == "b") {
    for (int d = 0; d <= a.max; ++d) {
      for (int u = 0; u <= d; ++u) {
        for (int v = 0; u + v <= d; ++v) {
          const Rational val = b_coeff(d, u, v);
          text << "b[" << d << "][" << u << "," << v << "] = " << val.str() << "\n";
          arr.push_back({{"d", d}, {"u", u}, {"v", v}, {"value", val.str()}});
        }
      }
    }
  } else if (a.table == "eps") {
    for (int alpha = 0; alpha <= a.max; ++alpha) {
      for (int beta = 0; alpha + beta <= a.max; ++beta) {
        for (int u = 0; u <= alpha + beta; ++u) {
          const int v = alpha + beta - u;
          const BigInt val = epsilon_coeff(alpha, beta, u, v);
          text << "eps[" << alpha << "," << beta << ";" << u << "," << v
               << "] = " << val.get_str() << "\n";
          arr.push_back(
              {{"alpha", alpha}, {"beta", beta}, {"u", u}, {"v", v}, {"value", val.get_str()}});
        }
      }
    }
  } else {
    std::cerr << "unknown table '" << a.table << "' (expected c, b or eps)\n";
    return kExitUsage;
  }
  std::string payload = o.format == "json" ? arr.dump(2) + "\n" : text.str();
  if (o.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(o.output);
    f << payload;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for determinantal operator identities"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  opts.limit = env_term_limit();
  app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", opts.output, "write the report to a file");
  app.add_option("--limit", opts.limit, "term-count guard (default from CAPELLI_TERM_LIMIT)");
  app.add_option("--jobs", opts.jobs, "worker pool size (default: hardware concurrency)");
  app.add_option("--shift", opts.shift, "B-matrix diagonal shift reading")
      ->check(CLI::IsMember({"m2", "n2"}));
  app.add_option("--h2-denominator", opts.h2_denominator,
                 "Case H second-form denominator reading")
      ->check(CLI::IsMember({"factorial", "plain"}));
  app.add_flag("--no-timing", opts.no_timing, "zero elapsedMs for byte-identical reports");

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "verify a theorem or proposition");
  verify->add_option("--theorem", vargs.theorem, "C1, C2, R1, R2, H1, H2, classical, props");
  verify->add_option("--preset", vargs.preset, "named preset (desk: the full acceptance set)")
      ->check(CLI::IsMember({"desk"}));
  verify->add_option("--m", vargs.m, "size m");
  verify->add_option("--n", vargs.n, "size n");
  verify->add_option("--p", vargs.p, "size p (Case C)");
  verify->add_option("--q", vargs.q, "size q (Case C)");
  verify->add_option("--d", vargs.d, "degree of the Capelli element");

  LemmaArgs largs;
  CLI::App* lemmas = app.add_subcommand("lemmas", "run a lemma suite");
  lemmas->add_option("--suite", largs.suite, "exterior, coeffs or weil")->required();
  lemmas->add_option("--lemma", largs.lemma, "single lemma id (exterior suite)");
  lemmas->add_option("--case", largs.kase, "C, R or H (weil suite)");
  lemmas->add_option("--m", largs.m, "size m");
  lemmas->add_option("--n", largs.n, "size n");
  lemmas->add_option("--p", largs.p, "size p");
  lemmas->add_option("--q", largs.q, "size q");
  lemmas->add_option("--max-d", largs.max_d, "degree bound (coeffs suite)");

  TableArgs targs;
  CLI::App* tables = app.add_subcommand("tables", "dump coefficient tables");
  tables->add_option("--table", targs.table, "c, b or eps")->required();
  tables->add_option("--max", targs.max, "bound for the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(vargs, opts);
    if (lemmas->parsed()) return cmd_lemmas(largs, opts);
    if (tables->parsed()) return cmd_tables(targs, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
