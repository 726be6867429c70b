#include "report.hpp"

#include <sstream>

namespace capelli {

namespace {

nlohmann::json params_json(const VerificationReport& rep) {
  nlohmann::json p;
  if (rep.theorem == "classical") {
    p["n"] = rep.d;
    return p;
  }
  p["m"] = rep.cfg.m;
  if (rep.cfg.kind == CaseKind::C) {
    p["p"] = rep.cfg.p;
    p["q"] = rep.cfg.q;
  } else {
    p["n"] = rep.cfg.n;
  }
  return p;
}

// Splits an "monomial: lhs=a rhs=b" difference string into its parts.
nlohmann::json difference_json(const std::string& diff) {
  if (diff.empty()) return nullptr;
  nlohmann::json d;
  const auto colon = diff.find(": lhs=");
  if (colon == std::string::npos) {
    d["monomial"] = diff;
    d["lhs"] = "";
    d["rhs"] = "";
    return d;
  }
  d["monomial"] = diff.substr(0, colon);
  const auto rhs_pos = diff.find(" rhs=", colon);
  d["lhs"] = diff.substr(colon + 6, rhs_pos - colon - 6);
  d["rhs"] = diff.substr(rhs_pos + 5);
  return d;
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["theorem"] = rep.theorem;
  j["case"] = rep.theorem == "classical" ? "-" : case_name(rep.cfg.kind);
  j["params"] = params_json(rep);
  j["d"] = rep.d;
  j["equal"] = rep.equal;
  j["invariance"] = rep.invariance_ok;
  j["lhsTerms"] = rep.lhs_terms;
  j["rhsTerms"] = rep.rhs_terms;
  j["firstDifference"] = difference_json(rep.difference);
  j["variant"] = {{"shift", rep.variant.shift_m_half ? "m/2" : "n/2"},
                  {"h2Denominator", rep.variant.h2_factorial_denominator ? "factorial" : "plain"}};
  j["elapsedMs"] = rep.elapsed_ms;
  if (rep.refused) {
    j["refused"] = true;
    j["estimatedTerms"] = rep.estimated_terms;
  }
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

nlohmann::json lemma_report_to_json(const LemmaReport& rep) {
  nlohmann::json j;
  j["lemma"] = rep.id;
  j["equal"] = rep.ok;
  j["firstDifference"] = rep.ok ? nlohmann::json(nullptr) : nlohmann::json(rep.detail);
  return j;
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream os;
  if (rep.refused) {
    os << "REFUSED " << rep.theorem << " (estimated " << rep.estimated_terms
       << " terms over limit)";
    return os.str();
  }
  os << (rep.passed() ? "PASS" : "FAIL") << " " << rep.theorem;
  if (rep.theorem == "classical") {
    os << " n=" << rep.d;
  } else {
    os << " " << rep.cfg.str() << " d=" << rep.d;
  }
  os << " lhsTerms=" << rep.lhs_terms << " rhsTerms=" << rep.rhs_terms << " ["
     << rep.elapsed_ms << " ms]";
  if (!rep.invariance_ok) os << " invariance=FAIL";
  if (!rep.equal && !rep.difference.empty()) os << " first difference: " << rep.difference;
  return os.str();
}

std::string lemma_report_to_text(const LemmaReport& rep) {
  std::ostringstream os;
  os << (rep.ok ? "PASS" : "FAIL") << " lemma " << rep.id;
  if (!rep.ok) os << ": " << rep.detail;
  return os.str();
}

}  // namespace capelli
