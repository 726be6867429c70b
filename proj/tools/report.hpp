#pragma once

#include <string>

#include <json.hpp>

#include "capelli/capelli_verify.hpp"
#include "capelli/exterior_suite.hpp"

namespace capelli {

/// Frozen report schema:
/// { "theorem": string, "case": string, "params": {...}, "d": int,
///   "equal": bool, "lhsTerms": int, "rhsTerms": int,
///   "firstDifference": null | {"monomial": string, "lhs": string, "rhs": string},
///   "variant": {...}, "elapsedMs": int }
nlohmann::json report_to_json(const VerificationReport& rep);

nlohmann::json lemma_report_to_json(const LemmaReport& rep);

/// One-line human-readable form ("PASS theorem C1 case C m=2 p=1 q=1 d=2 ...").
std::string report_to_text(const VerificationReport& rep);

std::string lemma_report_to_text(const LemmaReport& rep);

}  // namespace capelli
