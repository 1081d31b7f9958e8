#pragma once

/**
 * Serialization of verification reports.
 *
 * Both renderings are byte-deterministic: identities appear in registry
 * (or requested) order, counterexamples in (n, k) order, and JSON object
 * keys are sorted by the library. Timing data is deliberately absent.
 *
 * JSON payload shape:
 *   {
 *     "n_max": int, "k_max": int,
 *     "identities": [
 *       { "id": str, "anchor": str, "expected": "pass"|"flagged",
 *         "outcome": "pass"|"fail", "vacuous": bool, "behaved": bool,
 *         "counterexamples": [ {"n": int, "k": int,
 *                               "lhs": str, "rhs": str} ] }
 *     ],
 *     "cross_consistency": { "pairs_checked": int,
 *                            "mismatches": [ [matrix_id, scalar_id] ] },
 *     "summary": { "total": int, "behaved": int, "deviations": int,
 *                  "ok": bool }
 *   }
 * Mathematical values (lhs/rhs) are strings in canonical text; grid
 * indices and counts are plain integers.
 */

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "changhee/identities.hpp"

namespace changhee {

inline std::string suite_to_text(const SuiteReport& s) {
  std::ostringstream out;
  out << "verify: n_max=" << s.n_max << " k_max=" << s.k_max
      << " identities=" << s.reports.size() << '\n';
  for (const auto& r : s.reports) {
    out << r.id << " expected=" << expected_status_name(r.expected)
        << " outcome=" << (r.passed ? "pass" : "fail")
        << " status=" << (r.behaved() ? "ok" : "DEVIATION");
    if (r.vacuous) out << " note=vacuous";
    if (!r.counterexamples.empty())
      out << " counterexamples=" << r.counterexamples.size();
    out << '\n';
    for (const auto& c : r.counterexamples)
      out << "  (n=" << c.n << ", k=" << c.k << ") lhs=" << c.lhs
          << " rhs=" << c.rhs << '\n';
  }
  out << "cross-consistency: pairs=" << s.cross_pairs_checked
      << " mismatches=" << s.cross_mismatches.size() << '\n';
  for (const auto& [m, i] : s.cross_mismatches)
    out << "  " << m << " disagrees with " << i << '\n';
  unsigned behaved = 0;
  for (const auto& r : s.reports)
    if (r.behaved()) ++behaved;
  out << "summary: total=" << s.reports.size() << " behaved=" << behaved
      << " deviations=" << s.deviations() << '\n';
  out << "result: " << (s.ok() ? "ok" : "FAIL") << '\n';
  return out.str();
}

inline nlohmann::json suite_to_json(const SuiteReport& s) {
  nlohmann::json root;
  root["n_max"] = s.n_max;
  root["k_max"] = s.k_max;
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& r : s.reports) {
    nlohmann::json jr;
    jr["id"] = r.id;
    const IdentityDescriptor* d = find_identity(r.id);
    jr["anchor"] = d != nullptr ? d->anchor : "";
    jr["expected"] = expected_status_name(r.expected);
    jr["outcome"] = r.passed ? "pass" : "fail";
    jr["vacuous"] = r.vacuous;
    jr["behaved"] = r.behaved();
    nlohmann::json ces = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
      ces.push_back({{"n", c.n}, {"k", c.k}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    jr["counterexamples"] = std::move(ces);
    ids.push_back(std::move(jr));
  }
  root["identities"] = std::move(ids);
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& [m, i] : s.cross_mismatches)
    mismatches.push_back({m, i});
  root["cross_consistency"] = {{"pairs_checked", s.cross_pairs_checked},
                               {"mismatches", std::move(mismatches)}};
  unsigned behaved = 0;
  for (const auto& r : s.reports)
    if (r.behaved()) ++behaved;
  root["summary"] = {{"total", s.reports.size()},
                     {"behaved", behaved},
                     {"deviations", s.deviations()},
                     {"ok", s.ok()}};
  return root;
}

}  // namespace changhee
