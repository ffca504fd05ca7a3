#pragma once

#include <string>

#include <json.hpp>

namespace fzeta {

enum class Verdict { holds, fails, undetermined };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

/// Outcome of a structure-condition check. `witness` explains a failure,
/// `certificate` substantiates a pass, `extra` carries auxiliary data
/// (bounds, Euler characteristic, per-part expansions, ...).
struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::undetermined;
  nlohmann::json witness;      // null when absent
  nlohmann::json certificate;  // null when absent
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["condition"] = condition;
    j["verdict"] = verdict_name(verdict);
    if (!witness.is_null()) j["witness"] = witness;
    if (!certificate.is_null()) j["certificate"] = certificate;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return j;
  }
};

/// Exit code mapped from a verdict: 0 holds, 1 fails, 3 undetermined.
inline int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::holds: return 0;
    case Verdict::fails: return 1;
    case Verdict::undetermined: return 3;
  }
  return 3;
}

}  // namespace fzeta
