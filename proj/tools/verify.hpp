#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fzeta/habiro.hpp"

namespace fzeta::cli {

/// Tunable sweep bounds for the verification targets (defaults match the
/// published claims' ranges).
struct VerifyOptions {
  long nmax = 40;        // sign-table range
  long kmax = 25;        // pairing-identity range
  long lmax = 4;         // pair-class range
  long series_order = 40;
  long level_max = 10;   // inversion-identity levels
  EvalConvention convention = EvalConvention::one_minus_n;
  int threads = 1;
};

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail", "info"
  double elapsed_ms = 0.0;
  nlohmann::json details;
};

struct RunManifest {
  std::string command;
  std::string tool_version;
  std::string timestamp;
  std::vector<CheckResult> checks;
  bool pass = true;  // no non-informational failures

  nlohmann::json to_json() const;
};

/// Runs one verification target ("prop71", ..., "oracle-suite", "all").
/// Throws std::invalid_argument for an unknown target.
RunManifest run_verify(const std::string& target, const VerifyOptions& opt);

const std::vector<std::string>& verify_targets();

}  // namespace fzeta::cli
