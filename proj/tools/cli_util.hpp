#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "fzeta/cyclotomic.hpp"
#include "fzeta/habiro.hpp"
#include "fzeta/polyio.hpp"

namespace fzeta::cli {

using nlohmann::json;

inline json coeff_map_json(const std::map<long, Int>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = to_dec(v);
  return j;
}

inline json habiro_json(const HabiroElement& a) {
  return {{"level", a.level()}, {"rep", format_poly(a.rep())}};
}

inline json cyclotomic_json(const CyclotomicInt& c) {
  return {{"order", c.order()}, {"residue", format_poly(c.residue())}};
}

inline json normal_form_json(const HabiroNormalForm& nf) {
  json parts = json::array();
  for (const auto& p : nf.parts) parts.push_back(format_poly(p));
  return {{"level", nf.level},
          {"parts", parts},
          {"convention", "(q-1)(q^2-1)...(q^m-1)"}};
}

/// Exit codes shared by all commands.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndetermined = 3;

}  // namespace fzeta::cli
