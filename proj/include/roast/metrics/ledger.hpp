#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace roast {

inline constexpr double kLedgerSlack = 1e-12;

/// One checked inequality. relation "<=" means lhs <= rhs + slack, ">="
/// means lhs >= rhs - slack.
struct BoundEntry {
  std::string theorem_id;
  double lhs_value = 0.0;
  double rhs_bound = 0.0;
  std::string relation = "<=";
  bool satisfied = false;
  nlohmann::json params = nlohmann::json::object();
};

inline bool bound_holds(double lhs, double rhs, const std::string& relation) {
  if (relation == ">=") return lhs >= rhs - kLedgerSlack;
  return lhs <= rhs + kLedgerSlack;
}

inline BoundEntry upper_bound_entry(std::string id, double lhs, double rhs, nlohmann::json params = nlohmann::json::object()) {
  return {std::move(id), lhs, rhs, "<=", bound_holds(lhs, rhs, "<="), std::move(params)};
}

inline BoundEntry lower_bound_entry(std::string id, double lhs, double rhs, nlohmann::json params = nlohmann::json::object()) {
  return {std::move(id), lhs, rhs, ">=", bound_holds(lhs, rhs, ">="), std::move(params)};
}

// JSON has no infinities; non-finite values are written as strings.
inline nlohmann::json number_to_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

inline double number_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

inline void to_json(nlohmann::json& j, const BoundEntry& e) {
  j = nlohmann::json{{"theorem_id", e.theorem_id},
                     {"lhs_value", number_to_json(e.lhs_value)},
                     {"rhs_bound", number_to_json(e.rhs_bound)},
                     {"relation", e.relation},
                     {"satisfied", e.satisfied},
                     {"params", e.params}};
}

inline void from_json(const nlohmann::json& j, BoundEntry& e) {
  e.theorem_id = j.at("theorem_id").get<std::string>();
  e.lhs_value = number_from_json(j.at("lhs_value"));
  e.rhs_bound = number_from_json(j.at("rhs_bound"));
  e.relation = j.at("relation").get<std::string>();
  e.satisfied = j.at("satisfied").get<bool>();
  e.params = j.value("params", nlohmann::json::object());
}

struct BoundLedger {
  std::vector<BoundEntry> entries;

  void add(BoundEntry e) { entries.push_back(std::move(e)); }
  void append(const BoundLedger& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }
  bool all_satisfied() const {
    for (const auto& e : entries)
      if (!e.satisfied) return false;
    return true;
  }
  long unsatisfied_count() const {
    long c = 0;
    for (const auto& e : entries) c += e.satisfied ? 0 : 1;
    return c;
  }
};

inline void to_json(nlohmann::json& j, const BoundLedger& l) {
  j = nlohmann::json{{"entries", l.entries}, {"all_satisfied", l.all_satisfied()}};
}

inline void from_json(const nlohmann::json& j, BoundLedger& l) { l.entries = j.at("entries").get<std::vector<BoundEntry>>(); }

}  // namespace roast
