#pragma once

// Exhaustive cross-validation of every decision procedure against the
// general search over all pairs H <= A <= G of a small group.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "regset/regular_sets.hpp"

namespace regset {

struct SurveyOptions {
  std::size_t threads = 0;  // 0: hardware concurrency
  bool strict = false;
  std::uint64_t node_budget = Limits{}.search_node_budget;
};

struct SurveyRow {
  ElementSet h;
  ElementSet a;
  bool h_normal_in_a = false;
  bool a_normal = false;
  bool h_normal = false;
  bool degenerate = false;  // A = G: no cosets outside A, s is vacuous
  std::vector<std::pair<std::size_t, std::size_t>> achievable;
  std::map<std::string, std::size_t> agreements;
  std::vector<std::string> anomalies;
  // x outside H with HxH = Hx^-1 H where the three listed arc-transitive
  // conditions alone disagree with the oracle.
  std::size_t arc_literal_mismatches = 0;
};

struct SurveyReport {
  std::string group;
  std::size_t order = 0;
  std::vector<SurveyRow> rows;  // sorted by (H, A)

  std::size_t anomaly_count() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

SurveyRow survey_pair(const PairSpec& pair, const SurveyOptions& options = {});

// Throws OrderExceedsCap above the enumeration cap.
SurveyReport survey(const Group& g, const SurveyOptions& options = {});

}  // namespace regset
