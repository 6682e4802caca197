#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "gm/group.hpp"
#include "gm/marriage.hpp"
#include "gm/orbit_conditions.hpp"

namespace gm {

enum class ReportVerdict { verified, refuted, inconclusive };
std::string to_string(ReportVerdict v);

/// Exit code for a verdict: 0 verified, 1 refuted, 2 inconclusive.
int exit_code(ReportVerdict v);

struct VerificationReport {
  std::string theorem;
  int n = 0;
  std::uint64_t groups_checked = 0;
  std::uint64_t systems_checked = 0;
  ReportVerdict verdict = ReportVerdict::verified;
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::map<std::string, double> timings_ms;
};

/// Stable key order. Timings are wall-clock and therefore only emitted on
/// request; everything else is a pure function of the inputs.
nlohmann::ordered_json to_json(VerificationReport const &r, bool include_timings = false);
std::string render(VerificationReport const &r, bool include_timings = false);

nlohmann::ordered_json group_json(PermGroup const &G);
nlohmann::ordered_json witness_json(Witness const &w);
std::vector<std::vector<int>> tuples_one_based(std::vector<PointTuple> const &tuples);

} // namespace gm
