#include "gm/harness/report.hpp"

namespace gm {

using nlohmann::ordered_json;

std::string to_string(ReportVerdict v)
{
  switch (v) {
  case ReportVerdict::verified: return "verified";
  case ReportVerdict::refuted: return "refuted";
  case ReportVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

int exit_code(ReportVerdict v)
{
  switch (v) {
  case ReportVerdict::verified: return 0;
  case ReportVerdict::refuted: return 1;
  case ReportVerdict::inconclusive: return 2;
  }
  return 3;
}

ordered_json to_json(VerificationReport const &r, bool include_timings)
{
  ordered_json j;
  j["theorem"] = r.theorem;
  j["n"] = r.n;
  j["groups_checked"] = r.groups_checked;
  j["systems_checked"] = r.systems_checked;
  j["verdict"] = to_string(r.verdict);
  j["summary"] = r.summary;
  j["details"] = r.details;
  if (include_timings) {
    ordered_json t = ordered_json::object();
    for (auto const &[k, v] : r.timings_ms)
      t[k] = v;
    j["timings_ms"] = t;
  }
  return j;
}

std::string render(VerificationReport const &r, bool include_timings)
{
  return to_json(r, include_timings).dump(2) + "\n";
}

ordered_json group_json(PermGroup const &G)
{
  ordered_json j;
  j["degree"] = G.degree();
  j["order"] = G.order();
  ordered_json gens = ordered_json::array();
  for (auto const &s : G.generators())
    gens.push_back(format_cycles(s));
  j["generators"] = gens;
  return j;
}

std::vector<std::vector<int>> tuples_one_based(std::vector<PointTuple> const &tuples)
{
  std::vector<std::vector<int>> out;
  for (auto const &t : tuples)
    out.push_back(t.entries_one_based());
  return out;
}

ordered_json witness_json(Witness const &w)
{
  ordered_json j;
  j["arity"] = w.arity;
  j["size"] = w.tuples.size();
  j["kind"] = w.kind == WitnessKind::exact ? "exact" : "bounded";
  j["tuples"] = tuples_one_based(w.tuples);
  return j;
}

} // namespace gm
