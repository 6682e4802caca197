#include "gm/harness/instance.hpp"

#include <fstream>
#include <sstream>

#include "gm/error.hpp"

namespace gm {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(GroupSpec const &spec)
{
  ordered_json j;
  j["kind"] = to_string(spec.kind);
  j["n"] = spec.n;
  if (spec.kind == GroupSpec::Kind::generators)
    j["generators"] = spec.generators;
  if (spec.kind == GroupSpec::Kind::product) {
    ordered_json factors = ordered_json::array();
    for (auto const &f : spec.factors) {
      ordered_json fj;
      fj["spec"] = to_json(f.spec);
      fj["domain"] = f.domain;
      factors.push_back(fj);
    }
    j["factors"] = factors;
  }
  return j;
}

namespace {

[[noreturn]] void field_error(std::string const &path, std::string const &what)
{
  throw ParseError(path + ": " + what);
}

int get_int(json const &j, char const *key, std::string const &path)
{
  if (!j.contains(key))
    field_error(path, std::string("missing field '") + key + "'");
  if (!j[key].is_number_integer())
    field_error(path + "." + key, "expected an integer");
  return j[key].get<int>();
}

} // namespace

GroupSpec group_spec_from_json(json const &j, std::string const &path)
{
  if (!j.is_object())
    field_error(path, "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    field_error(path, "missing string field 'kind'");

  GroupSpec spec;
  try {
    spec.kind = parse_group_kind(j["kind"].get<std::string>());
  } catch (ParseError const &e) {
    field_error(path + ".kind", e.what());
  }
  spec.n = get_int(j, "n", path);
  if (spec.n < 1 || spec.n > kMaxDegree)
    field_error(path + ".n", "degree " + std::to_string(spec.n) + " outside 1.." +
                                 std::to_string(kMaxDegree));

  if (spec.kind == GroupSpec::Kind::generators) {
    if (!j.contains("generators") || !j["generators"].is_array())
      field_error(path, "kind 'generators' needs a 'generators' array");
    for (std::size_t i = 0; i < j["generators"].size(); ++i) {
      auto const &g = j["generators"][i];
      if (!g.is_string())
        field_error(path + ".generators[" + std::to_string(i) + "]", "expected a cycle string");
      spec.generators.push_back(g.get<std::string>());
    }
  }
  if (spec.kind == GroupSpec::Kind::product) {
    if (!j.contains("factors") || !j["factors"].is_array())
      field_error(path, "kind 'product' needs a 'factors' array");
    for (std::size_t i = 0; i < j["factors"].size(); ++i) {
      std::string fpath = path + ".factors[" + std::to_string(i) + "]";
      auto const &f = j["factors"][i];
      if (!f.is_object() || !f.contains("spec") || !f.contains("domain") ||
          !f["domain"].is_array())
        field_error(fpath, "expected {\"spec\": ..., \"domain\": [...]}");
      GroupFactor factor;
      factor.spec = group_spec_from_json(f["spec"], fpath + ".spec");
      for (auto const &p : f["domain"]) {
        if (!p.is_number_integer())
          field_error(fpath + ".domain", "expected integers");
        factor.domain.push_back(p.get<int>());
      }
      spec.factors.push_back(std::move(factor));
    }
  }
  return spec;
}

GroupSpec parse_group_argument(std::string const &text)
{
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const &e) {
      throw ParseError(std::string("group spec: ") + e.what());
    }
    return group_spec_from_json(j);
  }
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("group spec '" + text + "': expected JSON or kind:n");
  GroupSpec spec;
  spec.kind = parse_group_kind(text.substr(0, colon));
  if (spec.kind == GroupSpec::Kind::generators || spec.kind == GroupSpec::Kind::product)
    throw ParseError("group spec '" + text + "': kind needs the JSON form");
  try {
    std::size_t used = 0;
    spec.n = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1)
      throw std::invalid_argument("trailing");
  } catch (std::exception const &) {
    throw ParseError("group spec '" + text + "': bad degree");
  }
  return spec;
}

GroupSpec spec_from_generators(PermGroup const &G)
{
  GroupSpec spec{GroupSpec::Kind::generators, G.degree(), {}, {}};
  for (auto const &s : G.generators())
    spec.generators.push_back(format_cycles(s));
  return spec;
}

Instance parse_instance(std::string const &text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const &e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  if (!j.is_object())
    field_error("instance", "expected an object");
  int n = get_int(j, "n", "instance");
  if (n < 1 || n > kMaxDegree)
    field_error("instance.n", "degree " + std::to_string(n) + " outside 1.." +
                                  std::to_string(kMaxDegree));
  if (!j.contains("group"))
    field_error("instance", "missing field 'group'");
  GroupSpec spec = group_spec_from_json(j["group"], "instance.group");
  if (spec.n != n)
    field_error("instance.group.n", "degree " + std::to_string(spec.n) + " differs from n = " +
                                        std::to_string(n));
  if (!j.contains("sets") || !j["sets"].is_array())
    field_error("instance", "missing array field 'sets'");
  auto const &sets = j["sets"];
  if (static_cast<int>(sets.size()) != n)
    field_error("instance.sets", "expected " + std::to_string(n) + " sets, got " +
                                     std::to_string(sets.size()));
  std::vector<PointSet> members;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string spath = "instance.sets[" + std::to_string(i) + "]";
    if (!sets[i].is_array())
      field_error(spath, "expected an array of points");
    PointSet s;
    for (auto const &p : sets[i]) {
      if (!p.is_number_integer())
        field_error(spath, "expected integer points");
      int v = p.get<int>();
      if (v < 1 || v > n)
        field_error(spath, "point " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
      s.insert(v - 1);
    }
    members.push_back(s);
  }

  PermGroup G;
  try {
    G = named_group(spec);
  } catch (ParseError const &e) {
    field_error("instance.group", e.what());
  } catch (Error const &e) {
    field_error("instance.group", e.what());
  }
  return {std::move(spec), std::move(G), SetSystem(std::move(members))};
}

Instance load_instance(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open instance file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (ParseError const &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ordered_json instance_json(GroupSpec const &spec, SetSystem const &system)
{
  if (spec.n != system.degree())
    throw DomainError("instance: group degree " + std::to_string(spec.n) +
                      " differs from system degree " + std::to_string(system.degree()));
  ordered_json j;
  j["n"] = system.degree();
  j["group"] = to_json(spec);
  j["sets"] = system.lists_one_based();
  return j;
}

void save_instance(GroupSpec const &spec, SetSystem const &system,
                   std::filesystem::path const &path)
{
  auto j = instance_json(spec, system);
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write instance file " + path.string());
  out << j.dump(2) << "\n";
}

} // namespace gm
