#pragma once

// Instance files: {"n": int, "group": GroupSpec, "sets": [[int, ...], ...]},
// all points 1-based.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gm/group.hpp"
#include "gm/marriage.hpp"

namespace gm {

struct Instance {
  GroupSpec spec;
  PermGroup group;
  SetSystem system;
};

nlohmann::ordered_json to_json(GroupSpec const &spec);

/// Throws ParseError naming the offending field path.
GroupSpec group_spec_from_json(nlohmann::json const &j, std::string const &path = "group");

/// Accepts an inline JSON GroupSpec or the shorthand "kind:n"
/// (e.g. "cyclic:4", "trivial:3").
GroupSpec parse_group_argument(std::string const &text);

/// Spec of kind `generators` that rebuilds G from its generator list.
GroupSpec spec_from_generators(PermGroup const &G);

Instance parse_instance(std::string const &text);
Instance load_instance(std::filesystem::path const &path);

nlohmann::ordered_json instance_json(GroupSpec const &spec, SetSystem const &system);
void save_instance(GroupSpec const &spec, SetSystem const &system,
                   std::filesystem::path const &path);

} // namespace gm
