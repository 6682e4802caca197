#include "gm/harness/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "gm/constructions.hpp"
#include "gm/error.hpp"
#include "gm/harness/instance.hpp"
#include "gm/harness/verify.hpp"
#include "gm/structure.hpp"

namespace gm {

using nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 3;

void write_file(std::string const &path, std::string const &text)
{
  std::ofstream f(path);
  if (!f)
    throw Error("cannot write " + path);
  f << text;
  if (!f)
    throw Error("failed writing " + path);
}

struct CheckArgs {
  std::string instance;
};

int run_check(CheckArgs const &a, std::ostream &out)
{
  Instance inst = load_instance(a.instance);
  auto m = find_marriage(inst.group, inst.system);
  ordered_json j;
  j["n"] = inst.system.degree();
  j["group"] = group_json(inst.group);
  j["system"] = inst.system.lists_one_based();
  j["found"] = m.found;
  if (m.found) {
    if (!is_marriage(inst.system, *m.witness))
      throw Error("internal: marriage failed re-validation");
    j["marriage"] = {{"cycles", format_cycles(*m.witness)},
                     {"images", m.witness->images_one_based()}};
  }
  out << j.dump(2) << "\n";
  return m.found ? 0 : 1;
}

struct OrbitArgs {
  std::string instance;
  int k = 1;
  bool exact = false;
  int max_witness = 3;
  std::string pool = "structured";
};

int run_orbit(OrbitArgs const &a, std::ostream &out)
{
  Instance inst = load_instance(a.instance);
  int n = inst.system.degree();
  if (a.k < 1 || a.k > n)
    throw PreconditionError("--k must lie in 1.." + std::to_string(n));

  OrbitCheckReport rep;
  std::string mode;
  if (a.k == 1) {
    rep = check_1_orbit(inst.group, inst.system);
    mode = "exact";
  } else if (a.exact) {
    rep = check_k_orbit_exact(inst.group, inst.system, a.k);
    mode = "exact";
  } else {
    TuplePool pool = a.pool == "full" ? full_pool(n, a.k) : structured_pool(n, a.k);
    rep = check_k_orbit_bounded(inst.group, inst.system, a.k, pool, a.max_witness);
    mode = "bounded/" + a.pool;
  }

  ordered_json j;
  j["n"] = n;
  j["k"] = a.k;
  j["mode"] = mode;
  j["verdict"] = to_string(rep.verdict);
  if (rep.bound)
    j["bound"] = *rep.bound;
  if (rep.witness) {
    if (!is_violation(inst.group, inst.system, rep.witness->tuples))
      throw Error("internal: witness failed re-validation");
    j["witness"] = witness_json(*rep.witness);
  }
  out << j.dump(2) << "\n";
  switch (rep.verdict) {
  case OrbitVerdict::satisfied: return 0;
  case OrbitVerdict::violated: return 1;
  case OrbitVerdict::satisfied_up_to_bound: return 2;
  }
  return kUsageError;
}

struct VerifyArgs {
  std::string name;
  std::optional<int> n;
  std::optional<double> sample;
  int workers = 1;
  std::string json;
  bool timings = false;
  bool extended = false;
};

int run_verify(VerifyArgs const &a, std::ostream &out)
{
  VerificationReport report;
  bool fixed_degree = a.name == "keevash" || a.name == "prop-1.5";
  if (fixed_degree) {
    if (a.n && *a.n != 3)
      throw PreconditionError(a.name + " is defined at n = 3 only");
    report = a.name == "keevash" ? verify_keevash() : verify_prop_1_5();
  } else {
    if (!a.n)
      throw PreconditionError(a.name + " needs --n");
    VerifyOptions opts{*a.n, a.sample, a.workers, a.extended};
    if (a.name == "theorem-1.2")
      report = verify_theorem_1_2(*a.n, a.workers);
    else if (a.name == "theorem-cyclic")
      report = verify_theorem_cyclic(opts);
    else
      report = verify_theorem_alternating(opts);
  }

  std::string text = render(report, a.timings);
  if (a.json.empty()) {
    out << text;
  } else {
    write_file(a.json, text);
    out << report.theorem << " n=" << report.n << ": " << to_string(report.verdict) << " ("
        << report.systems_checked << " systems, " << report.groups_checked << " groups)\n";
  }
  return exit_code(report.verdict);
}

struct ConstructArgs {
  std::string name;
  std::string group;
  std::string h;
  std::string out;
};

int run_construct(ConstructArgs const &a, std::ostream &out)
{
  std::optional<Counterexample> made;
  GroupSpec spec;
  if (a.name == "keevash" || a.name == "prop-1-5") {
    made = a.name == "keevash" ? keevash_example() : prop_1_5_example();
    spec = {a.name == "keevash" ? GroupSpec::Kind::cyclic : GroupSpec::Kind::alternating, 3, {}, {}};
  } else {
    if (a.group.empty())
      throw PreconditionError(a.name + " needs --group");
    spec = parse_group_argument(a.group);
    PermGroup G = named_group(spec);
    if (a.name == "imprimitive") {
      if (!orbits(G).transitive())
        throw PreconditionError("imprimitive construction needs a transitive group");
      auto blocks = minimal_blocks(G);
      if (blocks.empty())
        throw PreconditionError("group is primitive; no block system");
      made = imprimitive_counterexample(G, blocks.front());
    } else if (a.name == "base") {
      made = base_counterexample(G);
    } else {
      std::optional<Permutation> h;
      if (!a.h.empty())
        h = parse_cycles(a.h, G.degree());
      else
        h = least_outside_element(G);
      if (!h)
        throw PreconditionError("G equals the product of symmetric groups on its orbits");
      made = subdirect_counterexample(G, *h);
    }
  }

  Counterexample const &cex = *made;
  save_instance(spec, cex.system, a.out);
  ordered_json j;
  j["construction"] = cex.provenance;
  j["claim"] = to_string(cex.claim);
  j["group"] = group_json(cex.group);
  j["system"] = cex.system.lists_one_based();
  j["out"] = a.out;
  out << j.dump(2) << "\n";
  return 0;
}

struct SubgroupArgs {
  int n = 3;
  std::string json;
};

int run_subgroups(SubgroupArgs const &a, std::ostream &out)
{
  if (a.n < 1 || a.n > 5)
    throw PreconditionError("subgroups runs at 1 <= n <= 5");
  auto subs = all_subgroups(symmetric_group(a.n));
  ordered_json j;
  j["n"] = a.n;
  j["count"] = subs.size();
  ordered_json list = ordered_json::array();
  for (auto const &H : subs) {
    ordered_json h = group_json(H);
    ordered_json orbs = ordered_json::array();
    for (PointSet o : orbits(H).orbits) {
      std::vector<int> pts;
      for (int p : o.points())
        pts.push_back(p + 1);
      orbs.push_back(pts);
    }
    h["orbits"] = orbs;
    h["product_of_symmetrics"] = is_product_of_symmetrics(H);
    list.push_back(h);
  }
  j["subgroups"] = list;
  std::string text = j.dump(2) + "\n";
  if (a.json.empty()) {
    out << text;
  } else {
    write_file(a.json, text);
    out << "Sym(" << a.n << "): " << subs.size() << " subgroups\n";
  }
  return 0;
}

} // namespace

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Group marriage problem: decision, orbit conditions, constructions and "
               "verification sweeps",
               "gm"};
  app.require_subcommand(1);

  CheckArgs check;
  auto *c = app.add_subcommand("check", "Decide whether the instance admits a G-marriage");
  c->add_option("--instance", check.instance, "Instance JSON file")->required();

  OrbitArgs orbit;
  auto *o = app.add_subcommand("orbit", "Check the k-orbit condition for an instance");
  o->add_option("--instance", orbit.instance, "Instance JSON file")->required();
  o->add_option("--k", orbit.k, "Tuple arity")->required();
  auto *exact = o->add_flag("--exact", orbit.exact, "Exhaustive check (n^k <= 9)");
  o->add_option("--max-witness", orbit.max_witness, "Largest tuple set tried")
      ->check(CLI::PositiveNumber)
      ->excludes(exact);
  o->add_option("--pool", orbit.pool, "Candidate tuples")
      ->check(CLI::IsMember({"structured", "full"}))
      ->excludes(exact);

  VerifyArgs verify;
  auto *v = app.add_subcommand("verify", "Run a verification sweep and emit a JSON report");
  v->add_option("name", verify.name, "What to verify")
      ->required()
      ->check(CLI::IsMember(
          {"theorem-1.2", "theorem-cyclic", "theorem-alternating", "prop-1.5", "keevash"}));
  v->add_option("--n", verify.n, "Degree");
  v->add_option("--sample", verify.sample, "Fraction of the set-system space")
      ->check(CLI::Range(0.0, 1.0));
  v->add_option("--workers", verify.workers, "Worker threads")->check(CLI::Range(1, 256));
  v->add_option("--json", verify.json, "Write the report here instead of stdout");
  v->add_flag("--timings", verify.timings, "Include wall-clock timings in the report");
  v->add_flag("--extended", verify.extended, "Allow long runs (full degree-5 sweeps)");

  ConstructArgs construct;
  auto *k = app.add_subcommand("construct", "Build a counterexample instance file");
  // --h names the element h, so this subcommand keeps only the long help flag.
  k->set_help_flag("--help", "Print this help message and exit");
  k->add_option("name", construct.name, "Construction")
      ->required()
      ->check(CLI::IsMember({"keevash", "prop-1-5", "imprimitive", "base", "subdirect"}));
  k->add_option("--group", construct.group, "GroupSpec JSON or kind:n");
  k->add_option("--h", construct.h, "Element h for the subdirect construction (cycles)");
  k->add_option("--out", construct.out, "Instance file to write")->required();

  SubgroupArgs subgroups;
  auto *s = app.add_subcommand("subgroups", "List the subgroups of Sym(n)");
  s->add_option("--n", subgroups.n, "Degree")->required();
  s->add_option("--json", subgroups.json, "Write the list here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e, out, err) == 0 ? 0 : kUsageError;
  }

  try {
    if (c->parsed())
      return run_check(check, out);
    if (o->parsed())
      return run_orbit(orbit, out);
    if (v->parsed())
      return run_verify(verify, out);
    if (k->parsed())
      return run_construct(construct, out);
    return run_subgroups(subgroups, out);
  } catch (std::exception const &e) {
    err << "gm: error: " << e.what() << "\n";
    return kUsageError;
  }
}

} // namespace gm
