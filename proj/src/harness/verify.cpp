#include "gm/harness/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>

#include "gm/constructions.hpp"
#include "gm/error.hpp"
#include "gm/harness/sweep.hpp"
#include "gm/structure.hpp"

namespace gm {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kDetailCap = 32;

class Stopwatch {
public:
  double elapsed_ms() const
  {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json permutation_json(Permutation const &g)
{
  ordered_json j;
  j["cycles"] = format_cycles(g);
  j["images"] = g.images_one_based();
  return j;
}

// Marriages are re-checked against the definition before they are reported.
ordered_json marriage_json(PermGroup const &G, SetSystem const &V, Permutation const &g)
{
  if (!contains(G, g) || !is_marriage(V, g))
    throw Error("internal: reported marriage " + format_cycles(g) + " failed re-validation");
  return permutation_json(g);
}

ordered_json checked_witness_json(PermGroup const &G, SetSystem const &V, Witness const &w)
{
  if (!is_violation(G, V, w.tuples))
    throw Error("internal: reported witness failed re-validation");
  return witness_json(w);
}

void append_capped(ordered_json &to, ordered_json &&from, std::size_t cap)
{
  for (auto &item : from) {
    if (to.size() >= cap)
      break;
    to.push_back(std::move(item));
  }
}

std::size_t factorial(int k)
{
  std::size_t f = 1;
  for (int j = 2; j <= k; ++j)
    f *= static_cast<std::size_t>(j);
  return f;
}

// Checks shared by every sweep: a marriage forces the 1-orbit condition, and
// the single tuple (1, ..., n) is satisfiable exactly when a marriage exists.
struct NecessaryChecks {
  std::uint64_t necessity_exceptions = 0;
  std::uint64_t singleton_mismatches = 0;
  ordered_json exceptions = ordered_json::array();

  void run(PermGroup const &G, SetSystem const &V, std::uint64_t code, bool married)
  {
    if (married && check_1_orbit(G, V).verdict != OrbitVerdict::satisfied) {
      ++necessity_exceptions;
      if (exceptions.size() < kDetailCap)
        exceptions.push_back({{"code", code}, {"system", V.lists_one_based()},
                              {"kind", "marriage_without_1_orbit"}});
    }
    if (singleton_n_orbit_satisfied(G, V) != married) {
      ++singleton_mismatches;
      if (exceptions.size() < kDetailCap)
        exceptions.push_back({{"code", code}, {"system", V.lists_one_based()},
                              {"kind", "singleton_n_orbit_mismatch"}});
    }
  }

  void merge(NecessaryChecks &&o)
  {
    necessity_exceptions += o.necessity_exceptions;
    singleton_mismatches += o.singleton_mismatches;
    append_capped(exceptions, std::move(o.exceptions), kDetailCap);
  }

  bool clean() const { return necessity_exceptions == 0 && singleton_mismatches == 0; }
};

// ---- contrapositive sweep over (n-1)-orbit witnesses ----

enum Step { constants, constants_and_deleted, cyclic_pair, cyclic_triple, structured, step_count };

char const *step_name(int s)
{
  switch (s) {
  case constants: return "constants";
  case constants_and_deleted: return "constants_and_deleted";
  case cyclic_pair: return "cyclic_pair";
  case cyclic_triple: return "cyclic_triple";
  case structured: return "structured_pool";
  }
  return "?";
}

struct WitnessPools {
  int n = 0;
  int k = 0;
  TuplePool constants;
  TuplePool constants_and_deleted;
  TuplePool structured;
  std::vector<PointTuple> runs;  // runs[t] = (t, t+1, ..., t+n-2 mod n)

  explicit WitnessPools(int degree) : n(degree), k(degree - 1)
  {
    constants.arity = constants_and_deleted.arity = k;
    for (int p = 0; p < n; ++p)
      constants.tuples.push_back(PointTuple::constant(p, k));
    constants_and_deleted = constants;
    for (int i = 0; i < n; ++i) {
      std::vector<int> d;
      for (int p = 0; p < n; ++p)
        if (p != i)
          d.push_back(p);
      constants_and_deleted.tuples.emplace_back(d);
    }
    structured = structured_pool(n, k);
    for (int t = 0; t < n; ++t) {
      std::vector<int> run;
      for (int j = 0; j < k; ++j)
        run.push_back((t + j) % n);
      runs.emplace_back(run);
    }
  }
};

struct WitnessFound {
  int step = step_count;
  std::optional<Witness> witness;
  bool residual = false;
};

WitnessFound find_witness(PermGroup const &G, SetSystem const &V, WitnessPools const &pools)
{
  WitnessFound out;
  auto bounded = [&](TuplePool const &pool, int max_size, int step) {
    auto r = check_k_orbit_bounded(G, V, pools.k, pool, max_size);
    if (r.verdict != OrbitVerdict::violated)
      return false;
    out.step = step;
    out.witness = r.witness;
    return true;
  };
  auto direct = [&](std::vector<PointTuple> Y, int step) {
    if (!is_violation(G, V, Y))
      return false;
    out.step = step;
    out.witness = Witness{pools.k, std::move(Y), WitnessKind::bounded};
    return true;
  };

  if (bounded(pools.constants, 1, constants))
    return out;
  out.residual = residual_structure(G, V).has_value();
  if (!out.residual) {
    if (bounded(pools.constants_and_deleted, 2, constants_and_deleted))
      return out;
  } else {
    int n = pools.n;
    for (int t = 0; t < n; ++t)
      if (direct({pools.runs[t], pools.runs[(t + 1) % n]}, cyclic_pair))
        return out;
    if (n % 2 == 1) {
      PointTuple z = PointTuple::constant(n / 2, pools.k);
      if (direct({pools.runs[0], pools.runs[1], z}, cyclic_triple))
        return out;
    }
  }
  bounded(pools.structured, 3, structured);
  return out;
}

struct ContraAcc {
  std::uint64_t systems = 0;
  std::uint64_t with_marriage = 0;
  std::uint64_t marriage_free = 0;
  std::uint64_t residual = 0;
  std::uint64_t inconclusive = 0;
  std::array<std::uint64_t, step_count> by_step{};
  std::array<std::uint64_t, 4> by_size{};
  int max_witness = 0;
  NecessaryChecks checks;
  ordered_json cases = ordered_json::array();
  ordered_json unresolved = ordered_json::array();

  void merge(ContraAcc &&o)
  {
    systems += o.systems;
    with_marriage += o.with_marriage;
    marriage_free += o.marriage_free;
    residual += o.residual;
    inconclusive += o.inconclusive;
    for (int s = 0; s < step_count; ++s)
      by_step[s] += o.by_step[s];
    for (std::size_t s = 0; s < by_size.size(); ++s)
      by_size[s] += o.by_size[s];
    max_witness = std::max(max_witness, o.max_witness);
    checks.merge(std::move(o.checks));
    append_capped(cases, std::move(o.cases), kDetailCap);
    for (auto &u : o.unresolved)
      unresolved.push_back(std::move(u));
  }
};

ContraAcc contrapositive_sweep(PermGroup const &G, SweepPlan const &plan, int workers)
{
  WitnessPools pools(G.degree());
  return sweep_all_systems<ContraAcc>(
      plan, workers, [&](ContraAcc &acc, SetSystem const &V, std::uint64_t code) {
        ++acc.systems;
        auto m = find_marriage(G, V);
        acc.checks.run(G, V, code, m.found);
        if (m.found) {
          ++acc.with_marriage;
          return;
        }
        ++acc.marriage_free;
        auto found = find_witness(G, V, pools);
        acc.residual += found.residual;
        if (!found.witness) {
          ++acc.inconclusive;
          acc.unresolved.push_back({{"code", code},
                                    {"system", V.lists_one_based()},
                                    {"residual", found.residual},
                                    {"sub_verdict", "inconclusive"}});
          return;
        }
        int size = static_cast<int>(found.witness->tuples.size());
        ++acc.by_step[found.step];
        ++acc.by_size[std::min<std::size_t>(size, acc.by_size.size() - 1)];
        acc.max_witness = std::max(acc.max_witness, size);
        if (acc.cases.size() < kDetailCap) {
          ordered_json c;
          c["code"] = code;
          c["system"] = V.lists_one_based();
          c["sub_verdict"] = "violation_found";
          c["step"] = step_name(found.step);
          c["witness"] = checked_witness_json(G, V, *found.witness);
          acc.cases.push_back(std::move(c));
        }
      });
}

void fill_contrapositive(VerificationReport &r, PermGroup const &G, SweepPlan const &plan,
                         ContraAcc &&acc)
{
  r.n = G.degree();
  r.groups_checked = 1;
  r.systems_checked = acc.systems;

  ordered_json s;
  s["group"] = group_json(G);
  s["sweep"] = plan.is_sampled() ? "sampled" : "full";
  s["sample_fraction"] = plan.fraction();
  s["systems_with_marriage"] = acc.with_marriage;
  s["marriage_free_systems"] = acc.marriage_free;
  s["residual_systems"] = acc.residual;
  ordered_json steps;
  for (int st = 0; st < step_count; ++st)
    steps[step_name(st)] = acc.by_step[st];
  s["witnesses_by_step"] = steps;
  ordered_json sizes;
  for (std::size_t z = 1; z < acc.by_size.size(); ++z)
    sizes[std::to_string(z)] = acc.by_size[z];
  s["witness_size_histogram"] = sizes;
  s["max_witness_size"] = acc.max_witness;
  s["inconclusive"] = acc.inconclusive;
  s["necessity_exceptions"] = acc.checks.necessity_exceptions;
  s["singleton_mismatches"] = acc.checks.singleton_mismatches;
  r.summary = s;

  r.details = std::move(acc.cases);
  for (auto &u : acc.unresolved)
    r.details.push_back(std::move(u));
  for (auto &e : acc.checks.exceptions)
    r.details.push_back(std::move(e));

  if (!acc.checks.clean())
    r.verdict = ReportVerdict::refuted;
  else if (acc.inconclusive > 0)
    r.verdict = ReportVerdict::inconclusive;
  else
    r.verdict = ReportVerdict::verified;
}

SweepPlan plan_for(VerifyOptions const &opts, bool sample_by_default)
{
  if (opts.sample)
    return SweepPlan::sampled(opts.n, *opts.sample);
  if (sample_by_default && !opts.extended)
    return SweepPlan::sampled(opts.n, 1.0 / 64.0);
  return SweepPlan::full(opts.n);
}

// ---- counter-case constructions for groups that are not products ----

struct CounterCase {
  std::string method;
  SetSystem system;
  std::optional<bool> structural_check;  // forced-fix or forcing property
  std::string construction;
};

std::optional<CounterCase> construct_transitive(PermGroup const &G)
{
  if (!is_primitive(G)) {
    auto cex = imprimitive_counterexample(G, minimal_blocks(G).front());
    return CounterCase{"imprimitive", cex.system, std::nullopt, cex.provenance};
  }
  if (G.order() == factorial(G.degree()))
    return std::nullopt;
  auto cex = base_counterexample(G);
  return CounterCase{"base", cex.system, base_forced_fix_holds(cex), cex.provenance};
}

std::optional<CounterCase> construct_counter_case(PermGroup const &G)
{
  auto parts = orbits(G).orbits;
  if (parts.size() == 1)
    return construct_transitive(G);

  for (PointSet orbit : parts) {
    PermGroup C = transitive_constituent(G, orbit);
    if (C.order() == factorial(orbit.size()))
      continue;
    // Lift a counter-case of the constituent: its sets on the orbit, [n]
    // everywhere else.
    auto inner = construct_transitive(C);
    if (!inner)
      return std::nullopt;
    auto pts = orbit.points();
    std::vector<PointSet> sets(G.degree(), PointSet::full(G.degree()));
    for (std::size_t r = 0; r < pts.size(); ++r) {
      PointSet lifted;
      for (int s : inner->system[static_cast<int>(r)].points())
        lifted.insert(pts[s]);
      sets[pts[r]] = lifted;
    }
    return CounterCase{"lifted_" + inner->method, SetSystem(std::move(sets)), std::nullopt,
                       inner->construction + " on " + format_set(orbit)};
  }

  auto h = least_outside_element(G);
  if (!h)
    return std::nullopt;
  auto cex = subdirect_counterexample(G, *h);
  return CounterCase{"subdirect", cex.system, subdirect_forcing_holds(cex, *h), cex.provenance};
}

std::optional<CounterCase> exhaustive_counter_case(PermGroup const &G)
{
  auto plan = SweepPlan::full(G.degree());
  for (std::uint64_t i = 0; i < plan.size(); ++i) {
    auto V = SetSystem::from_encoding(G.degree(), plan.code(i));
    if (check_1_orbit(G, V).verdict == OrbitVerdict::satisfied && !find_marriage(G, V).found)
      return CounterCase{"exhaustive", V, std::nullopt, "first system in encoding order"};
  }
  return std::nullopt;
}

struct SufficiencyAcc {
  std::uint64_t systems = 0;
  std::uint64_t orbit_satisfied = 0;
  std::uint64_t failures = 0;
  NecessaryChecks checks;
  ordered_json counter_cases = ordered_json::array();

  void merge(SufficiencyAcc &&o)
  {
    systems += o.systems;
    orbit_satisfied += o.orbit_satisfied;
    failures += o.failures;
    checks.merge(std::move(o.checks));
    append_capped(counter_cases, std::move(o.counter_cases), kDetailCap);
  }
};

// ---- normalization replay ----

Permutation transposition_pair(int n, int a, int b, int c, int d)
{
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[a], img[b]);
  std::swap(img[c], img[d]);
  return Permutation::from_images(img);
}

std::string run_cycle(std::vector<int> const &points)
{
  if (points.size() < 2)
    return "";
  std::string s = "(";
  for (std::size_t i = 0; i < points.size(); ++i)
    s += (i ? " " : "") + std::to_string(points[i]);
  return s + ")";
}

std::vector<int> range_step(int from, int to, int step)
{
  std::vector<int> out;
  for (int v = from; v <= to; v += step)
    out.push_back(v);
  return out;
}

// The marriage exhibited for the normalized system W_i = [n] - {T(a_i)}.
// b1 is the 1-based gap of W_1.
Permutation explicit_marriage(int n, int b1)
{
  std::string cycles;
  if (b1 == 1) {
    if (n % 2 == 1) {
      cycles = run_cycle(range_step(1, n, 1));
    } else if (n % 4 == 0) {
      for (int i = 1; i < n; i += 2)
        cycles += run_cycle({i, i + 1});
    } else {
      int m = n / 2;
      cycles = run_cycle(range_step(1, m, 1)) + run_cycle(range_step(m + 1, n, 1));
    }
  } else {
    if (n % 2 == 1) {
      cycles = "(1 3)(2 4)" + run_cycle(range_step(5, n, 1));
    } else if (n % 4 == 0) {
      cycles = "(1 3)(2 4)";
      for (int i = 5; i < n; i += 2)
        cycles += run_cycle({i, i + 1});
    } else {
      cycles = run_cycle(range_step(1, n - 1, 2)) + run_cycle(range_step(2, n, 2));
    }
  }
  return parse_cycles(cycles, n);
}

// x^(a b) in exponent notation: a acts first.
Permutation exponent_product(Permutation const &a, Permutation const &b)
{
  return compose(b, a);
}

} // namespace

NormalizationReplay replay_normalization(PermGroup const &alt, std::vector<int> const &gaps,
                                         ProductConvention convention)
{
  int n = alt.degree();
  if (n < 4)
    throw PreconditionError("normalization replay needs n >= 4");
  if (static_cast<int>(gaps.size()) != n)
    throw DomainError("gap list has the wrong length");
  Permutation::from_images(gaps);

  NormalizationReplay out;
  std::vector<int> cur = gaps;
  auto apply = [&](Permutation const &p) {
    for (int &v : cur)
      v = p(v);
    out.factors.push_back(p);
  };

  for (int K = n - 1; K >= 3; --K) {
    int a = cur[K];
    if (a == K) {
      apply(Permutation::identity(n));
      continue;
    }
    std::vector<int> rest;
    for (int v = 0; v <= K && rest.size() < 2; ++v)
      if (v != a && v != K)
        rest.push_back(v);
    apply(transposition_pair(n, a, K, rest[0], rest[1]));
  }
  {
    int a = cur[2];
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    if (a != 2) {
      int u = (a == 0) ? 1 : 0;
      img[2] = u;
      img[u] = a;
      img[a] = 2;
    }
    apply(Permutation::from_images(img));
  }

  Permutation T = Permutation::identity(n);
  if (convention == ProductConvention::right_to_left) {
    for (auto const &f : out.factors)
      T = compose(f, T);
  } else {
    for (auto const &f : out.factors)
      T = exponent_product(T, f);
  }
  out.normalizer = T;
  for (int i = 0; i < n; ++i)
    if (T(gaps[i]) != cur[i])
      throw Error("internal: normalizer disagrees with the stepwise replay");
  out.normalized_gaps = cur;

  std::vector<PointSet> w(n), v(n);
  for (int i = 0; i < n; ++i) {
    w[i] = PointSet::full(n) - PointSet::single(cur[i]);
    v[i] = PointSet::full(n) - PointSet::single(gaps[i]);
  }
  SetSystem W(w), V(v);
  out.explicit_g = explicit_marriage(n, cur[0] + 1);
  out.explicit_g_valid = contains(alt, out.explicit_g) && is_marriage(W, out.explicit_g);
  if (out.explicit_g_valid) {
    Permutation back = compose(inverse(T), out.explicit_g);
    if (contains(alt, back) && is_marriage(V, back))
      out.pullback = back;
  }
  return out;
}

VerificationReport verify_keevash()
{
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "keevash";
  r.n = 3;
  auto cex = keevash_example();
  PermGroup sym = symmetric_group(3);

  auto orbit = check_1_orbit(cex.group, cex.system);
  auto m = find_marriage(cex.group, cex.system);
  auto contrast = find_marriage(sym, cex.system);

  ordered_json c1;
  c1["group"] = group_json(cex.group);
  c1["system"] = cex.system.lists_one_based();
  c1["orbit_1"] = to_string(orbit.verdict);
  c1["marriage"] = m.found ? marriage_json(cex.group, cex.system, *m.witness) : ordered_json();
  c1["sub_verdict"] = (orbit.verdict == OrbitVerdict::satisfied && !m.found)
                          ? "orbit_satisfied_no_marriage" : "claim_fails";
  ordered_json c2;
  c2["group"] = group_json(sym);
  c2["system"] = cex.system.lists_one_based();
  c2["marriage"] = contrast.found ? marriage_json(sym, cex.system, *contrast.witness)
                                  : ordered_json();
  c2["sub_verdict"] = contrast.found ? "marriage_found" : "marriage_absent";
  r.details.push_back(c1);
  r.details.push_back(c2);

  bool ok = orbit.verdict == OrbitVerdict::satisfied && !m.found && contrast.found;
  r.groups_checked = 2;
  r.systems_checked = 1;
  r.summary["orbit_1"] = to_string(orbit.verdict);
  r.summary["marriage_in_group"] = m.found;
  r.summary["marriage_in_symmetric_group"] = contrast.found;
  r.verdict = ok ? ReportVerdict::verified : ReportVerdict::refuted;
  r.timings_ms["total"] = clock.elapsed_ms();
  return r;
}

VerificationReport verify_two_orbit_without_marriage(PermGroup const &G, SetSystem const &V,
                                                     std::string const &name)
{
  Stopwatch clock;
  if (G.degree() != 3 || V.degree() != 3)
    throw PreconditionError("the exact 2-orbit check runs at degree 3");
  VerificationReport r;
  r.theorem = name;
  r.n = 3;
  r.groups_checked = 1;
  r.systems_checked = 1;

  auto orbit = check_k_orbit_exact(G, V, 2);
  auto m = find_marriage(G, V);
  std::size_t subsets = subsets_size_then_lex(9).size();

  ordered_json c;
  c["group"] = group_json(G);
  c["system"] = V.lists_one_based();
  c["orbit_2"] = to_string(orbit.verdict);
  if (orbit.witness)
    c["orbit_witness"] = checked_witness_json(G, V, *orbit.witness);
  c["marriage"] = m.found ? marriage_json(G, V, *m.witness) : ordered_json();
  bool ok = orbit.verdict == OrbitVerdict::satisfied && !m.found;
  c["sub_verdict"] = ok ? "orbit_satisfied_no_marriage"
                        : (m.found ? "marriage_found" : "orbit_violated");
  r.details.push_back(c);

  r.summary["tuple_subsets_checked"] = subsets;
  r.summary["group_order"] = G.order();
  r.summary["orbit_2"] = to_string(orbit.verdict);
  r.summary["marriage_found"] = m.found;
  r.verdict = ok ? ReportVerdict::verified : ReportVerdict::refuted;
  r.timings_ms["total"] = clock.elapsed_ms();
  return r;
}

VerificationReport verify_prop_1_5()
{
  auto cex = prop_1_5_example();
  return verify_two_orbit_without_marriage(cex.group, cex.system, "prop-1.5");
}

VerificationReport verify_theorem_1_2(int n, int workers)
{
  if (n < 3 || n > 4)
    throw PreconditionError("theorem-1.2 runs at n = 3 or 4, got " + std::to_string(n));
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "theorem-1.2";
  r.n = n;

  auto subgroups = all_subgroups(symmetric_group(n));
  std::uint64_t products = 0, others = 0, failed = 0, swept = 0, satisfied = 0;
  std::map<std::string, std::uint64_t> methods;
  NecessaryChecks checks;
  auto plan = SweepPlan::full(n);

  for (std::size_t gi = 0; gi < subgroups.size(); ++gi) {
    auto const &G = subgroups[gi];
    ordered_json rec;
    rec["index"] = gi;
    rec["group"] = group_json(G);
    ordered_json orbs = ordered_json::array();
    for (PointSet o : orbits(G).orbits)
      orbs.push_back(o.points().size());
    rec["orbit_sizes"] = orbs;

    if (is_product_of_symmetrics(G)) {
      ++products;
      rec["class"] = "product_of_symmetrics";
      auto acc = sweep_all_systems<SufficiencyAcc>(
          plan, workers, [&](SufficiencyAcc &a, SetSystem const &V, std::uint64_t code) {
            ++a.systems;
            auto m = find_marriage(G, V);
            a.checks.run(G, V, code, m.found);
            if (m.found)
              return;
            if (check_1_orbit(G, V).verdict == OrbitVerdict::satisfied) {
              ++a.failures;
              if (a.counter_cases.size() < kDetailCap)
                a.counter_cases.push_back({{"code", code}, {"system", V.lists_one_based()}});
            }
          });
      swept += acc.systems;
      rec["systems_swept"] = acc.systems;
      rec["sufficiency_failures"] = acc.failures;
      if (acc.failures > 0) {
        rec["counter_cases"] = acc.counter_cases;
        ++failed;
      }
      rec["sub_verdict"] = acc.failures == 0 ? "sufficiency_holds" : "sufficiency_fails";
      checks.merge(std::move(acc.checks));
      r.details.push_back(std::move(rec));
      continue;
    }

    ++others;
    rec["class"] = "other";
    std::optional<CounterCase> cc;
    try {
      cc = construct_counter_case(G);
    } catch (Error const &e) {
      rec["construction_error"] = e.what();
    }
    if (cc && (check_1_orbit(G, cc->system).verdict != OrbitVerdict::satisfied ||
               find_marriage(G, cc->system).found)) {
      rec["construction_error"] = "constructed system failed re-validation";
      cc.reset();
    }
    if (!cc)
      cc = exhaustive_counter_case(G);
    if (!cc) {
      ++failed;
      rec["sub_verdict"] = "no_counter_case";
      r.details.push_back(std::move(rec));
      continue;
    }
    ++methods[cc->method];
    ++satisfied;
    rec["method"] = cc->method;
    rec["construction"] = cc->construction;
    rec["system"] = cc->system.lists_one_based();
    rec["orbit_1"] = "satisfied";
    rec["marriage"] = nullptr;
    if (cc->structural_check) {
      rec["structural_check"] = *cc->structural_check;
      if (!*cc->structural_check)
        ++failed;
    }
    rec["sub_verdict"] = "counter_case_found";
    r.details.push_back(std::move(rec));
  }

  r.groups_checked = subgroups.size();
  r.systems_checked = swept + others;
  ordered_json s;
  s["subgroups"] = subgroups.size();
  s["products_of_symmetrics"] = products;
  s["other_groups"] = others;
  s["systems_swept"] = swept;
  ordered_json m;
  for (auto const &[k, v] : methods)
    m[k] = v;
  s["counter_case_methods"] = m;
  s["failed_groups"] = failed;
  s["necessity_exceptions"] = checks.necessity_exceptions;
  s["singleton_mismatches"] = checks.singleton_mismatches;
  r.summary = s;
  for (auto &e : checks.exceptions)
    r.details.push_back(std::move(e));
  r.verdict = (failed == 0 && checks.clean()) ? ReportVerdict::verified : ReportVerdict::refuted;
  r.timings_ms["total"] = clock.elapsed_ms();
  return r;
}

VerificationReport verify_theorem_cyclic(VerifyOptions const &opts)
{
  if (opts.n < 4 || opts.n > 5)
    throw PreconditionError("theorem-cyclic runs at n = 4 or 5, got " + std::to_string(opts.n));
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "theorem-cyclic";
  PermGroup G = cyclic_group(opts.n);
  auto plan = plan_for(opts, opts.n == 5);
  auto acc = contrapositive_sweep(G, plan, opts.workers);
  r.timings_ms["sweep"] = clock.elapsed_ms();
  fill_contrapositive(r, G, plan, std::move(acc));
  r.timings_ms["total"] = clock.elapsed_ms();
  return r;
}

VerificationReport verify_theorem_alternating(VerifyOptions const &opts)
{
  if (opts.n == 3)
    throw PreconditionError("theorem-alternating needs n >= 4; degree 3 is covered by prop-1.5");
  if (opts.n == 5 && !opts.extended)
    throw PreconditionError("theorem-alternating at n = 5 needs --extended");
  if (opts.n < 4 || opts.n > 5)
    throw PreconditionError("theorem-alternating runs at n = 4 (5 with --extended), got " +
                            std::to_string(opts.n));
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "theorem-alternating";
  PermGroup G = alternating_group(opts.n);
  auto plan = plan_for(opts, false);
  auto acc = contrapositive_sweep(G, plan, opts.workers);
  r.timings_ms["sweep"] = clock.elapsed_ms();
  fill_contrapositive(r, G, plan, std::move(acc));

  Stopwatch replay_clock;
  std::vector<int> gaps(opts.n);
  std::iota(gaps.begin(), gaps.end(), 0);
  std::uint64_t replayed = 0, confirmed = 0, explicit_failures = 0, unmarried = 0;
  std::uint64_t convention_mismatches = 0;
  ordered_json replays = ordered_json::array();
  do {
    ++replayed;
    auto rep = replay_normalization(G, gaps, ProductConvention::right_to_left);
    auto alt = replay_normalization(G, gaps, ProductConvention::left_to_right);
    if (alt.normalizer != rep.normalizer || alt.pullback != rep.pullback)
      ++convention_mismatches;

    std::vector<PointSet> sets(opts.n);
    for (int i = 0; i < opts.n; ++i)
      sets[i] = PointSet::full(opts.n) - PointSet::single(gaps[i]);
    SetSystem V(sets);
    std::optional<Permutation> marriage = rep.pullback;
    if (!rep.explicit_g_valid)
      ++explicit_failures;
    if (!marriage) {
      auto m = find_marriage(G, V);
      if (m.found)
        marriage = m.witness;
    }
    if (marriage)
      ++confirmed;
    else
      ++unmarried;

    if (!marriage || !rep.explicit_g_valid || replays.size() < 8) {
      ordered_json c;
      std::vector<int> one_based;
      for (int a : gaps)
        one_based.push_back(a + 1);
      c["gaps"] = one_based;
      ordered_json factors = ordered_json::array();
      for (auto const &f : rep.factors)
        factors.push_back(format_cycles(f));
      c["factors"] = factors;
      c["normalizer"] = format_cycles(rep.normalizer);
      c["explicit_g"] = format_cycles(rep.explicit_g);
      c["explicit_g_valid"] = rep.explicit_g_valid;
      c["marriage"] = marriage ? marriage_json(G, V, *marriage) : ordered_json();
      c["sub_verdict"] = marriage ? (rep.pullback ? "pullback_marriage" : "fallback_marriage")
                                  : "no_marriage";
      replays.push_back(std::move(c));
    }
  } while (std::next_permutation(gaps.begin(), gaps.end()));

  ordered_json rs;
  rs["residual_systems"] = replayed;
  rs["marriages_confirmed"] = confirmed;
  rs["explicit_g_failures"] = explicit_failures;
  rs["without_marriage"] = unmarried;
  rs["convention_mismatches"] = convention_mismatches;
  r.summary["normalization_replay"] = rs;
  for (auto &c : replays)
    r.details.push_back({{"replay", std::move(c)}});
  r.systems_checked += replayed;
  if (r.verdict == ReportVerdict::verified && (unmarried > 0 || convention_mismatches > 0))
    r.verdict = ReportVerdict::inconclusive;
  r.timings_ms["replay"] = replay_clock.elapsed_ms();
  r.timings_ms["total"] = clock.elapsed_ms();
  return r;
}

} // namespace gm
