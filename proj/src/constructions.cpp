#include "gm/constructions.hpp"

#include <algorithm>

#include "gm/error.hpp"

namespace gm {

std::string to_string(CounterexampleClaim c)
{
  switch (c) {
  case CounterexampleClaim::orbit_holds_no_marriage: return "orbit_holds_no_marriage";
  case CounterexampleClaim::two_orbit_holds_no_marriage: return "two_orbit_holds_no_marriage";
  }
  return "?";
}

bool claim_holds(Counterexample const &cex)
{
  if (check_1_orbit(cex.group, cex.system).verdict != OrbitVerdict::satisfied)
    return false;
  if (find_marriage(cex.group, cex.system).found)
    return false;
  if (cex.claim == CounterexampleClaim::two_orbit_holds_no_marriage)
    return check_k_orbit_exact(cex.group, cex.system, 2).verdict == OrbitVerdict::satisfied;
  return true;
}

namespace {

Counterexample validated(Counterexample cex)
{
  if (!claim_holds(cex))
    throw Error("internal: construction '" + cex.provenance + "' failed post-validation");
  return cex;
}

std::size_t factorial(int k)
{
  std::size_t f = 1;
  for (int j = 2; j <= k; ++j)
    f *= static_cast<std::size_t>(j);
  return f;
}

} // namespace

Counterexample keevash_example()
{
  return validated({cyclic_group(3), SetSystem::from_lists(3, {{2}, {1}, {3}}),
                    CounterexampleClaim::orbit_holds_no_marriage, "keevash"});
}

Counterexample prop_1_5_example()
{
  return validated({alternating_group(3), SetSystem::from_lists(3, {{1, 3}, {2, 3}, {1, 2}}),
                    CounterexampleClaim::two_orbit_holds_no_marriage, "prop-1-5"});
}

Counterexample imprimitive_counterexample(PermGroup const &G, BlockSystem const &blocks)
{
  int n = G.degree();
  if (!orbits(G).transitive())
    throw PreconditionError("imprimitive construction needs a transitive group");
  if (is_primitive(G))
    throw PreconditionError("imprimitive construction needs an imprimitive group; G is primitive");

  PointSet cover;
  for (PointSet b : blocks.blocks) {
    if (!(cover & b).empty())
      throw PreconditionError("blocks overlap");
    cover = cover | b;
  }
  if (cover != PointSet::full(n) || blocks.blocks.size() < 2 || blocks.block_size() < 2)
    throw PreconditionError("block system is not a nontrivial partition of [n]");
  for (auto const &g : G.elements())
    for (PointSet b : blocks.blocks)
      if (std::find(blocks.blocks.begin(), blocks.blocks.end(), g(b)) == blocks.blocks.end())
        throw PreconditionError("block system is not invariant under " + format_cycles(g));

  auto sorted = blocks.blocks;
  std::sort(sorted.begin(), sorted.end(),
            [](PointSet a, PointSet b) { return a.least() < b.least(); });
  auto first = sorted[0].points();
  int x = first[0], y = first[1], z = sorted[1].least();

  std::vector<PointSet> sets(n, PointSet::full(n));
  sets[x] = PointSet::of({y, z});
  sets[y] = PointSet::of({x, z});
  sets[z] = PointSet::of({x, y});
  return validated({G, SetSystem(std::move(sets)), CounterexampleClaim::orbit_holds_no_marriage,
                    "imprimitive x=" + std::to_string(x + 1) + " y=" + std::to_string(y + 1) +
                        " z=" + std::to_string(z + 1)});
}

Counterexample base_counterexample(PermGroup const &G)
{
  int n = G.degree();
  if (!orbits(G).transitive())
    throw PreconditionError("base construction needs a transitive group");
  if (!is_primitive(G))
    throw PreconditionError("base construction needs a primitive group");
  if (G.order() == factorial(n))
    throw PreconditionError("base construction excludes the full symmetric group");
  BaseReport base = minimal_base(G);
  if (base.size > n - 2)
    throw PreconditionError("primitive group with b(G) = " + std::to_string(base.size) +
                            " > n - 2; upstream inconsistency");

  PointSet full = PointSet::full(n);
  int extra = (full - base.base).least();
  std::vector<PointSet> sets(n, full - base.base);
  for (int b : base.base.points())
    sets[b] = PointSet::of({b, extra});
  sets[extra] = full - base.base - PointSet::single(extra);
  return validated({G, SetSystem(std::move(sets)), CounterexampleClaim::orbit_holds_no_marriage,
                    "base B=" + format_set(base.base) + " b=" + std::to_string(extra + 1)});
}

Counterexample subdirect_counterexample(PermGroup const &G, Permutation const &h)
{
  int n = G.degree();
  if (h.degree() != n)
    throw DomainError("h has degree " + std::to_string(h.degree()) + ", expected " +
                      std::to_string(n));
  auto parts = orbits(G).orbits;
  for (PointSet orbit : parts) {
    if (transitive_constituent(G, orbit).order() != factorial(orbit.size()))
      throw PreconditionError("constituent on " + format_set(orbit) + " is not symmetric");
    if (h(orbit) != orbit)
      throw PreconditionError("h = " + format_cycles(h) + " moves points out of orbit " +
                              format_set(orbit));
  }
  if (contains(G, h))
    throw PreconditionError("h = " + format_cycles(h) + " lies in G");

  PointSet full = PointSet::full(n);
  std::vector<PointSet> sets(n);
  for (PointSet orbit : parts)
    for (int j : orbit.points())
      sets[j] = PointSet::single(h(j)) | (full - orbit);
  return validated({G, SetSystem(std::move(sets)), CounterexampleClaim::orbit_holds_no_marriage,
                    "subdirect h=" + format_cycles(h)});
}

std::optional<Permutation> least_outside_element(PermGroup const &G)
{
  PermGroup product = orbit_symmetric_product(G);
  for (auto const &g : product.elements())
    if (!contains(G, g))
      return g;
  return std::nullopt;
}

bool base_forced_fix_holds(Counterexample const &cex)
{
  // Relax V_b to [n] - B (the identity then satisfies every constraint) and
  // check that each satisfying g fixes B pointwise, hence is the identity.
  int n = cex.group.degree();
  PointSet B = minimal_base(cex.group).base;
  PointSet outside = PointSet::full(n) - B;
  std::vector<PointSet> relaxed = cex.system.sets();
  for (int i : outside.points())
    relaxed[i] = outside;
  SetSystem R(relaxed);

  bool identity_seen = false;
  for (auto const &g : cex.group.elements()) {
    if (!is_marriage(R, g))
      continue;
    for (int b : B.points())
      if (g(b) != b)
        return false;
    if (!g.is_identity())
      return false;
    identity_seen = true;
  }
  return identity_seen;
}

bool subdirect_forcing_holds(Counterexample const &cex, Permutation const &h)
{
  PermGroup product = orbit_symmetric_product(cex.group);
  bool h_seen = false;
  for (auto const &g : product.elements()) {
    if (!is_marriage(cex.system, g))
      continue;
    if (g != h)
      return false;
    h_seen = true;
  }
  return h_seen;
}

} // namespace gm
