#pragma once

// Explicit set systems on which the orbit condition holds but no G-marriage
// exists. Every constructor re-validates its claim before returning.

#include <string>

#include "gm/orbit_conditions.hpp"
#include "gm/structure.hpp"

namespace gm {

enum class CounterexampleClaim { orbit_holds_no_marriage, two_orbit_holds_no_marriage };
std::string to_string(CounterexampleClaim c);

struct Counterexample {
  PermGroup group;
  SetSystem system;
  CounterexampleClaim claim = CounterexampleClaim::orbit_holds_no_marriage;
  std::string provenance;
};

/// C_3 with V = ({2},{1},{3}).
Counterexample keevash_example();

/// Alt(3) with V = ({1,3},{2,3},{1,2}); the 2-orbit condition holds as well.
Counterexample prop_1_5_example();

/// For a transitive imprimitive G: x, y the two least points of the first
/// block, z the least point of the second; V_x = {y,z}, V_y = {x,z},
/// V_z = {x,y}, all other V_i = [n].
Counterexample imprimitive_counterexample(PermGroup const &G, BlockSystem const &blocks);

/// For a primitive G other than Sym([n]), with minimal base B and b the least
/// point outside B: V_{b_i} = {b_i, b}, V_b = [n] - B - {b}, V_i = [n] - B.
Counterexample base_counterexample(PermGroup const &G);

/// For G whose constituents are all symmetric and h in the orbit-wise
/// symmetric product but not in G: V_j = {h(j)} + ([n] - orbit(j)).
Counterexample subdirect_counterexample(PermGroup const &G, Permutation const &h);

/// Least element of Sym(orbit 1) x ... x Sym(orbit m) outside G, if any.
std::optional<Permutation> least_outside_element(PermGroup const &G);

/// Every g in G meeting the constraints at the base points fixes them.
bool base_forced_fix_holds(Counterexample const &cex);

/// The only g in the orbit-wise symmetric product satisfying the system is h.
bool subdirect_forcing_holds(Counterexample const &cex, Permutation const &h);

/// Checks the claim with check_1_orbit, find_marriage and, for the 2-orbit
/// claim, check_k_orbit_exact.
bool claim_holds(Counterexample const &cex);

} // namespace gm
