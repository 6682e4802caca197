#pragma once

// The k-orbit condition: for every nonempty Y of k-tuples there must be a
// g in G sending every y in Y into the box V_{y'_1} x ... x V_{y'_k} of
// some y' in Y.

#include <optional>
#include <string>
#include <vector>

#include "gm/marriage.hpp"

namespace gm {

/// Ordered, duplicate-free candidate tuples for witness search.
struct TuplePool {
  int arity = 1;
  std::vector<PointTuple> tuples;
};

enum class WitnessKind { exact, bounded };

/// A tuple set Y that no element of G satisfies.
struct Witness {
  int arity = 1;
  std::vector<PointTuple> tuples;
  WitnessKind kind = WitnessKind::exact;
};

enum class OrbitVerdict { satisfied, violated, satisfied_up_to_bound };
std::string to_string(OrbitVerdict v);

struct OrbitCheckReport {
  OrbitVerdict verdict = OrbitVerdict::satisfied;
  std::optional<Witness> witness;
  std::optional<int> bound;
};

/// Residual shape of a marriage-free system: V_i = [n] - {a_i} with a a
/// bijection, and g_i(i) = a_i, g_i(j) in V_j and a_i in V_j for j != i.
struct ResidualStructure {
  std::vector<Permutation> g_list;
  std::vector<int> a_list;  // 0-based points
};

/// x lies in V_{y'} = V_{y'_1} x ... x V_{y'_k}.
bool in_box(SetSystem const &V, PointTuple const &box, PointTuple const &x);

/// Y^g is covered by the union of the boxes V_y, y in Y.
bool satisfies(Permutation const &g, SetSystem const &V, std::vector<PointTuple> const &Y);

/// No element of G satisfies Y, by a direct scan of the definition.
bool is_violation(PermGroup const &G, SetSystem const &V, std::vector<PointTuple> const &Y);

/// Exhaustive over nonempty Y subset of [n], size-then-lex.
OrbitCheckReport check_1_orbit(PermGroup const &G, SetSystem const &V);

/// Exhaustive over nonempty Y subset of [n]^k; requires n^k <= 9.
OrbitCheckReport check_k_orbit_exact(PermGroup const &G, SetSystem const &V, int k);

/// Constant tuples, then (for k = n-1) deleted-index tuples
/// (1,..,i-1,i+1,..,n) and cyclic runs (t, t+1, ..., t-2 mod n).
TuplePool structured_pool(int n, int k);

/// All of [n]^k in lexicographic order.
TuplePool full_pool(int n, int k);

/// Searches Y subset of pool, 1 <= |Y| <= max_size, size-then-lex.
/// A violation is a sound certificate; otherwise the verdict is
/// satisfied_up_to_bound.
OrbitCheckReport check_k_orbit_bounded(PermGroup const &G, SetSystem const &V, int k,
                                       TuplePool const &pool, int max_size);

/// Whether some g satisfies Y = {(1, 2, ..., n)}.
bool singleton_n_orbit_satisfied(PermGroup const &G, SetSystem const &V);

/// Present iff V has the residual shape and every g_i exists. Throws
/// PreconditionError when V admits a G-marriage.
std::optional<ResidualStructure> residual_structure(PermGroup const &G, SetSystem const &V);

std::string format_tuple(PointTuple const &t);

} // namespace gm
