#pragma once

// Orbits, transitive constituents, block systems, bases.

#include <optional>
#include <span>
#include <vector>

#include "gm/group.hpp"

namespace gm {

/// Orbits of G, sorted by least element.
struct OrbitPartition {
  std::vector<PointSet> orbits;

  bool transitive() const { return orbits.size() == 1; }
  friend bool operator==(OrbitPartition const &, OrbitPartition const &) = default;
};

/// A G-invariant partition of [n] into equal-size blocks, sorted by least element.
struct BlockSystem {
  std::vector<PointSet> blocks;

  int block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  friend bool operator==(BlockSystem const &, BlockSystem const &) = default;
};

struct BaseReport {
  PointSet base;
  int size = 0;
};

OrbitPartition orbits(PermGroup const &G);

/// The group induced on `orbit`, relabelled to [|orbit|] by sorted position.
PermGroup transitive_constituent(PermGroup const &G, PointSet orbit);

/// Nontrivial block systems: the finest invariant partition joining each
/// pair of points, deduplicated. Throws PreconditionError if G is intransitive.
std::vector<BlockSystem> minimal_blocks(PermGroup const &G);
bool is_primitive(PermGroup const &G);

/// Pointwise stabilizer of `points` in G is trivial.
bool is_base(PermGroup const &G, PointSet points);

/// Lexicographically least base of minimum size.
BaseReport minimal_base(PermGroup const &G);

/// True iff |G| equals the product of |orbit|! over the orbits of G.
bool is_product_of_symmetrics(PermGroup const &G);

/// Sym(orbit 1) x ... x Sym(orbit m) for the orbits of G.
PermGroup orbit_symmetric_product(PermGroup const &G);

/// Subsets of [n] in size-then-lexicographic order, the empty set excluded.
std::span<const PointSet> subsets_size_then_lex(int n);

} // namespace gm
