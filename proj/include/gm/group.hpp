#pragma once

// Permutation groups held as explicit, canonically sorted element lists.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gm/perm.hpp"

namespace gm {

inline constexpr std::size_t kDefaultOrderCap = 10080;
inline constexpr std::size_t kSubgroupEnumerationCap = 120;

class PermGroup {
public:
  /// The trivial group on [n].
  explicit PermGroup(int n = 1);

  /// Wraps an element list that is already known to be a group. Sorts and
  /// deduplicates; throws PreconditionError if the identity is missing.
  static PermGroup from_elements(int n, std::vector<Permutation> generators,
                                 std::vector<Permutation> elements);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Permutation> elements() const { return elements_; }
  std::span<const Permutation> generators() const { return generators_; }

  /// Position of g in the canonical element order.
  std::optional<std::size_t> index_of(Permutation const &g) const;

  /// Equality of element sets.
  friend bool operator==(PermGroup const &a, PermGroup const &b)
  {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

private:
  int n_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

struct GroupFactor;

/// Declarative description of a group, the form used by instance files.
struct GroupSpec {
  enum class Kind { symmetric, alternating, cyclic, dihedral, trivial, generators, product };

  Kind kind = Kind::trivial;
  int n = 1;
  std::vector<std::string> generators;  // cycle strings, kind == generators
  std::vector<GroupFactor> factors;     // kind == product
};

struct GroupFactor {
  GroupSpec spec;
  std::vector<int> domain;  // 1-based points, in the order used for relabelling
};

std::string to_string(GroupSpec::Kind kind);
GroupSpec::Kind parse_group_kind(std::string_view name);

/// Closure of gens under composition; throws CapExceeded above `cap`.
PermGroup generate(int n, std::vector<Permutation> gens, std::size_t cap = kDefaultOrderCap);

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
/// Generated by the n-cycle (1 2 ... n).
PermGroup cyclic_group(int n);
/// Symmetries of the n-gon, n >= 3.
PermGroup dihedral_group(int n);

PermGroup named_group(GroupSpec const &spec);

/// A group acting on an ordered domain of the ambient [n]: point i of the
/// factor is sent to domain[i].
struct ProductFactor {
  PermGroup group;
  std::vector<int> domain;  // 0-based
};

/// Internal direct product on [n]; points outside every domain are fixed.
PermGroup direct_product(int n, std::span<const ProductFactor> factors);

/// Binary search over the canonical element order.
bool contains(PermGroup const &G, Permutation const &g);

/// Every subgroup of G once, ordered by (order, element list).
std::vector<PermGroup> all_subgroups(PermGroup const &G,
                                     std::size_t cap = kSubgroupEnumerationCap);

/// Direct scan: identity present, closed under compose and inverse.
bool is_closed(PermGroup const &G);

} // namespace gm
