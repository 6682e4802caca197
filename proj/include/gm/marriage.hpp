#pragma once

// The G-marriage decision: is there g in G with g(i) in V_i for every i?

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gm/group.hpp"

namespace gm {

/// The family V_1, ..., V_n of subsets of [n]. Empty members are allowed.
class SetSystem {
public:
  explicit SetSystem(std::vector<PointSet> sets);

  /// From 1-based point lists; throws DomainError on out-of-range points.
  static SetSystem from_lists(int n, std::vector<std::vector<int>> const &lists);

  /// Inverse of encoding(): the j-th n-bit field holds V_j.
  static SetSystem from_encoding(int n, std::uint64_t code);

  /// Every V_i = [n].
  static SetSystem full(int n);

  int degree() const { return static_cast<int>(sets_.size()); }
  PointSet operator[](int i) const { return sets_[i]; }
  std::vector<PointSet> const &sets() const { return sets_; }

  /// Union of V_y over y in Y.
  PointSet union_over(PointSet Y) const;

  /// Requires n * n <= 64.
  std::uint64_t encoding() const;

  std::vector<std::vector<int>> lists_one_based() const;

  friend bool operator==(SetSystem const &, SetSystem const &) = default;

private:
  std::vector<PointSet> sets_;
};

std::string format_system(SetSystem const &V);

enum class MarriageStrategy { enumeration, matching, decomposed };
std::string to_string(MarriageStrategy s);

struct MarriageResult {
  bool found = false;
  std::optional<Permutation> witness;
  MarriageStrategy strategy = MarriageStrategy::enumeration;
};

/// g(i) in V_i for all i, checked straight from the definition.
bool is_marriage(SetSystem const &V, Permutation const &g);

/// First element of G, in canonical order, that is a marriage.
MarriageResult find_marriage(PermGroup const &G, SetSystem const &V);

struct HallReport {
  bool holds = true;
  std::optional<PointSet> violation;  // first Y with |V_Y| < |Y|
};

/// |V_Y| >= |Y| for every nonempty Y, scanned in size-then-lex order.
HallReport hall_condition(SetSystem const &V);

/// Perfect matching of positions to points by augmenting paths (G = Sym([n])).
MarriageResult hall_matching(SetSystem const &V);

/// Orbit-by-orbit matching; requires is_product_of_symmetrics(G).
MarriageResult marriage_decomposed(PermGroup const &G, SetSystem const &V);

/// {V_j & orbit : j in orbit}, relabelled to [|orbit|] by sorted position.
SetSystem restrict_system(SetSystem const &V, PointSet orbit);

} // namespace gm
