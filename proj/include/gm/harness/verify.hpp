#pragma once

// Verification drivers. Each sweeps a space of (group, set system) pairs,
// re-validates every witness it records, and returns a deterministic report.

#include <optional>
#include <vector>

#include "gm/harness/report.hpp"

namespace gm {

struct VerifyOptions {
  int n = 4;
  std::optional<double> sample;  // fraction of the system space; full when unset
  int workers = 1;
  bool extended = false;         // permits the slow degree-5 alternating run
};

/// C_3 against ({2},{1},{3}), with Sym(3) on the same system as a contrast.
VerificationReport verify_keevash();

/// Alt(3) against ({1,3},{2,3},{1,2}): exact 2-orbit check and marriage search.
VerificationReport verify_prop_1_5();

/// The same check for any (G, V) of degree 3: verified iff the 2-orbit
/// condition holds and no marriage exists, refuted with the counter-case
/// otherwise.
VerificationReport verify_two_orbit_without_marriage(PermGroup const &G, SetSystem const &V,
                                                     std::string const &name);

/// Every subgroup of Sym(n), n in {3, 4}: products of symmetric groups pass
/// the full sufficiency sweep, every other subgroup yields a system with the
/// 1-orbit condition and no marriage.
VerificationReport verify_theorem_1_2(int n, int workers = 1);

/// C_n, n in {4, 5}: every marriage-free system has an (n-1)-orbit violation.
VerificationReport verify_theorem_cyclic(VerifyOptions const &opts);

/// Alt(n), n = 4 (5 with extended): the cyclic sweep plus the normalization
/// replay over every residual system.
VerificationReport verify_theorem_alternating(VerifyOptions const &opts);

/// Order in which the normalizing factors are multiplied. The replay builds
/// the same point map either way; both are kept so that the claim can be
/// tested rather than assumed.
enum class ProductConvention { right_to_left, left_to_right };

struct NormalizationReplay {
  std::vector<Permutation> factors;  // p_n, ..., p_4, q in application order
  Permutation normalizer;            // the composite point map T
  std::vector<int> normalized_gaps;  // T(a_i), 0-based
  Permutation explicit_g;            // marriage for the normalized system
  bool explicit_g_valid = false;     // explicit_g is in G and is a marriage there
  std::optional<Permutation> pullback;  // T^-1 g, a marriage for the original system
};

/// Replays the normalization for V_i = [n] - {a_i} under Alt(n), n >= 4.
/// `gaps` is the 0-based bijection a.
NormalizationReplay replay_normalization(PermGroup const &alt, std::vector<int> const &gaps,
                                         ProductConvention convention = ProductConvention::right_to_left);

} // namespace gm
