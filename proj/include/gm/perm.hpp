#pragma once

// Permutations of [n] = {0, ..., n-1} together with bitmask point sets and
// point tuples. Points are 0-based inside the library; every textual surface
// (cycle notation, JSON, CLI) is 1-based.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gm {

inline constexpr int kMaxDegree = 16;

void check_degree(int n);

/// Subset of [n] held in one machine word.
class PointSet {
public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr PointSet full(int n) { return PointSet((std::uint32_t{1} << n) - 1u); }
  static constexpr PointSet single(int p) { return PointSet(std::uint32_t{1} << p); }
  static PointSet of(std::initializer_list<int> points);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int least() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr PointSet &insert(int p) { bits_ |= std::uint32_t{1} << p; return *this; }
  constexpr PointSet &erase(int p) { bits_ &= ~(std::uint32_t{1} << p); return *this; }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;

  /// Members in increasing order.
  std::vector<int> points() const;

private:
  std::uint32_t bits_ = 0;
};

/// A bijection of [n]; `image(i)` is g(i).
class Permutation {
public:
  /// Identity of degree n.
  explicit Permutation(int n = 1);

  /// Builds from 0-based images; throws DomainError unless a bijection of [n].
  static Permutation from_images(std::span<const int> images);
  static Permutation identity(int n) { return Permutation(n); }

  int degree() const { return n_; }
  int image(int i) const { return img_[i]; }
  int operator()(int i) const { return img_[i]; }
  bool is_identity() const;

  /// 1-based image sequence, the form used in reports.
  std::vector<int> images_one_based() const;

  /// Packed 4-bit images; injective over permutations of equal degree.
  std::uint64_t key() const;

  /// Image of a point set.
  PointSet operator()(PointSet s) const;

  /// Lexicographic on image sequences (degree first).
  friend std::strong_ordering operator<=>(Permutation const &, Permutation const &) = default;
  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  std::uint8_t n_ = 1;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

/// Entries of a k-tuple over [n], repeats allowed.
class PointTuple {
public:
  PointTuple() = default;
  explicit PointTuple(std::span<const int> entries);
  PointTuple(std::initializer_list<int> entries)
      : PointTuple(std::span<const int>(entries.begin(), entries.size())) {}

  /// The constant tuple (p, ..., p).
  static PointTuple constant(int p, int arity);

  int arity() const { return k_; }
  int operator[](int j) const { return e_[j]; }
  std::vector<int> entries_one_based() const;

  friend std::strong_ordering operator<=>(PointTuple const &, PointTuple const &) = default;
  friend bool operator==(PointTuple const &, PointTuple const &) = default;

private:
  std::uint8_t k_ = 0;
  std::array<std::uint8_t, kMaxDegree> e_{};
};

/// c(i) = a(b(i)): the right factor acts first.
Permutation compose(Permutation const &a, Permutation const &b);
Permutation inverse(Permutation const &g);

/// Entrywise image of a tuple.
PointTuple act_tuple(Permutation const &g, PointTuple const &y);

/// Parses whitespace-separated 1-based cycles such as "(1 2 3)(4 5)".
/// Empty text and "()" give the identity.
Permutation parse_cycles(std::string_view text, int n);

/// Canonical cycle notation: cycles ordered and rotated by least element,
/// fixed points dropped, identity printed as "()".
std::string format_cycles(Permutation const &g);

/// Formats a point set as "{1,2,3}" (1-based).
std::string format_set(PointSet s);

} // namespace gm

template <>
struct std::hash<gm::Permutation> {
  std::size_t operator()(gm::Permutation const &g) const noexcept {
    return std::hash<std::uint64_t>{}(g.key() ^ (std::uint64_t(g.degree()) << 60));
  }
};
