#include "gm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gm/error.hpp"

namespace gm {

void check_degree(int n)
{
  if (n < 1 || n > kMaxDegree)
    throw DomainError("degree " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDegree));
}

PointSet PointSet::of(std::initializer_list<int> points)
{
  PointSet s;
  for (int p : points)
    s.insert(p);
  return s;
}

std::vector<int> PointSet::points() const
{
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b));
  return out;
}

Permutation::Permutation(int n)
{
  check_degree(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i)
    img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images)
{
  int n = static_cast<int>(images.size());
  Permutation g(n);
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 0 || v >= n)
      throw DomainError("image " + std::to_string(v + 1) + " outside [" + std::to_string(n) + "]");
    if ((seen >> v) & 1u)
      throw DomainError("images are not a bijection: " + std::to_string(v + 1) + " repeated");
    seen |= 1u << v;
    g.img_[i] = static_cast<std::uint8_t>(v);
  }
  return g;
}

bool Permutation::is_identity() const
{
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i)
      return false;
  return true;
}

std::vector<int> Permutation::images_one_based() const
{
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i)
    out[i] = img_[i] + 1;
  return out;
}

std::uint64_t Permutation::key() const
{
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i)
    k |= std::uint64_t(img_[i]) << (4 * i);
  return k;
}

PointSet Permutation::operator()(PointSet s) const
{
  std::uint32_t out = 0;
  for (std::uint32_t b = s.bits(); b != 0; b &= b - 1)
    out |= 1u << img_[std::countr_zero(b)];
  return PointSet(out);
}

PointTuple::PointTuple(std::span<const int> entries)
{
  if (entries.empty() || entries.size() > static_cast<std::size_t>(kMaxDegree))
    throw DomainError("tuple arity " + std::to_string(entries.size()) + " outside 1.." +
                      std::to_string(kMaxDegree));
  k_ = static_cast<std::uint8_t>(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (entries[j] < 0 || entries[j] >= kMaxDegree)
      throw DomainError("tuple entry " + std::to_string(entries[j] + 1) + " out of range");
    e_[j] = static_cast<std::uint8_t>(entries[j]);
  }
}

PointTuple PointTuple::constant(int p, int arity)
{
  std::vector<int> e(static_cast<std::size_t>(arity), p);
  return PointTuple(e);
}

std::vector<int> PointTuple::entries_one_based() const
{
  std::vector<int> out(k_);
  for (int j = 0; j < k_; ++j)
    out[j] = e_[j] + 1;
  return out;
}

Permutation compose(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw DomainError("compose: degree mismatch " + std::to_string(a.degree()) + " vs " +
                      std::to_string(b.degree()));
  std::array<int, kMaxDegree> img{};
  for (int i = 0; i < a.degree(); ++i)
    img[i] = a(b(i));
  return Permutation::from_images(std::span<const int>(img.data(), a.degree()));
}

Permutation inverse(Permutation const &g)
{
  std::array<int, kMaxDegree> img{};
  for (int i = 0; i < g.degree(); ++i)
    img[g(i)] = i;
  return Permutation::from_images(std::span<const int>(img.data(), g.degree()));
}

PointTuple act_tuple(Permutation const &g, PointTuple const &y)
{
  std::array<int, kMaxDegree> e{};
  for (int j = 0; j < y.arity(); ++j) {
    if (y[j] >= g.degree())
      throw DomainError("tuple entry " + std::to_string(y[j] + 1) + " exceeds degree " +
                        std::to_string(g.degree()));
    e[j] = g(y[j]);
  }
  return PointTuple(std::span<const int>(e.data(), y.arity()));
}

Permutation parse_cycles(std::string_view text, int n)
{
  check_degree(n);
  std::array<int, kMaxDegree> img{};
  for (int i = 0; i < n; ++i)
    img[i] = i;
  std::uint32_t used = 0;

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](std::string const &what) {
    throw ParseError("cycle notation '" + std::string(text) + "' at offset " +
                     std::to_string(pos) + ": " + what);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      int value = 0;
      auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc())
        fail("expected a point");
      pos = static_cast<std::size_t>(end - text.data());
      if (value < 1 || value > n)
        fail("point " + std::to_string(value) + " outside [" + std::to_string(n) + "]");
      int p = value - 1;
      if ((used >> p) & 1u)
        fail("point " + std::to_string(value) + " repeated");
      used |= 1u << p;
      cycle.push_back(p);
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      img[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::from_images(std::span<const int>(img.data(), n));
}

std::string format_cycles(Permutation const &g)
{
  std::string out;
  std::uint32_t seen = 0;
  for (int start = 0; start < g.degree(); ++start) {
    if (((seen >> start) & 1u) || g(start) == start)
      continue;
    out += '(';
    for (int p = start;; ) {
      seen |= 1u << p;
      out += std::to_string(p + 1);
      p = g(p);
      if (p == start)
        break;
      out += ' ';
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string format_set(PointSet s)
{
  std::string out = "{";
  bool first = true;
  for (int p : s.points()) {
    if (!first)
      out += ',';
    out += std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

} // namespace gm
