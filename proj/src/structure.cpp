#include "gm/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "gm/error.hpp"

namespace gm {

namespace {

struct UnionFind {
  std::array<int, kMaxDegree> parent{};

  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }

  int find(int x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }

  bool unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<PointSet> classes(UnionFind &uf, int n)
{
  std::array<PointSet, kMaxDegree> by_root{};
  for (int p = 0; p < n; ++p)
    by_root[uf.find(p)].insert(p);
  std::vector<PointSet> out;
  for (int p = 0; p < n; ++p)
    if (!by_root[p].empty())
      out.push_back(by_root[p]);
  std::sort(out.begin(), out.end(),
            [](PointSet a, PointSet b) { return a.least() < b.least(); });
  return out;
}

// Lexicographic on the increasing point lists.
bool lex_less(PointSet a, PointSet b)
{
  std::uint32_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int px = std::countr_zero(x), py = std::countr_zero(y);
    if (px != py)
      return px < py;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

std::vector<std::vector<PointSet>> build_subset_orders()
{
  std::vector<std::vector<PointSet>> orders(kMaxDegree + 1);
  for (int n = 1; n <= kMaxDegree; ++n) {
    auto &order = orders[n];
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits)
      order.emplace_back(bits);
    std::sort(order.begin(), order.end(), [](PointSet a, PointSet b) {
      if (a.size() != b.size())
        return a.size() < b.size();
      return lex_less(a, b);
    });
  }
  return orders;
}

} // namespace

std::span<const PointSet> subsets_size_then_lex(int n)
{
  static const std::vector<std::vector<PointSet>> orders = build_subset_orders();
  check_degree(n);
  return orders[n];
}

OrbitPartition orbits(PermGroup const &G)
{
  UnionFind uf(G.degree());
  for (auto const &g : G.elements())
    for (int p = 0; p < G.degree(); ++p)
      uf.unite(p, g(p));
  return {classes(uf, G.degree())};
}

PermGroup transitive_constituent(PermGroup const &G, PointSet orbit)
{
  int n = G.degree();
  if (orbit.empty() || !orbit.subset_of(PointSet::full(n)))
    throw PreconditionError("constituent domain " + format_set(orbit) + " is not a subset of [" +
                            std::to_string(n) + "]");
  auto points = orbit.points();
  std::array<int, kMaxDegree> position{};
  for (std::size_t i = 0; i < points.size(); ++i)
    position[points[i]] = static_cast<int>(i);

  auto restrict = [&](Permutation const &g) {
    if (g(orbit) != orbit)
      throw PreconditionError(format_set(orbit) + " is not invariant under " + format_cycles(g));
    std::vector<int> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
      img[i] = position[g(points[i])];
    return Permutation::from_images(img);
  };

  std::vector<Permutation> elements, gens;
  for (auto const &g : G.elements())
    elements.push_back(restrict(g));
  for (auto const &s : G.generators())
    gens.push_back(restrict(s));
  return PermGroup::from_elements(static_cast<int>(points.size()), std::move(gens),
                                  std::move(elements));
}

std::vector<BlockSystem> minimal_blocks(PermGroup const &G)
{
  int n = G.degree();
  if (!orbits(G).transitive())
    throw PreconditionError("block systems are only defined here for transitive groups");

  std::vector<BlockSystem> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      UnionFind uf(n);
      uf.unite(a, b);
      for (bool changed = true; changed;) {
        changed = false;
        for (auto const &g : G.elements())
          for (int p = 0; p < n; ++p)
            changed |= uf.unite(g(p), g(uf.find(p)));
      }
      BlockSystem system{classes(uf, n)};
      if (system.blocks.size() > 1 &&
          std::find(out.begin(), out.end(), system) == out.end())
        out.push_back(std::move(system));
    }
  }
  std::sort(out.begin(), out.end(), [](BlockSystem const &x, BlockSystem const &y) {
    return std::lexicographical_compare(x.blocks.begin(), x.blocks.end(), y.blocks.begin(),
                                        y.blocks.end(), lex_less);
  });
  return out;
}

bool is_primitive(PermGroup const &G)
{
  return minimal_blocks(G).empty();
}

bool is_base(PermGroup const &G, PointSet points)
{
  int fixing = 0;
  for (auto const &g : G.elements()) {
    bool fixes = true;
    for (int p : points.points())
      fixes = fixes && g(p) == p;
    fixing += fixes;
    if (fixing > 1)
      return false;
  }
  return true;
}

BaseReport minimal_base(PermGroup const &G)
{
  if (G.order() == 1)
    return {PointSet{}, 0};
  for (PointSet s : subsets_size_then_lex(G.degree()))
    if (is_base(G, s))
      return {s, s.size()};
  // [n] itself is always a base.
  throw Error("minimal_base: no base found");
}

bool is_product_of_symmetrics(PermGroup const &G)
{
  std::size_t expected = 1;
  for (PointSet orbit : orbits(G).orbits)
    for (int k = 2; k <= orbit.size(); ++k)
      expected *= static_cast<std::size_t>(k);
  return expected == G.order();
}

PermGroup orbit_symmetric_product(PermGroup const &G)
{
  std::vector<ProductFactor> factors;
  for (PointSet orbit : orbits(G).orbits)
    factors.push_back({symmetric_group(orbit.size()), orbit.points()});
  return direct_product(G.degree(), factors);
}

} // namespace gm
