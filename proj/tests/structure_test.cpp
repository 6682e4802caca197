#include <algorithm>
#include <functional>

#include "gtest/gtest.h"

#include "gm/error.hpp"
#include "gm/structure.hpp"

using namespace gm;

namespace {

// All set partitions of [n] via restricted growth strings.
std::vector<std::vector<PointSet>> all_partitions(int n)
{
  std::vector<std::vector<PointSet>> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int maxv) {
    if (pos == n) {
      std::vector<PointSet> blocks(maxv + 1);
      for (int p = 0; p < n; ++p)
        blocks[rgs[p]].insert(p);
      out.push_back(blocks);
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[pos] = v;
      rec(pos + 1, std::max(maxv, v));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

bool invariant(PermGroup const &G, std::vector<PointSet> const &blocks)
{
  for (auto const &g : G.elements())
    for (PointSet b : blocks)
      if (std::find(blocks.begin(), blocks.end(), g(b)) == blocks.end())
        return false;
  return true;
}

std::vector<std::vector<PointSet>> brute_force_block_systems(PermGroup const &G)
{
  std::vector<std::vector<PointSet>> out;
  for (auto &blocks : all_partitions(G.degree()))
    if (blocks.size() > 1 && static_cast<int>(blocks.size()) < G.degree() && invariant(G, blocks))
      out.push_back(blocks);
  return out;
}

PermGroup diagonal_involution()
{
  return generate(4, {parse_cycles("(1 2)(3 4)", 4)});
}

PermGroup s2_times_s3()
{
  std::vector<ProductFactor> f{{symmetric_group(2), {0, 1}}, {symmetric_group(3), {2, 3, 4}}};
  return direct_product(5, f);
}

} // namespace

TEST(Orbits, Examples)
{
  EXPECT_EQ(orbits(s2_times_s3()).orbits,
            (std::vector<PointSet>{PointSet::of({0, 1}), PointSet::of({2, 3, 4})}));
  EXPECT_TRUE(orbits(cyclic_group(4)).transitive());
  EXPECT_EQ(orbits(PermGroup(3)).orbits.size(), 3u);
}

TEST(TransitiveConstituent, Examples)
{
  auto D = diagonal_involution();
  EXPECT_EQ(transitive_constituent(D, PointSet::of({0, 1})), symmetric_group(2));
  std::vector<ProductFactor> f{{symmetric_group(2), {0, 1}}, {symmetric_group(2), {2, 3}}};
  EXPECT_EQ(transitive_constituent(direct_product(4, f), PointSet::of({2, 3})).order(), 2u);
  EXPECT_EQ(transitive_constituent(PermGroup(3), PointSet::of({1})), PermGroup(1));
  EXPECT_THROW(transitive_constituent(D, PointSet::of({0, 2})), PreconditionError);
}

TEST(MinimalBlocks, CyclicFourMatchesBruteForce)
{
  auto C4 = cyclic_group(4);
  EXPECT_EQ(all_partitions(4).size(), 15u);
  auto brute = brute_force_block_systems(C4);
  ASSERT_EQ(brute.size(), 1u);
  auto systems = minimal_blocks(C4);
  ASSERT_EQ(systems.size(), 1u);
  EXPECT_EQ(systems[0].blocks,
            (std::vector<PointSet>{PointSet::of({0, 2}), PointSet::of({1, 3})}));
}

TEST(MinimalBlocks, PrimitiveGroups)
{
  EXPECT_TRUE(brute_force_block_systems(alternating_group(4)).empty());
  EXPECT_TRUE(is_primitive(alternating_group(4)));
  EXPECT_TRUE(is_primitive(symmetric_group(3)));
  EXPECT_FALSE(is_primitive(dihedral_group(4)));
  EXPECT_THROW(minimal_blocks(PermGroup(3)), PreconditionError);
}

TEST(MinimalBlocks, AgreesWithBruteForceOnTransitiveGroupsOfDegreeSix)
{
  // Every system found is invariant; primitivity agrees with brute force.
  for (auto const &G : {cyclic_group(6), dihedral_group(6), alternating_group(6),
                        dihedral_group(5), cyclic_group(5)}) {
    auto systems = minimal_blocks(G);
    for (auto const &s : systems) {
      EXPECT_TRUE(invariant(G, s.blocks));
      for (PointSet b : s.blocks)
        EXPECT_EQ(b.size(), s.block_size());
    }
    EXPECT_EQ(systems.empty(), brute_force_block_systems(G).empty());
  }
  EXPECT_EQ(minimal_blocks(cyclic_group(6)).size(), 2u);
}

TEST(MinimalBase, Examples)
{
  EXPECT_EQ(minimal_base(symmetric_group(4)).size, 3);
  auto alt = minimal_base(alternating_group(4));
  EXPECT_EQ(alt.size, 2);
  EXPECT_EQ(alt.base, PointSet::of({0, 1}));
  EXPECT_EQ(minimal_base(cyclic_group(4)).size, 1);
  auto trivial = minimal_base(PermGroup(3));
  EXPECT_EQ(trivial.size, 0);
  EXPECT_TRUE(trivial.base.empty());
}

TEST(MinimalBase, IsMinimal)
{
  for (auto const &G : {symmetric_group(5), alternating_group(5), dihedral_group(6),
                        cyclic_group(6), alternating_group(6)}) {
    auto report = minimal_base(G);
    EXPECT_TRUE(is_base(G, report.base));
    for (PointSet s : subsets_size_then_lex(G.degree()))
      if (s.size() < report.size)
        EXPECT_FALSE(is_base(G, s));
  }
}

TEST(ProductOfSymmetrics, Examples)
{
  EXPECT_TRUE(is_product_of_symmetrics(s2_times_s3()));
  EXPECT_FALSE(is_product_of_symmetrics(cyclic_group(4)));
  EXPECT_TRUE(is_product_of_symmetrics(PermGroup(3)));
  EXPECT_FALSE(is_product_of_symmetrics(diagonal_involution()));
}

TEST(ProductOfSymmetrics, ConstituentsAreSymmetric)
{
  for (auto const &H : all_subgroups(symmetric_group(4))) {
    if (!is_product_of_symmetrics(H))
      continue;
    for (PointSet orbit : orbits(H).orbits) {
      std::size_t f = 1;
      for (int k = 2; k <= orbit.size(); ++k)
        f *= static_cast<std::size_t>(k);
      EXPECT_EQ(transitive_constituent(H, orbit).order(), f);
    }
    EXPECT_EQ(orbit_symmetric_product(H), H);
  }
}

TEST(Subsets, SizeThenLex)
{
  auto order = subsets_size_then_lex(3);
  std::vector<PointSet> expected{PointSet::of({0}),    PointSet::of({1}),    PointSet::of({2}),
                                 PointSet::of({0, 1}), PointSet::of({0, 2}), PointSet::of({1, 2}),
                                 PointSet::of({0, 1, 2})};
  EXPECT_TRUE(std::equal(order.begin(), order.end(), expected.begin(), expected.end()));
}
