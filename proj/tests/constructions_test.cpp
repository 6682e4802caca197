#include "gtest/gtest.h"

#include "gm/constructions.hpp"
#include "gm/error.hpp"

using namespace gm;

namespace {

SetSystem sys(int n, std::vector<std::vector<int>> lists)
{
  return SetSystem::from_lists(n, lists);
}

PermGroup diagonal()
{
  return generate(4, {parse_cycles("(1 2)(3 4)", 4)});
}

} // namespace

TEST(Keevash, Claims)
{
  auto cex = keevash_example();
  EXPECT_EQ(check_1_orbit(cex.group, cex.system).verdict, OrbitVerdict::satisfied);
  EXPECT_FALSE(find_marriage(cex.group, cex.system).found);
  EXPECT_TRUE(hall_matching(cex.system).found);
  EXPECT_EQ(cex.group, cyclic_group(3));
}

TEST(AlternatingDegreeThree, Claims)
{
  auto cex = prop_1_5_example();
  EXPECT_EQ(cex.claim, CounterexampleClaim::two_orbit_holds_no_marriage);
  EXPECT_EQ(check_k_orbit_exact(cex.group, cex.system, 2).verdict, OrbitVerdict::satisfied);
  EXPECT_FALSE(find_marriage(cex.group, cex.system).found);
  auto r = residual_structure(cex.group, cex.system);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->a_list, (std::vector<int>{1, 0, 2}));
}

TEST(Imprimitive, CyclicFour)
{
  auto C4 = cyclic_group(4);
  auto cex = imprimitive_counterexample(C4, minimal_blocks(C4).front());
  // x=1, y=3, z=2: V_1={3,2}, V_3={1,2}, V_2={1,3}.
  EXPECT_EQ(cex.system, sys(4, {{2, 3}, {1, 3}, {1, 2}, {1, 2, 3, 4}}));
  EXPECT_TRUE(claim_holds(cex));
}

TEST(Imprimitive, DihedralAndPrimitiveRejection)
{
  for (auto const &G : {dihedral_group(4), cyclic_group(6), dihedral_group(6)})
    for (auto const &blocks : minimal_blocks(G))
      EXPECT_TRUE(claim_holds(imprimitive_counterexample(G, blocks)));
  BlockSystem bogus{{PointSet::of({0, 2}), PointSet::of({1, 3})}};
  EXPECT_THROW(imprimitive_counterexample(symmetric_group(4), bogus), PreconditionError);
  EXPECT_THROW(imprimitive_counterexample(dihedral_group(4),
                                          BlockSystem{{PointSet::of({0, 1}), PointSet::of({2, 3})}}),
               PreconditionError);
}

TEST(Base, AlternatingFour)
{
  auto cex = base_counterexample(alternating_group(4));
  EXPECT_EQ(cex.system, sys(4, {{1, 3}, {2, 3}, {4}, {3, 4}}));
  EXPECT_TRUE(claim_holds(cex));
  EXPECT_TRUE(base_forced_fix_holds(cex));
}

TEST(Base, OtherPrimitiveGroups)
{
  for (auto const &G : {alternating_group(5), cyclic_group(5), dihedral_group(5),
                        alternating_group(3)}) {
    auto cex = base_counterexample(G);
    EXPECT_TRUE(claim_holds(cex));
    EXPECT_TRUE(base_forced_fix_holds(cex));
  }
  EXPECT_THROW(base_counterexample(symmetric_group(4)), PreconditionError);
  EXPECT_THROW(base_counterexample(cyclic_group(4)), PreconditionError);
}

TEST(Subdirect, DiagonalSubgroup)
{
  auto G = diagonal();
  auto h = parse_cycles("(1 2)", 4);
  auto cex = subdirect_counterexample(G, h);
  EXPECT_EQ(cex.system, sys(4, {{2, 3, 4}, {1, 3, 4}, {1, 2, 3}, {1, 2, 4}}));
  EXPECT_TRUE(claim_holds(cex));
  EXPECT_TRUE(subdirect_forcing_holds(cex, h));

  auto h2 = parse_cycles("(3 4)", 4);
  auto cex2 = subdirect_counterexample(G, h2);
  EXPECT_TRUE(subdirect_forcing_holds(cex2, h2));
  EXPECT_EQ(*least_outside_element(G), h2);

  EXPECT_THROW(subdirect_counterexample(G, parse_cycles("(1 2)(3 4)", 4)), PreconditionError);
  EXPECT_THROW(subdirect_counterexample(G, parse_cycles("(1 3)", 4)), PreconditionError);
  EXPECT_THROW(subdirect_counterexample(generate(4, {parse_cycles("(1 2 3)", 4)}),
                                        parse_cycles("(1 2)", 4)),
               PreconditionError);
}
