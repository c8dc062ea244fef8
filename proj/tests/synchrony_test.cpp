// Copyright 2026 The hypersync Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "hypersync/error.hpp"
#include "hypersync/synchrony.hpp"
#include "support.hpp"

namespace {

using namespace hypersync;
using hstest::fixture;
using hstest::groups;

const Partition kTwelveClasses =
    groups(12, {{1, 2, 8, 9}, {3, 5, 6, 7, 10, 11}, {4, 12}});
const Partition kFourteenClasses =
    groups(14, {{1, 5, 6, 8, 9, 11}, {2, 3, 7, 10, 12, 13}, {4, 14}});

TEST(InputEquivalence, Fixtures) {
  EXPECT_EQ(input_equivalence(fixture("four_cell_split_head").graph),
            Partition::singletons(4));
  EXPECT_EQ(input_equivalence(fixture("six_cell_weighted").graph),
            groups(6, {{1, 6}, {2}, {3, 4}, {5}}));
  EXPECT_EQ(input_equivalence(fixture("feed_forward").graph),
            groups(6, {{1, 4, 6}, {2, 3, 5}}));
  EXPECT_EQ(input_equivalence(fixture("six_cell_mixed").graph),
            groups(6, {{1, 5, 6}, {2, 4}, {3}}));
}

TEST(InputEquivalence, CancellingWeightsCountAsAbsent) {
  // Cell 2 receives +1 and -1 from k = 1 edges; cell 3 receives nothing.
  auto h = Hypergraph::build(3, {{"", {{0, 1}}, {1}, 1},
                                 {"", {{0, 1}}, {1}, -1}});
  EXPECT_TRUE(input_equivalence(h).same_class(1, 2));
}

TEST(Balanced, FourteenCellClassesAreBalanced) {
  const auto h = fixture("fourteen_cell_balanced").graph;
  EXPECT_TRUE(is_balanced(h, kFourteenClasses));
  EXPECT_TRUE(hstest::oracle_balanced(h, kFourteenClasses));
}

TEST(Balanced, TwelveCellClassesFailWithWitness) {
  const auto h = fixture("twelve_cell_unbalanced").graph;
  const auto r = is_balanced(h, kTwelveClasses);
  ASSERT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(h.label(r.witness->cell), "4");
  EXPECT_EQ(h.label(r.witness->other), "12");
  EXPECT_EQ(r.witness->k, 3);
  EXPECT_NE(r.witness->cell_weight, r.witness->other_weight);
  EXPECT_FALSE(hstest::oracle_balanced(h, kTwelveClasses));
}

TEST(Balanced, PatternWeightTableOfSixCellExample) {
  const auto h = normalize_heads(fixture("six_cell_mixed").graph);
  const auto p = groups(6, {{1, 5, 6}, {2, 4}, {3}});
  // Cell 3 gets ({4,6}) with pattern (1,1,0) and ({4}) with pattern (0,1,0).
  const auto t = pattern_weight_table(h, p, 2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.at(PatternKey{1, {0, 1, 0}}), 1);
  EXPECT_EQ(t.at(PatternKey{2, {1, 1, 0}}), 1);
  EXPECT_TRUE(same_pattern_weights(pattern_weight_table(h, p, 0),
                                   pattern_weight_table(h, p, 4)));
}

TEST(Lattice, SixCellExampleHasThreeBalancedPartitions) {
  const auto h = fixture("six_cell_mixed").graph;
  const std::vector<Partition> expected{
      groups(6, {{1, 5, 6}, {2, 4}, {3}}),
      groups(6, {{1}, {2, 4}, {3}, {5}, {6}}),
      Partition::singletons(6),
  };
  auto got = enumerate_balanced(h);
  EXPECT_EQ(std::set<Partition>(got.begin(), got.end()),
            std::set<Partition>(expected.begin(), expected.end()));
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  EXPECT_EQ(balanced_via_incidence(h), got);
  EXPECT_EQ(coarsest_balanced(h), groups(6, {{1, 5, 6}, {2, 4}, {3}}));
}

TEST(Lattice, CapsAreEnforced) {
  const auto h = fixture("fourteen_cell_balanced").graph;
  try {
    enumerate_balanced(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_THROW(balanced_via_incidence(fixture("six_cell_weighted").graph, 9),
               Error);
}

TEST(Lattice, CoarsestIsCoarserThanEveryBalancedPartition) {
  for (const char* name : {"six_cell_mixed", "six_cell_weighted",
                           "feed_forward", "four_cell_split_head"}) {
    const auto h = fixture(name).graph;
    const auto top = coarsest_balanced(h);
    EXPECT_TRUE(hstest::oracle_balanced(h, top)) << name;
    for (const auto& p : enumerate_balanced(h)) EXPECT_TRUE(p.refines(top));
  }
}

TEST(Quotient, SixCellExample) {
  const auto h = fixture("six_cell_mixed").graph;
  const auto qh = quotient(h, groups(6, {{1, 5, 6}, {2, 4}, {3}}));
  using E = hstest::CanonicalEdge;
  const std::vector<E> expected{
      E{{"1", "2"}, "1", "1"}, E{{"1", "2"}, "3", "1"},
      E{{"2"}, "2", "1"}, E{{"2"}, "3", "1"}};
  EXPECT_EQ(hstest::canonical_edges(qh), expected);
  EXPECT_EQ(hstest::canonical_edges(qh),
            hstest::canonical_edges(fixture("three_cell_quotient").graph));
  for (const auto& e : qh.edges()) EXPECT_EQ(e.head.size(), 1u);
}

TEST(Quotient, FourteenCellExample) {
  const auto qh =
      quotient(fixture("fourteen_cell_balanced").graph, kFourteenClasses);
  EXPECT_EQ(qh.labels(), (std::vector<std::string>{"1", "2", "4"}));
  EXPECT_EQ(hstest::canonical_edges(qh),
            hstest::canonical_edges(fixture("fourteen_cell_quotient").graph));
}

TEST(Quotient, FeedForwardExample) {
  const auto h = fixture("feed_forward").graph;
  const auto qh = quotient(h, input_equivalence(h));
  EXPECT_EQ(hstest::canonical_edges(qh),
            hstest::canonical_edges(fixture("feed_forward_quotient").graph));
}

TEST(Quotient, RejectsUnbalancedPartition) {
  EXPECT_THROW(quotient(fixture("twelve_cell_unbalanced").graph, kTwelveClasses),
               Error);
}

TEST(Lift, ProjectInvertsLift) {
  const auto h = fixture("six_cell_mixed").graph;
  const auto p = groups(6, {{1, 5, 6}, {2, 4}, {3}});
  const auto lifted = lift_partition(h, p);
  EXPECT_EQ(lifted, hstest::oracle_lift(h, p));
  EXPECT_EQ(project_partition(h, lifted), p);
  EXPECT_TRUE(matrix_synchrony_check(incidence_digraph(h).adjacency, lifted));
}

TEST(MatrixSynchrony, EquitableCheck) {
  auto m = hstest::rational_matrix({{"0", "1", "1"}, {"1", "0", "1"},
                                    {"1", "1", "0"}});
  EXPECT_TRUE(matrix_synchrony_check(m, Partition::whole(3)));
  m(0, 1) = 2;
  EXPECT_FALSE(matrix_synchrony_check(m, Partition::whole(3)));
  EXPECT_THROW(matrix_synchrony_check(m, Partition::whole(2)), Error);
  EXPECT_EQ(enumerate_equitable(m, {}, 12).size(), 2u);
}

TEST(ClusterSymmetry, SharedTailPair) {
  const auto h = fixture("shared_tail_pair").graph;
  EXPECT_TRUE(check_cluster_symmetry(h, {2, 3}));
  EXPECT_TRUE(check_cluster_symmetry(h, {0, 1}));
  EXPECT_FALSE(check_cluster_symmetry(h, {0, 2}));
  EXPECT_TRUE(check_cluster_symmetry(h, {1}));
}

// Property sample against the definition-level oracles; the acceptance
// binary runs the full-size version.
TEST(Properties, BalancedMatchesOraclesOnRandomInstances) {
  for (const auto& inst : hstest::random_instances(60, 11)) {
    const auto& h = inst.graph;
    if (inst.planted) EXPECT_TRUE(is_balanced(h, *inst.planted));
    std::set<Partition> oracle;
    for (const auto& p : hstest::all_partitions(h.node_count())) {
      const bool b = hstest::oracle_balanced(h, p);
      ASSERT_EQ(bool(is_balanced(h, p)), b);
      ASSERT_EQ(hstest::oracle_equitable(hstest::oracle_adjacency(h),
                                         lift_partition(h, p)),
                b);
      if (b) oracle.insert(p);
    }
    const auto listed = enumerate_balanced(h);
    EXPECT_EQ(std::set<Partition>(listed.begin(), listed.end()), oracle);
    const auto via = balanced_via_incidence(h);
    EXPECT_EQ(std::set<Partition>(via.begin(), via.end()), oracle);
    EXPECT_TRUE(oracle.count(coarsest_balanced(h)));
  }
}

}  // namespace
