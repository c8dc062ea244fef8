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

#include <functional>

#include "hypersync/error.hpp"
#include "hypersync/hypergraph.hpp"
#include "hypersync/partition.hpp"
#include "hypersync/rational.hpp"
#include "support.hpp"

namespace {

using namespace hypersync;
using hstest::fixture;
using hstest::q;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kUsageError;
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/2"), hstest::frac(3, 2));
  EXPECT_EQ(parse_rational("-6/4"), hstest::frac(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-1.25"), hstest::frac(-5, 4));
  EXPECT_EQ(parse_rational("3e-2"), hstest::frac(3, 100));
  EXPECT_EQ(parse_rational("2.5E1"), Rational(25));
  EXPECT_EQ(to_string(hstest::frac(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(hstest::frac(4, 2)), "2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "--1", "1e"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::kSemanticError)
        << bad;
  }
}

TEST(Hypergraph, BuildMergesTailsAndSortsHeads) {
  auto h = Hypergraph::build(3, {{"", {{2, 1}, {0, 1}, {2, 1}}, {1, 0, 1}, 1}});
  const auto& e = h.edges()[0];
  EXPECT_EQ(e.id, "e1");
  ASSERT_EQ(e.tail.size(), 2u);
  EXPECT_EQ(e.tail[0], (TailEntry{0, 1}));
  EXPECT_EQ(e.tail[1], (TailEntry{2, 2}));
  EXPECT_EQ(e.head, (std::vector<NodeIndex>{0, 1}));
  EXPECT_EQ(e.cardinality(), 3);
  EXPECT_EQ(e.multiplicity_of(2), 2);
  EXPECT_TRUE(e.head_contains(1));
  EXPECT_FALSE(e.head_contains(2));
}

TEST(Hypergraph, BuildRejectsInvalidEdges) {
  EXPECT_EQ(code_of([] { Hypergraph::build(2, {{"", {}, {0}, 1}}); }),
            ErrorCode::kEmptyTail);
  EXPECT_EQ(code_of([] { Hypergraph::build(2, {{"", {{0, 1}}, {}, 1}}); }),
            ErrorCode::kEmptyHead);
  EXPECT_EQ(code_of([] { Hypergraph::build(2, {{"", {{5, 1}}, {0}, 1}}); }),
            ErrorCode::kUnknownNode);
  EXPECT_EQ(code_of([] { Hypergraph::build(2, {{"", {{0, 1}}, {7}, 1}}); }),
            ErrorCode::kUnknownNode);
  EXPECT_EQ(code_of([] { Hypergraph::build(2, {{"", {{0, 0}}, {1}, 1}}); }),
            ErrorCode::kNonPositiveMultiplicity);
  EXPECT_EQ(code_of([] {
              Hypergraph::build(2, {{"a", {{0, 1}}, {1}, 1},
                                    {"a", {{1, 1}}, {0}, 1}});
            }),
            ErrorCode::kDuplicateEdgeId);
  EXPECT_EQ(code_of([] {
              Hypergraph::build(std::vector<std::string>{"x", "x"}, {});
            }),
            ErrorCode::kSemanticError);
}

TEST(Hypergraph, StarsAndCardinalities) {
  const auto h = fixture("six_cell_mixed").graph;
  // Node "3" is index 2: edges e4 ({4,6} -> {3,5}) and e5 ({4} -> {3}).
  EXPECT_EQ(backward_star(h, 2), (std::vector<EdgeIndex>{3, 4}));
  EXPECT_EQ(backward_star(h, 2, 2), (std::vector<EdgeIndex>{3}));
  EXPECT_EQ(backward_star(h, 2, 1), (std::vector<EdgeIndex>{4}));
  EXPECT_EQ(forward_star(h, 1), (std::vector<EdgeIndex>{0, 1, 2}));
  EXPECT_EQ(forward_star(h, 2), (std::vector<EdgeIndex>{}));
  EXPECT_EQ(tail_cardinalities(h, 2), (std::set<int>{1, 2}));
  EXPECT_EQ(tail_cardinalities(h, 0), (std::set<int>{2}));
  EXPECT_EQ(tail_cardinalities(h), (std::set<int>{1, 2}));
  EXPECT_EQ(constituent(h, 1).edge_count(), 2u);
  EXPECT_EQ(constituent(h, 2).edge_count(), 3u);
  EXPECT_TRUE(is_connected(h));
}

TEST(Hypergraph, ConnectivityDetectsIsolatedNode) {
  auto h = Hypergraph::build(3, {{"", {{0, 1}}, {1}, 1}});
  EXPECT_FALSE(is_connected(h));
}

TEST(Hypergraph, NormalizeHeadsIsIdempotent) {
  const auto h = fixture("six_cell_mixed").graph;
  const auto n1 = normalize_heads(h);
  EXPECT_EQ(n1.edge_count(), 7u);
  for (const auto& e : n1.edges()) EXPECT_EQ(e.head.size(), 1u);
  EXPECT_EQ(normalize_heads(n1), n1);
  EXPECT_EQ(n1.edges()[1].id, "e2.2");
  EXPECT_EQ(n1.edges()[2].id, "e2.4");
}

TEST(Hypergraph, SplitAndCombineAreInverse) {
  const auto h = fixture("shared_tail_pair").graph;
  const auto split = split_edge_head(h, 0, {{2}, {3}});
  ASSERT_EQ(split.edge_count(), 2u);
  EXPECT_EQ(hstest::canonical_edges(split),
            hstest::canonical_edges(fixture("shared_tail_split").graph));
  const auto back = combine_edges(split, 0, 1);
  ASSERT_EQ(back.edge_count(), 1u);
  EXPECT_EQ(back.edges()[0].head, h.edges()[0].head);
  EXPECT_EQ(back.edges()[0].tail, h.edges()[0].tail);
}

TEST(Hypergraph, SplitAndCombineValidate) {
  const auto h = fixture("shared_tail_pair").graph;
  EXPECT_EQ(code_of([&] { split_edge_head(h, 0, {{2}}); }),
            ErrorCode::kInvalidPartition);
  EXPECT_EQ(code_of([&] { split_edge_head(h, 0, {{2, 3}, {3}}); }),
            ErrorCode::kInvalidPartition);
  EXPECT_EQ(code_of([&] { split_edge_head(h, 0, {{2}, {}}); }),
            ErrorCode::kInvalidPartition);
  EXPECT_EQ(code_of([&] { split_edge_head(h, 4, {{2}, {3}}); }),
            ErrorCode::kUnknownEdge);
  auto g = Hypergraph::build(3, {{"a", {{0, 1}}, {1}, 1},
                                 {"b", {{1, 1}}, {2}, 1},
                                 {"c", {{0, 1}}, {1, 2}, 1},
                                 {"d", {{0, 1}}, {2}, 2}});
  EXPECT_EQ(code_of([&] { combine_edges(g, 0, 1); }), ErrorCode::kTailMismatch);
  EXPECT_EQ(code_of([&] { combine_edges(g, 0, 2); }), ErrorCode::kHeadOverlap);
  EXPECT_EQ(code_of([&] { combine_edges(g, 0, 3); }),
            ErrorCode::kWeightMismatch);
}

TEST(Hypergraph, IncidenceBlocksOfSixCellExample) {
  const auto d = incidence_digraph(fixture("six_cell_mixed").graph);
  const int w[6][5] = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 1},
                       {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}};
  const int t[5][6] = {{0, 1, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 0},
                       {1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1},
                       {0, 0, 0, 1, 0, 0}};
  ASSERT_EQ(d.weights.rows(), 6u);
  ASSERT_EQ(d.weights.cols(), 5u);
  ASSERT_EQ(d.tails.rows(), 5u);
  ASSERT_EQ(d.tails.cols(), 6u);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(d.weights(i, j), w[i][j]);
      EXPECT_EQ(d.tails(j, i), t[j][i]);
      EXPECT_EQ(d.adjacency(i, 6 + j), w[i][j]);
      EXPECT_EQ(d.adjacency(6 + j, i), t[j][i]);
    }
  }
}

TEST(Hypergraph, IncidenceCarriesMultiplicityAndWeight) {
  auto h = Hypergraph::build(2, {{"", {{0, 2}, {1, 1}}, {1}, q("3/2")}});
  const auto d = incidence_digraph(h);
  EXPECT_EQ(d.tails(0, 0), 2);
  EXPECT_EQ(d.tails(0, 1), 1);
  EXPECT_EQ(d.weights(1, 0), hstest::frac(3, 2));
  EXPECT_EQ(d.adjacency, hstest::oracle_adjacency(h));
}

TEST(Partition, CanonicalFormAndQueries) {
  Partition p(std::vector<std::size_t>{7, 3, 7, 1});
  EXPECT_EQ(p.class_ids(), (std::vector<std::size_t>{0, 1, 0, 2}));
  EXPECT_EQ(p.class_count(), 3u);
  EXPECT_EQ(p.classes(),
            (std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3}}));
  EXPECT_EQ(p.representatives(), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_TRUE(Partition::singletons(4).refines(p));
  EXPECT_TRUE(p.refines(Partition::whole(4)));
  EXPECT_FALSE(Partition::whole(4).refines(p));
  EXPECT_EQ(p.restrict_prefix(2).class_count(), 2u);
}

TEST(Partition, FromClassesValidates) {
  EXPECT_EQ(code_of([] { Partition::from_classes(3, {{0, 1}}); }),
            ErrorCode::kInvalidPartition);
  EXPECT_EQ(code_of([] { Partition::from_classes(2, {{0, 1}, {1}}); }),
            ErrorCode::kInvalidPartition);
  EXPECT_EQ(code_of([] { Partition::from_classes(2, {{0, 2}, {1}}); }),
            ErrorCode::kInvalidPartition);
  EXPECT_EQ(code_of([] { Partition::from_classes(2, {{0, 1}, {}}); }),
            ErrorCode::kInvalidPartition);
}

TEST(Partition, ParseAndFormatRoundTrip) {
  const std::vector<std::string> labels{"1", "2", "3", "4", "5", "6"};
  const auto p = parse_partition("1,5,6|2,4|3", labels);
  EXPECT_EQ(p, hstest::groups(6, {{1, 5, 6}, {2, 4}, {3}}));
  EXPECT_EQ(format_partition(p, labels), "1,5,6|2,4|3");
  EXPECT_EQ(parse_partition(" 3 | 2,4 | 6,5,1 ", labels), p);
  EXPECT_EQ(code_of([&] { parse_partition("1,2|3", labels); }),
            ErrorCode::kInvalidPartition);
  EXPECT_EQ(code_of([&] { parse_partition("1,2,3,4,5,7|6", labels); }),
            ErrorCode::kInvalidPartition);
}

TEST(Partition, EnumerationOracleCountsBellNumbers) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(hstest::all_partitions(n).size(), bell[n]);
  }
}

}  // namespace
