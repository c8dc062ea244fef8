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

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypersync/matrix.hpp"
#include "hypersync/rational.hpp"

namespace hypersync {

using NodeIndex = std::size_t;
using EdgeIndex = std::size_t;

// One node of a tail multiset.
struct TailEntry {
  NodeIndex node;
  int multiplicity;

  friend bool operator==(const TailEntry&, const TailEntry&) = default;
  friend auto operator<=>(const TailEntry&, const TailEntry&) = default;
};

// Directed hyperedge with a multiset tail and a set head. The tail is kept
// sorted by node with merged multiplicities, so two tails are equal as
// multisets iff the vectors compare equal. The head is sorted and unique.
struct Hyperedge {
  std::string id;
  std::vector<TailEntry> tail;
  std::vector<NodeIndex> head;
  Rational weight;

  // k(e): tail size counted with multiplicity.
  int cardinality() const;
  bool head_contains(NodeIndex node) const;
  int multiplicity_of(NodeIndex node) const;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

// Input form of an edge; validated by Hypergraph::build. Repeated tail nodes
// accumulate multiplicity, repeated head nodes collapse.
struct EdgeSpec {
  std::string id;  // empty: assigned "e<j+1>"
  std::vector<std::pair<NodeIndex, int>> tail;
  std::vector<NodeIndex> head;
  Rational weight{1};
};

// Immutable weighted directed hypergraph on nodes 0..n-1. Edge order is the
// construction order and every derived list follows it.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Nodes get labels "1".."n".
  static Hypergraph build(std::size_t node_count, std::vector<EdgeSpec> edges);
  static Hypergraph build(std::vector<std::string> labels,
                          std::vector<EdgeSpec> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(EdgeIndex e) const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeIndex node) const;
  std::optional<NodeIndex> find_node(const std::string& label) const;
  std::optional<EdgeIndex> find_edge(const std::string& id) const;

  // Edges with `node` in their head, in edge order.
  const std::vector<EdgeIndex>& backward_edges(NodeIndex node) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  static Hypergraph from_validated(std::vector<std::string> labels,
                                   std::vector<Hyperedge> edges);

  std::vector<std::string> labels_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<EdgeIndex>> backward_;

  friend Hypergraph with_edges(const Hypergraph&, std::vector<Hyperedge>);
};

// Same nodes, new (already valid) edge list.
Hypergraph with_edges(const Hypergraph& h, std::vector<Hyperedge> edges);

// BS(c), optionally restricted to tail cardinality k.
std::vector<EdgeIndex> backward_star(const Hypergraph& h, NodeIndex node,
                                     std::optional<int> k = std::nullopt);

// FS(c): edges with `node` in their tail.
std::vector<EdgeIndex> forward_star(const Hypergraph& h, NodeIndex node);

// B(c) when a node is given, otherwise B(H).
std::set<int> tail_cardinalities(const Hypergraph& h,
                                 std::optional<NodeIndex> node = std::nullopt);

// Splits every multi-node head into singleton heads of equal weight.
// Idempotent; single-head edges keep their ids.
Hypergraph normalize_heads(const Hypergraph& h);

// Replaces edge e by one edge per part. Parts must be nonempty, pairwise
// disjoint and cover H(e).
Hypergraph split_edge_head(const Hypergraph& h, EdgeIndex e,
                           const std::vector<std::vector<NodeIndex>>& parts);

// Merges two edges with equal tails, equal weights and disjoint heads. The
// merged edge takes the position of the earlier one.
Hypergraph combine_edges(const Hypergraph& h, EdgeIndex first,
                         EdgeIndex second);

// H_k: the edges whose tail cardinality is k, on the same node set.
Hypergraph constituent(const Hypergraph& h, int k);

struct IncidenceDigraph {
  Matrix<Rational> weights;  // n x m, W
  Matrix<int> tails;         // m x n, T
  Matrix<Rational> adjacency;  // (n+m) x (n+m), [[0, W], [T, 0]]
};

IncidenceDigraph incidence_digraph(const Hypergraph& h);

// Weak connectivity of the undirected node/edge incidence graph.
bool is_connected(const Hypergraph& h);

}  // namespace hypersync
