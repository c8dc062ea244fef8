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

#include "hypersync/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "hypersync/error.hpp"

namespace hypersync {

namespace {

void check_node(const Hypergraph& h, NodeIndex node) {
  if (node >= h.node_count()) {
    throw Error(ErrorCode::kUnknownNode,
                "node index " + std::to_string(node) + " out of range");
  }
}

void check_edge(const Hypergraph& h, EdgeIndex e) {
  if (e >= h.edge_count()) {
    throw Error(ErrorCode::kUnknownEdge,
                "edge index " + std::to_string(e) + " out of range");
  }
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

std::string unique_id(const std::string& base,
                      std::unordered_set<std::string>& taken) {
  std::string id = base;
  for (int suffix = 2; taken.count(id); ++suffix) {
    id = base + "_" + std::to_string(suffix);
  }
  taken.insert(id);
  return id;
}

}  // namespace

int Hyperedge::cardinality() const {
  int k = 0;
  for (const auto& t : tail) k += t.multiplicity;
  return k;
}

bool Hyperedge::head_contains(NodeIndex node) const {
  return std::binary_search(head.begin(), head.end(), node);
}

int Hyperedge::multiplicity_of(NodeIndex node) const {
  for (const auto& t : tail) {
    if (t.node == node) return t.multiplicity;
  }
  return 0;
}

Hypergraph Hypergraph::build(std::size_t node_count,
                             std::vector<EdgeSpec> edges) {
  return build(default_labels(node_count), std::move(edges));
}

Hypergraph Hypergraph::build(std::vector<std::string> labels,
                             std::vector<EdgeSpec> specs) {
  {
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
      if (label.empty() || !seen.insert(label).second) {
        throw Error(ErrorCode::kSemanticError,
                    "node labels must be nonempty and unique: '" + label + "'");
      }
    }
  }
  const std::size_t n = labels.size();
  std::vector<Hyperedge> edges;
  edges.reserve(specs.size());
  std::unordered_set<std::string> ids;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    auto& spec = specs[j];
    Hyperedge e;
    e.id = spec.id.empty() ? "e" + std::to_string(j + 1) : spec.id;
    if (!ids.insert(e.id).second) {
      throw Error(ErrorCode::kDuplicateEdgeId, "duplicate edge id " + e.id);
    }
    if (spec.tail.empty()) {
      throw Error(ErrorCode::kEmptyTail, "edge " + e.id + " has an empty tail");
    }
    if (spec.head.empty()) {
      throw Error(ErrorCode::kEmptyHead, "edge " + e.id + " has an empty head");
    }
    std::map<NodeIndex, int> tail;
    for (const auto& [node, mult] : spec.tail) {
      if (node >= n) {
        throw Error(ErrorCode::kUnknownNode,
                    "edge " + e.id + " references unknown tail node");
      }
      if (mult <= 0) {
        throw Error(ErrorCode::kNonPositiveMultiplicity,
                    "edge " + e.id + " has multiplicity " +
                        std::to_string(mult));
      }
      tail[node] += mult;
    }
    for (const auto& [node, mult] : tail) e.tail.push_back({node, mult});
    for (NodeIndex node : spec.head) {
      if (node >= n) {
        throw Error(ErrorCode::kUnknownNode,
                    "edge " + e.id + " references unknown head node");
      }
    }
    e.head = std::move(spec.head);
    std::sort(e.head.begin(), e.head.end());
    e.head.erase(std::unique(e.head.begin(), e.head.end()), e.head.end());
    e.weight = spec.weight;
    edges.push_back(std::move(e));
  }
  return from_validated(std::move(labels), std::move(edges));
}

Hypergraph Hypergraph::from_validated(std::vector<std::string> labels,
                                      std::vector<Hyperedge> edges) {
  Hypergraph h;
  h.labels_ = std::move(labels);
  h.edges_ = std::move(edges);
  h.backward_.assign(h.labels_.size(), {});
  for (EdgeIndex j = 0; j < h.edges_.size(); ++j) {
    for (NodeIndex node : h.edges_[j].head) h.backward_[node].push_back(j);
  }
  return h;
}

const Hyperedge& Hypergraph::edge(EdgeIndex e) const {
  check_edge(*this, e);
  return edges_[e];
}

const std::string& Hypergraph::label(NodeIndex node) const {
  check_node(*this, node);
  return labels_[node];
}

std::optional<NodeIndex> Hypergraph::find_node(const std::string& label) const {
  for (NodeIndex i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<EdgeIndex> Hypergraph::find_edge(const std::string& id) const {
  for (EdgeIndex j = 0; j < edges_.size(); ++j) {
    if (edges_[j].id == id) return j;
  }
  return std::nullopt;
}

const std::vector<EdgeIndex>& Hypergraph::backward_edges(NodeIndex node) const {
  check_node(*this, node);
  return backward_[node];
}

Hypergraph with_edges(const Hypergraph& h, std::vector<Hyperedge> edges) {
  return Hypergraph::from_validated(h.labels_, std::move(edges));
}

std::vector<EdgeIndex> backward_star(const Hypergraph& h, NodeIndex node,
                                     std::optional<int> k) {
  check_node(h, node);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e : h.backward_edges(node)) {
    if (!k || h.edges()[e].cardinality() == *k) out.push_back(e);
  }
  return out;
}

std::vector<EdgeIndex> forward_star(const Hypergraph& h, NodeIndex node) {
  check_node(h, node);
  std::vector<EdgeIndex> out;
  for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
    if (h.edges()[j].multiplicity_of(node) > 0) out.push_back(j);
  }
  return out;
}

std::set<int> tail_cardinalities(const Hypergraph& h,
                                 std::optional<NodeIndex> node) {
  std::set<int> out;
  if (node) {
    for (EdgeIndex e : h.backward_edges(*node)) {
      out.insert(h.edges()[e].cardinality());
    }
  } else {
    for (const auto& e : h.edges()) out.insert(e.cardinality());
  }
  return out;
}

Hypergraph normalize_heads(const Hypergraph& h) {
  bool already = std::all_of(h.edges().begin(), h.edges().end(),
                             [](const Hyperedge& e) { return e.head.size() == 1; });
  if (already) return h;
  std::unordered_set<std::string> taken;
  for (const auto& e : h.edges()) {
    if (e.head.size() == 1) taken.insert(e.id);
  }
  std::vector<Hyperedge> out;
  for (const auto& e : h.edges()) {
    if (e.head.size() == 1) {
      out.push_back(e);
      continue;
    }
    for (NodeIndex v : e.head) {
      Hyperedge part = e;
      part.id = unique_id(e.id + "." + h.labels()[v], taken);
      part.head = {v};
      out.push_back(std::move(part));
    }
  }
  return with_edges(h, std::move(out));
}

Hypergraph split_edge_head(const Hypergraph& h, EdgeIndex e,
                           const std::vector<std::vector<NodeIndex>>& parts) {
  check_edge(h, e);
  const Hyperedge& original = h.edges()[e];
  if (parts.empty()) {
    throw Error(ErrorCode::kInvalidPartition, "no parts given");
  }
  std::vector<NodeIndex> covered;
  std::vector<std::vector<NodeIndex>> sorted_parts;
  for (const auto& part : parts) {
    if (part.empty()) {
      throw Error(ErrorCode::kInvalidPartition, "empty part");
    }
    std::vector<NodeIndex> p = part;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    covered.insert(covered.end(), p.begin(), p.end());
    sorted_parts.push_back(std::move(p));
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
    throw Error(ErrorCode::kInvalidPartition, "parts are not disjoint");
  }
  if (covered != original.head) {
    throw Error(ErrorCode::kInvalidPartition,
                "parts do not cover the head of " + original.id);
  }
  std::unordered_set<std::string> taken;
  for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
    if (j != e) taken.insert(h.edges()[j].id);
  }
  std::vector<Hyperedge> out;
  for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
    if (j != e) {
      out.push_back(h.edges()[j]);
      continue;
    }
    if (sorted_parts.size() == 1) {
      out.push_back(original);
      continue;
    }
    for (std::size_t p = 0; p < sorted_parts.size(); ++p) {
      Hyperedge piece = original;
      piece.id = unique_id(original.id + "." + std::to_string(p + 1), taken);
      piece.head = sorted_parts[p];
      out.push_back(std::move(piece));
    }
  }
  return with_edges(h, std::move(out));
}

Hypergraph combine_edges(const Hypergraph& h, EdgeIndex first,
                         EdgeIndex second) {
  check_edge(h, first);
  check_edge(h, second);
  if (first == second) {
    throw Error(ErrorCode::kInvalidPartition, "cannot combine an edge with itself");
  }
  if (first > second) std::swap(first, second);
  const Hyperedge& a = h.edges()[first];
  const Hyperedge& b = h.edges()[second];
  if (a.tail != b.tail) {
    throw Error(ErrorCode::kTailMismatch, a.id + " and " + b.id + " differ in tail");
  }
  std::vector<NodeIndex> overlap;
  std::set_intersection(a.head.begin(), a.head.end(), b.head.begin(),
                        b.head.end(), std::back_inserter(overlap));
  if (!overlap.empty()) {
    throw Error(ErrorCode::kHeadOverlap, a.id + " and " + b.id + " share a head node");
  }
  if (a.weight != b.weight) {
    throw Error(ErrorCode::kWeightMismatch,
                a.id + " and " + b.id + " differ in weight");
  }
  Hyperedge merged = a;
  merged.id = a.id + "+" + b.id;
  merged.head.insert(merged.head.end(), b.head.begin(), b.head.end());
  std::sort(merged.head.begin(), merged.head.end());
  std::vector<Hyperedge> out;
  for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
    if (j == first) {
      out.push_back(merged);
    } else if (j != second) {
      out.push_back(h.edges()[j]);
    }
  }
  return with_edges(h, std::move(out));
}

Hypergraph constituent(const Hypergraph& h, int k) {
  std::vector<Hyperedge> out;
  for (const auto& e : h.edges()) {
    if (e.cardinality() == k) out.push_back(e);
  }
  return with_edges(h, std::move(out));
}

IncidenceDigraph incidence_digraph(const Hypergraph& h) {
  const std::size_t n = h.node_count();
  const std::size_t m = h.edge_count();
  IncidenceDigraph d{Matrix<Rational>(n, m, Rational(0)), Matrix<int>(m, n, 0),
                     Matrix<Rational>(n + m, n + m, Rational(0))};
  for (EdgeIndex j = 0; j < m; ++j) {
    const Hyperedge& e = h.edges()[j];
    for (NodeIndex i : e.head) {
      d.weights(i, j) = e.weight;
      d.adjacency(i, n + j) = e.weight;
    }
    for (const auto& t : e.tail) {
      d.tails(j, t.node) = t.multiplicity;
      d.adjacency(n + j, t.node) = t.multiplicity;
    }
  }
  return d;
}

bool is_connected(const Hypergraph& h) {
  const std::size_t n = h.node_count();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : h.edges()) {
    std::size_t root = find(e.head.front());
    for (NodeIndex v : e.head) parent[find(v)] = root;
    for (const auto& t : e.tail) parent[find(t.node)] = root;
  }
  std::size_t root = find(0);
  for (NodeIndex i = 1; i < n; ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

}  // namespace hypersync
