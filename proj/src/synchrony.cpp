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

#include "hypersync/synchrony.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "hypersync/error.hpp"

namespace hypersync {

namespace {

using SparsePattern = std::vector<std::pair<std::size_t, int>>;
using SparseKey = std::pair<int, SparsePattern>;
using SparseTable = std::map<SparseKey, Rational>;

void check_ground(const Hypergraph& h, const Partition& part) {
  if (part.size() != h.node_count()) {
    throw Error(ErrorCode::kInvalidPartition,
                "partition covers " + std::to_string(part.size()) +
                    " elements, hypergraph has " +
                    std::to_string(h.node_count()) + " nodes");
  }
}

// Pattern of e read from a possibly partial class assignment; only the
// tail nodes of e must be assigned.
SparsePattern sparse_pattern(const Hyperedge& e,
                             const std::vector<std::size_t>& ids) {
  std::map<std::size_t, int> counts;
  for (const auto& t : e.tail) counts[ids[t.node]] += t.multiplicity;
  return {counts.begin(), counts.end()};
}

SparseTable sparse_table(const Hypergraph& h,
                         const std::vector<std::size_t>& ids, NodeIndex c) {
  SparseTable table;
  for (EdgeIndex j : h.backward_edges(c)) {
    const Hyperedge& e = h.edges()[j];
    table[{e.cardinality(), sparse_pattern(e, ids)}] += e.weight;
  }
  return table;
}

template <typename Key>
bool same_nonzero(const std::map<Key, Rational>& a,
                  const std::map<Key, Rational>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (true) {
    while (ia != a.end() && ia->second == 0) ++ia;
    while (ib != b.end() && ib->second == 0) ++ib;
    if (ia == a.end() || ib == b.end()) return ia == a.end() && ib == b.end();
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

// Depth-first restricted-growth search. Element c is compared with its class
// representative r once every element up to max(c, reach[c], reach[r]) has a
// class.
template <typename Compatible, typename PairOk>
std::vector<Partition> grow(std::size_t n, const std::vector<long>& reach,
                            Compatible compatible, PairOk pair_ok) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back(std::vector<std::size_t>{});
    return out;
  }
  std::vector<std::size_t> ids(n, 0);
  std::vector<std::size_t> reps;
  std::function<void(std::size_t)> step = [&](std::size_t t) {
    if (t == n) {
      out.emplace_back(ids);
      return;
    }
    const std::size_t options = reps.size() + 1;
    for (std::size_t cls = 0; cls < options; ++cls) {
      const bool fresh = cls == reps.size();
      if (!fresh && !compatible(t, reps[cls])) continue;
      ids[t] = cls;
      if (fresh) reps.push_back(t);
      bool ok = true;
      for (std::size_t c = 0; c <= t && ok; ++c) {
        const std::size_t r = reps[ids[c]];
        if (r == c) continue;
        long ready = std::max({static_cast<long>(c), reach[c], reach[r]});
        if (ready == static_cast<long>(t)) ok = pair_ok(c, r, ids);
      }
      if (ok) step(t + 1);
      if (fresh) reps.pop_back();
    }
  };
  step(0);
  return out;
}

[[noreturn]] void too_large(std::size_t size, std::size_t cap) {
  throw Error(ErrorCode::kTooLarge, "ground set of " + std::to_string(size) +
                                        " elements exceeds cap " +
                                        std::to_string(cap));
}

}  // namespace

Partition input_equivalence(const Hypergraph& h) {
  std::map<std::vector<std::pair<int, Rational>>, std::size_t> groups;
  std::vector<std::size_t> ids(h.node_count());
  for (NodeIndex c = 0; c < h.node_count(); ++c) {
    std::map<int, Rational> sums;
    for (EdgeIndex j : h.backward_edges(c)) {
      const Hyperedge& e = h.edges()[j];
      sums[e.cardinality()] += e.weight;
    }
    std::vector<std::pair<int, Rational>> signature;
    for (const auto& [k, w] : sums) {
      if (w != 0) signature.emplace_back(k, w);
    }
    ids[c] = groups.emplace(std::move(signature), groups.size()).first->second;
  }
  return Partition(ids);
}

Pattern pattern_of(const Hypergraph& h, const Partition& part, EdgeIndex e) {
  check_ground(h, part);
  if (e >= h.edge_count()) {
    throw Error(ErrorCode::kUnknownEdge,
                "edge index " + std::to_string(e) + " out of range");
  }
  Pattern pattern(part.class_count(), 0);
  for (const auto& t : h.edges()[e].tail) {
    pattern[part.class_of(t.node)] += t.multiplicity;
  }
  return pattern;
}

PatternWeightTable pattern_weight_table(const Hypergraph& h,
                                        const Partition& part, NodeIndex c) {
  check_ground(h, part);
  PatternWeightTable table;
  for (EdgeIndex j : h.backward_edges(c)) {
    const Hyperedge& e = h.edges()[j];
    table[{e.cardinality(), pattern_of(h, part, j)}] += e.weight;
  }
  return table;
}

bool same_pattern_weights(const PatternWeightTable& a,
                          const PatternWeightTable& b) {
  return same_nonzero(a, b);
}

BalanceResult is_balanced(const Hypergraph& h, const Partition& part) {
  check_ground(h, part);
  std::vector<PatternWeightTable> tables;
  tables.reserve(h.node_count());
  for (NodeIndex c = 0; c < h.node_count(); ++c) {
    tables.push_back(pattern_weight_table(h, part, c));
  }
  const auto reps = part.representatives();
  for (NodeIndex c = 0; c < h.node_count(); ++c) {
    const NodeIndex r = reps[part.class_of(c)];
    if (r == c || same_pattern_weights(tables[r], tables[c])) continue;
    std::set<PatternKey> keys;
    for (const auto& [key, w] : tables[r]) keys.insert(key);
    for (const auto& [key, w] : tables[c]) keys.insert(key);
    for (const auto& key : keys) {
      auto find = [&key](const PatternWeightTable& t) {
        auto it = t.find(key);
        return it == t.end() ? Rational(0) : it->second;
      };
      Rational wr = find(tables[r]);
      Rational wc = find(tables[c]);
      if (wr != wc) {
        return {false, BalanceWitness{r, c, key.k, key.pattern, wr, wc}};
      }
    }
  }
  return {};
}

Partition coarsest_balanced(const Hypergraph& h) {
  Partition current = input_equivalence(h);
  while (true) {
    using Signature = std::vector<std::pair<PatternKey, Rational>>;
    std::map<std::pair<std::size_t, Signature>, std::size_t> groups;
    std::vector<std::size_t> ids(h.node_count());
    for (NodeIndex c = 0; c < h.node_count(); ++c) {
      Signature signature;
      for (auto& [key, w] : pattern_weight_table(h, current, c)) {
        if (w != 0) signature.emplace_back(key, w);
      }
      auto key = std::make_pair(current.class_of(c), std::move(signature));
      ids[c] = groups.emplace(std::move(key), groups.size()).first->second;
    }
    Partition next(ids);
    if (next.class_count() == current.class_count()) break;
    current = std::move(next);
  }
  if (!is_balanced(h, current)) {
    throw Error(ErrorCode::kNotBalanced,
                "refinement fixed point is not balanced");
  }
  return current;
}

std::vector<Partition> enumerate_balanced(const Hypergraph& h,
                                          std::size_t cap) {
  const std::size_t n = h.node_count();
  if (n > cap) too_large(n, cap);
  const Partition inputs = input_equivalence(h);
  std::vector<long> reach(n, -1);
  for (NodeIndex c = 0; c < n; ++c) {
    for (EdgeIndex j : h.backward_edges(c)) {
      for (const auto& t : h.edges()[j].tail) {
        reach[c] = std::max(reach[c], static_cast<long>(t.node));
      }
    }
  }
  return grow(
      n, reach,
      [&](std::size_t t, std::size_t rep) {
        return inputs.same_class(t, rep);
      },
      [&](std::size_t c, std::size_t r, const std::vector<std::size_t>& ids) {
        return same_nonzero(sparse_table(h, ids, c), sparse_table(h, ids, r));
      });
}

Hypergraph quotient(const Hypergraph& h, const Partition& part) {
  check_ground(h, part);
  const Hypergraph normalized = normalize_heads(h);
  BalanceResult balance = is_balanced(normalized, part);
  if (!balance) {
    const auto& w = *balance.witness;
    throw Error(ErrorCode::kNotBalanced,
                "partition is not balanced: cells " + h.label(w.cell) +
                    " and " + h.label(w.other) + " differ");
  }
  std::vector<std::string> labels;
  std::vector<EdgeSpec> edges;
  const auto reps = part.representatives();
  for (std::size_t cls = 0; cls < reps.size(); ++cls) {
    labels.push_back(h.label(reps[cls]));
    for (const auto& [key, weight] :
         pattern_weight_table(normalized, part, reps[cls])) {
      if (weight == 0) continue;
      EdgeSpec spec;
      spec.id = "q" + std::to_string(edges.size() + 1);
      for (std::size_t i = 0; i < key.pattern.size(); ++i) {
        if (key.pattern[i] > 0) spec.tail.emplace_back(i, key.pattern[i]);
      }
      spec.head = {cls};
      spec.weight = weight;
      edges.push_back(std::move(spec));
    }
  }
  return Hypergraph::build(std::move(labels), std::move(edges));
}

Partition lift_partition(const Hypergraph& h, const Partition& part) {
  check_ground(h, part);
  const std::size_t n = h.node_count();
  std::vector<std::size_t> ids(n + h.edge_count());
  for (NodeIndex c = 0; c < n; ++c) ids[c] = part.class_of(c);
  std::map<Pattern, std::size_t> patterns;
  for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
    auto it = patterns.emplace(pattern_of(h, part, j), patterns.size()).first;
    ids[n + j] = part.class_count() + it->second;
  }
  return Partition(ids);
}

Partition project_partition(const Hypergraph& h, const Partition& lifted) {
  if (lifted.size() != h.node_count() + h.edge_count()) {
    throw Error(ErrorCode::kInvalidPartition,
                "lifted partition must cover nodes and edges");
  }
  return lifted.restrict_prefix(h.node_count());
}

bool matrix_synchrony_check(const Matrix<Rational>& m, const Partition& part) {
  if (!m.square() || m.rows() != part.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", partition covers " +
                    std::to_string(part.size()));
  }
  const std::size_t p = part.class_count();
  auto class_sums = [&](std::size_t row) {
    std::vector<Rational> sums(p, Rational(0));
    for (std::size_t col = 0; col < m.cols(); ++col) {
      sums[part.class_of(col)] += m(row, col);
    }
    return sums;
  };
  const auto reps = part.representatives();
  std::vector<std::vector<Rational>> rep_sums;
  for (std::size_t r : reps) rep_sums.push_back(class_sums(r));
  for (std::size_t i = 0; i < part.size(); ++i) {
    const std::size_t cls = part.class_of(i);
    if (reps[cls] == i) continue;
    if (class_sums(i) != rep_sums[cls]) return false;
  }
  return true;
}

std::vector<Partition> enumerate_equitable(const Matrix<Rational>& m,
                                           const std::vector<int>& types,
                                           std::size_t cap) {
  if (!m.square()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
  }
  const std::size_t n = m.rows();
  if (!types.empty() && types.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "type vector has wrong length");
  }
  if (n > cap) too_large(n, cap);
  std::vector<std::vector<std::size_t>> support(n);
  std::vector<long> reach(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0) {
        support[i].push_back(j);
        reach[i] = static_cast<long>(j);
      }
    }
  }
  auto sums = [&](std::size_t row, const std::vector<std::size_t>& ids) {
    std::map<std::size_t, Rational> out;
    for (std::size_t j : support[row]) out[ids[j]] += m(row, j);
    return out;
  };
  return grow(
      n, reach,
      [&](std::size_t t, std::size_t rep) {
        return types.empty() || types[t] == types[rep];
      },
      [&](std::size_t c, std::size_t r, const std::vector<std::size_t>& ids) {
        return same_nonzero(sums(c, ids), sums(r, ids));
      });
}

std::vector<Partition> balanced_via_incidence(const Hypergraph& h,
                                              std::size_t cap) {
  const std::size_t n = h.node_count();
  const std::size_t total = n + h.edge_count();
  if (total > cap) too_large(total, cap);
  std::vector<int> types(total, 1);
  std::fill(types.begin(), types.begin() + n, 0);
  const auto digraph = incidence_digraph(h);
  std::set<Partition> projected;
  for (const auto& p : enumerate_equitable(digraph.adjacency, types, cap)) {
    projected.insert(project_partition(h, p));
  }
  return {projected.begin(), projected.end()};
}

bool check_cluster_symmetry(const Hypergraph& h,
                            const std::vector<NodeIndex>& subset) {
  for (NodeIndex v : subset) {
    if (v >= h.node_count()) {
      throw Error(ErrorCode::kUnknownNode,
                  "node index " + std::to_string(v) + " out of range");
    }
  }
  std::vector<NodeIndex> a = subset;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.size() <= 1) return true;
  for (const auto& e : h.edges()) {
    std::size_t in_head = 0;
    for (NodeIndex v : a) in_head += e.head_contains(v);
    if (in_head != 0 && in_head != a.size()) return false;
    const int first = e.multiplicity_of(a.front());
    for (NodeIndex v : a) {
      if (e.multiplicity_of(v) != first) return false;
    }
  }
  return true;
}

}  // namespace hypersync
