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

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hypersync/hypergraph.hpp"
#include "hypersync/matrix.hpp"
#include "hypersync/partition.hpp"
#include "hypersync/rational.hpp"

namespace hypersync {

// Class multiplicities of a tail, indexed by canonical class id.
using Pattern = std::vector<int>;

struct PatternKey {
  int k;
  Pattern pattern;

  friend bool operator==(const PatternKey&, const PatternKey&) = default;
  friend auto operator<=>(const PatternKey&, const PatternKey&) = default;
};

// (k, pattern) -> summed weight over BS_k(c). Entries whose weights cancel
// to zero are kept.
using PatternWeightTable = std::map<PatternKey, Rational>;

// Mismatch between two cells of one class.
struct BalanceWitness {
  NodeIndex cell;
  NodeIndex other;
  int k;
  Pattern pattern;
  Rational cell_weight;
  Rational other_weight;
};

struct BalanceResult {
  bool balanced = true;
  std::optional<BalanceWitness> witness;

  explicit operator bool() const { return balanced; }
};

Partition input_equivalence(const Hypergraph& h);

Pattern pattern_of(const Hypergraph& h, const Partition& part, EdgeIndex e);

PatternWeightTable pattern_weight_table(const Hypergraph& h,
                                        const Partition& part, NodeIndex c);

// Two tables agree when every key carries the same weight, a missing key
// counting as zero.
bool same_pattern_weights(const PatternWeightTable& a,
                          const PatternWeightTable& b);

BalanceResult is_balanced(const Hypergraph& h, const Partition& part);

// Fixed point of signature refinement started from input equivalence.
Partition coarsest_balanced(const Hypergraph& h);

inline constexpr std::size_t kDefaultEnumerationCap = 12;
inline constexpr std::size_t kDefaultIncidenceCap = 14;

// All balanced partitions, ascending. Throws TooLarge when n > cap.
std::vector<Partition> enumerate_balanced(
    const Hypergraph& h, std::size_t cap = kDefaultEnumerationCap);

// Quotient by a balanced partition. Node labels are the class
// representatives' labels; one singleton-head edge per (class, k, pattern)
// with nonzero weight, ordered by class, then k, then pattern.
Hypergraph quotient(const Hypergraph& h, const Partition& part);

// Partition of nodes followed by edges: nodes keep their classes, edges are
// grouped by pattern.
Partition lift_partition(const Hypergraph& h, const Partition& part);

Partition project_partition(const Hypergraph& h, const Partition& lifted);

// Equitable condition: rows in one class have equal class-wise sums.
bool matrix_synchrony_check(const Matrix<Rational>& m, const Partition& part);

// All partitions passing matrix_synchrony_check, ascending. When `types` is
// nonempty, elements with different types never share a class.
std::vector<Partition> enumerate_equitable(const Matrix<Rational>& m,
                                           const std::vector<int>& types,
                                           std::size_t cap);

// Projections of the equitable partitions of the incidence digraph that keep
// nodes and edges apart. Throws TooLarge when n + m > cap.
std::vector<Partition> balanced_via_incidence(
    const Hypergraph& h, std::size_t cap = kDefaultIncidenceCap);

// Every edge either misses `subset` or contains all of it, in the head, and
// in the tail with one common multiplicity.
bool check_cluster_symmetry(const Hypergraph& h,
                            const std::vector<NodeIndex>& subset);

}  // namespace hypersync
