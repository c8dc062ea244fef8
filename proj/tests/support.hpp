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

// Shared helpers for the test binaries: fixture loading, a random hypergraph
// generator and oracles written directly from the definitions, without
// calling the library routines they are used to check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hypersync/document.hpp"
#include "hypersync/dynamics.hpp"
#include "hypersync/hypergraph.hpp"
#include "hypersync/matrix.hpp"
#include "hypersync/partition.hpp"
#include "hypersync/rational.hpp"

namespace hstest {

using namespace hypersync;

inline std::string fixture_path(const std::string& name) {
  return std::string(HYPERSYNC_FIXTURE_DIR) + "/" + name + ".json";
}

inline Document fixture(const std::string& name) {
  return load_document(fixture_path(name));
}

inline Rational q(const char* text) { return parse_rational(text); }

// mpq_class(a, b) does not reduce; this does.
inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline Matrix<Rational> rational_matrix(
    const std::vector<std::vector<const char*>>& rows) {
  Matrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = q(rows[i][j]);
  }
  return m;
}

inline Matrix<double> to_double_matrix(const Matrix<Rational>& m) {
  return map_matrix<double>(m, [](const Rational& v) { return v.get_d(); });
}

// Partition given by 1-based label groups, e.g. {{1,5,6},{2,4},{3}}.
inline Partition groups(std::size_t n,
                        const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::vector<std::size_t>> zero;
  for (const auto& c : classes) {
    std::vector<std::size_t> z;
    for (std::size_t v : c) z.push_back(v - 1);
    zero.push_back(z);
  }
  return Partition::from_classes(n, zero);
}

// Every set partition of {0..n-1} in restricted-growth order.
inline std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      out.emplace_back(a);
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      a[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) {
    out.emplace_back(a);
  } else {
    a[0] = 0;
    rec(rec, 1, 1);
  }
  return out;
}

// Class multiplicity vector of a tail, written out densely.
inline std::vector<int> oracle_pattern(const Hyperedge& e, const Partition& p) {
  std::vector<int> m(p.class_count(), 0);
  for (const auto& t : e.tail) m[p.class_of(t.node)] += t.multiplicity;
  return m;
}

// (k, pattern) -> weight into cell c, zero sums removed.
inline std::map<std::pair<int, std::vector<int>>, Rational> oracle_table(
    const Hypergraph& h, const Partition& p, NodeIndex c) {
  std::map<std::pair<int, std::vector<int>>, Rational> t;
  for (const auto& e : h.edges()) {
    if (std::find(e.head.begin(), e.head.end(), c) == e.head.end()) continue;
    int k = 0;
    for (const auto& x : e.tail) k += x.multiplicity;
    t[{k, oracle_pattern(e, p)}] += e.weight;
  }
  for (auto it = t.begin(); it != t.end();) {
    it = it->second == 0 ? t.erase(it) : std::next(it);
  }
  return t;
}

inline bool oracle_balanced(const Hypergraph& h, const Partition& p) {
  for (NodeIndex a = 0; a < h.node_count(); ++a) {
    for (NodeIndex b = a + 1; b < h.node_count(); ++b) {
      if (p.same_class(a, b) && oracle_table(h, p, a) != oracle_table(h, p, b))
        return false;
    }
  }
  return true;
}

// [[0, W], [T, 0]] built from the edge list.
inline Matrix<Rational> oracle_adjacency(const Hypergraph& h) {
  const std::size_t n = h.node_count();
  const std::size_t m = h.edge_count();
  Matrix<Rational> a(n + m, n + m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    const auto& e = h.edges()[j];
    for (NodeIndex v : e.head) a(v, n + j) = e.weight;
    for (const auto& t : e.tail) a(n + j, t.node) += t.multiplicity;
  }
  return a;
}

// Nodes keep their classes; edges are grouped by pattern.
inline Partition oracle_lift(const Hypergraph& h, const Partition& p) {
  const std::size_t n = h.node_count();
  std::vector<std::size_t> ids(n + h.edge_count());
  std::map<std::vector<int>, std::size_t> seen;
  for (NodeIndex v = 0; v < n; ++v) ids[v] = p.class_of(v);
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    auto pat = oracle_pattern(h.edges()[j], p);
    auto it = seen.emplace(pat, seen.size()).first;
    ids[n + j] = n + it->second;
  }
  return Partition(ids);
}

// Rows in one class carry equal class-wise sums (zero sums dropped).
inline bool oracle_equitable(const Matrix<Rational>& a, const Partition& p) {
  auto sums = [&](std::size_t row) {
    std::map<std::size_t, Rational> s;
    for (std::size_t c = 0; c < a.cols(); ++c) s[p.class_of(c)] += a(row, c);
    for (auto it = s.begin(); it != s.end();) {
      it = it->second == 0 ? s.erase(it) : std::next(it);
    }
    return s;
  };
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      if (p.same_class(i, j) && sums(i) != sums(j)) return false;
    }
  }
  return true;
}

// Scalar admissible field F_i = f(x_i) + sum_{e into i} w_e Q(x_i; x_T(e)).
inline std::vector<Rational> oracle_field(const Hypergraph& h,
                                          CouplingFamily family,
                                          InternalDynamics f,
                                          const std::vector<Rational>& x) {
  std::vector<Rational> out(h.node_count());
  for (NodeIndex i = 0; i < h.node_count(); ++i) {
    switch (f) {
      case InternalDynamics::kZero: out[i] = 0; break;
      case InternalDynamics::kDecay: out[i] = -x[i]; break;
      case InternalDynamics::kCubic: out[i] = x[i] - x[i] * x[i] * x[i]; break;
    }
  }
  for (const auto& e : h.edges()) {
    for (NodeIndex i : e.head) {
      Rational term = family == CouplingFamily::kLinear ? Rational(0)
                                                        : Rational(1);
      if (family == CouplingFamily::kSelfProduct) term = x[i];
      for (const auto& t : e.tail) {
        for (int r = 0; r < t.multiplicity; ++r) {
          if (family == CouplingFamily::kLinear) {
            term += x[t.node];
          } else {
            term *= x[t.node];
          }
        }
      }
      out[i] += e.weight * term;
    }
  }
  return out;
}

// Distinct nonzero rationals k/97 with k in [-97, 97].
inline std::vector<Rational> oracle_generic(std::mt19937_64& rng,
                                            std::size_t count) {
  std::vector<int> pool;
  for (int k = -97; k <= 97; ++k) {
    if (k != 0) pool.push_back(k);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(pool[i], 97);
  for (auto& v : out) v.canonicalize();
  return out;
}

// Edge list as (tail labels with repetition, head labels, weight) after
// splitting every head into singletons, sorted.
using CanonicalEdge =
    std::tuple<std::vector<std::string>, std::string, std::string>;

inline std::vector<CanonicalEdge> canonical_edges(const Hypergraph& h) {
  std::vector<CanonicalEdge> out;
  for (const auto& e : h.edges()) {
    std::vector<std::string> tail;
    for (const auto& t : e.tail) {
      for (int r = 0; r < t.multiplicity; ++r) tail.push_back(h.label(t.node));
    }
    std::sort(tail.begin(), tail.end());
    for (NodeIndex v : e.head) {
      out.emplace_back(tail, h.label(v), to_string(e.weight));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random instance: n in 2..6, at most six edges, tails of size 1..3 and
// weights drawn from {1, 2, 3/2, -1}. With plant set, edges are laid out
// class by class so that `planted` is balanced by construction.
struct RandomInstance {
  Hypergraph graph;
  std::optional<Partition> planted;
};

inline Rational random_weight(std::mt19937_64& rng) {
  static const char* kWeights[] = {"1", "2", "3/2", "-1"};
  return q(kWeights[std::uniform_int_distribution<int>(0, 3)(rng)]);
}

inline RandomInstance random_instance(std::mt19937_64& rng, bool plant) {
  auto uni = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const std::size_t n = static_cast<std::size_t>(uni(2, 6));
  std::vector<EdgeSpec> specs;
  if (!plant) {
    const int m = uni(1, 6);
    for (int j = 0; j < m; ++j) {
      EdgeSpec s;
      const int k = uni(1, 3);
      for (int r = 0; r < k; ++r) s.tail.emplace_back(uni(0, int(n) - 1), 1);
      const int heads = uni(1, 4) == 4 ? 2 : 1;
      for (int r = 0; r < heads; ++r) s.head.push_back(uni(0, int(n) - 1));
      s.weight = random_weight(rng);
      specs.push_back(std::move(s));
    }
    return {Hypergraph::build(n, std::move(specs)), std::nullopt};
  }
  const int p = uni(1, int(n));
  std::vector<std::size_t> ids(n);
  for (auto& id : ids) id = static_cast<std::size_t>(uni(0, p - 1));
  Partition part(ids);
  const auto classes = part.classes();
  const std::size_t budget = 6;
  for (int attempt = 0; attempt < 8 && specs.size() < budget; ++attempt) {
    const auto& target = classes[uni(0, int(classes.size()) - 1)];
    const int k = uni(1, 3);
    std::vector<std::size_t> pattern;
    for (int r = 0; r < k; ++r) pattern.push_back(uni(0, int(classes.size()) - 1));
    const Rational w = random_weight(rng);
    auto member = [&](std::size_t cls) {
      const auto& c = classes[cls];
      return c[uni(0, int(c.size()) - 1)];
    };
    const bool spread = target.size() > 1 && uni(0, 1) == 1 &&
                        specs.size() + target.size() <= budget;
    if (spread) {
      for (std::size_t cell : target) {
        EdgeSpec s;
        for (std::size_t cls : pattern) s.tail.emplace_back(member(cls), 1);
        s.head = {cell};
        s.weight = w;
        specs.push_back(std::move(s));
      }
    } else {
      EdgeSpec s;
      for (std::size_t cls : pattern) s.tail.emplace_back(member(cls), 1);
      s.head = target;
      s.weight = w;
      specs.push_back(std::move(s));
    }
  }
  return {Hypergraph::build(n, std::move(specs)), part};
}

inline std::vector<RandomInstance> random_instances(std::size_t count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_instance(rng, i % 2 == 0));
  }
  return out;
}

}  // namespace hstest
