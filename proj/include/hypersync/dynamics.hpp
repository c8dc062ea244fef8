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
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hypersync/hypergraph.hpp"
#include "hypersync/matrix.hpp"
#include "hypersync/partition.hpp"
#include "hypersync/rational.hpp"

namespace hypersync {

// f: R^d -> R^d, writes into out.
using InternalFn =
    std::function<void(std::span<const double> x, std::span<double> out)>;

// Q_k(x_0; x_1..x_k): R^d x (R^d)^k -> R^d. `tail` lists the k arguments,
// repeated nodes appearing once per unit of multiplicity.
using CouplingFn = std::function<void(
    std::span<const double> self,
    const std::vector<std::span<const double>>& tail, std::span<double> out)>;

enum class CouplingFamily {
  kProduct,      // x_1 x_2 ... x_k
  kSelfProduct,  // x_0 x_1 ... x_k
  kLinear,       // x_1 + ... + x_k
};

enum class InternalDynamics {
  kZero,   // 0
  kDecay,  // -x
  kCubic,  // x - x^3
};

// Polynomial form of a builtin system, evaluated componentwise over the
// rationals. f_coefficients[i] multiplies x^i.
struct ExactCoupling {
  CouplingFamily family;
  std::vector<Rational> f_coefficients;
};

class CouplingSystem {
 public:
  // Every Q is probed at random points under random permutations of its
  // trailing arguments; asymmetry throws AsymmetricCoupling. `any_arity`,
  // when set, serves every k without an explicit entry.
  CouplingSystem(std::size_t dim, InternalFn f,
                 std::map<int, CouplingFn> couplings,
                 CouplingFn any_arity = {}, std::uint64_t probe_seed = 7);

  static CouplingSystem builtin(CouplingFamily family, InternalDynamics f,
                                std::size_t dim = 1);

  std::size_t dim() const { return dim_; }
  bool has_coupling(int k) const;
  const CouplingFn& coupling(int k) const;  // throws MissingCoupling
  const InternalFn& internal() const { return f_; }
  const std::optional<ExactCoupling>& exact() const { return exact_; }
  // Couplings that vanished at every probe point.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::size_t dim_;
  InternalFn f_;
  std::map<int, CouplingFn> couplings_;
  CouplingFn any_arity_;
  std::optional<ExactCoupling> exact_;
  std::vector<std::string> warnings_;
};

std::string_view family_name(CouplingFamily family);
std::string_view internal_name(InternalDynamics f);
std::optional<CouplingFamily> parse_family(std::string_view name);
std::optional<InternalDynamics> parse_internal(std::string_view name);

// State layout: node i occupies entries [i*d, (i+1)*d).
std::vector<double> eval_field(const Hypergraph& h, const CouplingSystem& sys,
                               const std::vector<double>& x);
// Needs an exact form; otherwise throws UsageError.
std::vector<Rational> eval_field_exact(const Hypergraph& h,
                                       const CouplingSystem& sys,
                                       const std::vector<Rational>& x);

using VectorField =
    std::function<std::vector<double>(const std::vector<double>&)>;

struct Trajectory {
  double dt = 0;
  std::vector<std::vector<double>> states;  // steps + 1 entries
};

// Classic fixed-step RK4. NonFiniteState reports the failing step.
Trajectory rk4(const VectorField& field, std::vector<double> x0, double dt,
               std::size_t steps);
Trajectory integrate(const Hypergraph& h, const CouplingSystem& sys,
                     std::vector<double> x0, double dt, std::size_t steps);

// Distinct nonzero values k/97, shuffled.
std::vector<Rational> generic_rationals(std::mt19937_64& rng,
                                        std::size_t count);

// Constant on every class, distinct across classes and components.
std::vector<Rational> generic_point_on(const Partition& part, std::size_t dim,
                                       std::mt19937_64& rng);

struct InvarianceWitness {
  NodeIndex cell;
  NodeIndex other;
  std::size_t component;
  std::string cell_value;
  std::string other_value;
  std::vector<std::string> point;
};

struct InvarianceReport {
  bool pass = true;
  std::string mode;
  std::size_t trials = 0;
  double max_spread = 0;  // float and trajectory modes
  std::optional<InvarianceWitness> witness;
};

// Exact tangency of F to the polydiagonal at generic rational points.
InvarianceReport flow_invariance_exact(const Hypergraph& h,
                                       const CouplingSystem& sys,
                                       const Partition& part,
                                       std::size_t trials, std::uint64_t seed);
// Largest within-class spread of F at random points, pass iff <= tol.
InvarianceReport flow_invariance_float(const Hypergraph& h,
                                       const CouplingSystem& sys,
                                       const Partition& part,
                                       std::size_t trials, std::uint64_t seed,
                                       double tol = 1e-9);
// Integrates from a point of the polydiagonal and tracks the Euclidean
// distance to it; pass iff the maximum stays <= tol.
InvarianceReport flow_invariance_trajectory(const Hypergraph& h,
                                            const CouplingSystem& sys,
                                            const Partition& part,
                                            const std::vector<double>& x0,
                                            double dt, std::size_t steps,
                                            double tol = 1e-8);

double distance_to_polydiagonal(const Partition& part, std::size_t dim,
                                const std::vector<double>& x);

struct RestrictionReport {
  bool pass = true;
  std::size_t trials = 0;
  Hypergraph quotient;
  std::optional<InvarianceWitness> witness;  // cell = class index
};

// Compares F on lifted quotient points with the quotient field. Throws
// NotBalanced.
RestrictionReport restriction_equals_quotient(const Hypergraph& h,
                                              const Partition& part,
                                              const CouplingSystem& sys,
                                              std::size_t trials,
                                              std::uint64_t seed);

// Central differences, column j = (F(x + h e_j) - F(x - h e_j)) / 2h.
Matrix<double> jacobian_fd(const VectorField& field,
                           const std::vector<double>& x, double h = 1e-5);

}  // namespace hypersync
