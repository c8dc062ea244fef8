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
#include <optional>
#include <string>
#include <vector>

#include "hypersync/eigen.hpp"
#include "hypersync/hypergraph.hpp"
#include "hypersync/matrix.hpp"
#include "hypersync/partition.hpp"
#include "hypersync/rational.hpp"

namespace hypersync {

// dp_i/dt = ((K p)_i - p^T H p) p_i
struct ReplicatorSystem {
  Matrix<Rational> K;
  Matrix<Rational> H;

  std::size_t size() const { return K.rows(); }
  // Throws DimensionMismatch unless K and H are square of one size.
  void validate() const;
};

std::vector<double> replicator_field(const ReplicatorSystem& sys,
                                     const std::vector<double>& p);
std::vector<Rational> replicator_field_exact(const ReplicatorSystem& sys,
                                             const std::vector<Rational>& p);

// Row i = p_i (K_i - p^T (H + H^T)). Requires an equilibrium (sup norm of
// the field <= tol, or exactly zero in the rational overload) with every
// p_i nonzero.
Matrix<double> replicator_jacobian(const ReplicatorSystem& sys,
                                   const std::vector<double>& p,
                                   double tol = 1e-10);
Matrix<Rational> replicator_jacobian_exact(const ReplicatorSystem& sys,
                                           const std::vector<Rational>& p);

// d/dt sum p_i = p^T K p - (p^T H p) sum p_i
double simplex_drift(const ReplicatorSystem& sys, const std::vector<double>& p);
Rational simplex_drift_exact(const ReplicatorSystem& sys,
                             const std::vector<Rational>& p);

// Sum within 1e-12 of one and every entry in [0, 1].
bool on_simplex(const std::vector<double>& p, double tol = 1e-12);

struct SpectrumEntry {
  Complex value;
  SpectralClass kind;
  double residual;  // eigenvector residual
};

struct StabilityReport {
  Matrix<double> jacobian;
  std::optional<Matrix<Rational>> exact_jacobian;
  std::optional<double> fd_deviation;  // max |J - J_fd|
  std::vector<SpectrumEntry> spectrum;
  bool diagonal_invariant = false;  // J (1,...,1) is parallel to (1,...,1)
  std::optional<Complex> diagonal_eigenvalue;
  std::vector<SpectrumEntry> transverse;
  std::string verdict;  // stable, unstable or neutral, over the transverse part
};

StabilityReport stability_report(const ReplicatorSystem& sys,
                                 const std::vector<Rational>& p,
                                 double tol = 1e-9);
StabilityReport stability_report(const ReplicatorSystem& sys,
                                 const std::vector<double>& p,
                                 double tol = 1e-9);
StabilityReport stability_report_of(const Matrix<double>& jacobian,
                                    double tol = 1e-9);

struct ReplicatorSynchrony {
  std::vector<Partition> partitions;
  bool tangency_confirmed = true;  // every partition passed the field check
};

// Partitions equitable for K, each confirmed by exact tangency of the field
// at generic nonzero rational points. Throws TooLarge when n > cap.
ReplicatorSynchrony replicator_synchrony(const ReplicatorSystem& sys,
                                         std::size_t cap = 12,
                                         std::size_t trials = 10,
                                         std::uint64_t seed = 1);

bool replicator_tangent(const ReplicatorSystem& sys, const Partition& part,
                        std::size_t trials, std::uint64_t seed);

// Edges ({j},{i}) with weight K_ij and ({k,l},{i}) with weight
// -(H_kl + H_lk) (or -H_kk for k = l). Under the self-product coupling its
// field is the replicator field.
Hypergraph replicator_hypergraph(const ReplicatorSystem& sys);

}  // namespace hypersync
