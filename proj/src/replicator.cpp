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

#include "hypersync/replicator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hypersync/dynamics.hpp"
#include "hypersync/error.hpp"
#include "hypersync/synchrony.hpp"

namespace hypersync {

namespace {

void require_size(const ReplicatorSystem& sys, std::size_t size) {
  sys.validate();
  if (size != sys.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(size) + " entries, expected " +
                    std::to_string(sys.size()));
  }
}

template <typename T, typename Convert>
T quadratic_form(const Matrix<Rational>& m, const std::vector<T>& p,
                 Convert convert) {
  T sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      sum += p[i] * convert(m(i, j)) * p[j];
    }
  }
  return sum;
}

template <typename T, typename Convert>
std::vector<T> field_impl(const ReplicatorSystem& sys, const std::vector<T>& p,
                          Convert convert) {
  require_size(sys, p.size());
  const T form = quadratic_form(sys.H, p, convert);
  std::vector<T> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    T kp = 0;
    for (std::size_t j = 0; j < p.size(); ++j) kp += convert(sys.K(i, j)) * p[j];
    out[i] = (kp - form) * p[i];
  }
  return out;
}

template <typename T, typename Convert>
Matrix<T> jacobian_impl(const ReplicatorSystem& sys, const std::vector<T>& p,
                        Convert convert) {
  const std::size_t n = p.size();
  std::vector<T> g(n, T(0));  // p^T (H + H^T)
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      g[j] += p[k] * (convert(sys.H(k, j)) + convert(sys.H(j, k)));
    }
  }
  Matrix<T> jac(n, n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      jac(i, j) = p[i] * (convert(sys.K(i, j)) - g[j]);
    }
  }
  return jac;
}

auto as_double = [](const Rational& q) { return to_double(q); };
auto as_rational = [](const Rational& q) { return q; };

std::string verdict_of(const std::vector<SpectrumEntry>& entries) {
  bool all_negative = !entries.empty();
  for (const auto& e : entries) {
    if (e.kind == SpectralClass::kPositive) return "unstable";
    if (e.kind != SpectralClass::kNegative) all_negative = false;
  }
  return all_negative ? "stable" : "neutral";
}

}  // namespace

void ReplicatorSystem::validate() const {
  if (!K.square() || !H.square() || K.rows() != H.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "K and H must be square matrices of one size");
  }
}

std::vector<double> replicator_field(const ReplicatorSystem& sys,
                                     const std::vector<double>& p) {
  return field_impl(sys, p, as_double);
}

std::vector<Rational> replicator_field_exact(const ReplicatorSystem& sys,
                                             const std::vector<Rational>& p) {
  return field_impl(sys, p, as_rational);
}

Matrix<double> replicator_jacobian(const ReplicatorSystem& sys,
                                   const std::vector<double>& p, double tol) {
  const auto f = replicator_field(sys, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(f[i]) > tol) {
      throw Error(ErrorCode::kNotEquilibrium,
                  "field component " + std::to_string(i) + " is nonzero");
    }
    if (p[i] == 0) {
      throw Error(ErrorCode::kZeroComponent,
                  "component " + std::to_string(i) + " is zero");
    }
  }
  return jacobian_impl(sys, p, as_double);
}

Matrix<Rational> replicator_jacobian_exact(const ReplicatorSystem& sys,
                                           const std::vector<Rational>& p) {
  const auto f = replicator_field_exact(sys, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (f[i] != 0) {
      throw Error(ErrorCode::kNotEquilibrium,
                  "field component " + std::to_string(i) + " is " +
                      to_string(f[i]));
    }
    if (p[i] == 0) {
      throw Error(ErrorCode::kZeroComponent,
                  "component " + std::to_string(i) + " is zero");
    }
  }
  return jacobian_impl(sys, p, as_rational);
}

double simplex_drift(const ReplicatorSystem& sys,
                     const std::vector<double>& p) {
  require_size(sys, p.size());
  double total = 0;
  for (double v : p) total += v;
  return quadratic_form(sys.K, p, as_double) -
         quadratic_form(sys.H, p, as_double) * total;
}

Rational simplex_drift_exact(const ReplicatorSystem& sys,
                             const std::vector<Rational>& p) {
  require_size(sys, p.size());
  Rational total = 0;
  for (const auto& v : p) total += v;
  return quadratic_form(sys.K, p, as_rational) -
         quadratic_form(sys.H, p, as_rational) * total;
}

bool on_simplex(const std::vector<double>& p, double tol) {
  double total = 0;
  for (double v : p) {
    if (v < 0 || v > 1) return false;
    total += v;
  }
  return std::abs(total - 1) <= tol;
}

StabilityReport stability_report_of(const Matrix<double>& jacobian,
                                    double tol) {
  StabilityReport report;
  report.jacobian = jacobian;
  for (const auto& pair : eig_pairs(jacobian)) {
    report.spectrum.push_back(
        {pair.value, classify_eigenvalue(pair.value, tol), pair.residual});
  }
  const std::size_t n = jacobian.rows();
  if (n > 0) {
    std::vector<double> image(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) image[i] += jacobian(i, j);
    }
    const double mu = image[0];
    report.diagonal_invariant = std::all_of(
        image.begin(), image.end(),
        [&](double v) { return std::abs(v - mu) <= tol * (1 + std::abs(mu)); });
    if (report.diagonal_invariant) report.diagonal_eigenvalue = Complex(mu, 0);
  }
  report.transverse = report.spectrum;
  if (report.diagonal_eigenvalue) {
    auto nearest = std::min_element(
        report.transverse.begin(), report.transverse.end(),
        [&](const SpectrumEntry& a, const SpectrumEntry& b) {
          return std::abs(a.value - *report.diagonal_eigenvalue) <
                 std::abs(b.value - *report.diagonal_eigenvalue);
        });
    report.transverse.erase(nearest);
  }
  report.verdict = verdict_of(report.transverse);
  return report;
}

StabilityReport stability_report(const ReplicatorSystem& sys,
                                 const std::vector<Rational>& p, double tol) {
  std::vector<double> pd(p.size());
  std::transform(p.begin(), p.end(), pd.begin(), as_double);
  const auto exact = replicator_jacobian_exact(sys, p);
  StabilityReport report =
      stability_report_of(map_matrix<double>(exact, as_double), tol);
  report.exact_jacobian = exact;
  const auto fd = jacobian_fd(
      [&](const std::vector<double>& x) { return replicator_field(sys, x); },
      pd);
  double deviation = 0;
  for (std::size_t i = 0; i < fd.rows(); ++i) {
    for (std::size_t j = 0; j < fd.cols(); ++j) {
      deviation = std::max(deviation, std::abs(fd(i, j) - report.jacobian(i, j)));
    }
  }
  report.fd_deviation = deviation;
  return report;
}

StabilityReport stability_report(const ReplicatorSystem& sys,
                                 const std::vector<double>& p, double tol) {
  StabilityReport report =
      stability_report_of(replicator_jacobian(sys, p), tol);
  const auto fd = jacobian_fd(
      [&](const std::vector<double>& x) { return replicator_field(sys, x); },
      p);
  double deviation = 0;
  for (std::size_t i = 0; i < fd.rows(); ++i) {
    for (std::size_t j = 0; j < fd.cols(); ++j) {
      deviation = std::max(deviation, std::abs(fd(i, j) - report.jacobian(i, j)));
    }
  }
  report.fd_deviation = deviation;
  return report;
}

bool replicator_tangent(const ReplicatorSystem& sys, const Partition& part,
                        std::size_t trials, std::uint64_t seed) {
  require_size(sys, part.size());
  std::mt19937_64 rng(seed);
  const auto reps = part.representatives();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto p = generic_point_on(part, 1, rng);
    const auto f = replicator_field_exact(sys, p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (f[i] != f[reps[part.class_of(i)]]) return false;
    }
  }
  return true;
}

ReplicatorSynchrony replicator_synchrony(const ReplicatorSystem& sys,
                                         std::size_t cap, std::size_t trials,
                                         std::uint64_t seed) {
  sys.validate();
  ReplicatorSynchrony out;
  out.partitions = enumerate_equitable(sys.K, {}, cap);
  for (const auto& part : out.partitions) {
    if (!replicator_tangent(sys, part, trials, seed)) {
      out.tangency_confirmed = false;
    }
  }
  return out;
}

Hypergraph replicator_hypergraph(const ReplicatorSystem& sys) {
  sys.validate();
  const std::size_t n = sys.size();
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sys.K(i, j) == 0) continue;
      edges.push_back({"k" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                       {{j, 1}},
                       {i},
                       sys.K(i, j)});
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) {
        const Rational w = k == l ? Rational(-sys.H(k, k))
                                  : Rational(-(sys.H(k, l) + sys.H(l, k)));
        if (w == 0) continue;
        edges.push_back({"h" + std::to_string(i + 1) + "_" +
                             std::to_string(k + 1) + "_" + std::to_string(l + 1),
                         {{k, 1}, {l, 1}},
                         {i},
                         w});
      }
    }
  }
  return Hypergraph::build(n, std::move(edges));
}

}  // namespace hypersync
