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

#include "hypersync/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypersync/error.hpp"
#include "hypersync/synchrony.hpp"

namespace hypersync {

namespace {

constexpr int kProbeTrials = 6;
constexpr int kProbeMaxArity = 4;

void require_dim(const Hypergraph& h, const CouplingSystem& sys,
                 std::size_t size) {
  if (size != h.node_count() * sys.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state has " + std::to_string(size) + " entries, expected " +
                    std::to_string(h.node_count() * sys.dim()));
  }
}

void require_couplings(const Hypergraph& h, const CouplingSystem& sys) {
  for (int k : tail_cardinalities(h)) {
    if (!sys.has_coupling(k)) {
      throw Error(ErrorCode::kMissingCoupling,
                  "no coupling function for tail cardinality " +
                      std::to_string(k));
    }
  }
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

Rational eval_poly(const std::vector<Rational>& coefficients,
                   const Rational& x) {
  Rational out = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    out = out * x + *it;
  }
  return out;
}

std::vector<Rational> lift_to_nodes(const Partition& part, std::size_t dim,
                                    const std::vector<Rational>& y) {
  std::vector<Rational> x(part.size() * dim);
  for (std::size_t i = 0; i < part.size(); ++i) {
    for (std::size_t c = 0; c < dim; ++c) {
      x[i * dim + c] = y[part.class_of(i) * dim + c];
    }
  }
  return x;
}

std::vector<std::string> to_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

}  // namespace

CouplingSystem::CouplingSystem(std::size_t dim, InternalFn f,
                               std::map<int, CouplingFn> couplings,
                               CouplingFn any_arity, std::uint64_t probe_seed)
    : dim_(dim),
      f_(std::move(f)),
      couplings_(std::move(couplings)),
      any_arity_(std::move(any_arity)) {
  if (dim_ == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "cell dimension must be >= 1");
  }
  if (!f_) {
    f_ = [](std::span<const double>, std::span<double> out) {
      std::fill(out.begin(), out.end(), 0.0);
    };
  }
  std::mt19937_64 rng(probe_seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  auto probe = [&](int k, const CouplingFn& q, const std::string& name) {
    bool vanished = true;
    for (int trial = 0; trial < kProbeTrials; ++trial) {
      std::vector<double> self(dim_);
      std::vector<std::vector<double>> args(k, std::vector<double>(dim_));
      for (auto& v : self) v = coord(rng);
      for (auto& a : args) {
        for (auto& v : a) v = coord(rng);
      }
      auto evaluate = [&](const std::vector<std::vector<double>>& tail) {
        std::vector<std::span<const double>> spans(tail.begin(), tail.end());
        std::vector<double> out(dim_, 0.0);
        q(self, spans, out);
        return out;
      };
      const auto base = evaluate(args);
      std::shuffle(args.begin(), args.end(), rng);
      const auto permuted = evaluate(args);
      for (std::size_t c = 0; c < dim_; ++c) {
        if (std::abs(base[c] - permuted[c]) > 1e-9 * (1 + std::abs(base[c]))) {
          throw Error(ErrorCode::kAsymmetricCoupling,
                      name + " is not symmetric in its tail arguments");
        }
        if (base[c] != 0) vanished = false;
      }
    }
    if (vanished) warnings_.push_back(name + " vanished at every probe point");
  };
  for (const auto& [k, q] : couplings_) {
    if (k < 1) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "coupling arity must be >= 1");
    }
    probe(k, q, "Q_" + std::to_string(k));
  }
  if (any_arity_) {
    for (int k = 1; k <= kProbeMaxArity; ++k) {
      if (!couplings_.count(k)) probe(k, any_arity_, "Q_" + std::to_string(k));
    }
  }
}

CouplingSystem CouplingSystem::builtin(CouplingFamily family,
                                       InternalDynamics f, std::size_t dim) {
  InternalFn internal;
  std::vector<Rational> coefficients;
  switch (f) {
    case InternalDynamics::kZero:
      break;
    case InternalDynamics::kDecay:
      internal = [](std::span<const double> x, std::span<double> out) {
        for (std::size_t c = 0; c < x.size(); ++c) out[c] = -x[c];
      };
      coefficients = {0, -1};
      break;
    case InternalDynamics::kCubic:
      internal = [](std::span<const double> x, std::span<double> out) {
        for (std::size_t c = 0; c < x.size(); ++c) {
          out[c] = x[c] - x[c] * x[c] * x[c];
        }
      };
      coefficients = {0, 1, 0, -1};
      break;
  }
  CouplingFn q;
  switch (family) {
    case CouplingFamily::kProduct:
    case CouplingFamily::kSelfProduct: {
      const bool with_self = family == CouplingFamily::kSelfProduct;
      q = [with_self](std::span<const double> self,
                      const std::vector<std::span<const double>>& tail,
                      std::span<double> out) {
        for (std::size_t c = 0; c < out.size(); ++c) {
          double v = with_self ? self[c] : 1.0;
          for (const auto& arg : tail) v *= arg[c];
          out[c] = v;
        }
      };
      break;
    }
    case CouplingFamily::kLinear:
      q = [](std::span<const double>,
             const std::vector<std::span<const double>>& tail,
             std::span<double> out) {
        for (std::size_t c = 0; c < out.size(); ++c) {
          double v = 0;
          for (const auto& arg : tail) v += arg[c];
          out[c] = v;
        }
      };
      break;
  }
  CouplingSystem sys(dim, std::move(internal), {}, std::move(q));
  sys.exact_ = ExactCoupling{family, std::move(coefficients)};
  return sys;
}

bool CouplingSystem::has_coupling(int k) const {
  return couplings_.count(k) || (any_arity_ && k >= 1);
}

const CouplingFn& CouplingSystem::coupling(int k) const {
  if (auto it = couplings_.find(k); it != couplings_.end()) return it->second;
  if (any_arity_ && k >= 1) return any_arity_;
  throw Error(ErrorCode::kMissingCoupling,
              "no coupling function for tail cardinality " + std::to_string(k));
}

std::string_view family_name(CouplingFamily family) {
  switch (family) {
    case CouplingFamily::kProduct: return "product";
    case CouplingFamily::kSelfProduct: return "self-product";
    case CouplingFamily::kLinear: return "linear";
  }
  return "";
}

std::string_view internal_name(InternalDynamics f) {
  switch (f) {
    case InternalDynamics::kZero: return "zero";
    case InternalDynamics::kDecay: return "decay";
    case InternalDynamics::kCubic: return "cubic";
  }
  return "";
}

std::optional<CouplingFamily> parse_family(std::string_view name) {
  for (auto family : {CouplingFamily::kProduct, CouplingFamily::kSelfProduct,
                      CouplingFamily::kLinear}) {
    if (family_name(family) == name) return family;
  }
  return std::nullopt;
}

std::optional<InternalDynamics> parse_internal(std::string_view name) {
  for (auto f : {InternalDynamics::kZero, InternalDynamics::kDecay,
                 InternalDynamics::kCubic}) {
    if (internal_name(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<double> eval_field(const Hypergraph& h, const CouplingSystem& sys,
                               const std::vector<double>& x) {
  require_dim(h, sys, x.size());
  require_couplings(h, sys);
  const std::size_t d = sys.dim();
  auto cell = [&](NodeIndex i) {
    return std::span<const double>(x.data() + i * d, d);
  };
  std::vector<double> out(x.size(), 0.0);
  std::vector<double> term(d);
  std::vector<std::span<const double>> tail;
  for (NodeIndex i = 0; i < h.node_count(); ++i) {
    std::span<double> fi(out.data() + i * d, d);
    sys.internal()(cell(i), fi);
    for (EdgeIndex j : h.backward_edges(i)) {
      const Hyperedge& e = h.edges()[j];
      tail.clear();
      for (const auto& t : e.tail) {
        for (int r = 0; r < t.multiplicity; ++r) tail.push_back(cell(t.node));
      }
      std::fill(term.begin(), term.end(), 0.0);
      sys.coupling(e.cardinality())(cell(i), tail, term);
      const double w = to_double(e.weight);
      for (std::size_t c = 0; c < d; ++c) fi[c] += w * term[c];
    }
  }
  return out;
}

std::vector<Rational> eval_field_exact(const Hypergraph& h,
                                       const CouplingSystem& sys,
                                       const std::vector<Rational>& x) {
  if (!sys.exact()) {
    throw Error(ErrorCode::kUsageError,
                "coupling system has no exact polynomial form");
  }
  require_dim(h, sys, x.size());
  require_couplings(h, sys);
  const ExactCoupling& exact = *sys.exact();
  const std::size_t d = sys.dim();
  std::vector<Rational> out(x.size());
  for (NodeIndex i = 0; i < h.node_count(); ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      const Rational& xi = x[i * d + c];
      Rational value = eval_poly(exact.f_coefficients, xi);
      for (EdgeIndex j : h.backward_edges(i)) {
        const Hyperedge& e = h.edges()[j];
        Rational q;
        switch (exact.family) {
          case CouplingFamily::kProduct:
          case CouplingFamily::kSelfProduct:
            q = exact.family == CouplingFamily::kSelfProduct ? xi : Rational(1);
            for (const auto& t : e.tail) {
              for (int r = 0; r < t.multiplicity; ++r) q *= x[t.node * d + c];
            }
            break;
          case CouplingFamily::kLinear:
            q = 0;
            for (const auto& t : e.tail) q += t.multiplicity * x[t.node * d + c];
            break;
        }
        value += e.weight * q;
      }
      out[i * d + c] = value;
    }
  }
  return out;
}

Trajectory rk4(const VectorField& field, std::vector<double> x0, double dt,
               std::size_t steps) {
  if (!(dt > 0) || !std::isfinite(dt)) {
    throw Error(ErrorCode::kUsageError, "time step must be positive");
  }
  if (!all_finite(x0)) {
    throw Error(ErrorCode::kNonFiniteState, "non-finite state at step 0");
  }
  Trajectory out;
  out.dt = dt;
  out.states.reserve(steps + 1);
  out.states.push_back(x0);
  std::vector<double> x = std::move(x0);
  const std::size_t n = x.size();
  std::vector<double> tmp(n);
  for (std::size_t s = 1; s <= steps; ++s) {
    auto k1 = field(x);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    auto k2 = field(tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    auto k3 = field(tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    auto k4 = field(tmp);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    if (!all_finite(x)) {
      throw Error(ErrorCode::kNonFiniteState,
                  "non-finite state at step " + std::to_string(s));
    }
    out.states.push_back(x);
  }
  return out;
}

Trajectory integrate(const Hypergraph& h, const CouplingSystem& sys,
                     std::vector<double> x0, double dt, std::size_t steps) {
  require_dim(h, sys, x0.size());
  require_couplings(h, sys);
  return rk4([&](const std::vector<double>& x) { return eval_field(h, sys, x); },
             std::move(x0), dt, steps);
}

std::vector<Rational> generic_rationals(std::mt19937_64& rng,
                                        std::size_t count) {
  const long range = 3 * static_cast<long>(count) + 10;
  std::vector<long> pool;
  for (long k = -range; k <= range; ++k) {
    if (k != 0) pool.push_back(k);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rational q(pool[i], 97);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

std::vector<Rational> generic_point_on(const Partition& part, std::size_t dim,
                                       std::mt19937_64& rng) {
  return lift_to_nodes(part, dim,
                       generic_rationals(rng, part.class_count() * dim));
}

InvarianceReport flow_invariance_exact(const Hypergraph& h,
                                       const CouplingSystem& sys,
                                       const Partition& part,
                                       std::size_t trials,
                                       std::uint64_t seed) {
  if (part.size() != h.node_count()) {
    throw Error(ErrorCode::kInvalidPartition, "partition size mismatch");
  }
  InvarianceReport report;
  report.mode = "exact";
  std::mt19937_64 rng(seed);
  const std::size_t d = sys.dim();
  const auto reps = part.representatives();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = generic_point_on(part, d, rng);
    const auto f = eval_field_exact(h, sys, x);
    report.trials = t + 1;
    for (NodeIndex i = 0; i < h.node_count(); ++i) {
      const NodeIndex r = reps[part.class_of(i)];
      if (r == i) continue;
      for (std::size_t c = 0; c < d; ++c) {
        if (f[i * d + c] != f[r * d + c]) {
          report.pass = false;
          report.witness = InvarianceWitness{
              r, i, c, to_string(f[r * d + c]), to_string(f[i * d + c]),
              to_strings(x)};
          return report;
        }
      }
    }
  }
  return report;
}

InvarianceReport flow_invariance_float(const Hypergraph& h,
                                       const CouplingSystem& sys,
                                       const Partition& part,
                                       std::size_t trials, std::uint64_t seed,
                                       double tol) {
  if (part.size() != h.node_count()) {
    throw Error(ErrorCode::kInvalidPartition, "partition size mismatch");
  }
  InvarianceReport report;
  report.mode = "float";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const std::size_t d = sys.dim();
  const auto reps = part.representatives();
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> y(part.class_count() * d);
    for (auto& v : y) v = coord(rng);
    std::vector<double> x(h.node_count() * d);
    for (NodeIndex i = 0; i < h.node_count(); ++i) {
      for (std::size_t c = 0; c < d; ++c) {
        x[i * d + c] = y[part.class_of(i) * d + c];
      }
    }
    const auto f = eval_field(h, sys, x);
    report.trials = t + 1;
    for (NodeIndex i = 0; i < h.node_count(); ++i) {
      const NodeIndex r = reps[part.class_of(i)];
      for (std::size_t c = 0; c < d && r != i; ++c) {
        const double spread = std::abs(f[i * d + c] - f[r * d + c]);
        if (spread > report.max_spread) {
          report.max_spread = spread;
          if (spread > tol) {
            std::vector<std::string> point;
            for (double v : x) point.push_back(format_double(v));
            report.witness =
                InvarianceWitness{r,
                                  i,
                                  c,
                                  format_double(f[r * d + c]),
                                  format_double(f[i * d + c]),
                                  std::move(point)};
          }
        }
      }
    }
  }
  report.pass = report.max_spread <= tol;
  return report;
}

double distance_to_polydiagonal(const Partition& part, std::size_t dim,
                                const std::vector<double>& x) {
  const std::size_t p = part.class_count();
  std::vector<double> mean(p * dim, 0.0);
  std::vector<std::size_t> sizes(p, 0);
  for (std::size_t i = 0; i < part.size(); ++i) {
    ++sizes[part.class_of(i)];
    for (std::size_t c = 0; c < dim; ++c) {
      mean[part.class_of(i) * dim + c] += x[i * dim + c];
    }
  }
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t c = 0; c < dim; ++c) mean[k * dim + c] /= sizes[k];
  }
  double sum = 0;
  for (std::size_t i = 0; i < part.size(); ++i) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double dv = x[i * dim + c] - mean[part.class_of(i) * dim + c];
      sum += dv * dv;
    }
  }
  return std::sqrt(sum);
}

InvarianceReport flow_invariance_trajectory(const Hypergraph& h,
                                            const CouplingSystem& sys,
                                            const Partition& part,
                                            const std::vector<double>& x0,
                                            double dt, std::size_t steps,
                                            double tol) {
  if (part.size() != h.node_count()) {
    throw Error(ErrorCode::kInvalidPartition, "partition size mismatch");
  }
  InvarianceReport report;
  report.mode = "trajectory";
  const auto trajectory = integrate(h, sys, x0, dt, steps);
  report.trials = trajectory.states.size();
  for (const auto& state : trajectory.states) {
    report.max_spread = std::max(report.max_spread,
                                 distance_to_polydiagonal(part, sys.dim(), state));
  }
  report.pass = report.max_spread <= tol;
  return report;
}

RestrictionReport restriction_equals_quotient(const Hypergraph& h,
                                              const Partition& part,
                                              const CouplingSystem& sys,
                                              std::size_t trials,
                                              std::uint64_t seed) {
  RestrictionReport report;
  report.quotient = quotient(h, part);
  std::mt19937_64 rng(seed);
  const std::size_t d = sys.dim();
  const std::size_t p = part.class_count();
  const auto reps = part.representatives();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto y = generic_rationals(rng, p * d);
    const auto x = lift_to_nodes(part, d, y);
    report.trials = t + 1;
    if (sys.exact()) {
      const auto full = eval_field_exact(h, sys, x);
      const auto reduced = eval_field_exact(report.quotient, sys, y);
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t c = 0; c < d; ++c) {
          if (full[reps[k] * d + c] != reduced[k * d + c]) {
            report.pass = false;
            report.witness = InvarianceWitness{
                k, reps[k], c, to_string(reduced[k * d + c]),
                to_string(full[reps[k] * d + c]), to_strings(y)};
            return report;
          }
        }
      }
    } else {
      std::vector<double> xd(x.size()), yd(y.size());
      std::transform(x.begin(), x.end(), xd.begin(), to_double);
      std::transform(y.begin(), y.end(), yd.begin(), to_double);
      const auto full = eval_field(h, sys, xd);
      const auto reduced = eval_field(report.quotient, sys, yd);
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t c = 0; c < d; ++c) {
          const double a = full[reps[k] * d + c];
          const double b = reduced[k * d + c];
          if (std::abs(a - b) > 1e-9 * (1 + std::abs(a))) {
            report.pass = false;
            report.witness = InvarianceWitness{
                k, reps[k], c, format_double(b), format_double(a),
                to_strings(y)};
            return report;
          }
        }
      }
    }
  }
  return report;
}

Matrix<double> jacobian_fd(const VectorField& field,
                           const std::vector<double>& x, double h) {
  if (!(h > 0)) {
    throw Error(ErrorCode::kUsageError, "difference step must be positive");
  }
  const std::size_t n = x.size();
  const std::size_t rows = field(x).size();
  Matrix<double> jac(rows, n, 0.0);
  std::vector<double> probe = x;
  for (std::size_t j = 0; j < n; ++j) {
    probe[j] = x[j] + h;
    const auto plus = field(probe);
    probe[j] = x[j] - h;
    const auto minus = field(probe);
    probe[j] = x[j];
    for (std::size_t i = 0; i < rows; ++i) {
      const double v = (plus[i] - minus[i]) / (2 * h);
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFiniteState,
                    "non-finite Jacobian entry in column " + std::to_string(j));
      }
      jac(i, j) = v;
    }
  }
  return jac;
}

}  // namespace hypersync
