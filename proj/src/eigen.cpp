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

#include "hypersync/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypersync/error.hpp"

namespace hypersync {

namespace {

constexpr int kMaxIterations = 60;

void check_square(const Matrix<double>& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
  }
  if (m.rows() > kMaxEigenSize) {
    throw Error(ErrorCode::kTooLarge,
                "eigenvalue solver limited to " + std::to_string(kMaxEigenSize) +
                    " rows");
  }
  for (double v : m.data()) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteState, "matrix has non-finite entries");
    }
  }
}

void hessenberg(Matrix<double>& a) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += a(i, k) * a(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0) continue;
    if (a(k + 1, k) > 0) alpha = -alpha;
    std::vector<double> v(n, 0.0);
    v[k + 1] = a(k + 1, k) - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    double vnorm = 0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm += v[i] * v[i];
    if (vnorm == 0) continue;
    // A <- P A P with P = I - 2 v v^T / (v^T v).
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t i = k + 1; i < n; ++i) s += v[i] * a(i, j);
      s = 2 * s / vnorm;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s = 2 * s / vnorm;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * v[j];
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0;
  }
}

// Shifted QR on the complex Hessenberg form with Wilkinson shifts and
// Givens rotations; deflates from the bottom.
std::vector<Complex> hessenberg_qr(const Matrix<double>& hess) {
  const std::size_t n = hess.rows();
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = hess(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(inf_norm(hess), std::numeric_limits<double>::min());
  std::vector<Complex> values(n);
  std::vector<Complex> cs(n), sn(n);
  std::size_t hi = n - 1;
  int iterations = 0;
  while (true) {
    std::size_t l = hi;
    while (l > 0) {
      double s = std::abs(at(l - 1, l - 1)) + std::abs(at(l, l));
      if (s == 0) s = scale;
      if (std::abs(at(l, l - 1)) <= eps * s) {
        at(l, l - 1) = 0;
        break;
      }
      --l;
    }
    if (l == hi) {
      values[hi] = at(hi, hi);
      iterations = 0;
      if (hi == 0) break;
      --hi;
      continue;
    }
    if (iterations == kMaxIterations) {
      throw Error(ErrorCode::kNoConvergence, "QR iteration did not converge");
    }
    ++iterations;
    Complex mu;
    if (iterations % 10 == 0) {
      mu = at(hi, hi) + std::abs(at(hi, hi - 1));
    } else {
      const Complex p = at(hi - 1, hi - 1), q = at(hi - 1, hi);
      const Complex r = at(hi, hi - 1), d = at(hi, hi);
      const Complex half = 0.5 * (p - d);
      const Complex root = std::sqrt(half * half + q * r);
      const Complex m1 = 0.5 * (p + d) + root;
      const Complex m2 = 0.5 * (p + d) - root;
      mu = std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
    }
    for (std::size_t k = l; k <= hi; ++k) at(k, k) -= mu;
    for (std::size_t k = l; k < hi; ++k) {
      const Complex x = at(k, k), y = at(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      cs[k] = r == 0 ? Complex(1) : x / r;
      sn[k] = r == 0 ? Complex(0) : y / r;
      for (std::size_t j = k; j <= hi; ++j) {
        const Complex u = at(k, j), v = at(k + 1, j);
        at(k, j) = std::conj(cs[k]) * u + std::conj(sn[k]) * v;
        at(k + 1, j) = -sn[k] * u + cs[k] * v;
      }
    }
    for (std::size_t k = l; k < hi; ++k) {
      for (std::size_t i = l; i <= std::min(k + 1, hi); ++i) {
        const Complex u = at(i, k), v = at(i, k + 1);
        at(i, k) = u * cs[k] + v * sn[k];
        at(i, k + 1) = -u * std::conj(sn[k]) + v * std::conj(cs[k]);
      }
    }
    for (std::size_t k = l; k <= hi; ++k) at(k, k) += mu;
  }
  for (auto& v : values) {
    if (std::abs(v.imag()) <= 1e-14 * scale) v = Complex(v.real(), 0);
  }
  return values;
}

// Solves (A - shift I) x = b in place by Gaussian elimination with partial
// pivoting; tiny pivots are nudged so the shifted matrix stays invertible.
std::vector<Complex> shifted_solve(const Matrix<double>& m, Complex shift,
                                   std::vector<Complex> b, double nudge) {
  const std::size_t n = m.rows();
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    a[i * n + i] -= shift;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[pivot * n + k])) pivot = i;
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      std::swap(b[k], b[pivot]);
    }
    if (std::abs(a[k * n + k]) < nudge) a[k * n + k] = nudge;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = a[i * n + k] / a[k * n + k];
      if (factor == Complex(0)) continue;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
      b[i] -= factor * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Complex sum = b[k];
    for (std::size_t j = k + 1; j < n; ++j) sum -= a[k * n + j] * b[j];
    b[k] = sum / a[k * n + k];
  }
  return b;
}

double residual_of(const Matrix<double>& m, Complex value,
                   const std::vector<Complex>& v) {
  double sum = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex row = -value * v[i];
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * v[j];
    sum += std::norm(row);
  }
  return std::sqrt(sum);
}

void normalize(std::vector<Complex>& v) {
  double norm = 0;
  for (const auto& c : v) norm += std::norm(c);
  norm = std::sqrt(norm);
  if (norm == 0 || !std::isfinite(norm)) return;
  for (auto& c : v) c /= norm;
}

}  // namespace

double inf_norm(const Matrix<double>& m) {
  double best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

std::vector<Complex> eig_dense(const Matrix<double>& m) {
  check_square(m);
  if (m.rows() == 0) return {};
  Matrix<double> a = m;
  hessenberg(a);
  auto values = hessenberg_qr(a);
  std::sort(values.begin(), values.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return values;
}

EigenPair eigenvector(const Matrix<double>& m, Complex value) {
  check_square(m);
  const std::size_t n = m.rows();
  const double scale = std::max(inf_norm(m), 1.0);
  const double nudge = 1e-14 * scale;
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = Complex(1.0 + 0.1 * static_cast<double>(i), 0.05 * static_cast<double>(i % 3));
  }
  normalize(v);
  EigenPair best{value, v, residual_of(m, value, v)};
  for (int iteration = 0; iteration < 8; ++iteration) {
    v = shifted_solve(m, value, v, nudge);
    normalize(v);
    const double res = residual_of(m, value, v);
    if (res < best.residual) best = {value, v, res};
    if (res <= 1e-13 * scale) break;
  }
  return best;
}

std::vector<EigenPair> eig_pairs(const Matrix<double>& m) {
  std::vector<EigenPair> out;
  for (Complex value : eig_dense(m)) out.push_back(eigenvector(m, value));
  return out;
}

SpectralClass classify_eigenvalue(Complex value, double tol) {
  if (std::abs(value) <= tol) return SpectralClass::kZero;
  if (value.real() < -tol) return SpectralClass::kNegative;
  if (value.real() > tol) return SpectralClass::kPositive;
  return SpectralClass::kImaginary;
}

std::string_view spectral_class_name(SpectralClass c) {
  switch (c) {
    case SpectralClass::kZero: return "zero";
    case SpectralClass::kNegative: return "negative";
    case SpectralClass::kPositive: return "positive";
    case SpectralClass::kImaginary: return "imaginary";
  }
  return "";
}

}  // namespace hypersync
