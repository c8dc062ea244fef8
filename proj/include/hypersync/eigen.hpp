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

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include "hypersync/matrix.hpp"

namespace hypersync {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxEigenSize = 64;

// All eigenvalues with multiplicity, sorted by (real, imag). Householder
// Hessenberg reduction followed by shifted complex QR.
std::vector<Complex> eig_dense(const Matrix<double>& m);

struct EigenPair {
  Complex value;
  std::vector<Complex> vector;  // unit 2-norm
  double residual;              // ||M v - value v||_2
};

// Inverse iteration at the given eigenvalue.
EigenPair eigenvector(const Matrix<double>& m, Complex value);

std::vector<EigenPair> eig_pairs(const Matrix<double>& m);

// Maximum absolute row sum.
double inf_norm(const Matrix<double>& m);

enum class SpectralClass { kZero, kNegative, kPositive, kImaginary };

SpectralClass classify_eigenvalue(Complex value, double tol = 1e-9);
std::string_view spectral_class_name(SpectralClass c);

}  // namespace hypersync
