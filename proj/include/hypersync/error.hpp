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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersync {

// Every failure the library reports carries one of these codes. The C API
// maps them onto hs_status values one-to-one.
enum class ErrorCode {
  kEmptyTail,
  kEmptyHead,
  kUnknownNode,
  kUnknownEdge,
  kDuplicateEdgeId,
  kNonPositiveMultiplicity,
  kInvalidPartition,
  kTailMismatch,
  kHeadOverlap,
  kWeightMismatch,
  kTooLarge,
  kNotBalanced,
  kDimensionMismatch,
  kMissingCoupling,
  kAsymmetricCoupling,
  kNonFiniteState,
  kNoConvergence,
  kNotEquilibrium,
  kZeroComponent,
  kSyntaxError,
  kSemanticError,
  kUsageError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypersync
