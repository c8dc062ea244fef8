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
#include <string>
#include <string_view>
#include <vector>

#include "hypersync/document.hpp"

namespace hypersync {

inline constexpr std::uint64_t kDefaultSeed = 20240517;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = 12;
  double dt = 1e-3;
  std::size_t steps = 1000;
  double tol = 1e-9;
  std::size_t trials = 25;
  std::string partition;  // "1,5,6|2,4|3"; empty selects a default
  std::string point;      // comma separated, "p/q" or decimals
  std::string matrix = "K";
};

struct Report {
  std::string json;     // pretty-printed report document
  std::string summary;  // human-readable lines
  std::string csv;      // trajectory, simulate only
  int exit_code = 0;    // 0 pass, 1 analytic failure, 2 usage error
};

const std::vector<std::string_view>& command_names();

// Never throws for analysis or usage failures; they land in the report.
Report execute(std::string_view command, const Document& doc,
               const Options& options);

// Coupling named in the document, or product coupling with decay.
CouplingSystem coupling_for(const Document& doc);

}  // namespace hypersync
