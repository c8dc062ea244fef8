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
#include <optional>
#include <string>
#include <string_view>

#include "hypersync/dynamics.hpp"
#include "hypersync/hypergraph.hpp"
#include "hypersync/replicator.hpp"

namespace hypersync {

inline constexpr std::string_view kFormatTag = "hypersync/1";

struct CouplingSpec {
  CouplingFamily family = CouplingFamily::kProduct;
  std::size_t dim = 1;
  InternalDynamics internal = InternalDynamics::kZero;

  friend bool operator==(const CouplingSpec&, const CouplingSpec&) = default;
};

// One input file: a hypergraph plus optional replicator matrices and an
// optional coupling choice.
struct Document {
  std::string description;
  Hypergraph graph;
  std::optional<ReplicatorSystem> matrices;
  std::optional<CouplingSpec> coupling;
  std::string digest;  // sha256 of the parsed text, hex

  friend bool operator==(const Document& a, const Document& b);
};

// SyntaxError carries "line L, column C"; SemanticError carries the JSON
// pointer of the offending value.
Document parse_document(std::string_view text);
Document load_document(const std::string& path);

// Canonical pretty-printed JSON; parse_document(print_document(d)) == d.
std::string print_document(const Document& doc);

std::string sha256_hex(std::string_view data);

}  // namespace hypersync
