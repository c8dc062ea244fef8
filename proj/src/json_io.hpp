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

#include <nlohmann/json.hpp>

#include "hypersync/document.hpp"
#include "hypersync/hypergraph.hpp"
#include "hypersync/matrix.hpp"
#include "hypersync/partition.hpp"
#include "hypersync/rational.hpp"

namespace hypersync {

using Json = nlohmann::ordered_json;

Json hypergraph_json(const Hypergraph& h);
Json document_json(const Document& doc);
Json rational_matrix_json(const Matrix<Rational>& m);
Json double_matrix_json(const Matrix<double>& m);
Json partition_json(const Partition& part, const std::vector<std::string>& labels);

}  // namespace hypersync
