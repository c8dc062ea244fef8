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

#include "hypersync/document.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "hypersync/error.hpp"
#include "json_io.hpp"

namespace hypersync {

namespace {

using InJson = nlohmann::json;

[[noreturn]] void semantic(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSemanticError, (path.empty() ? "/" : path) + ": " + what);
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational json_rational(const InJson& value, const std::string& path) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_unsigned()) {
      return Rational(std::to_string(value.get<std::uint64_t>()));
    }
    if (value.is_number_integer()) {
      return Rational(std::to_string(value.get<std::int64_t>()));
    }
    if (value.is_number_float()) {
      char buffer[64];
      auto result = std::to_chars(buffer, buffer + sizeof buffer,
                                  value.get<double>());
      return parse_rational(std::string_view(buffer, result.ptr - buffer));
    }
  } catch (const Error& e) {
    semantic(path, e.what());
  }
  semantic(path, "expected a number or a \"p/q\" string");
}

std::string json_label(const InJson& value, const std::string& path) {
  if (value.is_string()) {
    auto s = value.get<std::string>();
    if (s.empty()) semantic(path, "empty label");
    return s;
  }
  if (value.is_number_unsigned()) return std::to_string(value.get<std::uint64_t>());
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  semantic(path, "expected a node label");
}

const InJson& require(const InJson& object, std::string_view key,
                      const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) {
    semantic(path, "missing key \"" + std::string(key) + "\"");
  }
  return *it;
}

Matrix<Rational> json_matrix(const InJson& value, const std::string& path) {
  if (!value.is_array() || value.empty()) semantic(path, "expected a nonempty matrix");
  const std::size_t rows = value.size();
  Matrix<Rational> m(rows, rows, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = value[i];
    if (!row.is_array() || row.size() != rows) {
      semantic(child(path, i), "expected a row of " + std::to_string(rows) +
                                   " entries");
    }
    for (std::size_t j = 0; j < rows; ++j) {
      m(i, j) = json_rational(row[j], child(child(path, i), j));
    }
  }
  return m;
}

Document from_json(const InJson& root) {
  if (!root.is_object()) semantic("", "expected an object");
  Document doc;
  if (auto it = root.find("format"); it != root.end()) {
    if (!it->is_string() || it->get<std::string>() != kFormatTag) {
      semantic("/format", "expected \"" + std::string(kFormatTag) + "\"");
    }
  }
  if (auto it = root.find("description"); it != root.end()) {
    if (!it->is_string()) semantic("/description", "expected a string");
    doc.description = it->get<std::string>();
  }

  if (auto it = root.find("matrices"); it != root.end()) {
    if (!it->is_object()) semantic("/matrices", "expected an object");
    ReplicatorSystem sys{json_matrix(require(*it, "K", "/matrices"), "/matrices/K"),
                         json_matrix(require(*it, "H", "/matrices"), "/matrices/H")};
    if (sys.K.rows() != sys.H.rows()) {
      semantic("/matrices/H", "K and H differ in size");
    }
    doc.matrices = std::move(sys);
  }

  std::vector<std::string> labels;
  if (auto it = root.find("nodes"); it != root.end()) {
    if (!it->is_array()) semantic("/nodes", "expected an array of labels");
    for (std::size_t i = 0; i < it->size(); ++i) {
      labels.push_back(json_label((*it)[i], child("/nodes", i)));
    }
  } else if (auto count = root.find("node_count"); count != root.end()) {
    if (!count->is_number_unsigned()) {
      semantic("/node_count", "expected a nonnegative integer");
    }
    for (std::size_t i = 0; i < count->get<std::size_t>(); ++i) {
      labels.push_back(std::to_string(i + 1));
    }
  } else if (doc.matrices) {
    for (std::size_t i = 0; i < doc.matrices->size(); ++i) {
      labels.push_back(std::to_string(i + 1));
    }
  } else {
    semantic("", "missing \"nodes\" or \"node_count\"");
  }
  std::unordered_map<std::string, NodeIndex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      semantic(child("/nodes", i), "duplicate label \"" + labels[i] + "\"");
    }
  }
  auto lookup = [&](const InJson& value, const std::string& path) {
    auto it = index.find(json_label(value, path));
    if (it == index.end()) semantic(path, "unknown node");
    return it->second;
  };

  std::vector<EdgeSpec> edges;
  if (auto it = root.find("edges"); it != root.end()) {
    if (!it->is_array()) semantic("/edges", "expected an array");
    std::unordered_map<std::string, std::size_t> ids;
    for (std::size_t j = 0; j < it->size(); ++j) {
      const auto& e = (*it)[j];
      const std::string path = child("/edges", j);
      if (!e.is_object()) semantic(path, "expected an object");
      EdgeSpec spec;
      if (auto id = e.find("id"); id != e.end()) {
        if (!id->is_string() || id->get<std::string>().empty()) {
          semantic(child(path, "id"), "expected a nonempty string");
        }
        spec.id = id->get<std::string>();
      } else {
        spec.id = "e" + std::to_string(j + 1);
      }
      if (!ids.emplace(spec.id, j).second) {
        semantic(child(path, "id"), "duplicate edge id \"" + spec.id + "\"");
      }
      const auto& tail = require(e, "tail", path);
      const std::string tail_path = child(path, "tail");
      if (!tail.is_array() || tail.empty()) {
        semantic(tail_path, "expected a nonempty array");
      }
      for (std::size_t t = 0; t < tail.size(); ++t) {
        const std::string entry_path = child(tail_path, t);
        const auto& entry = tail[t];
        if (entry.is_array()) {
          if (entry.size() != 2) semantic(entry_path, "expected [label, multiplicity]");
          if (!entry[1].is_number_integer()) {
            semantic(child(entry_path, 1), "expected an integer multiplicity");
          }
          const auto mult = entry[1].get<std::int64_t>();
          if (mult <= 0) semantic(child(entry_path, 1), "multiplicity must be positive");
          if (mult > 1000000) semantic(child(entry_path, 1), "multiplicity too large");
          spec.tail.emplace_back(lookup(entry[0], child(entry_path, 0)),
                                 static_cast<int>(mult));
        } else {
          spec.tail.emplace_back(lookup(entry, entry_path), 1);
        }
      }
      const auto& head = require(e, "head", path);
      const std::string head_path = child(path, "head");
      if (!head.is_array() || head.empty()) {
        semantic(head_path, "expected a nonempty array");
      }
      for (std::size_t h = 0; h < head.size(); ++h) {
        spec.head.push_back(lookup(head[h], child(head_path, h)));
      }
      if (auto w = e.find("weight"); w != e.end()) {
        spec.weight = json_rational(*w, child(path, "weight"));
      }
      edges.push_back(std::move(spec));
    }
  }
  try {
    doc.graph = Hypergraph::build(std::move(labels), std::move(edges));
  } catch (const Error& e) {
    semantic("/edges", e.what());
  }
  if (doc.matrices && doc.matrices->size() != doc.graph.node_count()) {
    semantic("/matrices", "matrix size differs from node count");
  }

  if (auto it = root.find("coupling"); it != root.end()) {
    if (!it->is_object()) semantic("/coupling", "expected an object");
    CouplingSpec spec;
    if (auto f = it->find("family"); f != it->end()) {
      auto family = f->is_string() ? parse_family(f->get<std::string>())
                                   : std::nullopt;
      if (!family) semantic("/coupling/family", "expected product, self-product or linear");
      spec.family = *family;
    }
    if (auto d = it->find("d"); d != it->end()) {
      if (!d->is_number_unsigned() || d->get<std::size_t>() == 0) {
        semantic("/coupling/d", "expected a positive integer");
      }
      spec.dim = d->get<std::size_t>();
    }
    if (auto f = it->find("f"); f != it->end()) {
      auto internal = f->is_string() ? parse_internal(f->get<std::string>())
                                     : std::nullopt;
      if (!internal) semantic("/coupling/f", "expected zero, decay or cubic");
      spec.internal = *internal;
    }
    doc.coupling = spec;
  }
  return doc;
}

}  // namespace

bool operator==(const Document& a, const Document& b) {
  auto same_matrices = [](const std::optional<ReplicatorSystem>& x,
                          const std::optional<ReplicatorSystem>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->K == y->K && x->H == y->H);
  };
  return a.description == b.description && a.graph == b.graph &&
         same_matrices(a.matrices, b.matrices) && a.coupling == b.coupling;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

Document parse_document(std::string_view text) {
  InJson root;
  try {
    root = InJson::parse(text.begin(), text.end());
  } catch (const InJson::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) {
      what = what.substr(pos);
    }
    throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) +
                                             ", column " +
                                             std::to_string(column) + ": " +
                                             what);
  }
  Document doc = from_json(root);
  doc.digest = sha256_hex(text);
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kUsageError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

Json rational_matrix_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json double_matrix_json(const Matrix<double>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json partition_json(const Partition& part,
                    const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& cls : part.classes()) {
    Json members = Json::array();
    for (std::size_t i : cls) members.push_back(labels[i]);
    out.push_back(std::move(members));
  }
  return out;
}

Json hypergraph_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) {
    Json tail = Json::array();
    for (const auto& t : e.tail) tail.push_back({h.label(t.node), t.multiplicity});
    Json head = Json::array();
    for (NodeIndex v : e.head) head.push_back(h.label(v));
    edges.push_back({{"id", e.id},
                     {"tail", std::move(tail)},
                     {"head", std::move(head)},
                     {"weight", to_string(e.weight)}});
  }
  return {{"nodes", h.labels()}, {"edges", std::move(edges)}};
}

Json document_json(const Document& doc) {
  Json out;
  out["format"] = kFormatTag;
  if (!doc.description.empty()) out["description"] = doc.description;
  Json graph = hypergraph_json(doc.graph);
  out["nodes"] = std::move(graph["nodes"]);
  out["edges"] = std::move(graph["edges"]);
  if (doc.matrices) {
    out["matrices"] = {{"K", rational_matrix_json(doc.matrices->K)},
                       {"H", rational_matrix_json(doc.matrices->H)}};
  }
  if (doc.coupling) {
    out["coupling"] = {{"family", family_name(doc.coupling->family)},
                       {"d", doc.coupling->dim},
                       {"f", internal_name(doc.coupling->internal)}};
  }
  return out;
}

std::string print_document(const Document& doc) {
  return document_json(doc).dump(2) + "\n";
}

}  // namespace hypersync
