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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypersync/commands.hpp"
#include "hypersync/document.hpp"
#include "hypersync/error.hpp"
#include "support.hpp"

namespace {

using namespace hypersync;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ErrorCode parse_error(const std::string& text, std::string* message = nullptr) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kUsageError;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry :
       std::filesystem::directory_iterator(HYPERSYNC_FIXTURE_DIR)) {
    if (entry.path().extension() == ".json") {
      out.push_back(entry.path().stem().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Document, EveryFixtureRoundTrips) {
  const auto names = fixture_names();
  ASSERT_GE(names.size(), 14u);
  for (const auto& name : names) {
    const auto doc = hstest::fixture(name);
    const auto printed = print_document(doc);
    const auto again = parse_document(printed);
    EXPECT_EQ(again, doc) << name;
    EXPECT_EQ(print_document(again), printed) << name;
  }
}

TEST(Document, DigestIsSha256OfText) {
  const auto text = read_file(hstest::fixture_path("six_cell_mixed"));
  EXPECT_EQ(parse_document(text).digest, sha256_hex(text));
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Document, CompactFormsAreAccepted) {
  const auto doc = parse_document(R"({
    "format": "hypersync/1",
    "node_count": 3,
    "edges": [{"tail": ["1", "1", ["2", 2]], "head": ["3"], "weight": 0.5},
              {"tail": ["3"], "head": ["1", "2"]}]
  })");
  ASSERT_EQ(doc.graph.edge_count(), 2u);
  const auto& e = doc.graph.edges()[0];
  EXPECT_EQ(e.cardinality(), 4);
  EXPECT_EQ(e.weight, hstest::frac(1, 2));
  EXPECT_EQ(doc.graph.edges()[1].weight, 1);
  EXPECT_EQ(doc.graph.edges()[1].id, "e2");
  EXPECT_FALSE(doc.coupling);
}

TEST(Document, SyntaxErrorsCarryPosition) {
  std::string message;
  EXPECT_EQ(parse_error("{\n  \"format\": \"hypersync/1\",\n  nodes: []\n}",
                        &message),
            ErrorCode::kSyntaxError);
  EXPECT_NE(message.find("line 3"), std::string::npos) << message;
}

TEST(Document, SemanticErrorsCarryPointer) {
  std::string message;
  EXPECT_EQ(parse_error(R"({"format": "hypersync/1", "nodes": ["a", "b"],
                            "edges": [{"tail": [["a", 0]], "head": ["b"]}]})",
                        &message),
            ErrorCode::kSemanticError);
  EXPECT_NE(message.find("/edges/0/tail/0/1"), std::string::npos) << message;
  EXPECT_EQ(parse_error(R"({"format": "hypersync/1", "nodes": ["a"],
                            "edges": [{"tail": ["z"], "head": ["a"]}]})",
                        &message),
            ErrorCode::kSemanticError);
  EXPECT_NE(message.find("/edges/0/tail/0"), std::string::npos) << message;
  EXPECT_EQ(parse_error(R"({"format": "other", "nodes": []})"),
            ErrorCode::kSemanticError);
  EXPECT_EQ(parse_error(R"({"format": "hypersync/1", "nodes": ["a", "a"]})"),
            ErrorCode::kSemanticError);
  EXPECT_EQ(parse_error(R"({"format": "hypersync/1", "nodes": ["a"],
                            "edges": [{"tail": ["a"], "head": ["a"],
                                       "weight": "1/0"}]})"),
            ErrorCode::kSemanticError);
  EXPECT_EQ(parse_error(R"({"format": "hypersync/1",
                            "matrices": {"K": [["1", "2"]]}})"),
            ErrorCode::kSemanticError);
}

TEST(Document, LoadReportsMissingFile) {
  EXPECT_THROW(load_document("/nonexistent/file.json"), Error);
}

TEST(Commands, NamesAreStable) {
  const std::vector<std::string_view> expected{
      "validate",      "info",
      "input-eq",      "coarsest",
      "check-balanced", "lattice",
      "quotient",      "incidence",
      "simulate",      "invariance",
      "restriction-check", "replicator-stability",
      "synchrony-of-matrix"};
  auto names = command_names();
  std::sort(names.begin(), names.end());
  auto want = expected;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(names, want);
}

TEST(Commands, DefaultCouplingIsProductWithDecay) {
  const auto doc = hstest::fixture("six_cell_weighted");
  const auto sys = coupling_for(doc);
  ASSERT_TRUE(sys.exact());
  EXPECT_EQ(sys.exact()->family, CouplingFamily::kProduct);
  EXPECT_EQ(sys.exact()->f_coefficients, (std::vector<Rational>{0, -1}));
}

TEST(Commands, ReportsAreDeterministic) {
  const auto doc = hstest::fixture("six_cell_mixed");
  Options o;
  for (auto name : command_names()) {
    if (name == "replicator-stability" || name == "synchrony-of-matrix")
      continue;
    const auto a = execute(name, doc, o);
    const auto b = execute(name, doc, o);
    EXPECT_EQ(a.json, b.json) << name;
    EXPECT_EQ(a.csv, b.csv) << name;
    EXPECT_NE(a.json.find("\"input_digest\": \"sha256:" + doc.digest),
              std::string::npos)
        << name;
  }
}

}  // namespace
