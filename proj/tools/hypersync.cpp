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

// Command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "hypersync/hypersync.h"

namespace {

constexpr const char* kCommands[] = {
    "validate",   "info",          "input-eq",          "check-balanced",
    "coarsest",   "lattice",       "quotient",          "incidence",
    "simulate",   "invariance",    "restriction-check", "replicator-stability",
    "synchrony-of-matrix"};

bool write_output(const std::string& target, const char* text) {
  if (target == "-") {
    std::fputs(text, stdout);
    return true;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) {
    std::cerr << "hypersync: cannot write " << target << "\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchrony analysis for coupled cell hypernetworks"};
  app.set_version_flag("--version", std::string(hs_version()));

  hs_options options;
  hs_options_init(&options);
  std::string command;
  std::string file;
  std::string partition;
  std::string point;
  std::string matrix;
  std::string json_out;
  std::string csv_out;
  bool quiet = false;

  std::vector<std::string> names(std::begin(kCommands), std::end(kCommands));
  app.add_option("command", command, "Analysis to run")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("file", file, "Hypergraph document (JSON)")->required();
  app.add_option("--partition", partition, "Classes as \"1,5,6|2,4|3\"");
  app.add_option("--seed", options.seed, "Seed for randomized checks");
  app.add_option("--cap", options.cap, "Largest node count to enumerate");
  app.add_option("--dt", options.dt, "RK4 step")->check(CLI::PositiveNumber);
  app.add_option("--steps", options.steps, "RK4 step count");
  app.add_option("--tol", options.tol, "Floating-point tolerance");
  app.add_option("--trials", options.trials, "Random points per check");
  app.add_option("--point", point, "State or equilibrium, comma separated");
  app.add_option("--matrix", matrix, "Matrix for synchrony-of-matrix")
      ->check(CLI::IsMember({"K", "H"}));
  app.add_option("--json", json_out, "Write the JSON report here (- for stdout)");
  app.add_option("--csv", csv_out, "Write the simulate trajectory here");
  app.add_flag("-q,--quiet", quiet, "Suppress the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!partition.empty()) options.partition = partition.c_str();
  if (!point.empty()) options.point = point.c_str();
  if (!matrix.empty()) options.matrix = matrix.c_str();

  hs_document* doc = nullptr;
  hs_status status = hs_document_load(file.c_str(), &doc);
  if (status != HS_OK) {
    std::cerr << "hypersync: " << hs_status_name(status) << ": "
              << hs_last_error() << "\n";
    return 2;
  }
  hs_report* report = nullptr;
  status = hs_execute(doc, command.c_str(), &options, &report);
  hs_document_free(doc);
  if (status != HS_OK) {
    std::cerr << "hypersync: " << hs_status_name(status) << ": "
              << hs_last_error() << "\n";
    return 2;
  }
  int exit_code = hs_report_exit_code(report);
  if (!quiet && (json_out != "-")) {
    std::string summary = hs_report_summary(report);
    (exit_code == 2 ? std::cerr : std::cout) << summary << "\n";
  }
  if (!json_out.empty() && !write_output(json_out, hs_report_json(report))) {
    exit_code = 2;
  }
  if (!csv_out.empty()) {
    if (command != "simulate") {
      std::cerr << "hypersync: --csv applies to simulate only\n";
    } else if (!write_output(csv_out, hs_report_csv(report))) {
      exit_code = 2;
    }
  }
  hs_report_free(report);
  return exit_code;
}
