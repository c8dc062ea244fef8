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

#include "hypersync/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hypersync/error.hpp"
#include "hypersync/synchrony.hpp"
#include "json_io.hpp"

namespace hypersync {

namespace {

struct Outcome {
  Json result = Json::object();
  std::string summary;
  std::string csv;
  bool pass = true;
};

using Handler = std::function<Outcome(const Document&, const Options&)>;

[[noreturn]] void usage(const std::string& message) {
  throw Error(ErrorCode::kUsageError, message);
}

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string short_fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Partition partition_or(const Document& doc, const Options& options,
                       const std::function<Partition()>& fallback) {
  if (options.partition.empty()) return fallback();
  return parse_partition(options.partition, doc.graph.labels());
}

Partition required_partition(const Document& doc, const Options& options) {
  if (options.partition.empty()) usage("this command needs --partition");
  return parse_partition(options.partition, doc.graph.labels());
}

const ReplicatorSystem& required_matrices(const Document& doc) {
  if (!doc.matrices) usage("this command needs a \"matrices\" section");
  return *doc.matrices;
}

Json witness_json(const Hypergraph& h, const BalanceWitness& w) {
  return {{"cell", h.label(w.cell)},
          {"other", h.label(w.other)},
          {"k", w.k},
          {"pattern", w.pattern},
          {"cell_weight", to_string(w.cell_weight)},
          {"other_weight", to_string(w.other_weight)}};
}

std::string witness_text(const Hypergraph& h, const BalanceWitness& w) {
  std::vector<std::string> entries;
  for (int m : w.pattern) entries.push_back(std::to_string(m));
  return "cells " + h.label(w.cell) + " and " + h.label(w.other) +
         " differ on k=" + std::to_string(w.k) + " pattern (" +
         join(entries, ",") + "): " + to_string(w.cell_weight) + " vs " +
         to_string(w.other_weight);
}

Json invariance_witness_json(const InvarianceWitness& w,
                             const std::vector<std::string>& labels,
                             bool class_indexed) {
  Json out;
  if (class_indexed) {
    out["class"] = w.cell;
    out["representative"] = labels[w.other];
  } else {
    out["cell"] = labels[w.cell];
    out["other"] = labels[w.other];
  }
  out["component"] = w.component;
  out["cell_value"] = w.cell_value;
  out["other_value"] = w.other_value;
  out["point"] = w.point;
  return out;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string complex_text(Complex z) {
  if (z.imag() == 0) return short_fmt(z.real());
  return short_fmt(z.real()) + (z.imag() < 0 ? "-" : "+") +
         short_fmt(std::abs(z.imag())) + "i";
}

Json spectrum_json(const std::vector<SpectrumEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back({{"value", complex_json(e.value)},
                   {"class", spectral_class_name(e.kind)},
                   {"residual", e.residual}});
  }
  return out;
}

Outcome cmd_validate(const Document& doc, const Options&) {
  Outcome out;
  const auto& h = doc.graph;
  out.result = {{"valid", true},
                {"nodes", h.node_count()},
                {"edges", h.edge_count()},
                {"connected", is_connected(h)},
                {"has_matrices", doc.matrices.has_value()}};
  out.summary = "valid: " + std::to_string(h.node_count()) + " nodes, " +
                std::to_string(h.edge_count()) + " edges" +
                (is_connected(h) ? ", connected" : ", not connected");
  return out;
}

Outcome cmd_info(const Document& doc, const Options&) {
  Outcome out;
  const auto& h = doc.graph;
  const auto cards = tail_cardinalities(h);
  Json nodes = Json::array();
  for (NodeIndex c = 0; c < h.node_count(); ++c) {
    Json backward = Json::array();
    for (EdgeIndex e : backward_star(h, c)) backward.push_back(h.edges()[e].id);
    Json forward = Json::array();
    for (EdgeIndex e : forward_star(h, c)) forward.push_back(h.edges()[e].id);
    nodes.push_back({{"label", h.label(c)},
                     {"cardinalities", tail_cardinalities(h, c)},
                     {"backward_star", std::move(backward)},
                     {"forward_star", std::move(forward)}});
  }
  std::vector<std::string> card_text;
  for (int k : cards) card_text.push_back(std::to_string(k));
  out.result = {{"nodes", h.node_count()},
                {"edges", h.edge_count()},
                {"cardinalities", cards},
                {"connected", is_connected(h)},
                {"cells", std::move(nodes)}};
  out.summary = std::to_string(h.node_count()) + " nodes, " +
                std::to_string(h.edge_count()) + " edges\n" +
                "tail cardinalities: {" + join(card_text, ",") + "}\n" +
                "connected: " + (is_connected(h) ? "yes" : "no");
  if (doc.matrices) {
    out.result["matrix_size"] = doc.matrices->size();
    out.summary += "\nmatrices: " + std::to_string(doc.matrices->size()) + "x" +
                   std::to_string(doc.matrices->size());
  }
  return out;
}

Outcome partition_outcome(const Document& doc, const Partition& part,
                          const std::string& title) {
  Outcome out;
  out.result = {{"classes", partition_json(part, doc.graph.labels())},
                {"class_count", part.class_count()}};
  out.summary = title + ": " + format_partition(part, doc.graph.labels());
  return out;
}

Outcome cmd_input_eq(const Document& doc, const Options&) {
  return partition_outcome(doc, input_equivalence(doc.graph), "input equivalence");
}

Outcome cmd_coarsest(const Document& doc, const Options&) {
  return partition_outcome(doc, coarsest_balanced(doc.graph), "coarsest balanced");
}

Outcome cmd_check_balanced(const Document& doc, const Options& options) {
  Outcome out;
  const auto& h = doc.graph;
  const Partition part = required_partition(doc, options);
  const auto balance = is_balanced(h, part);
  out.pass = balance.balanced;
  out.result = {{"partition", partition_json(part, h.labels())},
                {"balanced", balance.balanced},
                {"refines_input_equivalence",
                 part.refines(input_equivalence(h))}};
  out.summary = format_partition(part, h.labels()) +
                (balance.balanced ? " is balanced" : " is not balanced");
  if (balance.witness) {
    out.result["witness"] = witness_json(h, *balance.witness);
    out.summary += "\nwitness: " + witness_text(h, *balance.witness);
  }
  return out;
}

Outcome cmd_lattice(const Document& doc, const Options& options) {
  Outcome out;
  const auto& h = doc.graph;
  const auto partitions = enumerate_balanced(h, options.cap);
  Json list = Json::array();
  out.summary = std::to_string(partitions.size()) + " balanced partitions";
  for (const auto& p : partitions) {
    list.push_back(partition_json(p, h.labels()));
    out.summary += "\n  " + format_partition(p, h.labels());
  }
  out.result = {{"count", partitions.size()}, {"partitions", std::move(list)}};
  if (h.node_count() + h.edge_count() <= kDefaultIncidenceCap) {
    const bool agrees = balanced_via_incidence(h) == partitions;
    out.result["incidence_agrees"] = agrees;
    out.summary += std::string("\nincidence digraph cross-check: ") +
                   (agrees ? "agrees" : "DISAGREES");
    out.pass = agrees;
  }
  return out;
}

Outcome cmd_quotient(const Document& doc, const Options& options) {
  Outcome out;
  const auto& h = doc.graph;
  const Partition part =
      partition_or(doc, options, [&] { return coarsest_balanced(h); });
  const auto balance = is_balanced(normalize_heads(h), part);
  out.result["partition"] = partition_json(part, h.labels());
  if (!balance) {
    out.pass = false;
    out.result["balanced"] = false;
    out.result["witness"] = witness_json(h, *balance.witness);
    out.summary = "not balanced: " + witness_text(h, *balance.witness);
    return out;
  }
  Document q;
  q.graph = quotient(h, part);
  q.coupling = doc.coupling;
  out.result["balanced"] = true;
  out.result["quotient"] = document_json(q);
  out.summary = "quotient by " + format_partition(part, h.labels()) + ": " +
                std::to_string(q.graph.node_count()) + " nodes, " +
                std::to_string(q.graph.edge_count()) + " edges";
  for (const auto& e : q.graph.edges()) {
    std::vector<std::string> tail;
    for (const auto& t : e.tail) {
      for (int r = 0; r < t.multiplicity; ++r) tail.push_back(q.graph.label(t.node));
    }
    out.summary += "\n  ({" + join(tail, ",") + "},{" +
                   q.graph.label(e.head.front()) + "}) w=" + to_string(e.weight);
  }
  return out;
}

Outcome cmd_incidence(const Document& doc, const Options&) {
  Outcome out;
  const auto& h = doc.graph;
  const auto d = incidence_digraph(h);
  Json tails = Json::array();
  for (std::size_t j = 0; j < d.tails.rows(); ++j) {
    Json row = Json::array();
    for (std::size_t i = 0; i < d.tails.cols(); ++i) row.push_back(d.tails(j, i));
    tails.push_back(std::move(row));
  }
  Json ids = Json::array();
  for (const auto& e : h.edges()) ids.push_back(e.id);
  out.result = {{"nodes", h.labels()},
                {"edges", std::move(ids)},
                {"W", rational_matrix_json(d.weights)},
                {"T", std::move(tails)},
                {"A", rational_matrix_json(d.adjacency)}};
  out.summary = "W (" + std::to_string(d.weights.rows()) + "x" +
                std::to_string(d.weights.cols()) + "):";
  for (std::size_t i = 0; i < d.weights.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < d.weights.cols(); ++j) {
      row.push_back(to_string(d.weights(i, j)));
    }
    out.summary += "\n  " + join(row, " ");
  }
  out.summary += "\nT (" + std::to_string(d.tails.rows()) + "x" +
                 std::to_string(d.tails.cols()) + "):";
  for (std::size_t j = 0; j < d.tails.rows(); ++j) {
    std::vector<std::string> row;
    for (std::size_t i = 0; i < d.tails.cols(); ++i) {
      row.push_back(std::to_string(d.tails(j, i)));
    }
    out.summary += "\n  " + join(row, " ");
  }
  return out;
}

std::vector<double> initial_state(const Document& doc, const Options& options,
                                  std::size_t size) {
  std::vector<double> x0(size);
  if (!options.point.empty()) {
    const auto point = parse_point(options.point);
    if (point.size() != size) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "--point has " + std::to_string(point.size()) +
                      " values, expected " + std::to_string(size));
    }
    std::transform(point.begin(), point.end(), x0.begin(), to_double);
    return x0;
  }
  (void)doc;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  for (auto& v : x0) v = coord(rng);
  return x0;
}

Outcome cmd_simulate(const Document& doc, const Options& options) {
  Outcome out;
  const auto& h = doc.graph;
  const auto sys = coupling_for(doc);
  const auto x0 = initial_state(doc, options, h.node_count() * sys.dim());
  const auto trajectory = integrate(h, sys, x0, options.dt, options.steps);
  std::string csv = "t";
  for (NodeIndex i = 0; i < h.node_count(); ++i) {
    for (std::size_t c = 0; c < sys.dim(); ++c) {
      csv += ",x_" + std::to_string(i) + "_" + std::to_string(c);
    }
  }
  csv += "\n";
  for (std::size_t s = 0; s < trajectory.states.size(); ++s) {
    csv += fmt(static_cast<double>(s) * options.dt);
    for (double v : trajectory.states[s]) csv += "," + fmt(v);
    csv += "\n";
  }
  const auto& final_state = trajectory.states.back();
  std::vector<std::string> text;
  for (double v : final_state) text.push_back(short_fmt(v));
  out.csv = std::move(csv);
  out.result = {{"dt", options.dt},
                {"steps", options.steps},
                {"final_time", static_cast<double>(options.steps) * options.dt},
                {"initial_state", x0},
                {"final_state", final_state},
                {"warnings", sys.warnings()}};
  out.summary = "integrated " + std::to_string(options.steps) +
                " RK4 steps to t=" +
                short_fmt(static_cast<double>(options.steps) * options.dt) +
                "\nfinal state: " + join(text, " ");
  return out;
}

Outcome cmd_invariance(const Document& doc, const Options& options) {
  Outcome out;
  const auto& h = doc.graph;
  const auto sys = coupling_for(doc);
  const Partition part =
      partition_or(doc, options, [&] { return coarsest_balanced(h); });
  const auto tangency =
      sys.exact() ? flow_invariance_exact(h, sys, part, options.trials, options.seed)
                  : flow_invariance_float(h, sys, part, options.trials,
                                          options.seed, options.tol);
  std::mt19937_64 rng(options.seed);
  const auto start = generic_point_on(part, sys.dim(), rng);
  std::vector<double> x0(start.size());
  std::transform(start.begin(), start.end(), x0.begin(), to_double);
  const auto flow = flow_invariance_trajectory(h, sys, part, x0, options.dt,
                                               options.steps, 1e-8);
  const bool balanced = is_balanced(h, part).balanced;
  out.pass = tangency.pass && flow.pass;
  out.result = {{"partition", partition_json(part, h.labels())},
                {"balanced", balanced},
                {"tangency", {{"mode", tangency.mode},
                              {"trials", tangency.trials},
                              {"pass", tangency.pass}}},
                {"trajectory", {{"dt", options.dt},
                                {"steps", options.steps},
                                {"max_distance", flow.max_spread},
                                {"pass", flow.pass}}}};
  if (tangency.mode == "float") {
    out.result["tangency"]["max_spread"] = tangency.max_spread;
  }
  if (tangency.witness) {
    out.result["tangency"]["witness"] =
        invariance_witness_json(*tangency.witness, h.labels(), false);
  }
  out.summary = format_partition(part, h.labels()) + ": tangency " +
                (tangency.pass ? "holds" : "fails") + " (" + tangency.mode +
                ", " + std::to_string(tangency.trials) + " points), " +
                "trajectory distance " + short_fmt(flow.max_spread);
  if (tangency.witness) {
    out.summary += "\nwitness: cells " + h.label(tangency.witness->cell) +
                   " and " + h.label(tangency.witness->other) + " get " +
                   tangency.witness->cell_value + " vs " +
                   tangency.witness->other_value;
  }
  return out;
}

Outcome cmd_restriction(const Document& doc, const Options& options) {
  Outcome out;
  const auto& h = doc.graph;
  const auto sys = coupling_for(doc);
  const Partition part =
      partition_or(doc, options, [&] { return coarsest_balanced(h); });
  const auto report =
      restriction_equals_quotient(h, part, sys, options.trials, options.seed);
  Document q;
  q.graph = report.quotient;
  out.pass = report.pass;
  out.result = {{"partition", partition_json(part, h.labels())},
                {"trials", report.trials},
                {"pass", report.pass},
                {"quotient", document_json(q)}};
  if (report.witness) {
    out.result["witness"] =
        invariance_witness_json(*report.witness, h.labels(), true);
  }
  out.summary = "restricted field " +
                std::string(report.pass ? "matches" : "differs from") +
                " the quotient field at " + std::to_string(report.trials) +
                " points";
  return out;
}

Outcome cmd_replicator_stability(const Document& doc, const Options& options) {
  Outcome out;
  const auto& sys = required_matrices(doc);
  const std::size_t n = sys.size();
  std::vector<Rational> p;
  if (options.point.empty()) {
    p.assign(n, Rational(1, n));
  } else {
    p = parse_point(options.point);
    if (p.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "--point has " + std::to_string(p.size()) +
                      " values, expected " + std::to_string(n));
    }
  }
  std::vector<double> pd(n);
  std::transform(p.begin(), p.end(), pd.begin(), to_double);
  const auto report = stability_report(sys, p, options.tol);
  std::vector<std::string> point_text;
  for (const auto& q : p) point_text.push_back(to_string(q));
  out.result = {{"point", point_text},
                {"on_simplex", on_simplex(pd)},
                {"simplex_drift", to_string(simplex_drift_exact(sys, p))},
                {"jacobian", rational_matrix_json(*report.exact_jacobian)},
                {"fd_deviation", *report.fd_deviation},
                {"eigenvalues", spectrum_json(report.spectrum)},
                {"diagonal_invariant", report.diagonal_invariant}};
  if (report.diagonal_eigenvalue) {
    out.result["diagonal_eigenvalue"] = complex_json(*report.diagonal_eigenvalue);
  }
  out.result["transverse"] = spectrum_json(report.transverse);
  out.result["verdict"] = report.verdict;
  out.pass = *report.fd_deviation <= 1e-6;
  std::vector<std::string> values;
  for (const auto& e : report.spectrum) {
    values.push_back(complex_text(e.value) + " (" +
                     std::string(spectral_class_name(e.kind)) + ")");
  }
  out.summary = "equilibrium " + join(point_text, ",") + "\neigenvalues: " +
                join(values, ", ") + "\ntransverse verdict: " +
                report.verdict + "\nfinite-difference deviation: " +
                short_fmt(*report.fd_deviation);
  return out;
}

Outcome cmd_synchrony_of_matrix(const Document& doc, const Options& options) {
  Outcome out;
  const auto& sys = required_matrices(doc);
  if (options.matrix != "K" && options.matrix != "H") {
    usage("--matrix must be K or H");
  }
  const Matrix<Rational>& m = options.matrix == "K" ? sys.K : sys.H;
  const auto& labels = doc.graph.labels();
  out.result["matrix"] = options.matrix;
  if (!options.partition.empty()) {
    const Partition part = parse_partition(options.partition, labels);
    const bool ok = matrix_synchrony_check(m, part);
    out.pass = ok;
    out.result["partition"] = partition_json(part, labels);
    out.result["synchrony"] = ok;
    out.summary = format_partition(part, labels) +
                  (ok ? " is a synchrony space of " : " is not a synchrony space of ") +
                  options.matrix;
    return out;
  }
  std::vector<Partition> partitions;
  if (options.matrix == "K") {
    const auto found = replicator_synchrony(sys, options.cap, options.trials,
                                            options.seed);
    partitions = found.partitions;
    out.result["tangency_confirmed"] = found.tangency_confirmed;
    out.pass = found.tangency_confirmed;
  } else {
    partitions = enumerate_equitable(m, {}, options.cap);
  }
  Json list = Json::array();
  out.summary = std::to_string(partitions.size()) + " synchrony partitions of " +
                options.matrix;
  for (const auto& p : partitions) {
    list.push_back(partition_json(p, labels));
    out.summary += "\n  " + format_partition(p, labels);
  }
  out.result["count"] = partitions.size();
  out.result["partitions"] = std::move(list);
  return out;
}

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table = {
      {"validate", cmd_validate},
      {"info", cmd_info},
      {"input-eq", cmd_input_eq},
      {"check-balanced", cmd_check_balanced},
      {"coarsest", cmd_coarsest},
      {"lattice", cmd_lattice},
      {"quotient", cmd_quotient},
      {"incidence", cmd_incidence},
      {"simulate", cmd_simulate},
      {"invariance", cmd_invariance},
      {"restriction-check", cmd_restriction},
      {"replicator-stability", cmd_replicator_stability},
      {"synchrony-of-matrix", cmd_synchrony_of_matrix},
  };
  return table;
}

bool is_usage_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsageError:
    case ErrorCode::kTooLarge:
    case ErrorCode::kInvalidPartition:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kSemanticError:
    case ErrorCode::kSyntaxError:
    case ErrorCode::kUnknownNode:
      return true;
    default:
      return false;
  }
}

}  // namespace

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names = {
      "validate",   "info",          "input-eq",          "check-balanced",
      "coarsest",   "lattice",       "quotient",          "incidence",
      "simulate",   "invariance",    "restriction-check", "replicator-stability",
      "synchrony-of-matrix"};
  return names;
}

CouplingSystem coupling_for(const Document& doc) {
  const CouplingSpec spec =
      doc.coupling.value_or(CouplingSpec{CouplingFamily::kProduct, 1,
                                         InternalDynamics::kDecay});
  return CouplingSystem::builtin(spec.family, spec.internal, spec.dim);
}

Report execute(std::string_view command, const Document& doc,
               const Options& options) {
  Json report;
  report["tool"] = "hypersync";
  report["version"] = HYPERSYNC_VERSION;
  report["command"] = command;
  report["input_digest"] = "sha256:" + (doc.digest.empty()
                                            ? sha256_hex(print_document(doc))
                                            : doc.digest);
  report["seed"] = options.seed;
  Report out;
  const auto& table = handlers();
  auto it = table.find(command);
  try {
    if (it == table.end()) usage("unknown command '" + std::string(command) + "'");
    Outcome outcome = it->second(doc, options);
    report["status"] = outcome.pass ? "pass" : "fail";
    report["result"] = std::move(outcome.result);
    out.summary = std::move(outcome.summary);
    out.csv = std::move(outcome.csv);
    out.exit_code = outcome.pass ? 0 : 1;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = {{"code", error_code_name(e.code())},
                       {"message", e.what()}};
    out.summary = std::string(error_code_name(e.code())) + ": " + e.what();
    out.exit_code = is_usage_failure(e.code()) ? 2 : 1;
  }
  out.json = report.dump(2) + "\n";
  return out;
}

}  // namespace hypersync
