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

#include "hypersync/hypersync.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hypersync/commands.hpp"
#include "hypersync/document.hpp"
#include "hypersync/error.hpp"

struct hs_document {
  hypersync::Document doc;
};

struct hs_report {
  hypersync::Report report;
};

namespace {

thread_local std::string last_error;

hs_status to_status(hypersync::ErrorCode code) {
  return static_cast<hs_status>(static_cast<int>(code) + 1);
}

hs_status fail(hs_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
hs_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const hypersync::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HS_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(HS_INTERNAL_ERROR, e.what());
  }
}

}  // namespace

extern "C" {

void hs_options_init(hs_options* options) {
  if (!options) return;
  const hypersync::Options defaults;
  options->seed = defaults.seed;
  options->cap = defaults.cap;
  options->dt = defaults.dt;
  options->steps = defaults.steps;
  options->tol = defaults.tol;
  options->trials = defaults.trials;
  options->partition = nullptr;
  options->point = nullptr;
  options->matrix = nullptr;
}

hs_status hs_document_parse(const char* text, size_t length,
                            hs_document** out) {
  if (!text || !out) return fail(HS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new hs_document{hypersync::parse_document(std::string_view(text, length))};
    return HS_OK;
  });
}

hs_status hs_document_load(const char* path, hs_document** out) {
  if (!path || !out) return fail(HS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new hs_document{hypersync::load_document(path)};
    return HS_OK;
  });
}

void hs_document_free(hs_document* doc) { delete doc; }

size_t hs_document_node_count(const hs_document* doc) {
  return doc ? doc->doc.graph.node_count() : 0;
}

size_t hs_document_edge_count(const hs_document* doc) {
  return doc ? doc->doc.graph.edge_count() : 0;
}

hs_status hs_document_print(const hs_document* doc, char** out) {
  if (!doc || !out) return fail(HS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string text = hypersync::print_document(doc->doc);
    char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buffer) throw std::bad_alloc();
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
    return HS_OK;
  });
}

void hs_string_free(char* text) { std::free(text); }

hs_status hs_execute(const hs_document* doc, const char* command,
                     const hs_options* options, hs_report** out) {
  if (!doc || !command || !out) return fail(HS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    hypersync::Options opts;
    if (options) {
      opts.seed = options->seed;
      opts.cap = options->cap;
      opts.dt = options->dt;
      opts.steps = options->steps;
      opts.tol = options->tol;
      opts.trials = options->trials;
      if (options->partition) opts.partition = options->partition;
      if (options->point) opts.point = options->point;
      if (options->matrix) opts.matrix = options->matrix;
    }
    *out = new hs_report{hypersync::execute(command, doc->doc, opts)};
    return HS_OK;
  });
}

int hs_report_exit_code(const hs_report* report) {
  return report ? report->report.exit_code : 2;
}

const char* hs_report_json(const hs_report* report) {
  return report ? report->report.json.c_str() : "";
}

const char* hs_report_summary(const hs_report* report) {
  return report ? report->report.summary.c_str() : "";
}

const char* hs_report_csv(const hs_report* report) {
  return report ? report->report.csv.c_str() : "";
}

void hs_report_free(hs_report* report) { delete report; }

const char* hs_last_error(void) { return last_error.c_str(); }

const char* hs_status_name(hs_status status) {
  switch (status) {
    case HS_OK: return "OK";
    case HS_INVALID_ARGUMENT: return "InvalidArgument";
    case HS_INTERNAL_ERROR: return "InternalError";
    default:
      break;
  }
  const int index = static_cast<int>(status) - 1;
  if (index < 0 || index > static_cast<int>(hypersync::ErrorCode::kUsageError)) {
    return "Unknown";
  }
  return hypersync::error_code_name(static_cast<hypersync::ErrorCode>(index)).data();
}

const char* hs_version(void) { return HYPERSYNC_VERSION; }

}  // extern "C"
