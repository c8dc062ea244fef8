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

#ifndef HYPERSYNC_HYPERSYNC_H_
#define HYPERSYNC_HYPERSYNC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HYPERSYNC_BUILDING_LIBRARY)
#define HS_API __declspec(dllexport)
#else
#define HS_API __declspec(dllimport)
#endif
#else
#define HS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
  HS_OK = 0,
  HS_EMPTY_TAIL,
  HS_EMPTY_HEAD,
  HS_UNKNOWN_NODE,
  HS_UNKNOWN_EDGE,
  HS_DUPLICATE_EDGE_ID,
  HS_NON_POSITIVE_MULTIPLICITY,
  HS_INVALID_PARTITION,
  HS_TAIL_MISMATCH,
  HS_HEAD_OVERLAP,
  HS_WEIGHT_MISMATCH,
  HS_TOO_LARGE,
  HS_NOT_BALANCED,
  HS_DIMENSION_MISMATCH,
  HS_MISSING_COUPLING,
  HS_ASYMMETRIC_COUPLING,
  HS_NON_FINITE_STATE,
  HS_NO_CONVERGENCE,
  HS_NOT_EQUILIBRIUM,
  HS_ZERO_COMPONENT,
  HS_SYNTAX_ERROR,
  HS_SEMANTIC_ERROR,
  HS_USAGE_ERROR,
  HS_INVALID_ARGUMENT,
  HS_INTERNAL_ERROR
} hs_status;

typedef struct hs_document hs_document;
typedef struct hs_report hs_report;

typedef struct hs_options {
  uint64_t seed;
  size_t cap;
  double dt;
  size_t steps;
  double tol;
  size_t trials;
  const char* partition; /* NULL or "1,5,6|2,4|3" */
  const char* point;     /* NULL or comma separated values */
  const char* matrix;    /* NULL, "K" or "H" */
} hs_options;

/* Fills the defaults. */
HS_API void hs_options_init(hs_options* options);

HS_API hs_status hs_document_parse(const char* text, size_t length,
                                   hs_document** out);
HS_API hs_status hs_document_load(const char* path, hs_document** out);
HS_API void hs_document_free(hs_document* doc);
HS_API size_t hs_document_node_count(const hs_document* doc);
HS_API size_t hs_document_edge_count(const hs_document* doc);
/* Canonical text; release with hs_string_free. */
HS_API hs_status hs_document_print(const hs_document* doc, char** out);
HS_API void hs_string_free(char* text);

/* Returns HS_OK whenever a report was produced, including failed analyses;
   inspect hs_report_exit_code. options may be NULL. */
HS_API hs_status hs_execute(const hs_document* doc, const char* command,
                            const hs_options* options, hs_report** out);
HS_API int hs_report_exit_code(const hs_report* report);
HS_API const char* hs_report_json(const hs_report* report);
HS_API const char* hs_report_summary(const hs_report* report);
HS_API const char* hs_report_csv(const hs_report* report);
HS_API void hs_report_free(hs_report* report);

/* Message of the last failure on this thread. */
HS_API const char* hs_last_error(void);
HS_API const char* hs_status_name(hs_status status);
HS_API const char* hs_version(void);

#ifdef __cplusplus
}
#endif

#endif  /* HYPERSYNC_HYPERSYNC_H_ */
