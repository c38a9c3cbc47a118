// Copyright 2026 The galdual Authors
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

#ifndef GALDUAL_GALDUAL_H_
#define GALDUAL_GALDUAL_H_

/* C interface to the galdual engine. Objects are opaque handles created by
 * the parse functions and released with the matching free function. Every
 * fallible call returns a gd_status; on failure gd_last_error() describes the
 * problem until the next call on the same thread. Strings returned through
 * out-parameters are owned by the caller and released with gd_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GD_API __declspec(dllexport)
#else
#define GD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gd_status {
  GD_OK = 0,
  GD_ERROR_PARSE = 1,
  GD_ERROR_VALIDATION = 2,
  GD_ERROR_DOMAIN_MISMATCH = 3,
  GD_ERROR_RESOURCE_LIMIT = 4,
  GD_ERROR_PRECONDITION = 5,
  GD_ERROR_NAME = 6,
  GD_ERROR_INVALID_ARGUMENT = 7,
  GD_ERROR_INTERNAL = 8
} gd_status;

typedef struct gd_structure gd_structure;
typedef struct gd_transforms gd_transforms;
typedef struct gd_report gd_report;

typedef struct gd_limits {
  uint64_t max_tuples;
  uint32_t max_group_degree;
  uint32_t max_similarity_degree;
  uint32_t max_listed_objects;
} gd_limits;

/* Options for gd_check. Null handles are replaced by seeded random
 * instances on n elements; zero fields take the law's default. */
typedef struct gd_check_options {
  const gd_structure* structure;
  const gd_structure* target;
  const gd_transforms* transforms;
  uint32_t n;
  uint32_t arity;
  const char* qtypes; /* e.g. "1" or "1;2,1"; NULL for (1) */
  uint64_t seed;
  uint32_t samples;
} gd_check_options;

GD_API const char* gd_version(void);
GD_API const char* gd_last_error(void);
GD_API const char* gd_status_name(gd_status status);
GD_API void gd_limits_default(gd_limits* out);
GD_API void gd_check_options_default(gd_check_options* out);
GD_API void gd_string_free(char* text);

GD_API gd_status gd_structure_parse(const char* text, gd_structure** out);
GD_API gd_status gd_structure_render(const gd_structure* structure, char** out);
GD_API size_t gd_structure_domain_size(const gd_structure* structure);
GD_API void gd_structure_free(gd_structure* structure);

/* Sets *is_transforms to 1 for a transform document (permutations or
 * similarities present), 0 for a structure document. */
GD_API gd_status gd_document_kind(const char* text, int* is_transforms);

GD_API gd_status gd_transforms_parse(const char* text, gd_transforms** out);
GD_API gd_status gd_transforms_render(const gd_transforms* transforms,
                                      char** out);
GD_API size_t gd_transforms_domain_size(const gd_transforms* transforms);
GD_API void gd_transforms_free(gd_transforms* transforms);

/* Computations. limits may be NULL for the defaults. */
GD_API gd_status gd_aut(const gd_structure* structure, const gd_limits* limits,
                        gd_report** out);
GD_API gd_status gd_inv(const gd_transforms* transforms, uint32_t arity,
                        const char* qtypes, const gd_limits* limits,
                        gd_report** out);
GD_API gd_status gd_closure(const gd_transforms* transforms, const char* mode,
                            const gd_limits* limits, gd_report** out);
GD_API gd_status gd_define(const gd_structure* structure,
                           const gd_structure* target, int with_equality,
                           const gd_limits* limits, gd_report** out);
GD_API gd_status gd_sim(const gd_structure* structure, const gd_limits* limits,
                        gd_report** out);
GD_API gd_status gd_quotient(const gd_structure* structure,
                             const gd_limits* limits, gd_report** out);
GD_API gd_status gd_check(const char* law, const gd_check_options* options,
                          const gd_limits* limits, gd_report** out);

GD_API int gd_report_passed(const gd_report* report);
GD_API gd_status gd_report_json(const gd_report* report, char** out);
GD_API gd_status gd_report_text(const gd_report* report, char** out);
GD_API void gd_report_free(gd_report* report);

#ifdef __cplusplus
}
#endif

#endif /* GALDUAL_GALDUAL_H_ */
