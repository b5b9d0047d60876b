// Copyright 2026 The ghzsim Authors
//
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

/* C interface to the ghzsim engine. All functions return a ghz_status; on
 * failure ghz_last_error() describes the problem (thread-local). Strings
 * returned through out-parameters stay valid until the owning handle is
 * destroyed or the same getter is called again on it. */
#ifndef GHZSIM_GHZSIM_H_
#define GHZSIM_GHZSIM_H_

#include <stddef.h>

#if defined(GHZSIM_BUILDING_LIBRARY)
#define GHZ_API __attribute__((visibility("default")))
#else
#define GHZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghz_status {
  GHZ_OK = 0,
  GHZ_ERR_INVALID_ARGUMENT = 1,
  GHZ_ERR_SPACE_MISMATCH = 2,
  GHZ_ERR_DIMENSION_MISMATCH = 3,
  GHZ_ERR_MISSING_LEVEL = 4,
  GHZ_ERR_NUMERICAL = 5,
  GHZ_ERR_CONFIG_PARSE = 6,
  GHZ_ERR_UNKNOWN_SCENARIO = 7,
  GHZ_ERR_IO = 8,
  GHZ_ERR_INTERNAL = 99
} ghz_status;

typedef enum ghz_check_kind {
  GHZ_CHECK_WITHIN = 0,
  GHZ_CHECK_AT_LEAST = 1,
  GHZ_CHECK_AT_MOST = 2,
  GHZ_CHECK_INFO = 3
} ghz_check_kind;

typedef struct ghz_config ghz_config;
typedef struct ghz_result ghz_result;

typedef struct ghz_check {
  const char* id;
  const char* description;
  double value;
  double expected;
  double tolerance;
  ghz_check_kind kind;
  int passed;
} ghz_check;

GHZ_API const char* ghz_version(void);
GHZ_API const char* ghz_last_error(void);

GHZ_API size_t ghz_scenario_count(void);
GHZ_API const char* ghz_scenario_name(size_t i);

/* Default configuration of a named scenario. */
GHZ_API ghz_status ghz_config_create(const char* scenario, ghz_config** out);
/* Overlay "key = value" lines from a file onto an existing config. */
GHZ_API ghz_status ghz_config_load_file(ghz_config* c, const char* path);
GHZ_API ghz_status ghz_config_parse(ghz_config* c, const char* text);
GHZ_API ghz_status ghz_config_set(ghz_config* c, const char* key, const char* value);
GHZ_API ghz_status ghz_config_get(ghz_config* c, const char* key, const char** value);
GHZ_API ghz_status ghz_config_emit(ghz_config* c, const char** text);
GHZ_API void ghz_config_destroy(ghz_config* c);

GHZ_API ghz_status ghz_run(const ghz_config* c, ghz_result** out);
GHZ_API size_t ghz_result_check_count(const ghz_result* r);
GHZ_API ghz_status ghz_result_check(const ghz_result* r, size_t i, ghz_check* out);
GHZ_API int ghz_result_all_passed(const ghz_result* r);
GHZ_API size_t ghz_result_value_count(const ghz_result* r);
GHZ_API ghz_status ghz_result_value(const ghz_result* r, size_t i,
                                    const char** name, double* value);
GHZ_API ghz_status ghz_result_summary_text(ghz_result* r, const char** text);
/* Writes CSV tables, summary.csv/.txt and gnuplot scripts into out_dir. */
GHZ_API ghz_status ghz_result_write(const ghz_result* r, const char* out_dir);
GHZ_API void ghz_result_destroy(ghz_result* r);

#ifdef __cplusplus
}
#endif

#endif /* GHZSIM_GHZSIM_H_ */
