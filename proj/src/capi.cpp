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

#include "ghzsim/ghzsim.h"

#include <exception>
#include <new>
#include <string>

#include "ghzsim/experiments.hpp"

struct ghz_config {
  ghzsim::ScenarioConfig cfg;
  std::string scratch;
};

struct ghz_result {
  ghzsim::ScenarioResult res;
  std::string scratch;
};

namespace {

thread_local std::string g_last_error;

ghz_status to_status(ghzsim::ErrorCode c) {
  using ghzsim::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidArgument: return GHZ_ERR_INVALID_ARGUMENT;
    case ErrorCode::SpaceMismatch: return GHZ_ERR_SPACE_MISMATCH;
    case ErrorCode::DimensionMismatch: return GHZ_ERR_DIMENSION_MISMATCH;
    case ErrorCode::MissingLevel: return GHZ_ERR_MISSING_LEVEL;
    case ErrorCode::Numerical: return GHZ_ERR_NUMERICAL;
    case ErrorCode::ConfigParse: return GHZ_ERR_CONFIG_PARSE;
    case ErrorCode::UnknownScenario: return GHZ_ERR_UNKNOWN_SCENARIO;
    case ErrorCode::Io: return GHZ_ERR_IO;
  }
  return GHZ_ERR_INTERNAL;
}

template <class F>
ghz_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return GHZ_OK;
  } catch (const ghzsim::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return GHZ_ERR_INTERNAL;
}

ghz_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return GHZ_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* ghz_version(void) { return "0.1.0"; }

const char* ghz_last_error(void) { return g_last_error.c_str(); }

size_t ghz_scenario_count(void) { return ghzsim::scenario_names().size(); }

const char* ghz_scenario_name(size_t i) {
  const auto& n = ghzsim::scenario_names();
  return i < n.size() ? n[i].c_str() : nullptr;
}

ghz_status ghz_config_create(const char* scenario, ghz_config** out) {
  if (!scenario) return null_arg("scenario");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new ghz_config{ghzsim::default_config(scenario), {}}; });
}

ghz_status ghz_config_load_file(ghz_config* c, const char* path) {
  if (!c) return null_arg("config");
  if (!path) return null_arg("path");
  return guard([&] { c->cfg = ghzsim::load_config(path, c->cfg); });
}

ghz_status ghz_config_parse(ghz_config* c, const char* text) {
  if (!c) return null_arg("config");
  if (!text) return null_arg("text");
  return guard([&] { c->cfg = ghzsim::parse_config(text, c->cfg); });
}

ghz_status ghz_config_set(ghz_config* c, const char* key, const char* value) {
  if (!c) return null_arg("config");
  if (!key || !value) return null_arg("key/value");
  return guard([&] { ghzsim::set_config_value(c->cfg, key, value); });
}

ghz_status ghz_config_get(ghz_config* c, const char* key, const char** value) {
  if (!c) return null_arg("config");
  if (!key || !value) return null_arg("key/value");
  return guard([&] {
    c->scratch = ghzsim::get_config_value(c->cfg, key);
    *value = c->scratch.c_str();
  });
}

ghz_status ghz_config_emit(ghz_config* c, const char** text) {
  if (!c) return null_arg("config");
  if (!text) return null_arg("text");
  return guard([&] {
    c->scratch = ghzsim::emit_config(c->cfg);
    *text = c->scratch.c_str();
  });
}

void ghz_config_destroy(ghz_config* c) { delete c; }

ghz_status ghz_run(const ghz_config* c, ghz_result** out) {
  if (!c) return null_arg("config");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new ghz_result{ghzsim::run_scenario(c->cfg), {}}; });
}

size_t ghz_result_check_count(const ghz_result* r) { return r ? r->res.checks.size() : 0; }

ghz_status ghz_result_check(const ghz_result* r, size_t i, ghz_check* out) {
  if (!r) return null_arg("result");
  if (!out) return null_arg("out");
  if (i >= r->res.checks.size()) {
    g_last_error = "check index out of range";
    return GHZ_ERR_INVALID_ARGUMENT;
  }
  const auto& c = r->res.checks[i];
  out->id = c.id.c_str();
  out->description = c.description.c_str();
  out->value = c.value;
  out->expected = c.expected;
  out->tolerance = c.tolerance;
  out->kind = static_cast<ghz_check_kind>(c.kind);
  out->passed = c.passed ? 1 : 0;
  return GHZ_OK;
}

int ghz_result_all_passed(const ghz_result* r) { return r && r->res.all_passed() ? 1 : 0; }

size_t ghz_result_value_count(const ghz_result* r) { return r ? r->res.values.size() : 0; }

ghz_status ghz_result_value(const ghz_result* r, size_t i, const char** name,
                            double* value) {
  if (!r) return null_arg("result");
  if (!name || !value) return null_arg("name/value");
  if (i >= r->res.values.size()) {
    g_last_error = "value index out of range";
    return GHZ_ERR_INVALID_ARGUMENT;
  }
  *name = r->res.values[i].first.c_str();
  *value = r->res.values[i].second;
  return GHZ_OK;
}

ghz_status ghz_result_summary_text(ghz_result* r, const char** text) {
  if (!r) return null_arg("result");
  if (!text) return null_arg("text");
  return guard([&] {
    r->scratch = ghzsim::format_summary_text({r->res});
    *text = r->scratch.c_str();
  });
}

ghz_status ghz_result_write(const ghz_result* r, const char* out_dir) {
  if (!r) return null_arg("result");
  if (!out_dir) return null_arg("out_dir");
  return guard([&] { ghzsim::emit_report({r->res}, out_dir); });
}

void ghz_result_destroy(ghz_result* r) { delete r; }

}  // extern "C"
