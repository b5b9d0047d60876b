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

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ghzsim/dynamics.hpp"
#include "ghzsim/model.hpp"

namespace ghzsim {

enum class ModelKind { Full, Effective, ZPumpOnly, Symmetric4x4 };
enum class IntegratorKind { Auto, Explicit, Stiff };

const char* model_kind_name(ModelKind m);
ModelKind parse_model_kind(const std::string& s);

struct ScenarioConfig {
  std::string scenario = "custom";
  ModelParams params;  // in config units; g-reference is params.g[0] for MHz
  ModelKind model = ModelKind::Full;
  // fully-mixed | ket:<labels> | state:<name>
  std::string initial = "fully-mixed";
  int cutoff = 2;
  double t_max = 2000.0;
  int grid = 201;
  double rtol = 1e-8;
  double atol = 1e-10;
  std::string out_dir = "ghzsim-out";
  // krylov | integrate | direct | none
  std::string steady = "krylov";
  IntegratorKind integrator = IntegratorKind::Auto;
  double stiff_step = 50.0;

  ModelParams params_in_g_units() const;
  void validate() const;
  bool operator==(const ScenarioConfig&) const = default;
};

// Flat "key = value" text, '#' comments.
ScenarioConfig parse_config(const std::string& text,
                            ScenarioConfig base = ScenarioConfig{});
ScenarioConfig load_config(const std::string& path,
                           ScenarioConfig base = ScenarioConfig{});
std::string emit_config(const ScenarioConfig& c);
void set_config_value(ScenarioConfig& c, const std::string& key,
                      const std::string& value);
std::string get_config_value(const ScenarioConfig& c, const std::string& key);
std::vector<std::string> config_keys();

const std::vector<std::string>& scenario_names();
bool is_known_scenario(const std::string& name);
ScenarioConfig default_config(const std::string& scenario);

enum class CheckKind { Within, AtLeast, AtMost, Info };

struct Check {
  std::string id;           // "<criterion>.<name>"
  std::string description;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  CheckKind kind = CheckKind::Within;
  bool passed = true;
};

Check make_check(std::string id, std::string description, double value,
                 double expected, double tolerance, CheckKind kind);

struct CsvTable {
  std::string name;  // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ScenarioResult {
  std::string scenario;
  ScenarioConfig config;
  std::vector<CsvTable> tables;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> values;
  std::string text;
  bool all_passed() const;
};

// Model and initial state exactly as a config describes them.
LindbladModel build_model(const ScenarioConfig& c);
DensityMatrix build_initial_state(const ScenarioConfig& c,
                                  const SpacePtr& space);
std::vector<NamedObservable> standard_observables(const SpacePtr& space);
Trajectory run_trajectory(const ScenarioConfig& c);

ScenarioResult run_scenario(const ScenarioConfig& c);

// Individual scenario bodies (exposed for tests).
ScenarioResult run_param_table(const ScenarioConfig& c);
ScenarioResult run_g_fluctuation(const ScenarioConfig& c);
ScenarioResult run_appendix_compare(const ScenarioConfig& c);
std::string zeno_report_text();

// Writes <out>/<table>.csv for every table, <out>/summary.csv and a gnuplot
// script per trajectory table. Returns the written paths.
std::vector<std::string> emit_report(const std::vector<ScenarioResult>& results,
                                     const std::string& out_dir);
std::string format_csv(const CsvTable& t);
std::string format_summary_csv(const std::vector<ScenarioResult>& results);
std::string format_summary_text(const std::vector<ScenarioResult>& results);
std::string format_double(double x);

}  // namespace ghzsim
