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

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ghzsim/experiments.hpp"

namespace ghzsim {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE)
    fail(ErrorCode::ConfigParse, "key '" + key + "': not a number: '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  double x = to_double(key, v);
  if (x != static_cast<double>(static_cast<int>(x)))
    fail(ErrorCode::ConfigParse, "key '" + key + "': not an integer: '" + v + "'");
  return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "off" || v == "no") return false;
  fail(ErrorCode::ConfigParse, "key '" + key + "': not a boolean: '" + v + "'");
}

const char* integrator_name(IntegratorKind k) {
  switch (k) {
    case IntegratorKind::Explicit: return "explicit";
    case IntegratorKind::Stiff: return "stiff";
    default: return "auto";
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* model_kind_name(ModelKind m) {
  switch (m) {
    case ModelKind::Full: return "full";
    case ModelKind::Effective: return "effective";
    case ModelKind::ZPumpOnly: return "zpump-only";
    case ModelKind::Symmetric4x4: return "symmetric-4x4";
  }
  return "full";
}

ModelKind parse_model_kind(const std::string& s) {
  if (s == "full") return ModelKind::Full;
  if (s == "effective") return ModelKind::Effective;
  if (s == "zpump-only") return ModelKind::ZPumpOnly;
  if (s == "symmetric-4x4") return ModelKind::Symmetric4x4;
  fail(ErrorCode::ConfigParse, "unknown model '" + s + "'");
}

ModelParams ScenarioConfig::params_in_g_units() const {
  if (params.units == Units::GUnits) return params;
  return params.to_g_units(params.g[0]);
}

void ScenarioConfig::validate() const {
  require(is_known_scenario(scenario), ErrorCode::UnknownScenario,
          "unknown scenario '" + scenario + "'");
  params.validate();
  require(t_max > 0, ErrorCode::InvalidArgument, "tmax must be positive");
  require(grid >= 2, ErrorCode::InvalidArgument, "grid needs >= 2 points");
  require(rtol > 0 && atol > 0, ErrorCode::InvalidArgument,
          "tolerances must be positive");
  require(stiff_step > 0, ErrorCode::InvalidArgument,
          "stiff_step must be positive");
  require(cutoff >= 0, ErrorCode::InvalidArgument, "cutoff must be >= 0");
  if (model == ModelKind::Full || model == ModelKind::ZPumpOnly)
    require(cutoff >= 1, ErrorCode::InvalidArgument,
            "full-model runs need cutoff >= 1");
  require(params.units == Units::GUnits || params.g[0] > 0,
          ErrorCode::InvalidArgument, "MHz configs need g1_mhz > 0");
  require(steady == "krylov" || steady == "integrate" || steady == "direct" ||
              steady == "none",
          ErrorCode::InvalidArgument, "unknown steady-state method '" + steady + "'");
}

std::vector<std::string> config_keys() {
  return {"scenario", "units",   "g1",        "g2",      "g3",     "omega",
          "delta1",   "delta2",  "delta3",    "omega_r", "delta_cap",
          "u12",      "u13",     "u23",       "gamma_e", "gamma_r", "kappa",
          "stark_comp", "model", "initial",   "cutoff",  "tmax",   "grid",
          "rtol",     "atol",    "steady",    "integrator", "stiff_step",
          "out_dir"};
}

void set_config_value(ScenarioConfig& c, const std::string& key_in,
                      const std::string& v) {
  std::string key = key_in;
  // g1_mhz and g1 share storage; the units key says how to read them.
  const std::string suffix = "_mhz";
  if (key.size() > suffix.size() &&
      key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0)
    key = key.substr(0, key.size() - suffix.size());
  ModelParams& p = c.params;
  if (key == "scenario") {
    c.scenario = v;
  } else if (key == "units") {
    if (v == "g") p.units = Units::GUnits;
    else if (v == "mhz") p.units = Units::MHz2Pi;
    else fail(ErrorCode::ConfigParse, "units must be 'g' or 'mhz', got '" + v + "'");
  } else if (key == "g") {
    p.g.fill(to_double(key_in, v));
  } else if (key == "g1") { p.g[0] = to_double(key_in, v);
  } else if (key == "g2") { p.g[1] = to_double(key_in, v);
  } else if (key == "g3") { p.g[2] = to_double(key_in, v);
  } else if (key == "omega") { p.omega = to_double(key, v);
  } else if (key == "delta1") { p.delta[0] = to_double(key, v);
  } else if (key == "delta2") { p.delta[1] = to_double(key, v);
  } else if (key == "delta3") { p.delta[2] = to_double(key, v);
  } else if (key == "omega_r") { p.omega_r = to_double(key, v);
  } else if (key == "delta_cap") { p.delta_cap = to_double(key, v);
  } else if (key == "u") { p.u.fill(to_double(key, v));
  } else if (key == "u12") { p.u[0] = to_double(key, v);
  } else if (key == "u13") { p.u[1] = to_double(key, v);
  } else if (key == "u23") { p.u[2] = to_double(key, v);
  } else if (key == "gamma_e") { p.gamma_e = to_double(key, v);
  } else if (key == "gamma_r") { p.gamma_r = to_double(key, v);
  } else if (key == "kappa") { p.kappa = to_double(key, v);
  } else if (key == "stark_comp") { p.stark_compensation = to_bool(key, v);
  } else if (key == "model") { c.model = parse_model_kind(v);
  } else if (key == "initial") { c.initial = v;
  } else if (key == "cutoff") { c.cutoff = to_int(key, v);
  } else if (key == "tmax") { c.t_max = to_double(key, v);
  } else if (key == "grid") { c.grid = to_int(key, v);
  } else if (key == "rtol") { c.rtol = to_double(key, v);
  } else if (key == "atol") { c.atol = to_double(key, v);
  } else if (key == "steady") { c.steady = v;
  } else if (key == "integrator") {
    if (v == "auto") c.integrator = IntegratorKind::Auto;
    else if (v == "explicit") c.integrator = IntegratorKind::Explicit;
    else if (v == "stiff") c.integrator = IntegratorKind::Stiff;
    else fail(ErrorCode::ConfigParse, "unknown integrator '" + v + "'");
  } else if (key == "stiff_step") { c.stiff_step = to_double(key, v);
  } else if (key == "out_dir") { c.out_dir = v;
  } else {
    fail(ErrorCode::ConfigParse, "unknown config key '" + key_in + "'");
  }
}

std::string get_config_value(const ScenarioConfig& c, const std::string& key) {
  const ModelParams& p = c.params;
  auto d = format_double;
  if (key == "scenario") return c.scenario;
  if (key == "units") return units_name(p.units);
  if (key == "g1" || key == "g1_mhz") return d(p.g[0]);
  if (key == "g2" || key == "g2_mhz") return d(p.g[1]);
  if (key == "g3" || key == "g3_mhz") return d(p.g[2]);
  if (key == "omega") return d(p.omega);
  if (key == "delta1") return d(p.delta[0]);
  if (key == "delta2") return d(p.delta[1]);
  if (key == "delta3") return d(p.delta[2]);
  if (key == "omega_r") return d(p.omega_r);
  if (key == "delta_cap") return d(p.delta_cap);
  if (key == "u12") return d(p.u[0]);
  if (key == "u13") return d(p.u[1]);
  if (key == "u23") return d(p.u[2]);
  if (key == "gamma_e") return d(p.gamma_e);
  if (key == "gamma_r") return d(p.gamma_r);
  if (key == "kappa") return d(p.kappa);
  if (key == "stark_comp") return p.stark_compensation ? "1" : "0";
  if (key == "model") return model_kind_name(c.model);
  if (key == "initial") return c.initial;
  if (key == "cutoff") return std::to_string(c.cutoff);
  if (key == "tmax") return d(c.t_max);
  if (key == "grid") return std::to_string(c.grid);
  if (key == "rtol") return d(c.rtol);
  if (key == "atol") return d(c.atol);
  if (key == "steady") return c.steady;
  if (key == "integrator") return integrator_name(c.integrator);
  if (key == "stiff_step") return d(c.stiff_step);
  if (key == "out_dir") return c.out_dir;
  fail(ErrorCode::ConfigParse, "unknown config key '" + key + "'");
}

ScenarioConfig parse_config(const std::string& text, ScenarioConfig c) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::ConfigParse,
           "line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    try {
      set_config_value(c, key, val);
    } catch (const Error& e) {
      fail(ErrorCode::ConfigParse,
           "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::Io, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string emit_config(const ScenarioConfig& c) {
  std::ostringstream out;
  const bool mhz = c.params.units == Units::MHz2Pi;
  for (const auto& k : config_keys()) {
    std::string name = k;
    if (mhz && (k == "g1" || k == "g2" || k == "g3")) name += "_mhz";
    out << name << " = " << get_config_value(c, k) << "\n";
  }
  return out.str();
}

}  // namespace ghzsim
