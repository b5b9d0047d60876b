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

// ghzsim command-line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "ghzsim/ghzsim.h"

namespace {

struct ConfigDeleter {
  void operator()(ghz_config* c) const { ghz_config_destroy(c); }
};
struct ResultDeleter {
  void operator()(ghz_result* r) const { ghz_result_destroy(r); }
};

int report_error(const char* what) {
  std::fprintf(stderr, "ghzsim: %s: %s\n", what, ghz_last_error());
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissipative GHZ-state preparation simulator"};
  app.set_version_flag("--version", ghz_version());

  std::string scenario, config_file, out_dir, rtol;
  int cutoff = -1;
  double tmax = -1.0;
  bool check = false, list = false, print_config = false;
  std::vector<std::string> overrides;

  std::string names;
  for (size_t i = 0; i < ghz_scenario_count(); ++i)
    names += std::string(i ? ", " : "") + ghz_scenario_name(i);

  app.add_option("scenario", scenario, "Scenario: " + names);
  app.add_option("--config", config_file, "key = value config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--cutoff", cutoff, "Cavity photon cutoff")->check(CLI::PositiveNumber);
  app.add_option("--tmax", tmax, "Final time (config units)")->check(CLI::PositiveNumber);
  app.add_option("--rtol", rtol, "Relative integrator tolerance");
  app.add_option("--set", overrides, "Extra key=value override (repeatable)");
  app.add_flag("--check", check, "Exit nonzero if any acceptance check fails");
  app.add_flag("--list", list, "List scenarios and exit");
  app.add_flag("--print-config", print_config, "Print the effective config and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (size_t i = 0; i < ghz_scenario_count(); ++i) std::printf("%s\n", ghz_scenario_name(i));
    return 0;
  }
  if (scenario.empty()) {
    std::fprintf(stderr, "%s", app.help().c_str());
    return 2;
  }

  ghz_config* raw = nullptr;
  if (ghz_config_create(scenario.c_str(), &raw) != GHZ_OK) return report_error("scenario");
  std::unique_ptr<ghz_config, ConfigDeleter> cfg(raw);
  auto set = [&](const std::string& k, const std::string& v) {
    return ghz_config_set(cfg.get(), k.c_str(), v.c_str()) == GHZ_OK;
  };

  if (!config_file.empty() && ghz_config_load_file(cfg.get(), config_file.c_str()) != GHZ_OK)
    return report_error("config");
  // scenario named on the command line wins over the file
  if (!set("scenario", scenario)) return report_error("scenario");
  for (const auto& kv : overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "ghzsim: --set expects key=value, got '%s'\n", kv.c_str());
      return 2;
    }
    if (!set(kv.substr(0, eq), kv.substr(eq + 1))) return report_error("--set");
  }
  if (cutoff > 0 && !set("cutoff", std::to_string(cutoff))) return report_error("--cutoff");
  if (tmax > 0) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", tmax);
    if (!set("tmax", buf)) return report_error("--tmax");
  }
  if (!rtol.empty() && !set("rtol", rtol)) return report_error("--rtol");
  if (!out_dir.empty() && !set("out_dir", out_dir)) return report_error("--out");

  if (print_config) {
    const char* text = nullptr;
    if (ghz_config_emit(cfg.get(), &text) != GHZ_OK) return report_error("config");
    std::printf("%s", text);
    return 0;
  }

  ghz_result* rres = nullptr;
  if (ghz_run(cfg.get(), &rres) != GHZ_OK) return report_error("run");
  std::unique_ptr<ghz_result, ResultDeleter> res(rres);

  const char* dir = nullptr;
  if (ghz_config_get(cfg.get(), "out_dir", &dir) != GHZ_OK) return report_error("config");
  std::string out = dir;
  if (ghz_result_write(res.get(), out.c_str()) != GHZ_OK) return report_error("write");

  const char* summary = nullptr;
  if (ghz_result_summary_text(res.get(), &summary) != GHZ_OK) return report_error("summary");
  std::printf("%s", summary);
  std::printf("wrote results to %s\n", out.c_str());

  if (check && !ghz_result_all_passed(res.get())) {
    std::fprintf(stderr, "ghzsim: one or more checks failed\n");
    return 1;
  }
  return 0;
}
