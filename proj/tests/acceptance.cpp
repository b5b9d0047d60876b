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

// Acceptance run: executes every scenario through the C API and prints one
// PASS/FAIL line per criterion. Informational rows never fail a criterion.

#include <chrono>
#include <cstdarg>
#include <cstdlib>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ghzsim/ghzsim.h"

namespace {

const char* kTitles[] = {
    "",
    "fig3 populations (P000, P111)",
    "fig3 GHZ populations (kappa = 0.1g and 0)",
    "fig4 steady fidelity and effective-vs-full agreement",
    "parameter table steady fidelities",
    "g-fluctuation robustness",
    "appendix full-vs-effective agreement",
    "H_g^ap spectrum and Zeno subspace dimensions",
    "adiabatic elimination frequency",
    "property suites",
    "oracle steady-state equivalence",
};

std::FILE* g_log = nullptr;

// printf to stdout and to <out>/acceptance.txt
void emit(const char* fmt, ...) {
  va_list a, b;
  va_start(a, fmt);
  va_copy(b, a);
  std::vprintf(fmt, a);
  if (g_log) std::vfprintf(g_log, fmt, b);
  va_end(b);
  va_end(a);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out = argc > 1 ? argv[1] : "acceptance-out";
  ghz_config* cfg = nullptr;
  if (ghz_config_create("all", &cfg) != GHZ_OK ||
      ghz_config_set(cfg, "out_dir", out.c_str()) != GHZ_OK) {
    std::fprintf(stderr, "config: %s\n", ghz_last_error());
    return 2;
  }
  auto t0 = std::chrono::steady_clock::now();
  ghz_result* res = nullptr;
  if (ghz_run(cfg, &res) != GHZ_OK) {
    std::fprintf(stderr, "run failed: %s\n", ghz_last_error());
    ghz_config_destroy(cfg);
    return 2;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ghz_result_write(res, out.c_str()) != GHZ_OK)
    std::fprintf(stderr, "write failed: %s\n", ghz_last_error());
  g_log = std::fopen((out + "/acceptance.txt").c_str(), "w");

  struct Tally {
    int passed = 0, failed = 0, info = 0;
    std::vector<std::string> failures;
  };
  std::map<int, Tally> by;
  for (size_t i = 0; i < ghz_result_check_count(res); ++i) {
    ghz_check c;
    ghz_result_check(res, i, &c);
    const int crit = std::atoi(c.id);
    Tally& t = by[crit];
    if (c.kind == GHZ_CHECK_INFO) {
      ++t.info;
      emit("        info %s = %.6g (%s)\n", c.id, c.value, c.description);
    } else if (c.passed) {
      ++t.passed;
    } else {
      ++t.failed;
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s = %.8g", c.id, c.value);
      t.failures.push_back(buf);
    }
  }

  int bad = 0;
  for (int k = 1; k <= 10; ++k) {
    const Tally& t = by[k];
    const bool ok = t.failed == 0 && t.passed > 0;
    bad += ok ? 0 : 1;
    emit("%s criterion %2d: %s (%d checks passed, %d failed)\n", ok ? "PASS" : "FAIL", k,
                kTitles[k], t.passed, t.failed);
    for (const auto& f : t.failures) emit("        failed %s\n", f.c_str());
  }
  emit("acceptance: %d/10 criteria pass, %.0f s, report in %s\n", 10 - bad, secs,
              out.c_str());
  if (g_log) std::fclose(g_log);
  ghz_result_destroy(res);
  ghz_config_destroy(cfg);
  return bad == 0 ? 0 : 1;
}
