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

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "ghzsim/ghzsim.h"

TEST_CASE("version and scenario registry") {
  CHECK(std::strlen(ghz_version()) > 0);
  CHECK(ghz_scenario_count() >= 9);
  bool found = false;
  for (size_t i = 0; i < ghz_scenario_count(); ++i)
    found = found || std::string(ghz_scenario_name(i)) == "fig4-full";
  CHECK(found);
  CHECK(ghz_scenario_name(10000) == nullptr);
}

TEST_CASE("config handle") {
  ghz_config* c = nullptr;
  CHECK(ghz_config_create("nope", &c) == GHZ_ERR_UNKNOWN_SCENARIO);
  CHECK(c == nullptr);
  CHECK(std::string(ghz_last_error()).find("nope") != std::string::npos);
  REQUIRE(ghz_config_create("fig3", &c) == GHZ_OK);
  CHECK(ghz_config_set(c, "tmax", "100") == GHZ_OK);
  const char* v = nullptr;
  CHECK(ghz_config_get(c, "tmax", &v) == GHZ_OK);
  CHECK(std::string(v) == "100");
  CHECK(ghz_config_set(c, "bogus", "1") == GHZ_ERR_CONFIG_PARSE);
  CHECK(ghz_config_set(c, "cutoff", "x") == GHZ_ERR_CONFIG_PARSE);
  CHECK(ghz_config_parse(c, "cutoff = 1\nomega = 0.02\n") == GHZ_OK);
  CHECK(ghz_config_load_file(c, "/nonexistent/file.cfg") == GHZ_ERR_IO);
  const char* text = nullptr;
  CHECK(ghz_config_emit(c, &text) == GHZ_OK);
  CHECK(std::string(text).find("cutoff = 1") != std::string::npos);
  CHECK(ghz_config_set(nullptr, "a", "b") == GHZ_ERR_INVALID_ARGUMENT);
  ghz_config_destroy(c);
  ghz_config_destroy(nullptr);
}

TEST_CASE("run a scenario through the C API") {
  ghz_config* c = nullptr;
  REQUIRE(ghz_config_create("zeno-report", &c) == GHZ_OK);
  ghz_result* r = nullptr;
  REQUIRE(ghz_run(c, &r) == GHZ_OK);
  CHECK(ghz_result_check_count(r) >= 4);
  CHECK(ghz_result_all_passed(r) == 1);
  ghz_check chk;
  CHECK(ghz_result_check(r, 0, &chk) == GHZ_OK);
  CHECK(std::string(chk.id).rfind("7.", 0) == 0);
  CHECK(chk.passed == 1);
  CHECK(ghz_result_check(r, 9999, &chk) == GHZ_ERR_INVALID_ARGUMENT);
  const char* text = nullptr;
  CHECK(ghz_result_summary_text(r, &text) == GHZ_OK);
  CHECK(std::string(text).find("PASS") != std::string::npos);

  const char* env = std::getenv("GHZ_TMP");
  std::filesystem::path dir =
      env ? env : (std::filesystem::temp_directory_path() / "ghzsim-capi").string();
  CHECK(ghz_result_write(r, dir.string().c_str()) == GHZ_OK);
  CHECK(std::filesystem::exists(dir / "summary.csv"));
  CHECK(std::filesystem::exists(dir / "zeno-report.txt"));
  ghz_result_destroy(r);
  ghz_config_destroy(c);
}

TEST_CASE("invalid configs are reported, not thrown") {
  ghz_config* c = nullptr;
  REQUIRE(ghz_config_create("custom", &c) == GHZ_OK);
  CHECK(ghz_config_set(c, "initial", "ket:zzz") == GHZ_OK);
  CHECK(ghz_config_set(c, "model", "zpump-only") == GHZ_OK);
  ghz_result* r = nullptr;
  CHECK(ghz_run(c, &r) != GHZ_OK);
  CHECK(r == nullptr);
  CHECK(std::strlen(ghz_last_error()) > 0);
  ghz_config_destroy(c);
}
