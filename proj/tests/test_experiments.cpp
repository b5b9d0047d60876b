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

#include <filesystem>

#include "doctest.h"
#include "ghzsim/experiments.hpp"

using namespace ghzsim;

TEST_CASE("every registered scenario has a valid default config") {
  for (const auto& name : scenario_names()) {
    ScenarioConfig c = default_config(name);
    CHECK(c.scenario == name);
    CHECK_NOTHROW(c.validate());
  }
  CHECK_THROWS_AS(default_config("fig99"), Error);
}

TEST_CASE("config round trip: parse(emit(c)) == c") {
  for (const auto& name : scenario_names()) {
    ScenarioConfig c = default_config(name);
    CHECK_MESSAGE(parse_config(emit_config(c)) == c, name);
  }
  ScenarioConfig c = default_config("custom");
  set_config_value(c, "g2", "0.875");
  set_config_value(c, "initial", "ket:011");
  set_config_value(c, "rtol", "3.3e-9");
  CHECK(parse_config(emit_config(c)) == c);
}

TEST_CASE("config parsing") {
  ScenarioConfig c = parse_config(
      "# comment\n"
      "scenario = custom\n"
      "units = mhz\n"
      "g_mhz = 50   # all three\n"
      "g3_mhz = 40\n"
      "omega = 0.5\n"
      "u = 2900\n"
      "model = zpump-only\n"
      "cutoff = 1\n");
  CHECK(c.params.units == Units::MHz2Pi);
  CHECK(c.params.g == std::array<double, 3>{50, 50, 40});
  CHECK(c.params.u[2] == 2900);
  CHECK(c.model == ModelKind::ZPumpOnly);
  CHECK(c.params_in_g_units().omega == doctest::Approx(0.01));
  try {
    parse_config("scenario = custom\nbogus = 1\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigParse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("cutoff = two\n"), Error);
  CHECK_THROWS_AS(parse_config("scenario = nope\n").validate(), Error);
  CHECK_THROWS_AS(parse_config("tmax = -1\n").validate(), Error);
  CHECK(get_config_value(c, "g3") == "40");
}

TEST_CASE("MHz config and its g-units twin give identical trajectories") {
  ScenarioConfig m = default_config("custom");
  m.params.units = Units::MHz2Pi;
  m.params.g = {50, 50, 50};
  m.params.omega = 1.0;
  m.params.delta = {-0.5, 1.0, -0.5};
  m.params.gamma_e = 3.0;
  m.params.kappa = 1.0;
  m.model = ModelKind::ZPumpOnly;
  m.cutoff = 1;
  m.t_max = 200;
  m.grid = 5;
  ScenarioConfig g = m;
  g.params.units = Units::GUnits;
  g.params.g = {1, 1, 1};
  g.params.omega = 0.02;
  g.params.delta = {-0.01, 0.02, -0.01};
  g.params.gamma_e = 0.06;
  g.params.kappa = 0.02;
  Trajectory a = run_trajectory(m), b = run_trajectory(g);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.rows()[i].size(); ++k)
      CHECK(std::abs(a.rows()[i][k] - b.rows()[i][k]) < 1e-10);
}

TEST_CASE("models and initial states built from configs") {
  ScenarioConfig c = default_config("fig4-full");
  c.cutoff = 1;
  CHECK(build_model(c).dimension() == 128);
  c.model = ModelKind::Effective;
  CHECK(build_model(c).dimension() == 32);
  c.model = ModelKind::ZPumpOnly;
  CHECK(build_model(c).dimension() == 54);
  c.model = ModelKind::Symmetric4x4;
  LindbladModel s = build_model(c);
  CHECK(s.dimension() == 4);
  c.initial = "ket:r0";
  CHECK(build_initial_state(c, s.space_ptr()).matrix()(0, 0).real() == 1.0);

  c.model = ModelKind::Effective;
  LindbladModel e = build_model(c);
  c.initial = "state:GHZ-";
  CHECK(build_initial_state(c, e.space_ptr()).trace().real() == doctest::Approx(1.0));
  c.initial = "fully-mixed";
  CHECK(build_initial_state(c, e.space_ptr()).matrix()(0, 0).real() == doctest::Approx(0.125));
  c.initial = "wrong";
  CHECK_THROWS_AS(build_initial_state(c, e.space_ptr()), Error);
}

TEST_CASE("short fig3-style run: CSV schema and determinism") {
  ScenarioConfig c = default_config("fig3");
  c.t_max = 50;
  c.grid = 6;
  c.cutoff = 1;
  ScenarioResult a = run_scenario(c), b = run_scenario(c);
  REQUIRE(!a.tables.empty());
  const std::string csv = format_csv(a.tables[0]);
  CHECK(csv.substr(0, csv.find('\n')) == "t,P000,P111,PGHZp,PGHZm,fidelity,trace,min_eig");
  CHECK(csv == format_csv(b.tables[0]));
  // the short run is far from 7/8, so the acceptance check must fail honestly
  bool p000_failed = false;
  for (const auto& ch : a.checks)
    if (ch.id == "1.P000") p000_failed = !ch.passed;
  CHECK(p000_failed);
  CHECK(!a.all_passed());
}

TEST_CASE("check semantics") {
  CHECK(make_check("x", "", 1.004, 1.0, 0.005, CheckKind::Within).passed);
  CHECK(!make_check("x", "", 1.006, 1.0, 0.005, CheckKind::Within).passed);
  CHECK(make_check("x", "", 0.988, 0.99, 0.003, CheckKind::AtLeast).passed);
  CHECK(!make_check("x", "", 0.986, 0.99, 0.003, CheckKind::AtLeast).passed);
  CHECK(make_check("x", "", 1e-11, 0.0, 1e-10, CheckKind::AtMost).passed);
  CHECK(make_check("x", "", 5.0, 0.0, 0.0, CheckKind::Info).passed);
  CHECK(!make_check("x", "", std::nan(""), 0.0, 1.0, CheckKind::AtMost).passed);
}

TEST_CASE("zeno report and appendix tables") {
  const std::string text = zeno_report_text();
  CHECK(text.find("dim = 5") != std::string::npos);
  ScenarioConfig c = default_config("appendix");
  c.t_max = 100;
  c.grid = 11;
  ScenarioResult r = run_appendix_compare(c);
  REQUIRE(r.tables.size() == 2);
  CHECK(r.tables[0].columns ==
        std::vector<std::string>{"t", "full_P001", "full_P010", "full_P100", "eff_P001",
                                 "eff_P010", "eff_P100"});
  CHECK(r.tables[0].rows[0][1] == doctest::Approx(1.0));
  CHECK(r.tables[0].rows[0][4] == doctest::Approx(1.0));
}

TEST_CASE("report emission") {
  namespace fs = std::filesystem;
  ScenarioResult r;
  r.scenario = "demo";
  r.config = default_config("custom");
  r.tables.push_back({"demo", {"t", "x"}, {{0.0, 0.1}, {1.0, 1.0 / 3}}});
  r.checks.push_back(make_check("1.demo", "demo check", 0.5, 0.5, 0.1, CheckKind::Within));
  fs::path dir = fs::temp_directory_path() / "ghzsim-test-report";
  fs::remove_all(dir);
  auto files = emit_report({r}, dir.string());
  CHECK(fs::exists(dir / "demo.csv"));
  CHECK(fs::exists(dir / "demo.gp"));
  CHECK(fs::exists(dir / "summary.csv"));
  CHECK(format_csv(r.tables[0]) == "t,x\n0,0.10000000000000001\n1,0.33333333333333331\n");
  CHECK(format_summary_csv({r}).find("demo,1.demo,demo check,within,0.5,0.5,0.10000000000000001,true") !=
        std::string::npos);
  // a regular file where the directory should be
  fs::path blocker = dir / "summary.csv";
  try {
    emit_report({r}, (blocker / "sub").string());
    FAIL("expected an Io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
  fs::remove_all(dir);
}
