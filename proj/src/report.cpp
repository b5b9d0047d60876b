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
#include <fstream>
#include <sstream>

#include "ghzsim/experiments.hpp"

namespace ghzsim {

namespace {

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Within: return "within";
    case CheckKind::AtLeast: return "at_least";
    case CheckKind::AtMost: return "at_most";
    case CheckKind::Info: return "info";
  }
  return "?";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  require(static_cast<bool>(f), ErrorCode::Io, "cannot open " + p.string());
  f << content;
  f.close();
  require(!f.fail(), ErrorCode::Io, "cannot write " + p.string());
}

std::string gnuplot_script(const CsvTable& t) {
  std::ostringstream s;
  s << "set datafile separator ','\nset key autotitle columnhead\n"
    << "set xlabel 't'\nset terminal pngcairo size 900,600\n"
    << "set output '" << t.name << ".png'\nplot ";
  bool first = true;
  for (std::size_t i = 1; i < t.columns.size(); ++i) {
    const std::string& c = t.columns[i];
    if (c == kTraceColumn || c == kMinEigColumn) continue;
    if (!first) s << ", \\\n     ";
    s << "'" << t.name << ".csv' using 1:" << i + 1 << " with lines";
    first = false;
  }
  s << "\n";
  return s.str();
}

}  // namespace

std::string format_csv(const CsvTable& t) {
  std::ostringstream s;
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    s << (i ? "," : "") << csv_field(t.columns[i]);
  s << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      s << (i ? "," : "") << format_double(row[i]);
    s << "\n";
  }
  return s.str();
}

std::string format_summary_csv(const std::vector<ScenarioResult>& results) {
  std::ostringstream s;
  s << "scenario,check,description,kind,value,expected,tolerance,passed\n";
  for (const auto& r : results)
    for (const auto& c : r.checks)
      s << csv_field(r.scenario) << "," << csv_field(c.id) << ","
        << csv_field(c.description) << "," << kind_name(c.kind) << ","
        << format_double(c.value) << "," << format_double(c.expected) << ","
        << format_double(c.tolerance) << "," << (c.passed ? "true" : "false")
        << "\n";
  return s.str();
}

std::string format_summary_text(const std::vector<ScenarioResult>& results) {
  std::ostringstream s;
  for (const auto& r : results) {
    s << "== " << r.scenario << "\n";
    for (const auto& c : r.checks) {
      char line[64];
      std::snprintf(line, sizeof line, "%-6s", c.kind == CheckKind::Info
                                                    ? "INFO"
                                                    : (c.passed ? "PASS" : "FAIL"));
      s << line << c.id << "  value=" << format_double(c.value);
      switch (c.kind) {
        case CheckKind::Within:
          s << "  expected=" << format_double(c.expected) << " +- "
            << format_double(c.tolerance);
          break;
        case CheckKind::AtLeast:
          s << "  bound>=" << format_double(c.expected - c.tolerance);
          break;
        case CheckKind::AtMost:
        case CheckKind::Info:
          s << "  bound<=" << format_double(c.expected + c.tolerance);
          break;
      }
      s << "  (" << c.description << ")\n";
    }
    for (const auto& [k, v] : r.values) s << "      " << k << " = " << format_double(v) << "\n";
    if (!r.text.empty()) s << r.text;
  }
  return s.str();
}

std::vector<std::string> emit_report(const std::vector<ScenarioResult>& results,
                                     const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  require(!ec && fs::is_directory(out_dir), ErrorCode::Io,
          "cannot create output directory " + out_dir);
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const std::string& content) {
    fs::path p = fs::path(out_dir) / name;
    write_file(p, content);
    written.push_back(p.string());
  };
  for (const auto& r : results) {
    for (const auto& t : r.tables) {
      put(t.name + ".csv", format_csv(t));
      if (!t.columns.empty() && t.columns[0] == "t") put(t.name + ".gp", gnuplot_script(t));
    }
    if (!r.text.empty()) put(r.scenario + ".txt", r.text);
    put(r.scenario + ".cfg", emit_config(r.config));
  }
  put("summary.csv", format_summary_csv(results));
  put("summary.txt", format_summary_text(results));
  return written;
}

}  // namespace ghzsim
