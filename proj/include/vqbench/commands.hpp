// Copyright 2026 The vqbench Authors
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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vqbench/harness.hpp"
#include "vqbench/report.hpp"
#include "vqbench/scoring.hpp"

// The three command entry points behind the command-line tool, kept in the
// library so they can be driven from tests: run a configured suite and write
// record files, score a directory of record files, and render score charts.

namespace vqbench {

/// Builds a suite configuration from a JSON document. Unknown or ill-typed
/// fields are rejected by name. Every field is optional; absent ones keep
/// their defaults.
inline SuiteConfig parse_suite_config(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("config must be a JSON object");
  static const std::set<std::string> known = {
      "device",     "shots",          "cycles",  "seed",     "accuracy_threshold",
      "output_dir", "max_iterations", "workers", "qubit_cap", "problems"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) throw SchemaError("config: unknown field \"" + key + "\"");
  }

  SuiteConfig cfg;
  auto get_uint = [&](const char* field, std::uint64_t lo, std::uint64_t hi) {
    const nlohmann::json& v = j.at(field);
    if (!v.is_number_integer() || v.is_number_float()) {
      throw SchemaError(std::string("config: field \"") + field + "\" must be an integer");
    }
    const std::int64_t raw = v.get<std::int64_t>();
    if (raw < 0 || static_cast<std::uint64_t>(raw) < lo ||
        static_cast<std::uint64_t>(raw) > hi) {
      throw SchemaError(std::string("config: field \"") + field + "\" must lie in [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<std::uint64_t>(raw);
  };

  if (j.contains("device")) {
    if (!j["device"].is_string() || j["device"].get<std::string>().empty()) {
      throw SchemaError("config: field \"device\" must be a non-empty string");
    }
    cfg.device = j["device"].get<std::string>();
  }
  if (j.contains("shots")) cfg.shots = get_uint("shots", 1, 100000000);
  if (j.contains("cycles")) cfg.cycles = static_cast<int>(get_uint("cycles", 1, 10000));
  if (j.contains("seed")) {
    const nlohmann::json& v = j["seed"];
    if (!v.is_number_integer()) throw SchemaError("config: field \"seed\" must be an integer");
    cfg.seed = v.get<std::uint64_t>();
  }
  if (j.contains("accuracy_threshold")) {
    const nlohmann::json& v = j["accuracy_threshold"];
    if (!v.is_number()) {
      throw SchemaError("config: field \"accuracy_threshold\" must be a number");
    }
    cfg.a_star = v.get<double>();
    if (!(cfg.a_star > 0) || !(cfg.a_star < 1)) {
      throw SchemaError("config: field \"accuracy_threshold\" must lie in (0, 1)");
    }
  }
  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string() || j["output_dir"].get<std::string>().empty()) {
      throw SchemaError("config: field \"output_dir\" must be a non-empty string");
    }
    cfg.output_dir = j["output_dir"].get<std::string>();
  }
  if (j.contains("max_iterations")) {
    cfg.max_iterations = static_cast<int>(get_uint("max_iterations", 1, 1000000));
  }
  if (j.contains("workers")) cfg.workers = static_cast<int>(get_uint("workers", 1, 256));
  if (j.contains("qubit_cap")) cfg.qubit_cap = static_cast<int>(get_uint("qubit_cap", 1, 30));

  if (j.contains("problems")) {
    const nlohmann::json& arr = j["problems"];
    if (!arr.is_array() || arr.empty()) {
      throw SchemaError("config: field \"problems\" must be a non-empty array");
    }
    cfg.problems.clear();
    for (const nlohmann::json& p : arr) {
      if (!p.is_object()) throw SchemaError("config: every entry of \"problems\" must be an object");
      for (const auto& [key, value] : p.items()) {
        (void)value;
        if (key != "problem" && key != "min_size" && key != "max_size") {
          throw SchemaError("config: unknown field \"" + key + "\" in a \"problems\" entry");
        }
      }
      if (!p.contains("problem") || !p["problem"].is_string()) {
        throw SchemaError("config: every \"problems\" entry needs a string field \"problem\"");
      }
      SuiteProblemRange range;
      range.kind = parse_kind(p["problem"].get<std::string>());
      for (const char* field : {"min_size", "max_size"}) {
        if (!p.contains(field) || !p[field].is_number_integer()) {
          throw SchemaError(std::string("config: every \"problems\" entry needs an integer "
                                        "field \"") + field + "\"");
        }
      }
      range.min_size = p["min_size"].get<int>();
      range.max_size = p["max_size"].get<int>();
      if (range.min_size > range.max_size) {
        throw SchemaError("config: \"min_size\" exceeds \"max_size\" for " +
                          std::string(kind_name(range.kind)));
      }
      detail::check_size_range(range.kind, range.min_size);
      detail::check_size_range(range.kind, range.max_size);
      cfg.problems.push_back(range);
    }
  }
  return cfg;
}

inline SuiteConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("config file " + path + " is not valid JSON: " + e.what());
  }
  return parse_suite_config(j);
}

namespace detail {

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace detail

/// Runs the configured suite and writes one record file per problem.
/// Returns 0 when every task succeeded, 2 when some tasks failed but records
/// were still produced (failures go to `err`), and 1 when nothing could run.
inline int cmd_run(const SuiteConfig& cfg, std::ostream& out, std::ostream& err) {
  out << "device " << cfg.device << ", " << cfg.cycles << " cycle(s), " << cfg.shots
      << " shots, seed " << cfg.seed << "\n";
  const RecordSet set = run_suite(cfg);
  for (const RecordGroup& g : set.groups) {
    char line[128];
    std::snprintf(line, sizeof(line), "  %4s size %3d: %zu cycle(s)\n", kind_name(g.kind),
                  g.size, g.records.size());
    out << line;
  }
  for (const std::string& f : set.failures) err << "failed: " << f << "\n";
  if (set.groups.empty()) {
    err << "no records produced\n";
    return 1;
  }
  const std::vector<std::string> files = save_records(set, cfg.output_dir);
  for (const std::string& f : files) out << "wrote " << f << "\n";
  return set.failures.empty() ? 0 : 2;
}

/// Loads every record file in a directory (the files the run command writes,
/// matched by their name prefix), scores each device found in them, writes
/// the scores document, and prints a score table.
inline int cmd_score(const std::string& records_dir, double a_star, const std::string& out_path,
                     std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(records_dir)) {
    throw std::runtime_error("not a directory: " + records_dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(records_dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.rfind("records__", 0) == 0 && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw std::runtime_error("no record files (records__*.json) in " + records_dir);
  }

  std::vector<ExecutionRecord> all;
  for (const fs::path& f : files) {
    std::vector<ExecutionRecord> recs = load_record_file(f.string());
    all.insert(all.end(), recs.begin(), recs.end());
  }
  out << "loaded " << all.size() << " record(s) from " << files.size() << " file(s)\n";

  const std::vector<DeviceScores> scores = score_records(all, a_star);
  nlohmann::json doc;
  if (scores.size() == 1) {
    doc = scores_to_json(scores.front());
  } else {
    doc = nlohmann::json::array();
    for (const DeviceScores& s : scores) doc.push_back(scores_to_json(s));
  }
  const fs::path target = out_path.empty() ? fs::path(records_dir) / "scores.json"
                                           : fs::path(out_path);
  detail::write_text_file(target, doc.dump(1) + "\n");

  char line[256];
  std::snprintf(line, sizeof(line), "%-24s %10s %10s %12s %10s %10s\n", "device", "runtime",
                "accuracy", "scalability", "capacity", "overall");
  out << line;
  for (const DeviceScores& s : scores) {
    std::snprintf(line, sizeof(line), "%-24s %10.4f %10.4f %12.4f %10.4f %10.4f\n",
                  s.device.c_str(), s.runtime, s.accuracy, s.scalability, s.capacity, s.overall);
    out << line;
  }
  out << "wrote " << target.string() << "\n";
  return 0;
}

/// Renders the charts for a scores document (a single object or an array of
/// them) into the output directory.
inline int cmd_report(const std::string& scores_path, const std::string& out_dir,
                      std::ostream& out) {
  namespace fs = std::filesystem;
  std::ifstream in(scores_path);
  if (!in) throw std::runtime_error("cannot open scores file: " + scores_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("scores file " + scores_path + " is not valid JSON: " + e.what());
  }

  std::vector<DeviceScores> scores;
  if (doc.is_array()) {
    for (const nlohmann::json& j : doc) scores.push_back(scores_from_json(j));
  } else {
    scores.push_back(scores_from_json(doc));
  }
  if (scores.empty()) throw SchemaError("scores file " + scores_path + " holds no scores");

  fs::create_directories(out_dir);
  const fs::path radar = fs::path(out_dir) / "radar.svg";
  const fs::path bars = fs::path(out_dir) / "overall.svg";
  detail::write_text_file(radar, radar_svg(scores));
  detail::write_text_file(bars, overall_svg(scores));
  out << "wrote " << radar.string() << "\n";
  out << "wrote " << bars.string() << "\n";
  return 0;
}

}  // namespace vqbench
