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
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vqbench/harness.hpp"

// Score computation. Per problem, four pure quantities are derived from the
// records:
//   runtime      mean over sizes of (depth * shots) / (mean job seconds)
//   accuracy     mean over sizes of (E_ideal - E_Q) / E_ideal, where both
//                energies are the best (minimum) over the cycles of a size
//   scalability  the exponent a of a normalized N^a growth model fitted to
//                the mean job times
//   capacity     the widest register whose relative error stays within A*
// The sums over sizes are divided by (largest size - smallest size), kept
// exactly as the score definitions write it; a single size divides by 1.
// Pure values are mapped onto a common scale and combined across problems by
// arithmetic mean; the overall score is the quadrilateral area
// (runtime + scalability) * (accuracy + capacity) / 2.

namespace vqbench {

inline double map_runtime(double pure) {
  if (!(pure > 0)) {
    throw std::invalid_argument("runtime mapping needs a positive pure score");
  }
  return std::log10(pure);
}

inline double map_accuracy(double pure) {
  return 30.0 / std::numbers::pi * (std::numbers::pi / 2 - std::atan(50.0 * pure));
}

inline double map_scalability(double exponent) {
  return 30.0 / std::numbers::pi * (std::numbers::pi / 2 - std::atan(0.75 * (exponent - 1.0)));
}

inline double map_capacity(double pure) { return pure; }

inline double overall_score(double runtime, double accuracy, double scalability,
                            double capacity) {
  return 0.5 * (runtime + scalability) * (accuracy + capacity);
}

struct FitResult {
  double exponent = 0;
  bool degenerate = false;  // constant input times; exponent pinned to 0
};

namespace detail {

template <typename F>
double golden_section_minimize(F&& f, double lo, double hi, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

}  // namespace detail

/// Fits the normalized growth model y(N) = N^a / N_end^a to the per-size
/// times by least squares over a in [0, 10] (golden-section, tolerance 1e-6).
/// Times are min-max normalized first; constant input is reported as
/// degenerate with exponent 0 instead of an arbitrary fit.
inline FitResult fit_scaling_exponent(const std::vector<std::pair<int, double>>& size_to_time) {
  if (size_to_time.size() < 3) {
    throw std::invalid_argument("scaling fit needs at least three sizes, got " +
                                std::to_string(size_to_time.size()));
  }
  double tmin = size_to_time[0].second, tmax = size_to_time[0].second;
  int n_end = size_to_time[0].first;
  for (const auto& [n, t] : size_to_time) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
    n_end = std::max(n_end, n);
  }
  if (tmax == tmin) return {0.0, true};
  std::vector<std::pair<double, double>> pts;  // (N / N_end, normalized time)
  for (const auto& [n, t] : size_to_time) {
    pts.emplace_back(static_cast<double>(n) / n_end, (t - tmin) / (tmax - tmin));
  }
  auto sse = [&](double a) {
    double s = 0;
    for (const auto& [x, y] : pts) {
      const double r = std::pow(x, a) - y;
      s += r * r;
    }
    return s;
  };
  return {detail::golden_section_minimize(sse, 0.0, 10.0, 1e-6), false};
}

/// Per-size aggregation underlying the scores (kept in the output for
/// inspection).
struct SizeAggregate {
  int size = 0;
  int qubits = 0;
  double depth = 0;
  std::uint64_t shots = 0;
  std::size_t cycles = 0;
  double mean_job_s = 0;
  double e_ideal = 0;   // best baseline energy over the cycles
  double e_q = 0;       // best sampled energy over the cycles
};

struct ProblemScore {
  ProblemKind kind{};
  std::vector<SizeAggregate> sizes;
  double runtime_pure = 0;
  double runtime_mapped = 0;
  bool runtime_ok = false;
  double accuracy_pure = 0;
  double accuracy_mapped = 0;
  bool accuracy_ok = false;
  double scalability_exponent = 0;
  double scalability_mapped = 0;
  bool scalability_ok = false;
  bool scalability_degenerate = false;
  int capacity_pure = 0;
  double capacity_mapped = 0;
  bool capacity_ok = false;
  std::vector<std::string> notes;
};

struct DeviceScores {
  std::string device;
  double runtime = 0;
  double accuracy = 0;
  double scalability = 0;
  double capacity = 0;
  double overall = 0;
  std::vector<ProblemScore> per_problem;
};

namespace detail {

inline double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace detail

/// Scores the records of one device. Records must carry metadata (the run
/// harness always writes it) and baseline energies.
inline DeviceScores score_device(const std::string& device,
                                 const std::vector<ExecutionRecord>& records, double a_star) {
  if (records.empty()) throw std::invalid_argument("no records to score");
  if (!(a_star > 0) || !(a_star < 1)) {
    throw std::invalid_argument("capacity threshold must lie in (0, 1)");
  }

  std::map<ProblemKind, std::map<int, std::vector<const ExecutionRecord*>>> grouped;
  for (const ExecutionRecord& r : records) {
    if (!r.has_meta) {
      throw SchemaError("a record without metadata (problem/size) cannot be scored");
    }
    grouped[r.problem][r.size].push_back(&r);
  }

  DeviceScores out;
  out.device = device;
  for (const auto& [kind, by_size] : grouped) {
    ProblemScore ps;
    ps.kind = kind;
    const std::string label = kind_name(kind);

    for (const auto& [size, recs] : by_size) {
      SizeAggregate agg;
      agg.size = size;
      agg.qubits = recs.front()->qubits;
      agg.depth = recs.front()->depth;
      agg.shots = recs.front()->shots;
      agg.cycles = recs.size();
      double job_total = 0;
      std::size_t job_count = 0;
      double best_base = std::numeric_limits<double>::infinity();
      double best_run = std::numeric_limits<double>::infinity();
      for (const ExecutionRecord* r : recs) {
        for (double ms : r->job_durations_ms) {
          job_total += ms / 1000.0;
          ++job_count;
        }
        if (std::isnan(r->expectation_value_baseline)) {
          throw SchemaError(label + " size " + std::to_string(size) +
                            ": a record lacks \"Expectation Value Baseline\"");
        }
        best_base = std::min(best_base, r->expectation_value_baseline);
        best_run = std::min(best_run, r->expectation_value);
      }
      if (job_count == 0 || job_total <= 0) {
        throw std::runtime_error(label + " size " + std::to_string(size) +
                                 ": zero average job duration");
      }
      agg.mean_job_s = job_total / static_cast<double>(job_count);
      agg.e_ideal = best_base;
      agg.e_q = best_run;
      ps.sizes.push_back(agg);
    }

    // Runtime: Eq-style sum over sizes divided by the size-range span.
    {
      double sum = 0;
      int lo = ps.sizes.front().size, hi = ps.sizes.front().size;
      for (const SizeAggregate& agg : ps.sizes) {
        sum += agg.depth * static_cast<double>(agg.shots) / agg.mean_job_s;
        lo = std::min(lo, agg.size);
        hi = std::max(hi, agg.size);
      }
      ps.runtime_pure = sum / std::max(1, hi - lo);
      ps.runtime_mapped = map_runtime(ps.runtime_pure);
      ps.runtime_ok = true;
    }

    // Accuracy: sizes with a vanishing ideal energy cannot be normalized and
    // are excluded (reported in the notes).
    {
      double sum = 0;
      int lo = 0, hi = 0;
      std::size_t used = 0;
      for (const SizeAggregate& agg : ps.sizes) {
        if (agg.e_ideal == 0.0) {
          ps.notes.push_back("size " + std::to_string(agg.size) +
                             " excluded from accuracy: ideal energy is zero");
          continue;
        }
        sum += (agg.e_ideal - agg.e_q) / agg.e_ideal;
        lo = used ? std::min(lo, agg.size) : agg.size;
        hi = used ? std::max(hi, agg.size) : agg.size;
        ++used;
      }
      if (used > 0) {
        ps.accuracy_pure = sum / std::max(1, hi - lo);
        ps.accuracy_mapped = map_accuracy(ps.accuracy_pure);
        ps.accuracy_ok = true;
      } else {
        ps.notes.push_back("accuracy unavailable: every size has a zero ideal energy");
      }
    }

    // Scalability: needs at least three sizes to fit a growth exponent.
    if (ps.sizes.size() >= 3) {
      std::vector<std::pair<int, double>> pts;
      for (const SizeAggregate& agg : ps.sizes) pts.emplace_back(agg.size, agg.mean_job_s);
      const FitResult fit = fit_scaling_exponent(pts);
      ps.scalability_exponent = fit.exponent;
      ps.scalability_degenerate = fit.degenerate;
      ps.scalability_mapped = map_scalability(fit.exponent);
      ps.scalability_ok = true;
      if (fit.degenerate) {
        ps.notes.push_back("scaling fit degenerate: job times are constant across sizes");
      }
    } else {
      ps.notes.push_back("scalability unavailable: needs at least 3 sizes, has " +
                         std::to_string(ps.sizes.size()));
    }

    // Capacity: the widest register still within the error threshold.
    {
      int best = 0;
      for (const SizeAggregate& agg : ps.sizes) {
        if (agg.e_ideal == 0.0) continue;
        const double rel = (agg.e_ideal - agg.e_q) / agg.e_ideal;
        if (rel <= a_star) best = std::max(best, agg.qubits);
      }
      ps.capacity_pure = best;
      ps.capacity_mapped = map_capacity(static_cast<double>(best));
      ps.capacity_ok = true;
    }

    out.per_problem.push_back(std::move(ps));
  }

  std::vector<double> rts, acs, scs, caps;
  for (const ProblemScore& ps : out.per_problem) {
    if (ps.runtime_ok) rts.push_back(ps.runtime_mapped);
    if (ps.accuracy_ok) acs.push_back(ps.accuracy_mapped);
    if (ps.scalability_ok) scs.push_back(ps.scalability_mapped);
    if (ps.capacity_ok) caps.push_back(ps.capacity_mapped);
  }
  auto require = [](const std::vector<double>& v, const char* what) {
    if (v.empty()) {
      throw std::runtime_error(std::string("cannot score ") + what +
                               ": no problem provides it (see per-problem notes)");
    }
  };
  require(rts, "runtime");
  require(acs, "accuracy");
  require(scs, "scalability");
  require(caps, "capacity");
  out.runtime = detail::mean(rts);
  out.accuracy = detail::mean(acs);
  out.scalability = detail::mean(scs);
  out.capacity = detail::mean(caps);
  out.overall = overall_score(out.runtime, out.accuracy, out.scalability, out.capacity);
  return out;
}

/// Splits records by their backend label and scores each device separately.
inline std::vector<DeviceScores> score_records(const std::vector<ExecutionRecord>& records,
                                               double a_star) {
  std::map<std::string, std::vector<ExecutionRecord>> by_device;
  for (const ExecutionRecord& r : records) {
    if (!r.has_meta) {
      throw SchemaError("a record without metadata (backend) cannot be scored");
    }
    by_device[r.backend].push_back(r);
  }
  std::vector<DeviceScores> out;
  for (const auto& [device, recs] : by_device) {
    out.push_back(score_device(device, recs, a_star));
  }
  return out;
}

inline nlohmann::json scores_to_json(const DeviceScores& s) {
  nlohmann::json per;
  for (const ProblemScore& ps : s.per_problem) {
    nlohmann::json p;
    if (ps.runtime_ok) {
      p["runtime_pure"] = ps.runtime_pure;
      p["runtime"] = ps.runtime_mapped;
    }
    if (ps.accuracy_ok) {
      p["accuracy_pure"] = ps.accuracy_pure;
      p["accuracy"] = ps.accuracy_mapped;
    }
    if (ps.scalability_ok) {
      p["scalability_exponent"] = ps.scalability_exponent;
      p["scalability"] = ps.scalability_mapped;
      p["scalability_degenerate"] = ps.scalability_degenerate;
    }
    if (ps.capacity_ok) {
      p["capacity_pure"] = ps.capacity_pure;
      p["capacity"] = ps.capacity_mapped;
    }
    nlohmann::json sizes = nlohmann::json::array();
    for (const SizeAggregate& agg : ps.sizes) {
      sizes.push_back({
          {"size", agg.size},
          {"qubits", agg.qubits},
          {"depth", agg.depth},
          {"shots", agg.shots},
          {"cycles", agg.cycles},
          {"mean_job_s", agg.mean_job_s},
          {"e_ideal", agg.e_ideal},
          {"e_q", agg.e_q},
      });
    }
    p["sizes"] = std::move(sizes);
    p["notes"] = ps.notes;
    per[kind_name(ps.kind)] = std::move(p);
  }
  return nlohmann::json{
      {"device", s.device},       {"runtime", s.runtime},   {"accuracy", s.accuracy},
      {"scalability", s.scalability}, {"capacity", s.capacity}, {"overall", s.overall},
      {"per_problem", std::move(per)},
  };
}

/// Reads back the top-level scores of a scores document (the per-problem
/// detail is not needed for rendering).
inline DeviceScores scores_from_json(const nlohmann::json& j) {
  DeviceScores s;
  if (!j.is_object()) throw SchemaError("scores document must be a JSON object");
  for (const char* f : {"runtime", "accuracy", "scalability", "capacity", "overall"}) {
    if (!j.contains(f) || !j[f].is_number()) {
      throw SchemaError(std::string("scores document: missing numeric field \"") + f + "\"");
    }
  }
  s.device = j.value("device", "device");
  s.runtime = j["runtime"].get<double>();
  s.accuracy = j["accuracy"].get<double>();
  s.scalability = j["scalability"].get<double>();
  s.capacity = j["capacity"].get<double>();
  s.overall = j["overall"].get<double>();
  return s;
}

}  // namespace vqbench
