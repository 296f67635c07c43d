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

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Derivative-free minimizer in the COBYLA family: a simplex of n+1 points
// carries a linear interpolation model, and each iteration takes one
// trust-region step along the model gradient. The trust radius starts at 0.5
// and contracts to 1e-4; every objective evaluation counts as one recorded
// iteration, and the evaluation budget is a hard cap.

namespace vqbench {

struct OptimConfig {
  int max_iterations = 100;       // objective-evaluation budget
  double rho_begin = 0.5;         // initial trust radius
  double rho_end = 1e-4;          // radius at which the search stops
};

struct OptimResult {
  std::vector<double> best_params;
  double best_value = 0;
  int iterations = 0;                         // == value_history.size()
  std::vector<double> value_history;          // every evaluation, in order
  std::vector<double> iteration_durations_ms; // wall time per evaluation
};

using Objective = std::function<double(const std::vector<double>&)>;

namespace detail {

// Solves A x = b by Gaussian elimination with partial pivoting.
// Returns false when the system is numerically singular.
inline bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                         std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-14) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return true;
}

inline std::string format_point(const std::vector<double>& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    os << x[i];
  }
  os << ")";
  return os.str();
}

}  // namespace detail

/// Minimizes `objective` starting from `x0`. Non-finite objective values
/// abort the run with a diagnostic naming the offending point.
inline OptimResult minimize(const Objective& objective, std::vector<double> x0,
                            const OptimConfig& cfg = {}) {
  if (x0.empty()) throw std::invalid_argument("minimize needs at least one parameter");
  if (cfg.max_iterations < 1) throw std::invalid_argument("evaluation budget must be positive");
  if (!(cfg.rho_begin > cfg.rho_end) || !(cfg.rho_end > 0)) {
    throw std::invalid_argument("trust radii must satisfy rho_begin > rho_end > 0");
  }

  const std::size_t n = x0.size();
  OptimResult res;
  res.best_params = x0;
  res.best_value = std::numeric_limits<double>::infinity();

  auto evaluate = [&](const std::vector<double>& x) {
    const auto t0 = std::chrono::steady_clock::now();
    const double v = objective(x);
    const auto t1 = std::chrono::steady_clock::now();
    if (!std::isfinite(v)) {
      throw std::runtime_error("objective returned a non-finite value at " +
                               detail::format_point(x));
    }
    res.value_history.push_back(v);
    res.iteration_durations_ms.push_back(
        std::chrono::duration<double, std::milli>(t1 - t0).count());
    ++res.iterations;
    if (v < res.best_value) {
      res.best_value = v;
      res.best_params = x;
    }
    return v;
  };
  auto budget_left = [&] { return res.iterations < cfg.max_iterations; };

  // Two working lengths: `rho` is the resolution, it only ever shrinks and
  // decides termination; `delta` is the scale of the next model step, kept at
  // or above rho, grown while steps succeed and pulled back when they fail.
  double rho = cfg.rho_begin;
  double delta = cfg.rho_begin;

  // Initial simplex: x0 plus one coordinate step of length rho per dimension.
  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i) pts[i][i - 1] += rho;
  for (std::size_t i = 0; i <= n && budget_left(); ++i) vals[i] = evaluate(pts[i]);
  if (!budget_left() && res.iterations < static_cast<int>(n + 1)) return res;

  while (budget_left() && rho >= cfg.rho_end) {
    std::size_t ibest = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (vals[i] < vals[ibest]) ibest = i;
    }

    // Linear model through the simplex: rows (pts[i]-pts[ibest]) . g = df.
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == ibest) continue;
      std::vector<double> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = pts[i][j] - pts[ibest][j];
      a.push_back(std::move(row));
      b.push_back(vals[i] - vals[ibest]);
    }
    std::vector<double> g;
    const bool model_ok = detail::solve_linear(std::move(a), std::move(b), g);
    double gnorm = 0;
    if (model_ok) {
      for (double gj : g) gnorm += gj * gj;
      gnorm = std::sqrt(gnorm);
    }

    bool good_step = false;
    bool retry_smaller = false;
    if (model_ok && gnorm > 1e-12) {
      std::vector<double> trial = pts[ibest];
      for (std::size_t j = 0; j < n; ++j) trial[j] -= delta / gnorm * g[j];
      const double predicted = delta * gnorm;
      double ft = evaluate(trial);
      good_step = ft < vals[ibest] - 0.1 * predicted;
      // A successful step earns a line search: keep doubling the distance
      // along the same descent direction while it still improves.
      double len = delta;
      while (good_step && budget_left()) {
        const double len2 = len * 2;
        std::vector<double> further = pts[ibest];
        for (std::size_t j = 0; j < n; ++j) further[j] -= len2 / gnorm * g[j];
        const double ff = evaluate(further);
        if (ff >= ft) break;
        trial = std::move(further);
        ft = ff;
        len = len2;
      }
      std::size_t iworst = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        if (vals[i] > vals[iworst]) iworst = i;
      }
      if (ft < vals[iworst]) {
        pts[iworst] = std::move(trial);
        vals[iworst] = ft;
      }
      if (good_step) {
        delta = std::max(rho, len);
      } else if (ft < vals[ibest]) {
        // Improvement short of the prediction: keep the scale and carry on.
        retry_smaller = true;
      } else if (delta > 1.5 * rho) {
        // The scale is too ambitious for the current landscape; halve it and
        // try again before touching the resolution.
        delta = std::max(rho, 0.5 * delta);
        retry_smaller = true;
      }
      if (!budget_left()) break;
    }
    if (good_step || retry_smaller) continue;

    // Step at resolution scale failed, or the model is flat. Re-anchor the
    // farthest vertex at distance delta from the incumbent before contracting
    // the resolution, so the model always describes the current neighborhood
    // without re-evaluating the whole simplex.
    std::size_t ifar = ibest;
    double far_d = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      double d2 = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const double d = pts[i][j] - pts[ibest][j];
        d2 += d * d;
      }
      if (d2 > far_d) {
        far_d = d2;
        ifar = i;
      }
    }
    far_d = std::sqrt(far_d);
    if (far_d > 2.0 * delta && budget_left()) {
      for (std::size_t j = 0; j < n; ++j) {
        pts[ifar][j] = pts[ibest][j] + (delta / far_d) * (pts[ifar][j] - pts[ibest][j]);
      }
      vals[ifar] = evaluate(pts[ifar]);
    } else {
      rho *= 0.5;
      delta = rho;
    }
  }
  return res;
}

}  // namespace vqbench
