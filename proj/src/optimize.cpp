// Copyright 2026 The qfreeze Authors
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

#include "qfreeze/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace qfreeze {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

double safe_eval(const Objective& f, std::span<const double> x, long& count) {
  ++count;
  const double v = f(x);
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

struct Vertex {
  std::vector<double> x;
  double f;
};

// One Nelder-Mead descent from a fresh simplex around x0.
OptimizeResult descend(const Objective& f, const std::vector<double>& x0,
                       const OptimizerOptions& opts, int& iterations_left) {
  const std::size_t n = x0.size();
  OptimizeResult out;
  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({x0, safe_eval(f, x0, out.evaluations)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = x0;
    x[i] += (x[i] != 0.0 ? opts.initial_step * std::max(1.0, std::abs(x[i]))
                         : opts.initial_step);
    simplex.push_back({x, safe_eval(f, x, out.evaluations)});
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  std::vector<double> centroid(n), trial(n);
  auto point_along = [&](double coeff, const std::vector<double>& worst) {
    for (std::size_t i = 0; i < n; ++i) trial[i] = centroid[i] + coeff * (worst[i] - centroid[i]);
    return trial;
  };

  double stall_reference = std::numeric_limits<double>::infinity();
  int stall_count = 0;
  bool converged = false;

  while (iterations_left > 0) {
    --iterations_left;
    std::sort(simplex.begin(), simplex.end(), by_value);

    const double best = simplex.front().f;
    if (stall_reference - best >= opts.stall_tolerance) {
      stall_reference = best;
      stall_count = 0;
    } else if (++stall_count >= opts.stall_iterations) {
      converged = true;
      break;
    }
    // Fully collapsed simplex: nothing left to explore.
    if (std::isfinite(best) && simplex.back().f - best <= 1e-15 * (1.0 + std::abs(best))) {
      double spread = 0.0;
      for (std::size_t v = 1; v <= n; ++v)
        for (std::size_t i = 0; i < n; ++i)
          spread = std::max(spread, std::abs(simplex[v].x[i] - simplex[0].x[i]));
      if (spread < 1e-12) {
        converged = true;
        break;
      }
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(n);

    Vertex& worst = simplex.back();
    const double second_worst = simplex[n - 1].f;

    std::vector<double> xr = point_along(-kReflect, worst.x);
    const double fr = safe_eval(f, xr, out.evaluations);
    if (fr < best) {
      std::vector<double> xe = point_along(-kReflect * kExpand, worst.x);
      const double fe = safe_eval(f, xe, out.evaluations);
      if (fe < fr) worst = {std::move(xe), fe};
      else worst = {std::move(xr), fr};
      continue;
    }
    if (fr < second_worst) {
      worst = {std::move(xr), fr};
      continue;
    }
    const bool outside = fr < worst.f;
    std::vector<double> xc = point_along(outside ? -kReflect * kContract : kContract, worst.x);
    const double fc = safe_eval(f, xc, out.evaluations);
    if (fc < std::min(fr, worst.f)) {
      worst = {std::move(xc), fc};
      continue;
    }
    for (std::size_t v = 1; v <= n; ++v) {
      for (std::size_t i = 0; i < n; ++i)
        simplex[v].x[i] = simplex[0].x[i] + kShrink * (simplex[v].x[i] - simplex[0].x[i]);
      simplex[v].f = safe_eval(f, simplex[v].x, out.evaluations);
    }
  }

  const auto it = std::min_element(simplex.begin(), simplex.end(), by_value);
  out.x = it->x;
  out.value = it->f;
  out.converged = converged;
  return out;
}

}  // namespace

OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0,
                           const OptimizerOptions& opts) {
  int iterations_left = opts.max_iterations;
  OptimizeResult best = descend(f, x0, opts, iterations_left);
  long evaluations = best.evaluations;
  // Re-seed a fresh simplex at the optimum until it stops paying off; this
  // guards against premature collapse onto a non-stationary point.
  while (best.converged && iterations_left > 0) {
    OptimizeResult again = descend(f, best.x, opts, iterations_left);
    evaluations += again.evaluations;
    const bool improved = best.value - again.value > opts.stall_tolerance;
    if (again.value <= best.value) {
      best.x = std::move(again.x);
      best.value = again.value;
    }
    best.converged = again.converged;
    if (!improved) break;
  }
  best.evaluations = evaluations;
  return best;
}

OptimizeResult multistart_minimize(const Objective& f, int dim,
                                   std::span<const std::vector<double>> warm_starts,
                                   const OptimizerOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  OptimizeResult best;
  best.value = std::numeric_limits<double>::infinity();
  long evaluations = 0;
  auto consider = [&](OptimizeResult r) {
    evaluations += r.evaluations;
    if (r.value < best.value || best.x.empty()) best = std::move(r);
  };

  for (const auto& w : warm_starts) consider(nelder_mead(f, w, opts));
  const int random_runs =
      std::max(1, opts.restarts - static_cast<int>(warm_starts.size()));
  for (int r = 0; r < random_runs; ++r) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (double& v : x) v = normal(rng);
    consider(nelder_mead(f, std::move(x), opts));
  }
  best.evaluations = evaluations;
  return best;
}

std::vector<double> simplex_from_squares(std::span<const double> x) {
  std::vector<double> p(x.size());
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i] = x[i] * x[i];
    total += p[i];
  }
  if (total <= 0.0) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
    return p;
  }
  for (double& v : p) v /= total;
  return p;
}

std::vector<double> squares_from_simplex(std::span<const double> p) {
  std::vector<double> x(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) x[i] = std::sqrt(std::max(0.0, p[i]));
  return x;
}

}  // namespace qfreeze
