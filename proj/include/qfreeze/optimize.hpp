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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qfreeze {

struct OptimizerOptions {
  int restarts = 16;
  // Stop a run when the best value improves by less than stall_tolerance over
  // stall_iterations consecutive iterations.
  int stall_iterations = 200;
  double stall_tolerance = 1e-9;
  int max_iterations = 20000;
  double initial_step = 0.5;
  std::uint64_t seed = 0x5eed5eedULL;
};

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
  long evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

// Derivative-free Nelder-Mead minimisation from a single start point.
// Non-finite objective values are treated as +infinity.
OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0,
                           const OptimizerOptions& opts);

// Runs nelder_mead from every warm start, then from random standard-normal
// points until `opts.restarts` runs in total have been made (at least one
// random run is always made). Deterministic for a given opts.seed. The result
// is flagged converged when the winning run converged.
OptimizeResult multistart_minimize(const Objective& f, int dim,
                                   std::span<const std::vector<double>> warm_starts,
                                   const OptimizerOptions& opts);

// Maps unconstrained x onto the probability simplex via p_i = x_i^2 / |x|^2.
// Zero weights are reachable exactly. An all-zero x maps to the uniform vector.
std::vector<double> simplex_from_squares(std::span<const double> x);

// Inverse of simplex_from_squares up to sign: x_i = sqrt(p_i).
std::vector<double> squares_from_simplex(std::span<const double> p);

}  // namespace qfreeze
