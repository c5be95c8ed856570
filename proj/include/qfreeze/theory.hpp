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

#include <optional>
#include <vector>

#include "qfreeze/measures.hpp"
#include "qfreeze/qcore.hpp"
#include "qfreeze/states.hpp"

namespace qfreeze {

// Axis roles in the freezing condition: i is product-constrained, j is the
// reference basis whose coherence freezes, k is the noise axis.
struct FreezingPermutation {
  PauliAxis i = PauliAxis::Y;
  PauliAxis j = PauliAxis::X;
  PauliAxis k = PauliAxis::Z;

  // Throws ArgumentError unless {i, j, k} = {1, 2, 3}.
  static FreezingPermutation make(int i, int j, int k);
};

// |c_i - (-1)^{N/2} c_j c_k| <= tol.
bool freezing_check(const CorrelationTriple& c, const FreezingPermutation& perm, double tol);

// ln|c_j / c_k| / (2 gamma) when |c_j| > |c_k|, 0 when they are equal and
// nullopt when the closest-classical axis never switches. Throws
// ArgumentError for gamma <= 0 or c_k = 0.
std::optional<double> switch_time(const CorrelationTriple& c, double gamma,
                                  const FreezingPermutation& perm = {});

// Entanglement sudden death time of a two-qubit BD state under flip noise
// toward perm.k with correlator decay exp(-2 gamma t): the first t after
// which the largest eigenvalue stays <= 1/2. Returns 0 for an initially
// separable state and nullopt if the state never becomes separable.
std::optional<double> esd_time(const CorrelationTriple& c, double gamma,
                               const FreezingPermutation& perm = {});

// The 2^{2(N-1)} products of the neighbour-pair generators
// sigma_1 (x) sigma_1 and sigma_2 (x) sigma_2. Order: identity, then every
// subset of generators by increasing size (lexicographic within a size),
// each product taken as U_{j_m} ... U_{j_1} with j_m > ... > j_1.
// Throws ArgumentError unless N is even and 2 <= N <= 4.
std::vector<ComplexMatrix> theta_unitaries(int num_qubits);

// Uniform average of U rho U^dag over theta_unitaries. Maps any state to the
// M3_N state with the same correlation triple.
DensityMatrix theta_map(const DensityMatrix& rho);

// True when u maps every projector of the sigma_m product basis to a
// diagonal matrix in that basis. Throws ArgumentError for non-unitary u.
bool incoherent_op_check(const ComplexMatrix& u, PauliAxis m);

// Coherence of the M3_N state sharing rho's correlation triple; a lower
// bound on coherence(rho, m, d).
MeasureResult coherence_floor(const DensityMatrix& rho, PauliAxis m, DistanceKind d,
                              const OptimizerOptions& opts = {});

}  // namespace qfreeze
