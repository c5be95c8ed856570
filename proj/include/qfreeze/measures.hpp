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
#include <string>

#include "qfreeze/optimize.hpp"
#include "qfreeze/qcore.hpp"
#include "qfreeze/states.hpp"

namespace qfreeze {

// Distance used by a geometric quantifier. L1 is the l1 norm of coherence
// and is only meaningful for coherence, not as a state distance.
enum class DistanceKind { RelativeEntropy, Trace, Fidelity, L1 };

enum class OptimizerStatus { ClosedForm, Converged, MaxIter };

// Short tags used in column names and configs: RE, Tr, F, L1.
std::string to_string(DistanceKind d);
std::string to_string(OptimizerStatus s);
DistanceKind distance_kind_from_string(const std::string& tag);
OptimizerStatus optimizer_status_from_string(const std::string& tag);

struct MeasureResult {
  double value = 0.0;  // bits for RelativeEntropy, dimensionless otherwise
  OptimizerStatus status = OptimizerStatus::ClosedForm;
  std::optional<DensityMatrix> closest_state;
};

// Distance between states for the three state distances (RE in bits, Trace
// as Tr|rho - tau|, Fidelity as 1 - F). L1 is rejected with ArgumentError.
double state_distance(const DensityMatrix& rho, const DensityMatrix& tau, DistanceKind d);

// Columns are the product eigenbasis of sigma_m (+1 eigenvector first on
// each qubit).
ComplexMatrix product_basis(PauliAxis m, int num_qubits);

// Removes every off-diagonal element in the sigma_m product basis.
DensityMatrix dephase(const DensityMatrix& rho, PauliAxis m);

// C_D(rho) = inf over incoherent delta of D(rho, delta), in the sigma_m
// product basis.
//
//   RelativeEntropy  S(dephase(rho)) - S(rho), closed form.
//   L1               sum of |off-diagonal| entries, closed form.
//   Trace            equals L1 for M3_N inputs (closest incoherent state is
//                    the projection onto the c_m axis); otherwise minimised
//                    numerically over diagonal states.
//   Fidelity         1 - max F, always minimised numerically. The dephased
//                    state is used as one of the starting points.
//
// Numerical results are upper bounds; status reports whether the winning
// run converged.
MeasureResult coherence(const DensityMatrix& rho, PauliAxis m, DistanceKind d,
                        const OptimizerOptions& opts = {});

// Same minimisation as coherence() but forced through the optimizer from
// random starts only (no closed forms, no warm starts). Used to validate
// the fast paths. Rejects L1.
MeasureResult coherence_numeric(const DensityMatrix& rho, PauliAxis m, DistanceKind d,
                                const OptimizerOptions& opts = {});

// Euclidean projection of a triple onto the c_m axis.
CorrelationTriple closest_incoherent_bd(const CorrelationTriple& c, PauliAxis m);

// Axis with the largest |c_a|; ties resolve toward the higher axis index.
PauliAxis closest_classical_axis(const CorrelationTriple& c);

// Relative entropy of quantum correlations (discord-type) for two qubits.
// M3_2 inputs use the axis projection; others go through
// quantum_correlations_re_numeric.
MeasureResult quantum_correlations_re(const DensityMatrix& rho, const OptimizerOptions& opts = {});

// min over local product bases of S(Pi(rho)) - S(rho), where Pi dephases in
// the product basis; the optimal joint probabilities for a fixed basis are
// the diagonal of rho in it. Random starts only.
MeasureResult quantum_correlations_re_numeric(const DensityMatrix& rho,
                                              const OptimizerOptions& opts = {});

// Distance from the closest classical state chi to the product states, in
// bits: S(chi_A) + S(chi_B) - S(chi) (2 - S(chi) for BD chi).
MeasureResult classical_correlations_re(const DensityMatrix& rho, const OptimizerOptions& opts = {});

// S(rho_A) + S(rho_B) - S(rho); the minimiser is rho_A (x) rho_B.
MeasureResult total_correlations_re(const DensityMatrix& rho);

// min over product states pi of S(chi || pi), by direct numerical search
// over Bloch vectors. Used to spot-check the product-of-marginals shortcut.
MeasureResult closest_product_re_numeric(const DensityMatrix& chi, const OptimizerOptions& opts = {});

// Relative entropy of entanglement of bd_state(c), minimised over the
// separable BD octahedron |c1'| + |c2'| + |c3'| <= 1. Exactly 0 when c is
// already inside it.
MeasureResult entanglement_re_bd(const CorrelationTriple& c, const OptimizerOptions& opts = {});

// Global discord of an M3_N state. On this family it coincides with the
// relative entropy of coherence in the plus/minus basis, which is what is
// returned.
MeasureResult global_discord_m3n(const CorrelationTriple& c);

}  // namespace qfreeze
