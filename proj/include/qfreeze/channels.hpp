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

#include <span>
#include <string>
#include <vector>

#include "qfreeze/qcore.hpp"
#include "qfreeze/states.hpp"

namespace qfreeze {

// A single-qubit CPTP map in Kraus form.
struct KrausChannel {
  std::vector<ComplexMatrix> operators;
  std::string label;

  // max |sum_a K_a^dag K_a - I|.
  double completeness_error() const;
};

KrausChannel identity_channel();

// Dephasing in the computational basis: {sqrt(1 - q/2) I, sqrt(q/2) sigma_3}.
KrausChannel phase_damping(double q);

// Generalised amplitude damping with damping u and ground-state weight p.
KrausChannel gad(double u, double p);

// {sqrt(1 - q/2) I, sqrt(q/2) sigma_k}: bit flip (k = 1), bit-phase flip
// (k = 2), phase flip (k = 3, identical to phase_damping).
KrausChannel flip_channel(PauliAxis k, double q);

// Channel that applies `first` and then `second`.
KrausChannel compose(const KrausChannel& first, const KrausChannel& second);

// q(t) = 1 - exp(-t / T); used for both T2 (phase damping) and T1 (GAD).
double damping_at(double relaxation_time, double t);

// Per-qubit relaxation times. t1 may be empty when no GAD is modelled.
struct NoiseClock {
  std::vector<double> t2;
  std::vector<double> t1;
  double alpha = 0.0;  // GAD uses p = 1/2 - alpha

  // Throws ArgumentError on nonpositive times, alpha outside [0, 0.5] or a
  // t1 list whose length differs from t2.
  void validate() const;
  int num_qubits() const { return static_cast<int>(t2.size()); }
  // sum_q 1 / T2_q: the decay rate of every non-frozen correlator.
  double correlator_decay_rate() const;
  // The two-qubit gamma with e^{-2 gamma t} = exp(-rate t).
  double gamma() const { return 0.5 * correlator_decay_rate(); }
};

// (x)_q Phi_q applied to rho. Throws ArgumentError when the channel count
// differs from the qubit count.
DensityMatrix apply_local(const DensityMatrix& rho, std::span<const KrausChannel> per_qubit);

// Flip-type channels toward axis k on every qubit at time t.
std::vector<KrausChannel> flip_channels_at(const NoiseClock& clock, PauliAxis k, double t);

// Phase damping followed by GAD on every qubit at time t. Requires clock.t1.
std::vector<KrausChannel> pd_gad_channels_at(const NoiseClock& clock, double t);

// Analytic triple under flip noise toward axis k: c_k is frozen, the other two
// components decay by exp(-t sum_q 1/T2_q). Throws ArgumentError for t < 0 or
// when the clock does not cover every qubit.
CorrelationTriple evolve_triple(const CorrelationTriple& c0, const NoiseClock& clock,
                                PauliAxis k, double t);

}  // namespace qfreeze
