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

#include "qfreeze/channels.hpp"

#include <cmath>
#include <string>

#include "qfreeze/errors.hpp"

namespace qfreeze {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ArgumentError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

double KrausChannel::completeness_error() const {
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (const auto& k : operators) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::Identity(2, 2));
}

KrausChannel identity_channel() {
  return {{ComplexMatrix::Identity(2, 2)}, "identity"};
}

KrausChannel phase_damping(double q) {
  require_unit_interval(q, "phase damping q");
  return {{std::sqrt(1.0 - q / 2.0) * pauli(0), std::sqrt(q / 2.0) * pauli(3)},
          "pd(q=" + std::to_string(q) + ")"};
}

KrausChannel gad(double u, double p) {
  require_unit_interval(u, "GAD damping u");
  require_unit_interval(p, "GAD population p");
  const double sp = std::sqrt(p);
  const double sq = std::sqrt(1.0 - p);
  const double keep = std::sqrt(1.0 - u);
  const double jump = std::sqrt(u);
  return {{sp * mat2(1, 0, 0, keep), sp * mat2(0, jump, 0, 0),
           sq * mat2(keep, 0, 0, 1), sq * mat2(0, 0, jump, 0)},
          "gad(u=" + std::to_string(u) + ", p=" + std::to_string(p) + ")"};
}

KrausChannel flip_channel(PauliAxis k, double q) {
  require_unit_interval(q, "flip q");
  return {{std::sqrt(1.0 - q / 2.0) * pauli(0), std::sqrt(q / 2.0) * pauli(k)},
          "flip" + std::to_string(to_int(k)) + "(q=" + std::to_string(q) + ")"};
}

KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
  KrausChannel out;
  out.label = second.label + " o " + first.label;
  for (const auto& b : second.operators)
    for (const auto& a : first.operators) out.operators.push_back(b * a);
  return out;
}

double damping_at(double relaxation_time, double t) {
  if (!(relaxation_time > 0.0)) throw ArgumentError("relaxation time must be positive");
  if (!(t >= 0.0)) throw ArgumentError("time must be nonnegative");
  return -std::expm1(-t / relaxation_time);
}

void NoiseClock::validate() const {
  if (t2.empty()) throw ArgumentError("clock needs one T2 per qubit");
  for (double v : t2)
    if (!(v > 0.0)) throw ArgumentError("T2 values must be positive");
  if (!t1.empty()) {
    if (t1.size() != t2.size()) throw ArgumentError("T1 and T2 lists differ in length");
    for (double v : t1)
      if (!(v > 0.0)) throw ArgumentError("T1 values must be positive");
  }
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw ArgumentError("alpha must lie in [0, 0.5]");
}

double NoiseClock::correlator_decay_rate() const {
  double rate = 0.0;
  for (double v : t2) rate += 1.0 / v;
  return rate;
}

DensityMatrix apply_local(const DensityMatrix& rho, std::span<const KrausChannel> per_qubit) {
  const int n = rho.num_qubits();
  if (static_cast<int>(per_qubit.size()) != n) {
    throw ArgumentError("apply_local: " + std::to_string(per_qubit.size()) +
                        " channels for " + std::to_string(n) + " qubits");
  }
  // tensor Kraus sum, one qubit at a time
  ComplexMatrix m = rho.matrix();
  for (int q = 0; q < n; ++q) {
    ComplexMatrix next = ComplexMatrix::Zero(m.rows(), m.cols());
    for (const auto& k : per_qubit[static_cast<std::size_t>(q)].operators) {
      const ComplexMatrix e = embed(k, q, n);
      next.noalias() += e * m * e.adjoint();
    }
    m = std::move(next);
  }
  return DensityMatrix(std::move(m));
}

std::vector<KrausChannel> flip_channels_at(const NoiseClock& clock, PauliAxis k, double t) {
  clock.validate();
  std::vector<KrausChannel> out;
  for (double t2 : clock.t2) out.push_back(flip_channel(k, damping_at(t2, t)));
  return out;
}

std::vector<KrausChannel> pd_gad_channels_at(const NoiseClock& clock, double t) {
  clock.validate();
  if (clock.t1.empty()) throw ArgumentError("GAD noise needs T1 values");
  std::vector<KrausChannel> out;
  const double p = 0.5 - clock.alpha;
  for (std::size_t q = 0; q < clock.t2.size(); ++q) {
    out.push_back(compose(phase_damping(damping_at(clock.t2[q], t)),
                          gad(damping_at(clock.t1[q], t), p)));
  }
  return out;
}

CorrelationTriple evolve_triple(const CorrelationTriple& c0, const NoiseClock& clock,
                                PauliAxis k, double t) {
  if (!(t >= 0.0)) throw ArgumentError("evolve_triple: t must be nonnegative");
  clock.validate();
  if (clock.num_qubits() != c0.num_qubits) {
    throw ArgumentError("evolve_triple: clock covers " + std::to_string(clock.num_qubits()) +
                        " qubits, triple has " + std::to_string(c0.num_qubits));
  }
  const double factor = std::exp(-t * clock.correlator_decay_rate());
  CorrelationTriple c = c0;
  for (int j = 1; j <= 3; ++j) {
    const PauliAxis a = axis_from_int(j);
    if (a != k) c[a] *= factor;
  }
  return c;
}

}  // namespace qfreeze
