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

#include "qfreeze/theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qfreeze/errors.hpp"

namespace qfreeze {

namespace {

int parity_sign(int num_qubits) { return (num_qubits / 2) % 2 == 0 ? 1 : -1; }

}  // namespace

FreezingPermutation FreezingPermutation::make(int i, int j, int k) {
  const PauliAxis a = axis_from_int(i);
  const PauliAxis b = axis_from_int(j);
  const PauliAxis c = axis_from_int(k);
  if (a == b || b == c || a == c) {
    throw ArgumentError("freezing permutation must use each axis once");
  }
  return {a, b, c};
}

bool freezing_check(const CorrelationTriple& c, const FreezingPermutation& perm, double tol) {
  const double predicted = parity_sign(c.num_qubits) * c[perm.j] * c[perm.k];
  return std::abs(c[perm.i] - predicted) <= tol;
}

std::optional<double> switch_time(const CorrelationTriple& c, double gamma,
                                  const FreezingPermutation& perm) {
  if (!(gamma > 0.0)) throw ArgumentError("switch_time: gamma must be positive");
  const double cj = std::abs(c[perm.j]);
  const double ck = std::abs(c[perm.k]);
  if (ck == 0.0) throw ArgumentError("switch_time: c_k is zero");
  if (cj < ck) return std::nullopt;
  return std::log(cj / ck) / (2.0 * gamma);
}

std::optional<double> esd_time(const CorrelationTriple& c, double gamma,
                               const FreezingPermutation& perm) {
  if (c.num_qubits != 2) throw ArgumentError("esd_time is defined for two qubits only");
  if (!(gamma > 0.0)) throw ArgumentError("esd_time: gamma must be positive");
  // Each eigenvalue is (1 + s_k c_k + e(t) A)/4 with e(t) = exp(-2 gamma t)
  // and A the decaying part; it stays <= 1/2 once e(t) A <= 1 - s_k c_k.
  double onset = 0.0;
  for (const auto& ev : bd_eigenvalues(c)) {
    const std::array<double, 3> cs = c.values();
    double frozen = 0.0, decaying = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double term = ev.signs[static_cast<std::size_t>(a)] * cs[static_cast<std::size_t>(a)];
      if (a + 1 == to_int(perm.k)) frozen += term;
      else decaying += term;
    }
    const double room = 1.0 - frozen;
    if (decaying <= room) continue;  // already <= 1/2 and decreasing
    if (room <= 0.0) return std::nullopt;
    onset = std::max(onset, std::log(decaying / room) / (2.0 * gamma));
  }
  return onset;
}

std::vector<ComplexMatrix> theta_unitaries(int num_qubits) {
  if (num_qubits < 2 || num_qubits > 4 || num_qubits % 2 != 0) {
    throw ArgumentError("theta_unitaries supports N in {2, 4}, got " + std::to_string(num_qubits));
  }
  const int n = num_qubits;
  const Eigen::Index d = Eigen::Index{1} << n;
  std::vector<ComplexMatrix> generators;
  for (int axis : {1, 2}) {
    for (int q = 0; q + 1 < n; ++q) {
      generators.push_back(embed(pauli(axis), q, n) * embed(pauli(axis), q + 1, n));
    }
  }
  const int g = static_cast<int>(generators.size());

  std::vector<ComplexMatrix> out;
  out.reserve(std::size_t{1} << g);
  for (int size = 0; size <= g; ++size) {
    // Lexicographic enumeration of size-element subsets of {0, ..., g-1}.
    std::vector<bool> chosen(static_cast<std::size_t>(g), false);
    std::fill(chosen.begin(), chosen.begin() + size, true);
    do {
      ComplexMatrix u = ComplexMatrix::Identity(d, d);
      for (int j = 0; j < g; ++j) {
        if (chosen[static_cast<std::size_t>(j)]) u = generators[static_cast<std::size_t>(j)] * u;
      }
      out.push_back(std::move(u));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
  }
  return out;
}

DensityMatrix theta_map(const DensityMatrix& rho) {
  const auto unitaries = theta_unitaries(rho.num_qubits());
  ComplexMatrix sum = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& u : unitaries) sum.noalias() += u * rho.matrix() * u.adjoint();
  return DensityMatrix(sum / static_cast<double>(unitaries.size()));
}

bool incoherent_op_check(const ComplexMatrix& u, PauliAxis m) {
  if (u.rows() != u.cols()) throw ArgumentError("incoherent_op_check: matrix is not square");
  const Eigen::Index d = u.rows();
  if (max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(d, d)) > 1e-10) {
    throw ArgumentError("incoherent_op_check: matrix is not unitary");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  const ComplexMatrix basis = product_basis(m, n);
  // u in the reference frame; each column is the image of a basis vector.
  const ComplexMatrix rotated = basis.adjoint() * u * basis;
  for (Eigen::Index col = 0; col < d; ++col) {
    const Eigen::VectorXcd image = rotated.col(col);
    const ComplexMatrix projector = image * image.adjoint();
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c)
        if (r != c && std::abs(projector(r, c)) > 1e-10) return false;
  }
  return true;
}

MeasureResult coherence_floor(const DensityMatrix& rho, PauliAxis m, DistanceKind d,
                              const OptimizerOptions& opts) {
  const CorrelationTriple c = triple_of(rho);
  if (!c.is_physical()) {
    throw ConsistencyError("triple of a valid state is outside the physical region");
  }
  return coherence(bd_state(c), m, d, opts);
}

}  // namespace qfreeze
