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

#include "qfreeze/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qfreeze/errors.hpp"

namespace qfreeze {

namespace {

void require_even(int n) {
  if (n < 2 || n % 2 != 0) {
    throw ArgumentError("M3_N states need an even qubit count N >= 2, got " +
                        std::to_string(n));
  }
}

ComplexMatrix m3n_matrix(const CorrelationTriple& c) {
  const int n = c.num_qubits;
  const Eigen::Index d = Eigen::Index{1} << n;
  ComplexMatrix m = ComplexMatrix::Identity(d, d);
  for (int j = 1; j <= 3; ++j) {
    const PauliAxis a = axis_from_int(j);
    m += c[a] * pauli_string(a, n);
  }
  return m / static_cast<double>(d);
}

}  // namespace

double CorrelationTriple::operator[](PauliAxis a) const {
  switch (a) {
    case PauliAxis::X: return c1;
    case PauliAxis::Y: return c2;
    case PauliAxis::Z: return c3;
  }
  return c1;
}

double& CorrelationTriple::operator[](PauliAxis a) {
  switch (a) {
    case PauliAxis::X: return c1;
    case PauliAxis::Y: return c2;
    case PauliAxis::Z: return c3;
  }
  return c1;
}

double CorrelationTriple::min_eigenvalue() const {
  const auto ev = bd_eigenvalues(*this);
  double lo = ev.front().value;
  for (const auto& e : ev) lo = std::min(lo, e.value);
  return lo;
}

bool CorrelationTriple::is_physical(double tol) const {
  for (double v : values()) {
    if (!(std::abs(v) <= 1.0 + tol)) return false;
  }
  return min_eigenvalue() >= -tol;
}

std::vector<BdEigenvalue> bd_eigenvalues(const CorrelationTriple& c) {
  require_even(c.num_qubits);
  const int parity = (c.num_qubits / 2) % 2 == 0 ? 1 : -1;
  const double scale = std::ldexp(1.0, -c.num_qubits);
  const int multiplicity = (1 << c.num_qubits) / 4;
  std::vector<BdEigenvalue> out;
  out.reserve(4);
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      for (int s3 : {1, -1}) {
        if (s1 * s2 * s3 != parity) continue;
        const double v = scale * (1.0 + s1 * c.c1 + s2 * c.c2 + s3 * c.c3);
        out.push_back({v, multiplicity, {s1, s2, s3}});
      }
    }
  }
  return out;
}

ComplexMatrix pauli_string(PauliAxis axis, int num_qubits) {
  return kron_power(pauli(axis), num_qubits);
}

DensityMatrix bd_state(const CorrelationTriple& c) {
  require_even(c.num_qubits);
  for (double v : c.values()) {
    if (!(std::abs(v) <= 1.0)) {
      throw NonphysicalStateError("correlation " + std::to_string(v) +
                                      " outside [-1, 1]",
                                  v);
    }
  }
  const double lo = c.min_eigenvalue();
  if (lo < -kPsdTol) {
    throw NonphysicalStateError(
        "triple (" + std::to_string(c.c1) + ", " + std::to_string(c.c2) +
            ", " + std::to_string(c.c3) + ") is nonphysical: eigenvalue " +
            std::to_string(lo),
        lo);
  }
  return DensityMatrix(m3n_matrix(c));
}

CorrelationTriple triple_of(const DensityMatrix& rho) {
  const int n = rho.num_qubits();
  require_even(n);
  CorrelationTriple c;
  c.num_qubits = n;
  for (int j = 1; j <= 3; ++j) {
    const PauliAxis a = axis_from_int(j);
    const ComplexMatrix s = pauli_string(a, n);
    const Complex expectation = rho.matrix().cwiseProduct(s.transpose()).sum();
    if (std::abs(expectation.imag()) > 1e-10) {
      throw ConsistencyError("<sigma_" + std::to_string(j) +
                             "^N> has imaginary part " +
                             std::to_string(expectation.imag()));
    }
    c[a] = expectation.real();
  }
  return c;
}

bool is_m3n_state(const DensityMatrix& rho, double tol) {
  if (rho.num_qubits() % 2 != 0) return false;
  const CorrelationTriple c = triple_of(rho);
  return max_abs_diff(rho.matrix(), m3n_matrix(c)) <= tol;
}

ComplexMatrix bell_basis() {
  const double r = std::numbers::sqrt2 / 2.0;
  ComplexMatrix b = ComplexMatrix::Zero(4, 4);
  // psi+ : (s1, s2, s3) = ( 1,  1, -1)
  b(1, 0) = r;  b(2, 0) = r;
  // phi+ : ( 1, -1,  1)
  b(0, 1) = r;  b(3, 1) = r;
  // phi- : (-1,  1,  1)
  b(0, 2) = r;  b(3, 2) = -r;
  // psi- : (-1, -1, -1)
  b(1, 3) = r;  b(2, 3) = -r;
  return b;
}

DensityMatrix random_state_with_triple(const CorrelationTriple& c,
                                       double perturbation_scale,
                                       std::uint64_t seed) {
  if (c.num_qubits != 2) {
    throw ArgumentError("random_state_with_triple supports N = 2 only");
  }
  if (!(perturbation_scale >= 0.0)) {
    throw ArgumentError("perturbation_scale must be nonnegative");
  }
  constexpr double kMargin = 1e-3;
  const double lo = c.min_eigenvalue();
  if (lo < kMargin) {
    throw NoMarginError("triple is within " + std::to_string(lo) +
                        " of the physicality boundary (need >= 1e-3)");
  }

  const DensityMatrix base = bd_state(c);
  if (perturbation_scale == 0.0) return base;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const auto spectrum = bd_eigenvalues(c);
  Eigen::VectorXcd amplitudes(4);
  for (int k = 0; k < 4; ++k) {
    amplitudes(k) = std::polar(std::sqrt(std::max(0.0, spectrum[static_cast<std::size_t>(k)].value)),
                               phase(rng));
  }
  const Eigen::VectorXcd psi = bell_basis() * amplitudes;
  ComplexMatrix p = psi * psi.adjoint() - base.matrix();

  // Gram-Schmidt against the protected directions; each has HS norm^2 = 4.
  for (int j = 0; j <= 3; ++j) {
    const ComplexMatrix dir = kron(pauli(j), pauli(j));
    const Complex overlap = (dir.adjoint() * p).trace() / 4.0;
    p -= overlap * dir;
  }
  p = 0.5 * (p + p.adjoint());

  double eps = perturbation_scale;
  for (int halving = 0; halving <= 60; ++halving) {
    const ComplexMatrix candidate = base.matrix() + eps * p;
    if (eigvalsh(candidate).minCoeff() >= -1e-12) return DensityMatrix(candidate);
    eps *= 0.5;
  }
  throw NonphysicalStateError("perturbation could not be made PSD", lo);
}

double perturbation_scale_for_purity(const CorrelationTriple& c, double purity) {
  double base = 0.0;
  for (const auto& e : bd_eigenvalues(c)) base += e.multiplicity * e.value * e.value;
  if (!(purity >= base && purity <= 1.0)) {
    throw ArgumentError("purity " + std::to_string(purity) + " is outside [" +
                        std::to_string(base) + ", 1] for this triple");
  }
  if (base >= 1.0) return 0.0;
  return std::sqrt((purity - base) / (1.0 - base));
}

}  // namespace qfreeze
