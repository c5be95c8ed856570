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

#include <array>
#include <cstdint>
#include <vector>

#include "qfreeze/qcore.hpp"

namespace qfreeze {

// Correlation functions c_j = <sigma_j^{(x)N}> of an N-qubit state, N even.
// Fully specifies a Bell-diagonal (N = 2) or generalised M3_N state.
struct CorrelationTriple {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  int num_qubits = 2;

  double operator[](PauliAxis a) const;
  double& operator[](PauliAxis a);
  std::array<double, 3> values() const { return {c1, c2, c3}; }

  // Smallest analytic eigenvalue of the corresponding M3_N state.
  double min_eigenvalue() const;
  bool is_physical(double tol = kPsdTol) const;
};

struct BdEigenvalue {
  double value;
  int multiplicity;
  std::array<int, 3> signs;  // (s1, s2, s3), s1 s2 s3 = (-1)^{N/2}
};

// Spectrum of the M3_N state: 2^{-N}(1 + s.c) over the four admissible sign
// patterns, each with multiplicity 2^N / 4. Throws ArgumentError for odd N.
std::vector<BdEigenvalue> bd_eigenvalues(const CorrelationTriple& c);

// sigma_j^{(x)N}.
ComplexMatrix pauli_string(PauliAxis axis, int num_qubits);

// 2^{-N}(I + sum_j c_j sigma_j^{(x)N}). Throws NonphysicalStateError carrying
// the offending eigenvalue when the triple lies outside the physical region.
DensityMatrix bd_state(const CorrelationTriple& c);

// c_j = Tr[rho sigma_j^{(x)N}]. Throws ConsistencyError if an expectation
// has an imaginary part above 1e-10.
CorrelationTriple triple_of(const DensityMatrix& rho);

// True when rho equals bd_state(triple_of(rho)) entrywise to `tol`.
bool is_m3n_state(const DensityMatrix& rho, double tol = 1e-10);

// A two-qubit state with exactly the triple c that is not Bell-diagonal.
//
// The perturbation direction is P = |psi><psi| - bd_state(c), where psi has
// the Bell-basis amplitudes sqrt(lambda_k) exp(i phi_k) with seeded random
// phases; P is then Gram-Schmidt cleaned against I and sigma_j (x) sigma_j so
// the triple is preserved exactly. rho = bd_state(c) + eps P, where eps starts
// at perturbation_scale and is halved (at most 60 times) until rho is PSD.
// Scales in [0, 1] never need halving; purity grows as
// P_bd (1 - eps^2) + eps^2.
//
// Throws ArgumentError for N != 2 or a negative scale, and NoMarginError when
// the triple's smallest eigenvalue is below 1e-3.
DensityMatrix random_state_with_triple(const CorrelationTriple& c,
                                       double perturbation_scale,
                                       std::uint64_t seed);

// Scale at which random_state_with_triple reaches the given purity
// (valid for purity between that of bd_state(c) and 1).
double perturbation_scale_for_purity(const CorrelationTriple& c, double purity);

// Columns are the four Bell states ordered to match the sign patterns
// returned by bd_eigenvalues for N = 2.
ComplexMatrix bell_basis();

}  // namespace qfreeze
