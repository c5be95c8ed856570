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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qfreeze {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

// Pauli axis labelling both an operator sigma_j and the product eigenbasis
// of that operator (1: plus/minus, 2: y eigenbasis, 3: computational).
enum class PauliAxis : int { X = 1, Y = 2, Z = 3 };

PauliAxis axis_from_int(int axis);
inline int to_int(PauliAxis a) { return static_cast<int>(a); }

// sigma_0 = I, sigma_1..3 = X, Y, Z.
ComplexMatrix pauli(int index);
inline ComplexMatrix pauli(PauliAxis a) { return pauli(to_int(a)); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_power(const ComplexMatrix& a, int n);

// Embeds a single-qubit operator on `qubit` of an n-qubit register. Qubit 0
// is the leftmost (most significant) tensor factor.
ComplexMatrix embed(const ComplexMatrix& op, int qubit, int num_qubits);

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns
};

HermitianEigen eigh(const ComplexMatrix& a);
RealVector eigvalsh(const ComplexMatrix& a);

// Largest |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Spectral function of a Hermitian PSD matrix with eigenvalue clamping:
// values in [-kPsdTol, 0) become 0.
ComplexMatrix sqrtm_psd(const ComplexMatrix& a);

// Entropy in bits of a probability vector; 0 log 0 := 0.
double shannon_bits(std::span<const double> p);

// A validated density matrix on N >= 1 qubits. Immutable after construction.
class DensityMatrix {
 public:
  // Throws ArgumentError on a non-power-of-two or non-square matrix and
  // NonphysicalStateError when the Hermitian, unit trace or PSD check fails.
  explicit DensityMatrix(ComplexMatrix m);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  // Eigenvalues (ascending) with round-off negatives clamped to zero.
  const RealVector& eigenvalues() const { return eigenvalues_; }

  double purity() const;

  static DensityMatrix maximally_mixed(int num_qubits);
  // |psi><psi| after normalising psi.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

 private:
  int num_qubits_ = 0;
  ComplexMatrix matrix_;
  RealVector eigenvalues_;
};

// Reduced state on the qubits listed in `keep` (kept in ascending order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

double vn_entropy(const DensityMatrix& rho);

// S(rho||tau) in bits. Throws InfiniteDivergence on a support violation.
double rel_entropy(const DensityMatrix& rho, const DensityMatrix& tau);

// Tr|rho - tau|, i.e. twice the conventional trace distance; range [0, 2].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& tau);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) tau sqrt(rho)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& tau);

namespace detail {

// Matrix-level kernels shared with the optimizers. Inputs are assumed
// Hermitian; no validation is performed.
double entropy_from_eigenvalues(const RealVector& values);

// S(rho||tau) using a precomputed spectrum of rho. Returns +inf on a support
// violation.
double rel_entropy_raw(const ComplexMatrix& rho, double rho_entropy,
                       const ComplexMatrix& tau);
double trace_norm_hermitian(const ComplexMatrix& a);
double fidelity_raw(const ComplexMatrix& rho, const ComplexMatrix& tau);

}  // namespace detail

}  // namespace qfreeze
