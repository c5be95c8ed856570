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

#include "qfreeze/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "qfreeze/errors.hpp"

namespace qfreeze {

namespace {

int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d <<= 1;
    ++n;
  }
  if (d != dim || n < 1) {
    throw ArgumentError("matrix dimension " + std::to_string(dim) +
                        " is not 2^N with N >= 1");
  }
  return n;
}

double clamp_eigenvalue(double v) {
  if (v < 0.0 && v >= -kPsdTol) return 0.0;
  return v;
}

}  // namespace

PauliAxis axis_from_int(int axis) {
  if (axis < 1 || axis > 3) {
    throw ArgumentError("Pauli axis must be 1, 2 or 3, got " +
                        std::to_string(axis));
  }
  return static_cast<PauliAxis>(axis);
}

ComplexMatrix pauli(int index) {
  const Complex i(0.0, 1.0);
  ComplexMatrix s(2, 2);
  switch (index) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default:
      throw ArgumentError("Pauli index must be in 0..3, got " +
                          std::to_string(index));
  }
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, int n) {
  if (n < 1) throw ArgumentError("kron_power needs n >= 1");
  ComplexMatrix out = a;
  for (int k = 1; k < n; ++k) out = kron(out, a);
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, int qubit, int num_qubits) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw ArgumentError("qubit index " + std::to_string(qubit) +
                        " out of range");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix out = (qubit == 0) ? op : id;
  for (int q = 1; q < num_qubits; ++q) out = kron(out, q == qubit ? op : id);
  return out;
}

HermitianEigen eigh(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigvalsh(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArgumentError("max_abs_diff: dimension mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& a) {
  const HermitianEigen e = eigh(a);
  RealVector r(e.values.size());
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    r(k) = std::sqrt(std::max(0.0, clamp_eigenvalue(e.values(k))));
  }
  return e.vectors * r.asDiagonal() * e.vectors.adjoint();
}

double shannon_bits(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) {
  if (m.rows() != m.cols()) throw ArgumentError("density matrix must be square");
  num_qubits_ = qubits_for_dim(m.rows());

  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw NonphysicalStateError(
        "matrix is not Hermitian (max |rho - rho^dag| = " +
            std::to_string(herm) + ")",
        herm);
  }
  matrix_ = 0.5 * (m + m.adjoint());

  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw NonphysicalStateError("trace " + std::to_string(tr) + " is not 1",
                                tr);
  }

  eigenvalues_ = eigvalsh(matrix_);
  const double lo = eigenvalues_.minCoeff();
  if (lo < -kPsdTol) {
    throw NonphysicalStateError(
        "matrix is not positive semidefinite (eigenvalue " +
            std::to_string(lo) + ")",
        lo);
  }
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
    eigenvalues_(k) = clamp_eigenvalue(eigenvalues_(k));
  }
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  if (num_qubits < 1) throw ArgumentError("num_qubits must be >= 1");
  const Eigen::Index d = Eigen::Index{1} << num_qubits;
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw ArgumentError("pure state vector is zero");
  const Eigen::VectorXcd v = psi / norm;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  if (keep.empty()) throw ArgumentError("partial_trace: empty keep set");

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw ArgumentError("partial_trace: duplicate qubit index");
  }
  for (int q : kept) {
    if (q < 0 || q >= n) {
      throw ArgumentError("partial_trace: qubit index " + std::to_string(q) +
                          " out of range for N = " + std::to_string(n));
    }
  }

  // Bit position of qubit q inside a basis index (qubit 0 is the MSB).
  auto bit = [n](Eigen::Index idx, int q) { return (idx >> (n - 1 - q)) & 1; };
  std::uint64_t kept_mask = 0;
  for (int q : kept) kept_mask |= std::uint64_t{1} << (n - 1 - q);

  auto reduced_index = [&](Eigen::Index idx) {
    Eigen::Index r = 0;
    for (int q : kept) r = (r << 1) | bit(idx, q);
    return r;
  };

  const Eigen::Index d = rho.dim();
  const Eigen::Index dk = Eigen::Index{1} << kept.size();
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      if ((static_cast<std::uint64_t>(r) & ~kept_mask) !=
          (static_cast<std::uint64_t>(c) & ~kept_mask)) {
        continue;
      }
      out(reduced_index(r), reduced_index(c)) += m(r, c);
    }
  }
  return DensityMatrix(std::move(out));
}

double vn_entropy(const DensityMatrix& rho) {
  return detail::entropy_from_eigenvalues(rho.eigenvalues());
}

double rel_entropy(const DensityMatrix& rho, const DensityMatrix& tau) {
  if (rho.dim() != tau.dim()) throw ArgumentError("rel_entropy: dimension mismatch");
  const double s = detail::rel_entropy_raw(rho.matrix(), vn_entropy(rho), tau.matrix());
  if (std::isinf(s)) {
    throw InfiniteDivergence("rel_entropy: support of rho is not contained in support of tau");
  }
  return std::max(0.0, s);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& tau) {
  if (rho.dim() != tau.dim()) throw ArgumentError("trace_distance: dimension mismatch");
  return detail::trace_norm_hermitian(rho.matrix() - tau.matrix());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& tau) {
  if (rho.dim() != tau.dim()) throw ArgumentError("fidelity: dimension mismatch");
  return detail::fidelity_raw(rho.matrix(), tau.matrix());
}

namespace detail {

double entropy_from_eigenvalues(const RealVector& values) {
  double h = 0.0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    const double v = clamp_eigenvalue(values(k));
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double rel_entropy_raw(const ComplexMatrix& rho, double rho_entropy,
                       const ComplexMatrix& tau) {
  constexpr double kZeroEigenvalue = 1e-12;
  constexpr double kWeightThreshold = 1e-10;
  const HermitianEigen e = eigh(tau);
  // Weights of rho along the eigenvectors of tau.
  const RealVector w = (e.vectors.adjoint() * rho * e.vectors).diagonal().real();
  double cross = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const double mu = e.values(k);
    if (mu < kZeroEigenvalue) {
      if (w(k) > kWeightThreshold) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += w(k) * std::log2(mu);
  }
  return -rho_entropy - cross;
}

double trace_norm_hermitian(const ComplexMatrix& a) {
  return eigvalsh(a).cwiseAbs().sum();
}

double fidelity_raw(const ComplexMatrix& rho, const ComplexMatrix& tau) {
  const ComplexMatrix s = sqrtm_psd(rho);
  const ComplexMatrix inner = s * tau * s;
  const RealVector v = eigvalsh(0.5 * (inner + inner.adjoint()));
  double root_sum = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) root_sum += std::sqrt(std::max(0.0, v(k)));
  return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

}  // namespace detail

}  // namespace qfreeze
