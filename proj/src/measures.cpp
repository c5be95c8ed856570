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

#include "qfreeze/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qfreeze/errors.hpp"

namespace qfreeze {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

OptimizerStatus status_of(const OptimizeResult& r) {
  return r.converged ? OptimizerStatus::Converged : OptimizerStatus::MaxIter;
}

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.num_qubits() != 2) {
    throw ArgumentError(std::string(what) + " is defined for two qubits only");
  }
}

ComplexMatrix single_qubit_basis(PauliAxis m) {
  const double r = std::numbers::sqrt2 / 2.0;
  const Complex i(0.0, 1.0);
  ComplexMatrix v(2, 2);
  switch (m) {
    case PauliAxis::X: v << r, r, r, -r; break;
    case PauliAxis::Y: v << r, r, r * i, -r * i; break;
    case PauliAxis::Z: v << 1, 0, 0, 1; break;
  }
  return v;
}

// Single-qubit basis with Bloch angles (theta, phi) for its first vector.
ComplexMatrix rotated_basis(double theta, double phi) {
  const Complex e = std::polar(1.0, phi);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  ComplexMatrix u(2, 2);
  u << c, -std::conj(e) * s, e * s, c;
  return u;
}

ComplexMatrix bloch_state(std::span<const double> v) {
  // Squash R^3 into the open unit ball.
  const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const double scale = norm > 0.0 ? std::tanh(norm) / norm : 0.0;
  ComplexMatrix m = pauli(0);
  for (int j = 1; j <= 3; ++j) m += scale * v[static_cast<std::size_t>(j - 1)] * pauli(j);
  return 0.5 * m;
}

double l1_offdiagonal(const ComplexMatrix& rotated) {
  double s = 0.0;
  for (Eigen::Index r = 0; r < rotated.rows(); ++r)
    for (Eigen::Index c = 0; c < rotated.cols(); ++c)
      if (r != c) s += std::abs(rotated(r, c));
  return s;
}

MeasureResult clamp_result(MeasureResult r) {
  if (r.value < 0.0 && r.value > -1e-9) r.value = 0.0;
  return r;
}

// Numerical coherence over diagonal states in the rotated frame.
MeasureResult minimise_coherence(const DensityMatrix& rho, PauliAxis m, DistanceKind d,
                                 std::span<const std::vector<double>> warm,
                                 const OptimizerOptions& opts) {
  const ComplexMatrix u = product_basis(m, rho.num_qubits());
  const ComplexMatrix rotated = u.adjoint() * rho.matrix() * u;
  const RealVector diag = rotated.diagonal().real();
  const Eigen::Index dim = rotated.rows();
  const double s_rho = vn_entropy(rho);

  Objective f;
  switch (d) {
    case DistanceKind::RelativeEntropy:
      f = [&](std::span<const double> x) {
        const auto p = simplex_from_squares(x);
        double cross = 0.0;
        for (Eigen::Index k = 0; k < dim; ++k) {
          const double w = diag(k);
          const double pk = p[static_cast<std::size_t>(k)];
          if (pk <= 0.0) {
            if (w > 1e-12) return kInf;
            continue;
          }
          cross += w * std::log2(pk);
        }
        return -s_rho - cross;
      };
      break;
    case DistanceKind::Trace:
      f = [&](std::span<const double> x) {
        const auto p = simplex_from_squares(x);
        ComplexMatrix diff = rotated;
        for (Eigen::Index k = 0; k < dim; ++k) diff(k, k) -= p[static_cast<std::size_t>(k)];
        return detail::trace_norm_hermitian(diff);
      };
      break;
    case DistanceKind::Fidelity:
      f = [&](std::span<const double> x) {
        const auto p = simplex_from_squares(x);
        ComplexMatrix inner(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r)
          for (Eigen::Index c = 0; c < dim; ++c)
            inner(r, c) = std::sqrt(p[static_cast<std::size_t>(r)] * p[static_cast<std::size_t>(c)]) *
                          rotated(r, c);
        const RealVector v = eigvalsh(inner);
        double root_sum = 0.0;
        for (Eigen::Index k = 0; k < v.size(); ++k) root_sum += std::sqrt(std::max(0.0, v(k)));
        return 1.0 - std::min(1.0, root_sum * root_sum);
      };
      break;
    case DistanceKind::L1:
      throw ArgumentError("L1 coherence has no optimisation form");
  }

  const OptimizeResult best = multistart_minimize(f, static_cast<int>(dim), warm, opts);
  const auto p = simplex_from_squares(best.x);
  RealVector pv(dim);
  for (Eigen::Index k = 0; k < dim; ++k) pv(k) = p[static_cast<std::size_t>(k)];
  const ComplexMatrix delta = u * pv.cast<Complex>().asDiagonal() * u.adjoint();
  return clamp_result({best.value, status_of(best), DensityMatrix(delta)});
}

ComplexMatrix classical_state(const ComplexMatrix& u, const RealVector& p) {
  return u * p.cast<Complex>().asDiagonal() * u.adjoint();
}

}  // namespace

std::string to_string(DistanceKind d) {
  switch (d) {
    case DistanceKind::RelativeEntropy: return "RE";
    case DistanceKind::Trace: return "Tr";
    case DistanceKind::Fidelity: return "F";
    case DistanceKind::L1: return "L1";
  }
  return "?";
}

std::string to_string(OptimizerStatus s) {
  switch (s) {
    case OptimizerStatus::ClosedForm: return "closed_form";
    case OptimizerStatus::Converged: return "converged";
    case OptimizerStatus::MaxIter: return "max_iter";
  }
  return "?";
}

DistanceKind distance_kind_from_string(const std::string& tag) {
  if (tag == "RE") return DistanceKind::RelativeEntropy;
  if (tag == "Tr") return DistanceKind::Trace;
  if (tag == "F") return DistanceKind::Fidelity;
  if (tag == "L1") return DistanceKind::L1;
  throw ArgumentError("unknown distance kind '" + tag + "' (expected RE, Tr, F or L1)");
}

OptimizerStatus optimizer_status_from_string(const std::string& tag) {
  if (tag == "closed_form") return OptimizerStatus::ClosedForm;
  if (tag == "converged") return OptimizerStatus::Converged;
  if (tag == "max_iter") return OptimizerStatus::MaxIter;
  throw ArgumentError("unknown optimizer status '" + tag + "'");
}

double state_distance(const DensityMatrix& rho, const DensityMatrix& tau, DistanceKind d) {
  switch (d) {
    case DistanceKind::RelativeEntropy: return rel_entropy(rho, tau);
    case DistanceKind::Trace: return trace_distance(rho, tau);
    case DistanceKind::Fidelity: return 1.0 - fidelity(rho, tau);
    case DistanceKind::L1: break;
  }
  throw ArgumentError("L1 is not a state distance");
}

ComplexMatrix product_basis(PauliAxis m, int num_qubits) {
  return kron_power(single_qubit_basis(m), num_qubits);
}

DensityMatrix dephase(const DensityMatrix& rho, PauliAxis m) {
  const ComplexMatrix u = product_basis(m, rho.num_qubits());
  const ComplexMatrix rotated = u.adjoint() * rho.matrix() * u;
  const ComplexMatrix diag = rotated.diagonal().asDiagonal();
  return DensityMatrix(u * diag * u.adjoint());
}

MeasureResult coherence(const DensityMatrix& rho, PauliAxis m, DistanceKind d,
                        const OptimizerOptions& opts) {
  switch (d) {
    case DistanceKind::RelativeEntropy: {
      DensityMatrix delta = dephase(rho, m);
      const double v = vn_entropy(delta) - vn_entropy(rho);
      return clamp_result({v, OptimizerStatus::ClosedForm, std::move(delta)});
    }
    case DistanceKind::L1: {
      const ComplexMatrix u = product_basis(m, rho.num_qubits());
      return {l1_offdiagonal(u.adjoint() * rho.matrix() * u), OptimizerStatus::ClosedForm,
              std::nullopt};
    }
    case DistanceKind::Trace:
      if (rho.num_qubits() % 2 == 0 && is_m3n_state(rho)) {
        const ComplexMatrix u = product_basis(m, rho.num_qubits());
        return {l1_offdiagonal(u.adjoint() * rho.matrix() * u), OptimizerStatus::ClosedForm,
                dephase(rho, m)};
      }
      break;
    case DistanceKind::Fidelity:
      break;
  }
  const ComplexMatrix u = product_basis(m, rho.num_qubits());
  const RealVector diag = (u.adjoint() * rho.matrix() * u).diagonal().real();
  std::vector<double> p(diag.data(), diag.data() + diag.size());
  const std::vector<std::vector<double>> warm{squares_from_simplex(p)};
  return minimise_coherence(rho, m, d, warm, opts);
}

MeasureResult coherence_numeric(const DensityMatrix& rho, PauliAxis m, DistanceKind d,
                                const OptimizerOptions& opts) {
  return minimise_coherence(rho, m, d, {}, opts);
}

CorrelationTriple closest_incoherent_bd(const CorrelationTriple& c, PauliAxis m) {
  CorrelationTriple out;
  out.num_qubits = c.num_qubits;
  out[m] = c[m];
  return out;
}

PauliAxis closest_classical_axis(const CorrelationTriple& c) {
  constexpr double kTieTol = 1e-12;
  PauliAxis best = PauliAxis::Z;
  double best_abs = std::abs(c.c3);
  for (PauliAxis a : {PauliAxis::Y, PauliAxis::X}) {
    if (std::abs(c[a]) > best_abs + kTieTol) {
      best = a;
      best_abs = std::abs(c[a]);
    }
  }
  return best;
}

MeasureResult quantum_correlations_re(const DensityMatrix& rho, const OptimizerOptions& opts) {
  require_two_qubits(rho, "quantum_correlations_re");
  if (!is_m3n_state(rho)) return quantum_correlations_re_numeric(rho, opts);
  const CorrelationTriple c = triple_of(rho);
  DensityMatrix chi = bd_state(closest_incoherent_bd(c, closest_classical_axis(c)));
  const double v = rel_entropy(rho, chi);
  return clamp_result({v, OptimizerStatus::ClosedForm, std::move(chi)});
}

MeasureResult quantum_correlations_re_numeric(const DensityMatrix& rho,
                                              const OptimizerOptions& opts) {
  require_two_qubits(rho, "quantum_correlations_re_numeric");
  const double s_rho = vn_entropy(rho);
  auto basis_for = [](std::span<const double> x) {
    return kron(rotated_basis(x[0], x[1]), rotated_basis(x[2], x[3]));
  };
  const Objective f = [&](std::span<const double> x) {
    const ComplexMatrix u = basis_for(x);
    const RealVector p = (u.adjoint() * rho.matrix() * u).diagonal().real();
    return shannon_bits(std::span<const double>(p.data(), static_cast<std::size_t>(p.size()))) - s_rho;
  };
  const OptimizeResult best = multistart_minimize(f, 4, {}, opts);
  const ComplexMatrix u = basis_for(best.x);
  const RealVector p = (u.adjoint() * rho.matrix() * u).diagonal().real();
  return clamp_result({best.value, status_of(best), DensityMatrix(classical_state(u, p))});
}

MeasureResult classical_correlations_re(const DensityMatrix& rho, const OptimizerOptions& opts) {
  require_two_qubits(rho, "classical_correlations_re");
  const MeasureResult q = quantum_correlations_re(rho, opts);
  const DensityMatrix& chi = *q.closest_state;
  MeasureResult mi = total_correlations_re(chi);
  mi.status = q.status;
  return mi;
}

MeasureResult total_correlations_re(const DensityMatrix& rho) {
  require_two_qubits(rho, "total_correlations_re");
  const std::array<int, 1> a{0}, b{1};
  const DensityMatrix rho_a = partial_trace(rho, a);
  const DensityMatrix rho_b = partial_trace(rho, b);
  const double v = vn_entropy(rho_a) + vn_entropy(rho_b) - vn_entropy(rho);
  return clamp_result({v, OptimizerStatus::ClosedForm,
                       DensityMatrix(kron(rho_a.matrix(), rho_b.matrix()))});
}

MeasureResult closest_product_re_numeric(const DensityMatrix& chi, const OptimizerOptions& opts) {
  require_two_qubits(chi, "closest_product_re_numeric");
  const double s_chi = vn_entropy(chi);
  const Objective f = [&](std::span<const double> x) {
    const ComplexMatrix pi = kron(bloch_state(x.subspan(0, 3)), bloch_state(x.subspan(3, 3)));
    return detail::rel_entropy_raw(chi.matrix(), s_chi, pi);
  };
  const OptimizeResult best = multistart_minimize(f, 6, {}, opts);
  const std::span<const double> x(best.x);
  return clamp_result({best.value, status_of(best),
                       DensityMatrix(kron(bloch_state(x.subspan(0, 3)), bloch_state(x.subspan(3, 3))))});
}

MeasureResult entanglement_re_bd(const CorrelationTriple& c, const OptimizerOptions& opts) {
  if (c.num_qubits != 2) throw ArgumentError("entanglement_re_bd is defined for two qubits only");
  DensityMatrix rho = bd_state(c);
  if (std::abs(c.c1) + std::abs(c.c2) + std::abs(c.c3) <= 1.0 + 1e-12) {
    return {0.0, OptimizerStatus::ClosedForm, std::move(rho)};
  }

  // Both states are diagonal in the Bell basis, so the divergence reduces to
  // the classical one between their spectra (sign patterns index both).
  const auto lambda = bd_eigenvalues(c);
  auto to_octahedron = [](std::span<const double> y) {
    const double l1 = std::abs(y[0]) + std::abs(y[1]) + std::abs(y[2]);
    const double s = l1 > 1.0 ? 1.0 / l1 : 1.0;
    CorrelationTriple t;
    t.c1 = y[0] * s;
    t.c2 = y[1] * s;
    t.c3 = y[2] * s;
    return t;
  };
  const Objective f = [&](std::span<const double> y) {
    const CorrelationTriple sep = to_octahedron(y);
    double v = 0.0;
    for (const auto& l : lambda) {
      if (l.value <= 1e-15) continue;
      const double mu = 0.25 * (1.0 + l.signs[0] * sep.c1 + l.signs[1] * sep.c2 + l.signs[2] * sep.c3);
      if (mu <= 0.0) return kInf;
      v += l.value * std::log2(l.value / mu);
    }
    return v;
  };
  const OptimizeResult best = multistart_minimize(f, 3, {}, opts);
  return clamp_result({best.value, status_of(best), bd_state(to_octahedron(best.x))});
}

MeasureResult global_discord_m3n(const CorrelationTriple& c) {
  return coherence(bd_state(c), PauliAxis::X, DistanceKind::RelativeEntropy);
}

}  // namespace qfreeze
