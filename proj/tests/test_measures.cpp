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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qfreeze/channels.hpp"
#include "qfreeze/errors.hpp"
#include "qfreeze/measures.hpp"
#include "qfreeze/states.hpp"

using namespace qfreeze;

namespace {

DensityMatrix bd(double c1, double c2, double c3, int n = 2) { return bd_state({c1, c2, c3, n}); }

const double kCre = 1.0 - oracle::h2(0.85);

constexpr std::array<DistanceKind, 4> kAllKinds{DistanceKind::RelativeEntropy, DistanceKind::Trace,
                                                DistanceKind::Fidelity, DistanceKind::L1};

constexpr std::array<PauliAxis, 3> kAxes{PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

double l1_in_basis(const DensityMatrix& rho, PauliAxis m) {
  const ComplexMatrix u = product_basis(m, rho.num_qubits());
  const ComplexMatrix r = u.adjoint() * rho.matrix() * u;
  double s = 0.0;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j)
      if (i != j) s += std::abs(r(i, j));
  return s;
}

}  // namespace

TEST_CASE("dephase examples") {
  const DensityMatrix inc = bd(1.0, 0.0, 0.0);
  CHECK(max_abs_diff(dephase(inc, PauliAxis::X).matrix(), inc.matrix()) <= 1e-14);
  const DensityMatrix rho = bd(1.0, 0.7, -0.7);
  CHECK(max_abs_diff(dephase(rho, PauliAxis::X).matrix(), bd(1, 0, 0).matrix()) <= 1e-14);
  CHECK(max_abs_diff(dephase(rho, PauliAxis::Z).matrix(), bd(0, 0, -0.7).matrix()) <= 1e-14);
  CHECK(max_abs_diff(dephase(rho, PauliAxis::Y).matrix(), bd(0, 0.7, 0).matrix()) <= 1e-14);

  std::mt19937_64 rng(67);
  const DensityMatrix g{oracle::random_density(4, rng)};
  for (PauliAxis m : kAxes) {
    const DensityMatrix once = dephase(g, m);
    CHECK(max_abs_diff(dephase(once, m).matrix(), once.matrix()) <= 1e-14);
  }
}

TEST_CASE("coherence examples") {
  for (PauliAxis m : kAxes) {
    const ComplexMatrix u = product_basis(m, 2);
    CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(4, 4)) <= 1e-14);
    RealVector p(4);
    p << 0.1, 0.2, 0.3, 0.4;
    const DensityMatrix inc{u * p.cast<Complex>().asDiagonal() * u.adjoint()};
    for (DistanceKind d : kAllKinds) CHECK(std::abs(coherence(inc, m, d).value) <= 1e-8);
  }

  const DensityMatrix rho = bd(1.0, 0.7, -0.7);
  CHECK(std::abs(coherence(rho, PauliAxis::X, DistanceKind::RelativeEntropy).value - kCre) <= 1e-12);
  CHECK(coherence(rho, PauliAxis::X, DistanceKind::RelativeEntropy).value == doctest::Approx(0.39016).epsilon(1e-5));
  CHECK(std::abs(coherence(rho, PauliAxis::X, DistanceKind::L1).value - 0.7) <= 1e-12);
  CHECK(std::abs(coherence(rho, PauliAxis::X, DistanceKind::Trace).value - 0.7) <= 1e-12);
  // off-diagonal sum (|c2 + c3| + |c2 - c3|)/2 for a generic triple
  const DensityMatrix g = bd(0.3, -0.2, 0.45);
  CHECK(std::abs(coherence(g, PauliAxis::X, DistanceKind::L1).value - 0.5 * (0.25 + 0.65)) <= 1e-12);

  const DensityMatrix m4 = bd(1.0, 0.7, 0.7, 4);
  CHECK(std::abs(coherence(m4, PauliAxis::X, DistanceKind::RelativeEntropy).value - kCre) <= 1e-12);
  CHECK(std::abs(coherence(m4, PauliAxis::X, DistanceKind::L1).value - 0.7) <= 1e-12);
  CHECK(std::abs(coherence(m4, PauliAxis::X, DistanceKind::Trace).value - 0.7) <= 1e-12);
}

TEST_CASE("coherence closest states are incoherent") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    const DensityMatrix rho{oracle::random_density(4, rng)};
    for (PauliAxis m : kAxes) {
      for (DistanceKind d : {DistanceKind::RelativeEntropy, DistanceKind::Trace, DistanceKind::Fidelity}) {
        const MeasureResult r = coherence(rho, m, d);
        CHECK(r.value >= -1e-9);
        REQUIRE(r.closest_state.has_value());
        CHECK(max_abs_diff(dephase(*r.closest_state, m).matrix(), r.closest_state->matrix()) <= 1e-8);
        if (d != DistanceKind::Fidelity) {
          CHECK(std::abs(state_distance(rho, *r.closest_state, d) - r.value) <= 1e-8);
        } else {
          CHECK(std::abs(1.0 - fidelity(rho, *r.closest_state) - r.value) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("closed-form and optimizer coherence agree on BD states") {
  std::mt19937_64 rng(73);
  OptimizerOptions opts;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = oracle::random_physical_triple(rng);
    const DensityMatrix rho = bd(c[0], c[1], c[2]);
    const PauliAxis m = kAxes[static_cast<std::size_t>(trial) % 3];
    opts.seed = 500 + static_cast<std::uint64_t>(trial);
    for (DistanceKind d : {DistanceKind::RelativeEntropy, DistanceKind::Trace}) {
      const double closed = coherence(rho, m, d).value;
      const double numeric = coherence_numeric(rho, m, d, opts).value;
      worst = std::max(worst, std::abs(closed - numeric));
    }
    // relative entropy coherence from the spectra: S(dephased) - S(rho)
    std::array<double, 3> kept{0.0, 0.0, 0.0};
    kept[static_cast<std::size_t>(to_int(m) - 1)] = c[static_cast<std::size_t>(to_int(m) - 1)];
    CHECK(std::abs(coherence(rho, m, DistanceKind::RelativeEntropy).value -
                   (oracle::bd_entropy(kept) - oracle::bd_entropy(c))) <= 1e-10);
    // trace coherence equals L1 on BD inputs
    CHECK(std::abs(coherence(rho, m, DistanceKind::Trace).value - l1_in_basis(rho, m)) <= 1e-12);
  }
  CHECK(worst <= 1e-4);
}

TEST_CASE("fidelity coherence is reproducible from cold starts") {
  std::mt19937_64 rng(79);
  OptimizerOptions opts;
  for (int trial = 0; trial < 15; ++trial) {
    const auto c = oracle::random_physical_triple(rng);
    const DensityMatrix rho = bd(c[0], c[1], c[2]);
    opts.seed = 900 + static_cast<std::uint64_t>(trial);
    const double warm = coherence(rho, PauliAxis::X, DistanceKind::Fidelity).value;
    const double cold = coherence_numeric(rho, PauliAxis::X, DistanceKind::Fidelity, opts).value;
    CHECK(std::abs(warm - cold) <= 1e-4);
  }
  CHECK_THROWS_AS(coherence_numeric(bd(1, 0.7, -0.7), PauliAxis::X, DistanceKind::L1), ArgumentError);
}

TEST_CASE("coherence does not grow under flip noise") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 9; ++trial) {
    const PauliAxis k = kAxes[static_cast<std::size_t>(trial) % 3];
    const DensityMatrix rho{oracle::random_density(4, rng)};
    const std::array<KrausChannel, 2> chans{flip_channel(k, u01(rng)), flip_channel(k, u01(rng))};
    const DensityMatrix out = apply_local(rho, chans);
    for (PauliAxis m : kAxes) {
      for (DistanceKind d : kAllKinds) {
        CHECK(coherence(out, m, d).value <= coherence(rho, m, d).value + 1e-8);
      }
    }
  }
}

TEST_CASE("closest_incoherent_bd examples") {
  const CorrelationTriple a = closest_incoherent_bd({1.0, 0.7, -0.7, 2}, PauliAxis::X);
  CHECK(a.c1 == 1.0);
  CHECK(a.c2 == 0.0);
  CHECK(a.c3 == 0.0);
  for (PauliAxis m : kAxes) {
    const CorrelationTriple z = closest_incoherent_bd({0, 0, 0, 2}, m);
    CHECK(z.c1 == 0.0);
    CHECK(z.c2 == 0.0);
    CHECK(z.c3 == 0.0);
  }
  const CorrelationTriple b = closest_incoherent_bd({0.3, -0.2, 0.9, 2}, PauliAxis::Z);
  CHECK(b.c1 == 0.0);
  CHECK(b.c2 == 0.0);
  CHECK(b.c3 == 0.9);
}

TEST_CASE("closest classical axis") {
  CHECK(closest_classical_axis({1.0, 0.7, -0.7, 2}) == PauliAxis::X);
  CHECK(closest_classical_axis({0.127, 0.0889, -0.7, 2}) == PauliAxis::Z);
  CHECK(closest_classical_axis({0.7, 0.1, -0.7, 2}) == PauliAxis::Z);
  CHECK(closest_classical_axis({0.1, -0.8, 0.3, 2}) == PauliAxis::Y);
}

TEST_CASE("quantum correlations examples") {
  const MeasureResult q = quantum_correlations_re(bd(1.0, 0.7, -0.7));
  CHECK(std::abs(q.value - kCre) <= 1e-12);
  REQUIRE(q.closest_state.has_value());
  CHECK(max_abs_diff(q.closest_state->matrix(), bd(1, 0, 0).matrix()) <= 1e-14);

  CHECK(std::abs(quantum_correlations_re(bd(0.0, 0.0, -0.7)).value) <= 1e-12);
  ComplexMatrix classical = ComplexMatrix::Zero(4, 4);
  classical.diagonal() << 0.1, 0.2, 0.3, 0.4;
  CHECK(std::abs(quantum_correlations_re(DensityMatrix{classical}).value) <= 1e-6);

  const double gamma = 0.5 * (1 / 0.14 + 1 / 0.90);
  const double e = std::exp(-2 * gamma * 0.25);
  const MeasureResult late = quantum_correlations_re(bd(e, 0.7 * e, -0.7));
  REQUIRE(late.closest_state.has_value());
  CHECK(max_abs_diff(late.closest_state->matrix(), bd(0, 0, -0.7).matrix()) <= 1e-14);
  CHECK(std::abs(late.value - oracle::bd_rel_entropy({e, 0.7 * e, -0.7}, {0, 0, -0.7})) <= 1e-12);
}

TEST_CASE("quantum correlations: closed form and optimizer agree on BD states") {
  std::mt19937_64 rng(89);
  OptimizerOptions opts;
  for (int trial = 0; trial < 15; ++trial) {
    const auto c = oracle::random_physical_triple(rng);
    const DensityMatrix rho = bd(c[0], c[1], c[2]);
    opts.seed = 1300 + static_cast<std::uint64_t>(trial);
    CHECK(std::abs(quantum_correlations_re(rho).value -
                   quantum_correlations_re_numeric(rho, opts).value) <= 1e-4);
  }
}

TEST_CASE("classical correlations examples") {
  CHECK(std::abs(classical_correlations_re(bd(1.0, 0.7, -0.7)).value - 1.0) <= 1e-12);
  ComplexMatrix prod = ComplexMatrix::Zero(4, 4);
  prod.diagonal() << 0.12, 0.28, 0.18, 0.42;  // (0.4, 0.6) x (0.3, 0.7)
  CHECK(std::abs(classical_correlations_re(DensityMatrix{prod}).value) <= 1e-6);
  const double gamma = 0.5 * (1 / 0.14 + 1 / 0.90);
  for (double t : {0.06, 0.25, 0.5}) {
    const double e = std::exp(-2 * gamma * t);
    CHECK(std::abs(classical_correlations_re(bd(e, 0.7 * e, -0.7)).value - kCre) <= 1e-12);
  }
}

TEST_CASE("closest product state of a BD classical state is maximally mixed") {
  OptimizerOptions opts;
  opts.seed = 17;
  for (const std::array<double, 3> c : {std::array<double, 3>{1, 0, 0}, {0, 0, -0.7}, {0, 0.4, 0}}) {
    const DensityMatrix chi = bd(c[0], c[1], c[2]);
    const MeasureResult r = closest_product_re_numeric(chi, opts);
    CHECK(std::abs(r.value - (2.0 - oracle::bd_entropy(c))) <= 1e-6);
    REQUIRE(r.closest_state.has_value());
    CHECK(max_abs_diff(r.closest_state->matrix(), ComplexMatrix::Identity(4, 4) * 0.25) <= 1e-3);
    CHECK(std::abs(r.value - total_correlations_re(chi).value) <= 1e-6);
  }
}

TEST_CASE("total correlations examples") {
  CHECK(std::abs(total_correlations_re(DensityMatrix::maximally_mixed(2)).value) <= 1e-12);
  CHECK(std::abs(total_correlations_re(bd(1.0, 0.7, -0.7)).value - (2.0 - oracle::h2(0.85))) <= 1e-12);
  CHECK(total_correlations_re(bd(1.0, 0.7, -0.7)).value == doctest::Approx(1.39016).epsilon(1e-5));
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell(0) = bell(3) = std::sqrt(0.5);
  CHECK(std::abs(total_correlations_re(DensityMatrix::pure(bell)).value - 2.0) <= 1e-12);
}

TEST_CASE("entanglement examples") {
  CHECK(entanglement_re_bd({0.0, 0.0, -0.7, 2}).value == 0.0);
  CHECK(std::abs(entanglement_re_bd({1.0, 0.7, -0.7, 2}).value - kCre) <= 1e-6);

  const double gamma = 0.5 * (1 / 0.14 + 1 / 0.90);
  const double e = std::exp(-2 * gamma * 0.2102);
  CHECK(entanglement_re_bd({e, 0.7 * e, -0.7, 2}).value <= 1e-9);

  std::mt19937_64 rng(97);
  OptimizerOptions opts;
  int entangled = 0;
  while (entangled < 20) {
    const auto c = oracle::random_physical_triple(rng);
    const auto lambda = oracle::bd_spectrum(c);
    const double lmax = *std::max_element(lambda.begin(), lambda.end());
    opts.seed = 2000 + static_cast<std::uint64_t>(entangled);
    const MeasureResult r = entanglement_re_bd({c[0], c[1], c[2], 2}, opts);
    CHECK(std::abs(r.value - oracle::bd_ree(lmax)) <= 1e-6);
    if (lmax > 0.5) ++entangled;
  }
  CHECK_THROWS_AS(entanglement_re_bd({0.1, 0.1, 0.1, 4}), ArgumentError);
}

TEST_CASE("entanglement is not beaten by general separable states") {
  // random mixtures of product states never get closer than the BD optimum
  std::mt19937_64 rng(101);
  const CorrelationTriple c{1.0, 0.7, -0.7, 2};
  const DensityMatrix rho = bd_state(c);
  const double e = entanglement_re_bd(c).value;
  for (int trial = 0; trial < 200; ++trial) {
    ComplexMatrix sep = ComplexMatrix::Zero(4, 4);
    std::uniform_real_distribution<double> w(0.0, 1.0);
    double total = 0.0;
    for (int term = 0; term < 6; ++term) {
      const double weight = w(rng);
      total += weight;
      sep += weight * kron(oracle::random_density(2, rng), oracle::random_density(2, rng));
    }
    const DensityMatrix sigma{sep / total};
    CHECK(rel_entropy(rho, sigma) >= e - 1e-9);
  }
}

TEST_CASE("global discord examples") {
  CHECK(std::abs(global_discord_m3n({0, 0, 0, 2}).value) <= 1e-12);
  CHECK(std::abs(global_discord_m3n({0, 0, 0, 4}).value) <= 1e-12);
  const double s4 = vn_entropy(bd(1.0, 0.7, 0.7, 4));
  CHECK(s4 == doctest::Approx(2.60984).epsilon(1e-5));
  CHECK(std::abs(global_discord_m3n({1.0, 0.7, 0.7, 4}).value - (3.0 - s4)) <= 1e-12);
  CHECK(std::abs(global_discord_m3n({1.0, 0.7, 0.7, 4}).value - kCre) <= 1e-12);
  CHECK(std::abs(global_discord_m3n({1.0, 0.7, -0.7, 2}).value - kCre) <= 1e-12);
}

TEST_CASE("string tags round trip") {
  for (DistanceKind d : kAllKinds) CHECK(distance_kind_from_string(to_string(d)) == d);
  for (OptimizerStatus s : {OptimizerStatus::ClosedForm, OptimizerStatus::Converged, OptimizerStatus::MaxIter})
    CHECK(optimizer_status_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(distance_kind_from_string("KL"), ArgumentError);
}
