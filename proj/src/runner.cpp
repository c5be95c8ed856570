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

#include "qfreeze/runner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "qfreeze/channels.hpp"
#include "qfreeze/errors.hpp"
#include "qfreeze/theory.hpp"

namespace qfreeze {

namespace {

constexpr double kTripleAgreementTol = 1e-10;
constexpr double kNegativeTol = -1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

OptimizerStatus worse(OptimizerStatus a, OptimizerStatus b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

struct InitialState {
  int scale_index;
  int replicate;
  DensityMatrix rho;
};

std::vector<InitialState> prepare_initial_states(const Scenario& s) {
  std::vector<InitialState> out;
  const InitialCondition& init = s.initial;
  if (init.perturbation_scales.empty()) {
    out.push_back({0, 0, bd_state(init.triple)});
    return out;
  }
  for (std::size_t g = 0; g < init.perturbation_scales.size(); ++g) {
    for (int r = 0; r < init.replicates; ++r) {
      const std::uint64_t seed = derive_seed(init.seed, g, static_cast<std::uint64_t>(r), 0);
      out.push_back({static_cast<int>(g), r,
                     random_state_with_triple(init.triple, init.perturbation_scales[g], seed)});
    }
  }
  return out;
}

std::vector<KrausChannel> channels_at(const Scenario& s, double t) {
  switch (s.noise) {
    case NoiseModel::PdOnly: return flip_channels_at(s.clock, PauliAxis::Z, t);
    case NoiseModel::Flip: return flip_channels_at(s.clock, s.flip_axis, t);
    case NoiseModel::PdPlusGad: return pd_gad_channels_at(s.clock, t);
  }
  return {};
}

MeasureResult evaluate_measure(const MeasureSpec& m, const Scenario& s, const DensityMatrix& rho,
                               const CorrelationTriple& triple, const OptimizerOptions& opts) {
  switch (m.id) {
    case MeasureId::Coherence: return coherence(rho, s.basis, m.kind, opts);
    case MeasureId::CoherenceFloor: return coherence_floor(rho, s.basis, m.kind, opts);
    case MeasureId::Quantum: return quantum_correlations_re(rho, opts);
    case MeasureId::Classical: return classical_correlations_re(rho, opts);
    case MeasureId::Total: return total_correlations_re(rho);
    case MeasureId::Entanglement: return entanglement_re_bd(triple, opts);
    case MeasureId::GlobalDiscord: return global_discord_m3n(triple);
    case MeasureId::ClassicalAxis:
      return {static_cast<double>(to_int(closest_classical_axis(triple))),
              OptimizerStatus::ClosedForm, std::nullopt};
  }
  return {};
}

struct GridPointResult {
  SweepRecord mean;
  std::vector<ReplicateRecord> replicates;
};

GridPointResult evaluate_grid_point(const Scenario& s, const std::vector<InitialState>& initial,
                                    std::size_t index, double t) {
  const auto channels = channels_at(s, t);
  const bool analytic_available = s.noise != NoiseModel::PdPlusGad;
  const CorrelationTriple analytic =
      analytic_available ? evolve_triple(s.initial.triple, s.clock, s.noise_axis(), t) : s.initial.triple;

  GridPointResult out;
  out.mean.t = t;
  out.mean.values.assign(s.measures.size(), {});
  // one floor per grid point, shared by all replicates
  std::vector<std::optional<MeasureValue>> shared_floor(s.measures.size());

  for (std::size_t r = 0; r < initial.size(); ++r) {
    const DensityMatrix rho = apply_local(initial[r].rho, channels);
    const CorrelationTriple triple = triple_of(rho);
    if (analytic_available) {
      const double gap = std::max({std::abs(triple.c1 - analytic.c1), std::abs(triple.c2 - analytic.c2),
                                   std::abs(triple.c3 - analytic.c3)});
      if (gap > kTripleAgreementTol) {
        throw NumericalFailure("Kraus and analytic triples differ by " + std::to_string(gap) +
                               " at t = " + std::to_string(t));
      }
    }

    SweepRecord row;
    row.t = t;
    row.c1 = triple.c1;
    row.c2 = triple.c2;
    row.c3 = triple.c3;
    row.values.resize(s.measures.size());
    for (std::size_t k = 0; k < s.measures.size(); ++k) {
      const MeasureSpec& spec = s.measures[k];
      MeasureValue v;
      if (spec.id == MeasureId::CoherenceFloor && shared_floor[k]) {
        v = *shared_floor[k];
      } else {
        OptimizerOptions opts = s.optimizer;
        opts.seed = derive_seed(s.optimizer.seed, index, r, k);
        const MeasureResult res = evaluate_measure(spec, s, rho, triple, opts);
        v = {res.value, res.status};
        if (spec.id == MeasureId::CoherenceFloor) shared_floor[k] = v;
      }
      if (!(v.value >= kNegativeTol)) {
        throw NumericalFailure(spec.column() + " = " + std::to_string(v.value) +
                               " is negative at t = " + std::to_string(t));
      }
      row.values[k] = v;
    }

    out.mean.c1 += row.c1;
    out.mean.c2 += row.c2;
    out.mean.c3 += row.c3;
    for (std::size_t k = 0; k < s.measures.size(); ++k) {
      out.mean.values[k].value += row.values[k].value;
      out.mean.values[k].status = worse(out.mean.values[k].status, row.values[k].status);
    }
    if (s.initial.keep_replicates) {
      out.replicates.push_back({initial[r].scale_index, initial[r].replicate, row});
    }
  }

  const double count = static_cast<double>(initial.size());
  out.mean.c1 /= count;
  out.mean.c2 /= count;
  out.mean.c3 /= count;
  for (auto& v : out.mean.values) v.value /= count;
  return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ (b + 0x632be59bd9b4e019ULL));
  return splitmix64(h ^ (c + 0x85157af5ULL));
}

SweepTable run_scenario(const Scenario& s, unsigned threads) {
  validate_scenario(s);
  std::vector<InitialState> initial;
  try {
    initial = prepare_initial_states(s);
  } catch (const NonphysicalStateError& e) {
    throw ConfigError("initial", e.what());
  } catch (const NoMarginError& e) {
    throw ConfigError("initial.triple", e.what());
  }

  const std::vector<double> grid = s.time_grid.points();
  std::vector<GridPointResult> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());

  auto work = [&](std::size_t i) {
    try {
      results[i] = evaluate_grid_point(s, initial, i, grid[i]);
    } catch (const NonphysicalStateError& e) {
      errors[i] = std::make_exception_ptr(NumericalFailure(e.what()));
    } catch (const ConsistencyError& e) {
      errors[i] = std::make_exception_ptr(NumericalFailure(e.what()));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepTable table;
  for (const auto& m : s.measures) table.measure_columns.push_back(m.column());
  for (auto& r : results) {
    table.records.push_back(std::move(r.mean));
    for (auto& rep : r.replicates) table.replicates.push_back(std::move(rep));
  }
  return table;
}

}  // namespace qfreeze
