// Copyright 2026 The qrelent Authors
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

#include "qrelent/cost.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qrelent {

void CostedStates::validate() const {
  if (states.empty() || states.size() != costs.size() || states.size() != weights.size()) {
    throw Error(ErrorKind::DimensionMismatch, "costed states, costs and weights must align");
  }
  double total = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!(costs[k] > 0)) throw Error(ErrorKind::BadParameter, "costs must be strictly positive");
    if (weights[k] < 0) throw Error(ErrorKind::NotNormalized, "negative mix weight");
    if (states[k].dim() != zero_cost.dim()) throw Error(ErrorKind::DimensionMismatch, "costed state dimension");
    total += weights[k];
  }
  if (std::abs(total - 1) > 1e-9) throw Error(ErrorKind::NotNormalized, "mix weights sum to " + std::to_string(total));
}

CostRatio chi_cost_ratio(const CostedStates& cs, double eta) {
  cs.validate();
  if (!(eta > 0 && eta < 1)) throw Error(ErrorKind::BadParameter, "eta must lie in (0,1)");
  SignalEnsemble ens;
  ens.probs.push_back(1 - eta);
  ens.outputs.push_back(cs.zero_cost);
  for (std::size_t k = 0; k < cs.states.size(); ++k) {
    ens.probs.push_back(eta * cs.weights[k]);
    ens.outputs.push_back(cs.states[k]);
  }
  const auto mean = ens.average();
  CostRatio r;
  r.chi = holevo_chi(ens);
  for (std::size_t k = 0; k < cs.states.size(); ++k) {
    if (cs.weights[k] == 0) continue;
    r.avg_cost += eta * cs.weights[k] * cs.costs[k];
    r.lower += eta * cs.weights[k] * relative_entropy(cs.states[k], mean);
    r.upper += eta * cs.weights[k] * relative_entropy(cs.states[k], cs.zero_cost);
  }
  r.ratio = r.chi / r.avg_cost;
  if (r.lower > r.chi + 1e-8 || r.chi > r.upper + 1e-8) {
    throw Error(ErrorKind::ValidationError, "chi escaped its relative-entropy sandwich");
  }
  return r;
}

CostEffectiveness sup_cost_effectiveness(const CostedStates& cs) {
  cs.validate();
  CostEffectiveness out;
  out.bound = -kInfinity;
  for (std::size_t k = 0; k < cs.states.size(); ++k) {
    const double r = relative_entropy(cs.states[k], cs.zero_cost) / cs.costs[k];
    if (r > out.bound) {
      out.bound = r;
      out.argmax = k;
    }
  }
  CostedStates single{cs.zero_cost, {cs.states[out.argmax]}, {cs.costs[out.argmax]}, {1.0}};
  out.etas = {0.1, 0.01, 0.001};
  for (double eta : out.etas) out.ratios.push_back(chi_cost_ratio(single, eta).ratio);
  const std::size_t n = out.etas.size();
  out.extrapolated = (out.etas[n - 2] * out.ratios[n - 1] - out.etas[n - 1] * out.ratios[n - 2]) /
                     (out.etas[n - 2] - out.etas[n - 1]);
  for (std::size_t i = 0; i < out.ratios.size(); ++i) {
    if (out.ratios[i] > out.bound + 1e-8) out.monotone_approach = false;
    if (i > 0 && out.ratios[i] < out.ratios[i - 1] - 1e-12) out.monotone_approach = false;
  }
  return out;
}

double max_ratio(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::DimensionMismatch, "ratio sequences must align");
  double m = -kInfinity;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(b[i] > 0)) throw Error(ErrorKind::BadParameter, "denominators must be positive");
    m = std::max(m, a[i] / b[i]);
  }
  return m;
}

void ThermalModel::validate() const {
  require_square(hamiltonian, "hamiltonian");
  if (hermitian_defect(hamiltonian) > kHermitianTolerance) throw Error(ErrorKind::NotHermitian, "hamiltonian");
  if (!(temperature > 0) || !(boltzmann > 0)) throw Error(ErrorKind::BadParameter, "T and k must be positive");
}

ThermalState thermal_state(const ThermalModel& tm) {
  tm.validate();
  const auto sp = eigh(tm.hamiltonian);
  const double beta = 1.0 / tm.kT();
  const double e0 = sp.values.minCoeff();
  // shifted by the ground energy for stability; Z restores the shift
  const Matrix g = spectral_function(sp, [&](double e) { return std::exp(-beta * (e - e0)); });
  const double zs = g.trace().real();
  return {DensityOperator::from_matrix(g / zs), zs * std::exp(-beta * e0)};
}

double free_energy(const DensityOperator& rho, const ThermalModel& tm) {
  tm.validate();
  if (rho.dim() != tm.hamiltonian.rows()) throw Error(ErrorKind::DimensionMismatch, "state vs hamiltonian");
  const double energy = (rho.matrix() * tm.hamiltonian).trace().real();
  return energy - tm.kT() * std::numbers::ln2 * entropy(rho);
}

FreeEnergyGap free_energy_gap(const DensityOperator& rho1, const ThermalModel& tm) {
  const auto eq = thermal_state(tm);
  if (rho1.dim() != eq.state.dim()) throw Error(ErrorKind::DimensionMismatch, "state vs hamiltonian");
  FreeEnergyGap g;
  g.via_relative_entropy = tm.kT() * std::numbers::ln2 * relative_entropy(rho1, eq.state);
  g.via_free_energies = free_energy(rho1, tm) - free_energy(eq.state, tm);
  return g;
}

double bits_per_free_energy(const WeightedStates& ens, const ThermalModel& tm) {
  ens.validate();
  const auto eq = thermal_state(tm);
  const double f0 = free_energy(eq.state, tm);
  SignalEnsemble se{ens.probs, ens.states, {}};
  double f = 0;
  for (std::size_t a = 0; a < ens.states.size(); ++a) f += ens.probs[a] * (free_energy(ens.states[a], tm) - f0);
  return holevo_chi(se) / f;
}

}  // namespace qrelent
