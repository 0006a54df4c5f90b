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

#pragma once

#include <vector>

#include "qrelent/capacity.hpp"
#include "qrelent/states.hpp"

namespace qrelent {

/// A free state rho0 plus costly signal states rho_k with costs c_k > 0,
/// mixed among themselves with weights q_k.
struct CostedStates {
  DensityOperator zero_cost;
  std::vector<DensityOperator> states;
  std::vector<double> costs;
  std::vector<double> weights;

  void validate() const;
};

struct CostRatio {
  double chi = 0;
  double avg_cost = 0;
  double ratio = 0;
  double lower = 0;  ///< eta sum_k q_k D(rho_k || mean)
  double upper = 0;  ///< eta sum_k q_k D(rho_k || rho0), may be +inf
};

/// Ensemble {(1-eta) -> rho0, eta q_k -> rho_k}; throws ValidationError if the sandwich fails.
CostRatio chi_cost_ratio(const CostedStates& cs, double eta);

struct CostEffectiveness {
  double bound = 0;  ///< max_k D(rho_k||rho0) / c_k
  std::size_t argmax = 0;
  std::vector<double> etas;
  std::vector<double> ratios;  ///< chi/c for the argmax state alone at each eta
  double extrapolated = 0;     ///< linear extrapolation of the last two ratios to eta = 0
  bool monotone_approach = true;
};

CostEffectiveness sup_cost_effectiveness(const CostedStates& cs);

/// (sum a_n) / (sum b_n) <= max_n a_n / b_n for positive b.
double max_ratio(std::span<const double> a, std::span<const double> b);

struct ThermalModel {
  Matrix hamiltonian;
  double temperature = 1.0;
  double boltzmann = 1.0;

  void validate() const;
  double kT() const { return boltzmann * temperature; }
};

struct ThermalState {
  DensityOperator state;
  double partition_function = 1;
};

/// rho0 = exp(-H/kT) / Z.
ThermalState thermal_state(const ThermalModel& tm);

/// F = Tr rho H - T k ln2 S(rho).
double free_energy(const DensityOperator& rho, const ThermalModel& tm);

struct FreeEnergyGap {
  double via_relative_entropy = 0;  ///< kT ln2 D(rho1 || rho0)
  double via_free_energies = 0;     ///< F(rho1) - F(rho0)
};

FreeEnergyGap free_energy_gap(const DensityOperator& rho1, const ThermalModel& tm);

/// chi / f for an ensemble whose average free-energy cost is f = sum_a p_a (F_a - F_0).
double bits_per_free_energy(const WeightedStates& ens, const ThermalModel& tm);

}  // namespace qrelent
