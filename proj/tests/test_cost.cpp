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
#include "test_util.hpp"

namespace qrelent {
namespace {

using namespace testing;

Matrix two_level(double e) {
  Matrix h = Matrix::Zero(2, 2);
  h(1, 1) = e;
  return h;
}

TEST(CostRatioTest, FreeStateCarriesNothing) {
  const auto rho0 = diag_state({0.6, 0.4});
  CostedStates cs{rho0, {rho0}, {1.0}, {1.0}};
  const auto r = chi_cost_ratio(cs, 0.5);
  EXPECT_NEAR(r.chi, 0.0, 1e-12);
  EXPECT_NEAR(r.ratio, 0.0, 1e-12);
}

TEST(CostRatioTest, SmallEtaApproachesDivergence) {
  CostedStates cs{DensityOperator::maximally_mixed(2), {diag_state({1, 0})}, {1.0}, {1.0}};
  const auto r = chi_cost_ratio(cs, 0.01);
  EXPECT_NEAR(r.ratio, 1.0, 0.05);
  EXPECT_LE(r.lower, r.chi + 1e-12);
  EXPECT_LE(r.chi, r.upper + 1e-12);
}

TEST(CostRatioTest, OutsideSupportHasInfiniteUpperBound) {
  CostedStates cs{diag_state({1, 0}), {DensityOperator::maximally_mixed(2)}, {1.0}, {1.0}};
  EXPECT_EQ(chi_cost_ratio(cs, 0.1).upper, kInfinity);
}

TEST(CostRatioTest, RejectsNonPositiveCost) {
  CostedStates cs{DensityOperator::maximally_mixed(2), {diag_state({1, 0})}, {0.0}, {1.0}};
  EXPECT_THROW(chi_cost_ratio(cs, 0.1), Error);
}

TEST(SupCostEffectiveness, SingleState) {
  const auto rho0 = DensityOperator::maximally_mixed(2);
  const auto rho1 = diag_state({0.9, 0.1});
  CostedStates cs{rho0, {rho1}, {2.0}, {1.0}};
  const auto ce = sup_cost_effectiveness(cs);
  EXPECT_NEAR(ce.bound, relative_entropy(rho1, rho0) / 2.0, 1e-12);
  EXPECT_TRUE(ce.monotone_approach);
  EXPECT_NEAR(ce.extrapolated, ce.bound, 1e-4);
  for (double r : ce.ratios) EXPECT_LE(r, ce.bound + 1e-9);
}

TEST(SupCostEffectiveness, PicksLargestRatio) {
  const auto rho0 = DensityOperator::maximally_mixed(2);
  const auto pure0 = diag_state({1, 0});  // D = 1
  CostedStates cs{rho0, {pure0, pure0}, {1.0, 2.0}, {0.5, 0.5}};
  const auto ce = sup_cost_effectiveness(cs);
  EXPECT_EQ(ce.argmax, 0u);
  EXPECT_NEAR(ce.bound, 1.0, 1e-12);
}

TEST(SupCostEffectiveness, MatchesBruteForce) {
  Rng rng(4);
  const auto rho0 = random_density(2, 2, rng);
  std::vector<DensityOperator> states;
  std::vector<double> costs;
  double best = 0;
  for (int k = 0; k < 3; ++k) {
    states.push_back(random_density(2, 2, rng));
    costs.push_back(0.5 + uniform01(rng));
    best = std::max(best, relative_entropy(states.back(), rho0) / costs.back());
  }
  CostedStates cs{rho0, states, costs, {1.0 / 3, 1.0 / 3, 1.0 / 3}};
  EXPECT_NEAR(sup_cost_effectiveness(cs).bound, best, 1e-12);
}

TEST(MaxRatio, Basic) {
  const double a[] = {1.0, 1.0}, b[] = {1.0, 2.0};
  EXPECT_DOUBLE_EQ(max_ratio(a, b), 1.0);
}

TEST(Thermal, ZeroHamiltonianIsMaximallyMixed) {
  const auto th = thermal_state({Matrix::Zero(3, 3), 1.0, 1.0});
  EXPECT_LT(max_abs(th.state.matrix() - Matrix::Identity(3, 3) / 3), 1e-15);
  EXPECT_NEAR(th.partition_function, 3.0, 1e-14);
}

TEST(Thermal, HighTemperatureLimit) {
  Rng rng(6);
  Matrix h = random_hermitian(3, rng);
  const double emax = eigh(h).values.cwiseAbs().maxCoeff();
  const auto th = thermal_state({h, emax / 1e-4, 1.0});
  EXPECT_LE((th.state.matrix() - Matrix::Identity(3, 3) / 3).norm(), 1e-3);
}

TEST(Thermal, TwoLevelPopulations) {
  const auto th = thermal_state({two_level(std::log(2.0)), 1.0, 1.0});
  EXPECT_NEAR(th.state.matrix()(0, 0).real(), 2.0 / 3, 1e-14);
  EXPECT_NEAR(th.state.matrix()(1, 1).real(), 1.0 / 3, 1e-14);
}

TEST(Thermal, RejectsBadModel) {
  EXPECT_THROW(thermal_state({two_level(1.0), -1.0, 1.0}), Error);
  Matrix h = two_level(1.0);
  h(0, 1) = 1;
  EXPECT_THROW(thermal_state({h, 1.0, 1.0}), Error);
}

TEST(FreeEnergy, EquilibriumValue) {
  const ThermalModel tm{two_level(0.7), 1.3, 1.0};
  const auto th = thermal_state(tm);
  EXPECT_NEAR(free_energy(th.state, tm), -tm.kT() * std::log(2.0) * std::log2(th.partition_function), 1e-12);
}

TEST(FreeEnergy, PureGroundState) {
  EXPECT_NEAR(free_energy(diag_state({1, 0}), {two_level(2.0), 1.0, 1.0}), 0.0, 1e-14);
}

TEST(FreeEnergy, EquilibriumIsMinimal) {
  Rng rng(8);
  const ThermalModel tm{Matrix::Identity(2, 2), 0.8, 1.0};
  const double f0 = free_energy(thermal_state(tm).state, tm);
  for (int k = 0; k < 20; ++k) EXPECT_GE(free_energy(random_density(2, 2, rng), tm), f0 - 1e-12);
}

TEST(FreeEnergyGapTest, EquilibriumHasNoGap) {
  const ThermalModel tm{two_level(1.0), 1.0, 1.0};
  const auto g = free_energy_gap(thermal_state(tm).state, tm);
  EXPECT_NEAR(g.via_relative_entropy, 0.0, 1e-12);
  EXPECT_NEAR(g.via_free_energies, 0.0, 1e-12);
}

TEST(FreeEnergyGapTest, TwoLevelGroundState) {
  const double e = 1.5;
  const ThermalModel tm{two_level(e), e, 1.0};
  const auto rho1 = diag_state({1, 0});
  const auto g = free_energy_gap(rho1, tm);
  const double d = relative_entropy(rho1, thermal_state(tm).state);
  EXPECT_NEAR(g.via_relative_entropy, e * std::log(2.0) * d, 1e-12);
  EXPECT_NEAR(g.via_free_energies, g.via_relative_entropy, 1e-12);
}

TEST(BitsPerFreeEnergy, BoundedByLandauer) {
  Rng rng(10);
  for (int k = 0; k < 30; ++k) {
    const ThermalModel tm{random_hermitian(2, rng), 0.5 + uniform01(rng), 1.0};
    WeightedStates ens{{0.5, 0.5}, {random_density(2, 2, rng), random_density(2, 1, rng)}};
    EXPECT_LE(bits_per_free_energy(ens, tm), 1.0 / (tm.kT() * std::log(2.0)) + 1e-8);
  }
}

}  // namespace
}  // namespace qrelent
