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

#include "qrelent/capacity.hpp"
#include "qrelent/channels.hpp"
#include "test_util.hpp"

namespace qrelent {
namespace {

using namespace testing;

SignalEnsemble pure_signals(std::vector<double> p, const std::vector<Vector>& kets) {
  SignalEnsemble s;
  s.probs = std::move(p);
  for (const auto& k : kets) {
    s.outputs.push_back(DensityOperator::pure(k));
    s.inputs.push_back(k);
  }
  return s;
}

TEST(HolevoChi, OrthogonalPureStates) {
  EXPECT_NEAR(holevo_chi(pure_signals({0.5, 0.5}, {basis(2, 0), basis(2, 1)})), 1.0, 1e-14);
}

TEST(HolevoChi, IdenticalStates) {
  EXPECT_NEAR(holevo_chi(pure_signals({0.3, 0.7}, {plus(), plus()})), 0.0, 1e-12);
}

TEST(HolevoChi, ZeroAndPlus) {
  const double l1 = (2 + std::sqrt(2.0)) / 4, l2 = (2 - std::sqrt(2.0)) / 4;
  const double expect = -l1 * std::log2(l1) - l2 * std::log2(l2);
  const auto ens = pure_signals({0.5, 0.5}, {basis(2, 0), plus()});
  EXPECT_NEAR(holevo_chi(ens), expect, 1e-12);
  EXPECT_NEAR(expect, 0.600876, 1e-6);
  EXPECT_NEAR(holevo_chi_divergence(ens), expect, 1e-10);
}

TEST(JointDistribution, TrivialPovm) {
  const auto ens = pure_signals({0.25, 0.75}, {basis(2, 0), plus()});
  const auto joint = joint_distribution(ens, Povm::from_elements({Matrix::Identity(2, 2)}));
  EXPECT_NEAR(joint(0, 0), 0.25, 1e-15);
  EXPECT_NEAR(joint(1, 0), 0.75, 1e-15);
}

TEST(JointDistribution, ProjectiveOnBasisSignals) {
  const auto ens = pure_signals({0.5, 0.5}, {basis(2, 0), basis(2, 1)});
  const auto joint = joint_distribution(ens, Povm::from_elements({projector(basis(2, 0)), projector(basis(2, 1))}));
  EXPECT_NEAR(joint(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(joint(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(joint(1, 1), 0.5, 1e-15);
  EXPECT_NEAR(mutual_information(joint), 1.0, 1e-14);
}

TEST(JointDistribution, RowSumsAreSignalProbabilities) {
  Rng rng(3);
  SignalEnsemble ens;
  ens.probs = {0.2, 0.5, 0.3};
  for (int k = 0; k < 3; ++k) ens.outputs.push_back(random_density(2, 2, rng));
  const auto joint = joint_distribution(ens, Povm::random(2, 3, rng));
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(joint.row(a).sum(), ens.probs[a], 1e-10);
}

TEST(MutualInformation, ProductTableIsZero) {
  Eigen::MatrixXd t(2, 2);
  t << 0.12, 0.28, 0.18, 0.42;
  EXPECT_NEAR(mutual_information(t), 0.0, 1e-14);
}

TEST(HolevoBound, RandomPovms) {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    SignalEnsemble ens;
    ens.probs = {0.5, 0.5};
    ens.outputs = {random_density(2, 1, rng), random_density(2, 2, rng)};
    const auto joint = joint_distribution(ens, Povm::random(2, 2 + k % 3, rng));
    EXPECT_LE(mutual_information(joint), holevo_chi(ens) + 1e-8);
  }
}

TEST(Povm, RejectsIncomplete) {
  EXPECT_THROW(Povm::from_elements({projector(basis(2, 0))}), Error);
}

TEST(DeltaChi, MixingInTheMean) {
  const auto ens = pure_signals({0.5, 0.5}, {basis(2, 0), plus()});
  const double chi = holevo_chi(ens);
  const auto b = delta_chi_bounds(ens, ens.average(), 0.2);
  EXPECT_LE(b.actual, 1e-12);
  EXPECT_NEAR(b.upper, -0.2 * chi, 1e-12);
}

TEST(DeltaChi, BoundsTightenAsEtaVanishes) {
  const auto ens = pure_signals({0.5, 0.5}, {basis(2, 0), plus()});
  const auto omega = DensityOperator::pure(basis(2, 1));
  const double eta = 1e-4;
  const auto b = delta_chi_bounds(ens, omega, eta);
  EXPECT_LE((b.upper - b.lower) / eta, 1e-3);
}

TEST(DeltaChi, SandwichOnRandomQubits) {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    SignalEnsemble ens;
    ens.probs = {0.6, 0.4};
    ens.outputs = {random_density(2, 2, rng), random_density(2, 2, rng)};
    const auto b = delta_chi_bounds(ens, random_density(2, 2, rng), 0.1);
    EXPECT_LE(b.lower, b.actual + 1e-12);
    EXPECT_LE(b.actual, b.upper + 1e-12);
  }
}

TEST(OptimizeEnsemble, IdentityQubit) {
  EnsembleConfig cfg;
  cfg.grid = 100;
  const auto res = optimize_ensemble(identity_channel(2), cfg);
  EXPECT_NEAR(res.certificate.chi_star, 1.0, 1e-6);
  EXPECT_LT(max_abs(res.ensemble.average_matrix() - Matrix::Identity(2, 2) / 2), 1e-3);
  EXPECT_TRUE(res.certificate.passes(1e-6));
  for (std::size_t k = 1; k < res.trace.size(); ++k) EXPECT_GE(res.trace[k], res.trace[k - 1] - 1e-15);
}

TEST(OptimizeEnsemble, ConstantChannel) {
  EXPECT_NEAR(optimize_ensemble(depolarizing_channel(2, 1.0)).certificate.chi_star, 0.0, 1e-9);
}

TEST(OptimizeEnsemble, DephasingMatchesPairScan) {
  const auto ch = dephasing_channel(2, 0.6);
  double brute = 0;
  for (int i = 0; i <= 90; ++i) {
    const double th = M_PI * i / 180;
    const Vector a = ket({std::cos(th / 2), std::sin(th / 2)});
    const Vector b = ket({std::sin(th / 2), -std::cos(th / 2)});
    SignalEnsemble ens;
    ens.probs = {0.5, 0.5};
    ens.outputs = {apply(ch, DensityOperator::pure(a)), apply(ch, DensityOperator::pure(b))};
    brute = std::max(brute, holevo_chi(ens));
  }
  EXPECT_NEAR(optimize_ensemble(ch).certificate.chi_star, brute, 1e-4);
}

TEST(Certificate, SuboptimalEnsembleViolates) {
  const auto ens = pure_signals({0.9, 0.1}, {basis(2, 0), basis(2, 1)});
  const double chi = holevo_chi(ens);
  const auto probe = probe_grid(identity_channel(2), 100);
  std::vector<DensityOperator> outs;
  for (const auto& p : probe) outs.push_back(p.output);
  outs.push_back(DensityOperator::pure(basis(2, 1)));
  const auto cert = certify(ens, outs);
  const double d1 = relative_entropy(DensityOperator::pure(basis(2, 1)), ens.average());
  EXPECT_GT(cert.max_distance_violation, 0.0);
  EXPECT_NEAR(cert.max_distance_violation, d1 - chi, 1e-9);
  EXPECT_FALSE(cert.passes(1e-6));
}

TEST(Minimax, IdentityQubitAtMaximallyMixed) {
  const auto probe = probe_grid(identity_channel(2), 100);
  std::vector<DensityOperator> outs;
  for (const auto& p : probe) outs.push_back(p.output);
  MinimaxConfig cfg;
  cfg.start = DensityOperator::maximally_mixed(2);
  EXPECT_NEAR(chi_star_minimax(outs, cfg).value, 1.0, 1e-6);
}

TEST(Minimax, ConstantChannel) {
  const auto probe = probe_grid(depolarizing_channel(2, 1.0), 50);
  std::vector<DensityOperator> outs;
  for (const auto& p : probe) outs.push_back(p.output);
  EXPECT_NEAR(chi_star_minimax(outs).value, 0.0, 1e-9);
}

TEST(Minimax, AgreesWithEnsembleOptimizer) {
  const auto ch = depolarizing_channel(2, 0.5);
  const auto probe = probe_grid(ch, 200);
  std::vector<DensityOperator> outs;
  for (const auto& p : probe) outs.push_back(p.output);
  EXPECT_NEAR(chi_star_minimax(outs).value, optimize_ensemble(ch).certificate.chi_star, 1e-3);
}

TEST(Additivity, IdentityPair) {
  const auto rep = additivity_experiment(identity_channel(2), identity_channel(2));
  EXPECT_NEAR(rep.chi_ab, 2.0, 1e-6);
  EXPECT_NEAR(rep.gap, 0.0, 1e-6);
}

TEST(Additivity, DepolarizingPair) {
  const auto rep = additivity_experiment(depolarizing_channel(2, 0.3), depolarizing_channel(2, 0.3));
  EXPECT_LE(std::abs(rep.gap), 1e-3);
}

}  // namespace
}  // namespace qrelent
