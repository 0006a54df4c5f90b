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

#include "qrelent/channels.hpp"
#include "qrelent/coherent.hpp"
#include "test_util.hpp"

namespace qrelent {
namespace {

using namespace testing;

const auto kMixed = DensityOperator::maximally_mixed(2);

TEST(EntanglementFidelity, KnownChannels) {
  EXPECT_NEAR(entanglement_fidelity(TransmissionSetup::make(identity_channel(2), kMixed)), 1.0, 1e-12);
  EXPECT_NEAR(entanglement_fidelity(TransmissionSetup::make(depolarizing_channel(2, 1.0), kMixed)), 0.25, 1e-12);
  EXPECT_NEAR(entanglement_fidelity(TransmissionSetup::make(unitary_channel(pauli_x()), kMixed)), 0.0, 1e-12);
}

TEST(AverageFidelity, KnownChannels) {
  Rng rng(1);
  PureEnsemble ens{{0.3, 0.7}, {random_pure_vector(2, rng), random_pure_vector(2, rng)}};
  EXPECT_NEAR(average_fidelity(ens, identity_channel(2)), 1.0, 1e-12);
  EXPECT_NEAR(average_fidelity(ens, depolarizing_channel(2, 1.0)), 0.5, 1e-12);
  PureEnsemble basis_ens{{0.5, 0.5}, {basis(2, 0), basis(2, 1)}};
  EXPECT_NEAR(average_fidelity(basis_ens, dephasing_channel(2, 1.0)), 1.0, 1e-12);
}

TEST(AverageFidelity, RejectsUnnormalized) {
  PureEnsemble ens{{1.0}, {ket({1, 1})}};
  EXPECT_THROW(average_fidelity(ens, identity_channel(2)), Error);
}

TEST(CoherentInformation, IdentityChannel) {
  const auto ci = coherent_information(TransmissionSetup::make(identity_channel(2), kMixed));
  EXPECT_NEAR(ci.value, 1.0, 1e-12);
  EXPECT_NEAR(ci.via_environment, 1.0, 1e-12);
}

TEST(CoherentInformation, FullyDepolarizing) {
  EXPECT_NEAR(coherent_information(depolarizing_channel(2, 1.0), kMixed), -1.0, 1e-12);
}

TEST(CoherentInformation, PureInputIsZero) {
  Rng rng(2);
  const auto rho = DensityOperator::pure(random_pure_vector(2, rng));
  EXPECT_NEAR(coherent_information(depolarizing_channel(2, 0.4), rho), 0.0, 1e-9);
}

TEST(CoherentInformation, PurificationChoiceDoesNotMatter) {
  const auto ch = depolarizing_channel(2, 0.3);
  const auto rho = diag_state({0.3, 0.7});
  Rng rng(3);
  const Matrix u = random_unitary(2, rng);
  Vector psi = Vector::Zero(4);
  for (int s = 0; s < 2; ++s) {
    for (int r = 0; r < 2; ++r) psi(2 * s + r) = std::sqrt(rho.matrix()(s, s).real()) * u(r, s);
  }
  const auto a = coherent_information(TransmissionSetup::make(ch, rho));
  const auto b = coherent_information(TransmissionSetup::with_purification(ch, rho, psi, 2));
  EXPECT_NEAR(a.value, b.value, 1e-12);
  EXPECT_THROW(TransmissionSetup::with_purification(ch, kMixed, psi, 2), Error);
}

TEST(ChiDifference, IdentityChannelHasPureEnvironment) {
  PureEnsemble ens{{0.5, 0.5}, {basis(2, 0), plus()}};
  const auto d = chi_difference_identity(ens, identity_channel(2));
  EXPECT_NEAR(d.chi_e, 0.0, 1e-12);
  EXPECT_NEAR(d.iq, d.chi_q, 1e-12);
}

TEST(ChiDifference, DecompositionIndependent) {
  const auto ch = dephasing_channel(2, 0.5);
  const auto a = chi_difference_identity({{0.5, 0.5}, {basis(2, 0), basis(2, 1)}}, ch);
  const auto b = chi_difference_identity({{0.5, 0.5}, {plus(), minus()}}, ch);
  EXPECT_NEAR(a.chi_q - a.chi_e, b.chi_q - b.chi_e, 1e-10);
  EXPECT_LT(a.residual(), 1e-10);
  EXPECT_LT(b.residual(), 1e-10);
}

TEST(ChiDifference, EigenEnsembleOfDepolarizing) {
  const auto rho = random_density(2, 2, 4);
  const auto& sp = rho.spectrum();
  PureEnsemble ens{{sp.values[0], sp.values[1]}, {sp.vectors.col(0), sp.vectors.col(1)}};
  EXPECT_LT(chi_difference_identity(ens, depolarizing_channel(2, 0.5)).residual(), 1e-8);
}

TEST(MaximizeCoherent, IdentityQubit) {
  CoherentConfig cfg;
  cfg.restarts = 4;
  const auto m = maximize_coherent_information(identity_channel(2), cfg);
  EXPECT_NEAR(m.iq_max, 1.0, 1e-6);
  EXPECT_LT(max_abs(m.argmax.matrix() - kMixed.matrix()), 1e-3);
}

TEST(MaximizeCoherent, UnitaryChannelGivesLogD) {
  Rng rng(5);
  CoherentConfig cfg;
  cfg.restarts = 4;
  EXPECT_NEAR(maximize_coherent_information(unitary_channel(random_unitary(3, rng)), cfg).iq_max, std::log2(3.0), 1e-6);
}

TEST(MaximizeCoherent, DephasingMatchesDiagonalScan) {
  const auto ch = dephasing_channel(2, 0.5);
  double brute = -kInfinity;
  for (int i = 0; i <= 1000; ++i) {
    const double p = i / 1000.0;
    brute = std::max(brute, coherent_information(ch, diag_state({p, 1 - p})));
  }
  CoherentConfig cfg;
  cfg.restarts = 4;
  EXPECT_NEAR(maximize_coherent_information(ch, cfg).iq_max, brute, 1e-4);
}

TEST(DataProcessingTest, IdentitySecondStage) {
  const auto r = data_processing_check(depolarizing_channel(2, 0.2), identity_channel(2), kMixed);
  EXPECT_NEAR(r.before, r.after, 1e-12);
  EXPECT_TRUE(r.holds);
}

TEST(DataProcessingTest, DepolarizingSecondStageIsStrict) {
  const auto r = data_processing_check(identity_channel(2), depolarizing_channel(2, 1.0), kMixed);
  EXPECT_LT(r.after, r.before - 0.5);
  EXPECT_TRUE(r.holds);
}

TEST(DataProcessingTest, RandomPairs) {
  Rng rng(6);
  const std::vector<QuantumChannel> zoo{identity_channel(2), depolarizing_channel(2, 0.3), dephasing_channel(2, 0.6),
                                        unitary_channel(random_unitary(2, rng))};
  for (int k = 0; k < 40; ++k) {
    const auto& a = zoo[k % zoo.size()];
    const auto& b = zoo[(k / zoo.size()) % zoo.size()];
    EXPECT_TRUE(data_processing_check(a, b, random_density(2, 2, rng)).holds);
  }
}

}  // namespace
}  // namespace qrelent
