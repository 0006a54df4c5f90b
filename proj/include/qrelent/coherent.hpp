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

#include <cstdint>
#include <vector>

#include "qrelent/channels.hpp"
#include "qrelent/states.hpp"

namespace qrelent {

/// Channel, input state and a purification of it. The joint vector is
/// ordered (Q, R) with the reference R as the fast index.
struct TransmissionSetup {
  QuantumChannel channel;
  DensityOperator input;
  Vector purification;
  Eigen::Index reference_dim = 0;

  /// Uses the eigenbasis purification of `input`.
  static TransmissionSetup make(const QuantumChannel& ch, const DensityOperator& input);
  /// Any purification; throws ValidationError unless Tr_R matches `input` within 1e-9.
  static TransmissionSetup with_purification(const QuantumChannel& ch, const DensityOperator& input, Vector psi,
                                             Eigen::Index reference_dim);

  /// (E (x) id_R)(|psi><psi|).
  Matrix joint_output() const;
};

/// Pure input states phi_k with probabilities p_k.
struct PureEnsemble {
  std::vector<double> probs;
  std::vector<Vector> states;

  Matrix average() const;
};

double entanglement_fidelity(const TransmissionSetup& setup);
/// sum_k p_k <phi_k| E(phi_k) |phi_k>; throws NotPure for unnormalized inputs.
double average_fidelity(const PureEnsemble& ens, const QuantumChannel& ch);

struct CoherentInfo {
  double value = 0;            ///< S(rho^Q) - S(rho^RQ)
  double via_environment = 0;  ///< S(rho^Q) - S(rho^E)
};

CoherentInfo coherent_information(const TransmissionSetup& setup);
double coherent_information(const QuantumChannel& ch, const DensityOperator& input);

struct ChiDifference {
  double iq = 0;
  double chi_q = 0;
  double chi_e = 0;

  double residual() const { return std::abs(iq - (chi_q - chi_e)); }
};

ChiDifference chi_difference_identity(const PureEnsemble& ens, const QuantumChannel& ch);

struct CoherentConfig {
  int restarts = 16;
  std::uint64_t seed = 0;
  double fd_step = 1e-5;
  int max_iterations = 400;
  int random_probes = 200;
  double equality_tol = 1e-4;
};

struct DistanceDifferenceCertificate {
  double max_excess = 0;      ///< max over probes of [D(w^Q||rho^Q) - D(w^E||rho^E)] - iq_max
  double equality_spread = 0; ///< max |difference - iq_max| over support probes
  int probes = 0;
  int skipped = 0;            ///< probes with an infinite distance
  bool passes = false;
};

struct CoherentMax {
  double iq_max = 0;
  DensityOperator argmax = DensityOperator::maximally_mixed(1);
  DistanceDifferenceCertificate certificate;
};

/// Multi-start ascent over rho = A A^dagger / Tr(A A^dagger). Input dimension <= 8.
CoherentMax maximize_coherent_information(const QuantumChannel& ch, const CoherentConfig& config = {});

/// Evaluates the distance-difference conditions at a candidate maximizer.
DistanceDifferenceCertificate distance_difference_certificate(const QuantumChannel& ch, const DensityOperator& input,
                                                              double iq, const CoherentConfig& config = {});

struct DataProcessing {
  double before = 0;  ///< I^Q(first, rho)
  double after = 0;   ///< I^Q(second o first, rho)
  bool holds = false;
};

DataProcessing data_processing_check(const QuantumChannel& first, const QuantumChannel& second,
                                     const DensityOperator& input);

}  // namespace qrelent
