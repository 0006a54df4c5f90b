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
#include <string>
#include <vector>

#include "qrelent/opalg.hpp"
#include "qrelent/states.hpp"

namespace qrelent {

/// CPTP map stored as its Kraus operators (out_dim x in_dim each). The
/// environment of the derived dilation has one level per Kraus operator.
class QuantumChannel {
 public:
  /// Throws NotTracePreserving unless sum_i K_i^dagger K_i = I within `tol`.
  static QuantumChannel from_kraus(std::vector<Matrix> kraus, double tol = 1e-9);

  Eigen::Index in_dim() const { return kraus_.front().cols(); }
  Eigen::Index out_dim() const { return kraus_.front().rows(); }
  Eigen::Index env_dim() const { return static_cast<Eigen::Index>(kraus_.size()); }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  /// sum_i K_i m K_i^dagger, no validation.
  Matrix map(const Matrix& m) const;
  /// Heisenberg-picture adjoint sum_i K_i^dagger x K_i.
  Matrix adjoint_map(const Matrix& x) const;
  /// Environment marginal: [rho_E]_{ij} = Tr K_i m K_j^dagger.
  Matrix env_map(const Matrix& m) const;

 private:
  explicit QuantumChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {}

  std::vector<Matrix> kraus_;
};

/// Stinespring form: V|psi> = sum_i K_i|psi> (x) |i_E>, output ordered (out, env).
struct DilatedChannel {
  QuantumChannel base;
  Matrix isometry;
};

DensityOperator apply(const QuantumChannel& ch, const DensityOperator& rho);
DilatedChannel dilate(const QuantumChannel& ch);
DensityOperator environment_output(const QuantumChannel& ch, const DensityOperator& rho);
/// Kraus set {K_i (x) L_j}.
QuantumChannel product(const QuantumChannel& a, const QuantumChannel& b);
/// second o first.
QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first);

enum class ChannelFamily { Identity, Depolarizing, Dephasing, Unitary };

QuantumChannel identity_channel(Eigen::Index dim);
/// rho -> (1-p) rho + p I/d, via the d^2 Weyl operators.
QuantumChannel depolarizing_channel(Eigen::Index dim, double p);
/// rho -> (1-lambda) rho + lambda diag(rho).
QuantumChannel dephasing_channel(Eigen::Index dim, double lambda);
QuantumChannel unitary_channel(const Matrix& u);

/// Dispatch over the test zoo; `param` is p or lambda, `u` used only for Unitary.
QuantumChannel standard_channel(ChannelFamily family, Eigen::Index dim, double param = 0.0, const Matrix& u = {});

struct MinOutputEntropyResult {
  double value = 0;
  Vector argmin;
};

/// Multi-start projected descent of S(E(|psi><psi|)) over pure inputs. The
/// minimum is heuristic, so the value is an upper bound on the true minimum.
MinOutputEntropyResult min_output_entropy(const QuantumChannel& ch, int restarts = 32, std::uint64_t seed = 0,
                                          int iterations = 200);

}  // namespace qrelent
