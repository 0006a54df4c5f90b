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

#include "qrelent/states.hpp"

namespace qrelent {

/// sigma = sum_j q_j |a_j><a_j| (x) |b_j><b_j|
struct SeparableAnsatz {
  std::vector<double> weights;
  std::vector<Vector> a_vecs;
  std::vector<Vector> b_vecs;
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;

  std::size_t size() const { return weights.size(); }
  Matrix assemble() const;
  DensityOperator state() const { return DensityOperator::from_matrix(assemble()); }
};

struct ErConfig {
  int restarts = 64;
  std::uint64_t seed = 0;
  int max_iterations = 5000;
  int window = 50;
  double tol = 1e-7;
  int terms = 0;  ///< 0 selects (d_A d_B)^2
};

/// E_r (ansatz upper bound): value = D(rho || argmin.state()).
struct ErResult {
  double value = kInfinity;
  SeparableAnsatz argmin;
  int restarts_used = 0;
  bool converged = false;
  std::vector<double> best_by_restart;  ///< running minimum after each restart
};

ErResult relative_entropy_of_entanglement(const DensityOperator& rho, Eigen::Index dim_a, Eigen::Index dim_b,
                                          const ErConfig& config = {});

/// S(Tr_B |psi><psi|).
double er_pure(const Vector& psi, Eigen::Index dim_a, Eigen::Index dim_b);

/// sum_k p_k S(rho_k^A) for a pure decomposition of rho; throws BadDecomposition.
double er_ensemble_bound(std::span<const double> probs, std::span<const Vector> states, const DensityOperator& rho,
                         Eigen::Index dim_a, Eigen::Index dim_b);

}  // namespace qrelent
