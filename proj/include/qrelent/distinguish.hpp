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

// N-copy hypothesis testing of rho against sigma. A test T accepts rho with
// probability Tr rho^{(x)N} T >= 1 - alpha; beta_N is the least achievable
// Tr sigma^{(x)N} T. Deterministic tests are projectors; randomized tests
// are mixtures of two projectors.

#include <cmath>
#include <span>
#include <vector>

#include "qrelent/states.hpp"

namespace qrelent {

inline constexpr std::size_t kMaxTensorDim = 4096;

enum class TestKind { Deterministic, Randomized };

/// Classical N-sample test between distributions p and q by type-class enumeration.
double classical_stein_error(std::span<const double> p, std::span<const double> q, int copies, double alpha,
                             TestKind kind = TestKind::Deterministic);

/// Best test over the likelihood-ratio projector family at every m <= N copies.
/// Throws DimensionTooLarge when dim^N > 4096.
double stein_error(const DensityOperator& rho, const DensityOperator& sigma, int copies, double alpha = 0.05,
                   TestKind kind = TestKind::Deterministic);

/// Measure every copy in rho's eigenbasis, then test classically.
double eigenbasis_stein_error(const DensityOperator& rho, const DensityOperator& sigma, int copies, double alpha = 0.05);

inline double stein_exponent(double beta, int copies) { return beta >= 1 ? 0.0 : -std::log2(beta) / copies; }

struct SteinReport {
  double alpha = 0.05;
  double target = 0;  ///< D(rho || sigma)
  std::vector<int> copies;
  std::vector<double> betas;
  std::vector<double> exponents;
  std::vector<double> classical_exponents;  ///< eigenbasis-measured tests
  std::vector<bool> finite_size_flags;      ///< exponent > D + 3/N
  bool approaches = false;                  ///< |e(N_max) - D| < |e(1) - D|
  std::vector<std::pair<double, double>> alpha_sensitivity;  ///< (alpha, exponent at N_max)
};

SteinReport exponent_trend(const DensityOperator& rho, const DensityOperator& sigma, int n_max, double alpha = 0.05);

}  // namespace qrelent
