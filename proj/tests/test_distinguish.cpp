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

#include "qrelent/distinguish.hpp"
#include "test_util.hpp"

namespace qrelent {
namespace {

using namespace testing;

TEST(SteinError, IdenticalStates) {
  const auto rho = diag_state({0.6, 0.4});
  for (int n = 1; n <= 4; ++n) {
    EXPECT_NEAR(stein_error(rho, rho, n, 0.05, TestKind::Randomized), 0.95, 1e-12);
    EXPECT_GE(stein_error(rho, rho, n, 0.05), 0.95 - 1e-12);
  }
}

TEST(SteinError, PureAgainstMaximallyMixed) {
  const auto rho = diag_state({1, 0});
  const auto sigma = DensityOperator::maximally_mixed(2);
  for (int n = 1; n <= 10; ++n) {
    const double beta = stein_error(rho, sigma, n);
    EXPECT_EQ(beta, std::ldexp(1.0, -n));
    EXPECT_EQ(stein_exponent(beta, n), 1.0);
  }
}

TEST(SteinError, RotatedPureAgainstMaximallyMixed) {
  const auto rho = DensityOperator::pure(plus());
  EXPECT_NEAR(stein_exponent(stein_error(rho, DensityOperator::maximally_mixed(2), 4), 4), 1.0, 1e-9);
}

TEST(SteinError, OrthogonalPureStates) {
  const auto rho = DensityOperator::pure(basis(2, 0)), sigma = DensityOperator::pure(basis(2, 1));
  const double beta = stein_error(rho, sigma, 3);
  EXPECT_EQ(beta, 0.0);
  EXPECT_EQ(stein_exponent(beta, 3), kInfinity);
  EXPECT_EQ(relative_entropy(rho, sigma), kInfinity);
}

TEST(SteinError, Errors) {
  const auto rho = DensityOperator::maximally_mixed(2);
  EXPECT_ERROR_KIND(stein_error(rho, rho, 1, 1.5), ErrorKind::BadParameter);
  EXPECT_ERROR_KIND(stein_error(rho, rho, 0), ErrorKind::BadParameter);
  EXPECT_ERROR_KIND(stein_error(rho, rho, 13), ErrorKind::DimensionTooLarge);
  EXPECT_ERROR_KIND(stein_error(rho, DensityOperator::maximally_mixed(3), 1), ErrorKind::DimensionMismatch);
}

TEST(ClassicalStein, MatchesQuantumOnDiagonalStates) {
  const double p[] = {0.7, 0.3}, q[] = {0.4, 0.6};
  const auto rho = DensityOperator::diagonal(p), sigma = DensityOperator::diagonal(q);
  for (int n = 1; n <= 5; ++n) EXPECT_NEAR(classical_stein_error(p, q, n, 0.1), stein_error(rho, sigma, n, 0.1), 1e-12);
}

TEST(ClassicalStein, MoreCopiesNeverHurt) {
  const double p[] = {0.75, 0.25}, q[] = {0.25, 0.75};
  double prev = 1;
  for (int n = 1; n <= 10; ++n) {
    const double beta = classical_stein_error(p, q, n, 0.05);
    EXPECT_LE(beta, prev);
    prev = beta;
  }
}

TEST(ExponentTrend, CommutingPairApproachesDivergence) {
  const auto rho = diag_state({0.75, 0.25}), sigma = diag_state({0.25, 0.75});
  const auto rep = exponent_trend(rho, sigma, 10);
  EXPECT_NEAR(rep.target, 0.5 * std::log2(3.0), 1e-12);
  EXPECT_TRUE(rep.approaches);
  EXPECT_LT(std::abs(rep.exponents.back() - rep.target), std::abs(rep.exponents.front() - rep.target));
  EXPECT_EQ(rep.copies.size(), 10u);
  EXPECT_EQ(rep.alpha_sensitivity.size(), 3u);
}

TEST(ExponentTrend, IdenticalStatesVanish) {
  const auto rho = diag_state({0.3, 0.7});
  const auto rep = exponent_trend(rho, rho, 6);
  for (std::size_t k = 0; k < rep.exponents.size(); ++k) {
    EXPECT_GE(rep.exponents[k], 0.0);
    EXPECT_LE(rep.exponents[k], -std::log2(0.95) / rep.copies[k] + 1e-12);
  }
}

TEST(ExponentTrend, NonCommutingFullRankPair) {
  const auto rho = diag_state({1, 0});
  const auto sigma =
      DensityOperator::from_matrix(0.99 * projector(plus()) + 0.01 * Matrix::Identity(2, 2) / 2);
  const auto rep = exponent_trend(rho, sigma, 8);
  EXPECT_TRUE(rep.approaches);
  EXPECT_LT(std::abs(rep.exponents[7] - rep.target), std::abs(rep.exponents[0] - rep.target));
}

TEST(EigenbasisTest, NeverBeatsOptimalTest) {
  const auto rho = random_density(2, 2, 3), sigma = random_density(2, 2, 4);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_LE(stein_error(rho, sigma, n), eigenbasis_stein_error(rho, sigma, n) + 1e-12);
  }
}

}  // namespace
}  // namespace qrelent
