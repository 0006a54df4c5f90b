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

#include "test_util.hpp"

namespace qrelent {
namespace {

using namespace testing;

TEST(DensityOperatorTest, MaximallyMixedQubit) {
  const auto rho = DensityOperator::from_matrix(Matrix::Identity(2, 2) / 2);
  EXPECT_NEAR(rho.eigenvalues()[0], 0.5, 1e-15);
  EXPECT_NEAR(rho.eigenvalues()[1], 0.5, 1e-15);
}

TEST(DensityOperatorTest, RejectsNegativeEigenvalue) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 2;
  m(1, 1) = -1;
  EXPECT_ERROR_KIND(DensityOperator::from_matrix(m), ErrorKind::NotPositive);
}

TEST(DensityOperatorTest, RejectsBadTraceAndNonHermitian) {
  EXPECT_ERROR_KIND(DensityOperator::from_matrix(Matrix::Identity(2, 2)), ErrorKind::TraceNotOne);
  Matrix m = Matrix::Identity(2, 2) / 2;
  m(0, 1) = 0.1;
  EXPECT_ERROR_KIND(DensityOperator::from_matrix(m), ErrorKind::NotHermitian);
}

TEST(DensityOperatorTest, PureProjector) {
  Rng rng(2);
  const auto rho = DensityOperator::pure(random_pure_vector(3, rng));
  EXPECT_TRUE(rho.is_pure());
  EXPECT_EQ(rho.rank(), 1);
  EXPECT_ERROR_KIND(DensityOperator::pure(ket({1, 1})), ErrorKind::NotNormalized);
}

TEST(Entropy, PureIsZero) {
  Rng rng(4);
  EXPECT_NEAR(entropy(DensityOperator::pure(random_pure_vector(4, rng))), 0.0, 1e-12);
}

TEST(Entropy, KnownValues) {
  EXPECT_NEAR(entropy(DensityOperator::maximally_mixed(2)), 1.0, 1e-15);
  EXPECT_NEAR(entropy(diag_state({0.25, 0.75})), 0.811278124459133, 1e-12);
  EXPECT_NEAR(entropy(DensityOperator::maximally_mixed(8)), 3.0, 1e-13);
}

TEST(RelativeEntropy, SelfIsZero) {
  Rng rng(6);
  for (int k = 0; k < 10; ++k) {
    const auto rho = random_density(3, 1 + k % 3, rng);
    EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-10);
  }
}

TEST(RelativeEntropy, PureAgainstMaximallyMixed) {
  EXPECT_NEAR(relative_entropy(diag_state({1, 0}), DensityOperator::maximally_mixed(2)), 1.0, 1e-14);
}

TEST(RelativeEntropy, SupportViolationIsInfinite) {
  EXPECT_EQ(relative_entropy(diag_state({1, 0}), diag_state({0, 1})), kInfinity);
}

TEST(RelativeEntropy, NonNegativeOnRandomPairs) {
  Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    const auto rho = random_density(3, 3, rng), sigma = random_density(3, 3, rng);
    EXPECT_GE(relative_entropy(rho, sigma), -1e-12);
  }
}

TEST(RelativeEntropy, DimensionMismatch) {
  EXPECT_ERROR_KIND(relative_entropy(DensityOperator::maximally_mixed(2), DensityOperator::maximally_mixed(3)),
                    ErrorKind::DimensionMismatch);
}

TEST(JointConvexity, IdenticalPairs) {
  const auto rho = diag_state({0.3, 0.7});
  EXPECT_TRUE(joint_convexity_check({rho, rho}, {rho, rho}, 0.4));
}

TEST(JointConvexity, RandomQubitPairs) {
  Rng rng(10);
  for (int k = 0; k < 20; ++k) {
    const std::pair first{random_density(2, 2, rng), random_density(2, 2, rng)};
    const std::pair second{random_density(2, 2, rng), random_density(2, 2, rng)};
    EXPECT_TRUE(joint_convexity_check(first, second, 0.3));
  }
}

TEST(JointConvexity, DegenerateMixture) {
  Rng rng(13);
  const std::pair first{random_density(2, 2, rng), random_density(2, 2, rng)};
  const std::pair second{random_density(2, 2, rng), random_density(2, 2, rng)};
  EXPECT_TRUE(joint_convexity_check(first, second, 0.0));
  EXPECT_THROW(joint_convexity_check(first, second, 1.5), Error);
}

TEST(Donald, SigmaAtMean) {
  Rng rng(14);
  WeightedStates ens{{0.2, 0.3, 0.5}, {random_density(2, 2, rng), random_density(2, 1, rng), random_density(2, 2, rng)}};
  const auto t = donald_decompose(ens, ens.mean());
  EXPECT_NEAR(t.mean_to_sigma, 0.0, 1e-12);
  EXPECT_NEAR(t.lhs, t.avg_to_mean, 1e-12);
}

TEST(Donald, SingleElement) {
  Rng rng(15);
  const auto rho = random_density(2, 2, rng), sigma = random_density(2, 2, rng);
  const auto t = donald_decompose(WeightedStates{{1.0}, {rho}}, sigma);
  EXPECT_NEAR(t.lhs, relative_entropy(rho, sigma), 1e-12);
  EXPECT_NEAR(t.avg_to_mean, 0.0, 1e-12);
}

TEST(Donald, RandomIdentityCloses) {
  Rng rng(16);
  for (int k = 0; k < 20; ++k) {
    WeightedStates ens{{0.5, 0.25, 0.25}, {random_density(2, 2, rng), random_density(2, 2, rng), random_density(2, 1, rng)}};
    EXPECT_LT(donald_decompose(ens, random_density(2, 2, rng)).residual(), 1e-8);
  }
}

TEST(Donald, RejectsBadEnsemble) {
  WeightedStates ens{{0.5, 0.6}, {DensityOperator::maximally_mixed(2), DensityOperator::maximally_mixed(2)}};
  EXPECT_THROW(donald_decompose(ens, DensityOperator::maximally_mixed(2)), Error);
}

TEST(Purify, PureInputGivesProductVector) {
  const auto rho = DensityOperator::pure(plus());
  const Vector w = purify(rho);
  const int dims[] = {2, 2};
  const int sys[] = {0}, anc[] = {1};
  EXPECT_LT(max_abs(reduced_state(w, dims, sys) - rho.matrix()), 1e-12);
  EXPECT_NEAR(entropy_of(reduced_state(w, dims, anc)), 0.0, 1e-10);
}

TEST(Purify, MaximallyMixedGivesEprType) {
  const Vector w = purify(DensityOperator::maximally_mixed(2));
  const int dims[] = {2, 2};
  const int sys[] = {0};
  EXPECT_LT(max_abs(reduced_state(w, dims, sys) - Matrix::Identity(2, 2) / 2), 1e-12);
}

TEST(Purify, SchmidtCoefficients) {
  const Vector w = purify(diag_state({0.25, 0.75}));
  Matrix m(2, 2);
  for (int s = 0; s < 2; ++s) {
    for (int a = 0; a < 2; ++a) m(s, a) = w(2 * s + a);
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  EXPECT_NEAR(svd.singularValues()[0], std::sqrt(0.75), 1e-12);
  EXPECT_NEAR(svd.singularValues()[1], 0.5, 1e-12);
}

TEST(RandomDensity, RankOneIsPure) {
  EXPECT_NEAR(entropy(random_density(3, 1, 5)), 0.0, 1e-10);
}

TEST(RandomDensity, DeterministicForSeed) {
  EXPECT_EQ(random_density(2, 2, 42).matrix(), random_density(2, 2, 42).matrix());
}

TEST(RandomDensity, RankBoundsEntropy) {
  for (std::uint64_t s = 0; s < 10; ++s) EXPECT_LE(entropy(random_density(4, 2, s)), 1.0 + 1e-12);
  EXPECT_ERROR_KIND(random_density(2, 3, 0), ErrorKind::BadRank);
}

}  // namespace
}  // namespace qrelent
