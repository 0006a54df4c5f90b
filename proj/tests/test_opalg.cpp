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

TEST(Eigh, DiagonalInputSortsAscending) {
  Eigen::Matrix2d m;
  m << 3, 0, 0, 1;
  const auto sp = eigh(m);
  EXPECT_DOUBLE_EQ(sp.values[0], 1.0);
  EXPECT_DOUBLE_EQ(sp.values[1], 3.0);
  EXPECT_NEAR(std::abs(sp.vectors(1, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(sp.vectors(0, 1)), 1.0, 1e-14);
}

TEST(Eigh, PauliX) {
  const auto sp = eigh(pauli_x());
  EXPECT_NEAR(sp.values[0], -1.0, 1e-14);
  EXPECT_NEAR(sp.values[1], 1.0, 1e-14);
}

TEST(Eigh, RandomHermitianReconstructs) {
  Rng rng(3);
  const Matrix h = random_hermitian(8, rng);
  const auto sp = eigh(h);
  EXPECT_LT(max_abs(sp.reconstruct() - h), 1e-9);
  EXPECT_LT(max_abs(sp.vectors.adjoint() * sp.vectors - Matrix::Identity(8, 8)), 1e-12);
}

TEST(Eigh, RejectsNonHermitian) {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  try {
    eigh(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
}

TEST(Eigh, RejectsNonSquare) {
  EXPECT_THROW(eigh(Matrix::Zero(2, 3)), Error);
}

TEST(MatrixLog, IdentityIsZero) {
  EXPECT_LT(max_abs(matrix_log2(Matrix::Identity(3, 3))), 1e-15);
}

TEST(MatrixLog, HalfIdentity) {
  const Matrix l = matrix_log2(Matrix(Matrix::Identity(2, 2) / 2));
  EXPECT_LT(max_abs(l + Matrix::Identity(2, 2)), 1e-14);
}

TEST(MatrixLog, QuarterThreeQuarters) {
  Eigen::Matrix2d m;
  m << 0.25, 0, 0, 0.75;
  const Eigen::Matrix2d l = matrix_log2(m);
  EXPECT_NEAR(l(0, 0), -2.0, 1e-14);
  EXPECT_NEAR(l(1, 1), std::log2(0.75), 1e-14);
  EXPECT_NEAR(l(0, 1), 0.0, 1e-14);
}

TEST(MatrixLog, KernelMapsToZero) {
  Eigen::Matrix2d m;
  m << 1, 0, 0, 0;
  const Eigen::Matrix2d l = matrix_log2(m);
  EXPECT_EQ(l.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Tensor, IdentityTimesIdentity) {
  EXPECT_EQ(tensor(Matrix::Identity(2, 2), Matrix::Identity(2, 2)), Matrix::Identity(4, 4));
}

TEST(Tensor, ProjectorProduct) {
  Eigen::Matrix2d p;
  p << 1, 0, 0, 0;
  Eigen::Matrix4d expect = Eigen::Matrix4d::Zero();
  expect(0, 0) = 1;
  EXPECT_EQ(tensor(p, p), expect);
}

TEST(Tensor, MatchesIndexFormula) {
  Rng rng(5);
  const Matrix a = ginibre(2, 2, rng), b = ginibre(2, 2, rng);
  const Matrix t = tensor(a, b);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) EXPECT_EQ(t(2 * i + k, 2 * j + l), a(i, j) * b(k, l));
      }
    }
  }
}

TEST(Tensor, PowerDimension) { EXPECT_EQ(tensor_power(Matrix::Identity(2, 2), 3).rows(), 8); }

TEST(PartialTrace, ProductState) {
  Rng rng(9);
  const Matrix ra = random_density(2, 2, rng).matrix();
  const Matrix rb = random_density(3, 2, rng).matrix();
  const Matrix out = partial_trace(tensor(ra, rb), {2, 3}, {0});
  EXPECT_LT(max_abs(out - ra), 1e-14);
  EXPECT_LT(max_abs(partial_trace(tensor(ra, rb), {2, 3}, {1}) - rb), 1e-14);
}

TEST(PartialTrace, EprMarginalIsMaximallyMixed) {
  const Matrix p = projector(epr());
  EXPECT_LT(max_abs(partial_trace(p, {2, 2}, {0}) - Matrix::Identity(2, 2) / 2), 1e-15);
}

TEST(PartialTrace, TraceOutMiddleMatchesIndexSum) {
  Rng rng(11);
  const Matrix rho = random_density(12, 12, rng).matrix();  // dims 2,3,2
  const Matrix out = partial_trace(rho, {2, 3, 2}, {0, 2});
  Matrix oracle = Matrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int c2 = 0; c2 < 2; ++c2) {
          for (int b = 0; b < 3; ++b) oracle(2 * a + c, 2 * a2 + c2) += rho(6 * a + 2 * b + c, 6 * a2 + 2 * b + c2);
        }
      }
    }
  }
  EXPECT_LT(max_abs(out - oracle), 1e-14);
}

TEST(PartialTrace, ReducedStateMatchesProjector) {
  Rng rng(12);
  const Vector psi = random_pure_vector(12, rng);
  const int dims[] = {2, 3, 2};
  const int keep[] = {1};
  EXPECT_LT(max_abs(reduced_state(psi, dims, keep) - partial_trace(projector(psi), dims, keep)), 1e-14);
}

TEST(PartialTrace, Errors) {
  const Matrix p = Matrix::Identity(4, 4);
  try {
    partial_trace(p, {2, 3}, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
  const int dims[] = {2, 2};
  try {
    partial_trace(p, std::span<const int>(dims), std::span<const int>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyKeepSet);
  }
}

TEST(Rng, DeriveIsDeterministicAndDistinct) {
  EXPECT_EQ(SplitMix64::derive(7, 1), SplitMix64::derive(7, 1));
  EXPECT_NE(SplitMix64::derive(7, 1), SplitMix64::derive(7, 2));
  EXPECT_NE(SplitMix64::derive(7, 1), SplitMix64::derive(8, 1));
}

TEST(Rng, RandomUnitaryIsUnitary) {
  Rng rng(1);
  const Matrix u = random_unitary(5, rng);
  EXPECT_LT(max_abs(u.adjoint() * u - Matrix::Identity(5, 5)), 1e-12);
}

}  // namespace
}  // namespace qrelent
