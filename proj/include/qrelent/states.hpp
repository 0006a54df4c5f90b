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
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "qrelent/opalg.hpp"
#include "qrelent/random.hpp"

namespace qrelent {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Weight of rho outside supp(sigma) above which D(rho||sigma) is +inf.
inline constexpr double kSupportTolerance = 1e-10;
/// Eigenvalues of sigma at or below this count as its kernel.
inline constexpr double kKernelEigenvalue = 1e-13;
inline constexpr double kTraceTolerance = 1e-9;

/// Positive unit-trace Hermitian matrix with its spectrum cached at
/// construction. Immutable.
class DensityOperator {
 public:
  /// Validates and wraps; throws NotSquare, NotHermitian, TraceNotOne or NotPositive.
  static DensityOperator from_matrix(const Matrix& m, double tol = kHermitianTolerance);
  /// Rank-one projector onto the normalized `psi`.
  static DensityOperator pure(const Vector& psi);
  static DensityOperator maximally_mixed(Eigen::Index dim);
  static DensityOperator diagonal(std::span<const double> probs);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const Spectrum<cplx>& spectrum() const { return spectrum_; }
  const RealVector& eigenvalues() const { return spectrum_.values; }
  bool is_pure(double tol = 1e-9) const { return spectrum_.values.maxCoeff() >= 1.0 - tol; }
  Eigen::Index rank(double cut = 1e-10) const { return (spectrum_.values.array() > cut).count(); }

 private:
  DensityOperator(Matrix m, Spectrum<cplx> sp) : matrix_(std::move(m)), spectrum_(std::move(sp)) {}

  Matrix matrix_;
  Spectrum<cplx> spectrum_;
};

inline DensityOperator validate_density(const Matrix& m) { return DensityOperator::from_matrix(m); }

/// Shannon entropy in bits with 0 log 0 = 0; negative entries below PSD noise are ignored.
double shannon_entropy(std::span<const double> probs);
double shannon_entropy(const RealVector& probs);

/// von Neumann entropy -Tr rho log2 rho.
double entropy(const DensityOperator& rho);

/// Entropy of any PSD unit-trace matrix; no validation beyond eigenvalue clipping.
double entropy_of(const Matrix& m);

/// D(rho||sigma) in bits; +inf when rho has weight above kSupportTolerance
/// outside the support of sigma. Finite values are clamped at 0 from below.
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

/// Unvalidated variant for optimizer inner loops.
double relative_entropy_of(const Matrix& rho, const Matrix& sigma);

namespace detail {
/// D(rho||sigma) given rho's eigenvalues and sigma's decomposition.
double relative_entropy_spectral(const Matrix& rho, const RealVector& rho_eigenvalues, const Spectrum<cplx>& sigma);
/// -Tr rho log2 sigma restricted to the support, plus the weight outside it.
std::pair<double, double> cross_entropy_spectral(const Matrix& rho, const Spectrum<cplx>& sigma);
}  // namespace detail

/// Probability-weighted family of states of a common dimension.
struct WeightedStates {
  std::vector<double> probs;
  std::vector<DensityOperator> states;

  /// Checks sum-to-one, non-negativity and common dimension.
  void validate() const;
  Matrix mean_matrix() const;
  DensityOperator mean() const;
};

bool joint_convexity_check(const std::pair<DensityOperator, DensityOperator>& first,
                           const std::pair<DensityOperator, DensityOperator>& second, double p);

struct DonaldTerms {
  double lhs = 0;            ///< sum_k p_k D(rho_k || sigma)
  double avg_to_mean = 0;    ///< sum_k p_k D(rho_k || mean)
  double mean_to_sigma = 0;  ///< D(mean || sigma)

  double residual() const;
};

DonaldTerms donald_decompose(const WeightedStates& ens, const DensityOperator& sigma);

/// Purification sum_i sqrt(lambda_i) |i> (x) |i'> on system (x) ancilla, both of dimension dim.
Vector purify(const DensityOperator& rho);

/// Reproducible random state of exact rank: G G^dagger / Tr for a dim x rank Ginibre G.
DensityOperator random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed);
DensityOperator random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng);

/// Rank-one projector |psi><psi| as a plain matrix.
inline Matrix projector(const Vector& psi) { return psi * psi.adjoint(); }

}  // namespace qrelent
