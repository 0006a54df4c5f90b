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

#include "qrelent/states.hpp"

#include <cmath>
#include <string>

namespace qrelent {

DensityOperator DensityOperator::from_matrix(const Matrix& m, double tol) {
  require_square(m, "density matrix");
  if (m.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "density matrix is empty");
  if (!m.allFinite()) throw Error(ErrorKind::NotHermitian, "density matrix has non-finite entries");
  const double defect = hermitian_defect(m);
  if (defect > tol) throw Error(ErrorKind::NotHermitian, "max |m - m^dagger| = " + std::to_string(defect));
  const cplx tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw Error(ErrorKind::TraceNotOne, "trace = " + std::to_string(tr.real()));
  }
  Matrix sym = (m + m.adjoint()) / 2.0;
  auto sp = eigh(sym);
  if (sp.values.minCoeff() < -kClipTolerance) {
    throw Error(ErrorKind::NotPositive, "minimum eigenvalue " + std::to_string(sp.values.minCoeff()));
  }
  sp.values = sp.values.cwiseMax(0.0);
  return DensityOperator(std::move(sym), std::move(sp));
}

DensityOperator DensityOperator::pure(const Vector& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-9) throw Error(ErrorKind::NotNormalized, "vector norm " + std::to_string(n));
  return from_matrix(projector(psi / n));
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
  return from_matrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator DensityOperator::diagonal(std::span<const double> probs) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(probs.size()), static_cast<Eigen::Index>(probs.size()));
  for (std::size_t i = 0; i < probs.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = probs[i];
  return from_matrix(m);
}

double shannon_entropy(std::span<const double> probs) {
  double h = 0;
  for (double p : probs) {
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

double shannon_entropy(const RealVector& probs) {
  return shannon_entropy(std::span<const double>(probs.data(), static_cast<std::size_t>(probs.size())));
}

double entropy(const DensityOperator& rho) { return std::max(0.0, shannon_entropy(rho.eigenvalues())); }

double entropy_of(const Matrix& m) {
  const auto sp = eigh(m, 1e-8);
  return std::max(0.0, shannon_entropy(sp.values));
}

namespace detail {

std::pair<double, double> cross_entropy_spectral(const Matrix& rho, const Spectrum<cplx>& sigma) {
  // weights w_j = <v_j| rho |v_j>
  const Matrix rv = rho * sigma.vectors;
  double cross = 0, outside = 0;
  for (Eigen::Index j = 0; j < rv.cols(); ++j) {
    const double w = sigma.vectors.col(j).dot(rv.col(j)).real();
    const double s = sigma.values[j];
    if (s <= kKernelEigenvalue) {
      outside += w;
    } else {
      cross -= w * std::log2(s);
    }
  }
  return {cross, outside};
}

double relative_entropy_spectral(const Matrix& rho, const RealVector& rho_eigenvalues, const Spectrum<cplx>& sigma) {
  const auto [cross, outside] = cross_entropy_spectral(rho, sigma);
  if (outside > kSupportTolerance) return kInfinity;
  const double d = cross - shannon_entropy(rho_eigenvalues);
  return d > 0 ? d : 0.0;
}

}  // namespace detail

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "dims " + std::to_string(rho.dim()) + " and " + std::to_string(sigma.dim()));
  }
  return detail::relative_entropy_spectral(rho.matrix(), rho.eigenvalues(), sigma.spectrum());
}

double relative_entropy_of(const Matrix& rho, const Matrix& sigma) {
  const auto rs = eigh(rho, 1e-8);
  const auto ss = eigh(sigma, 1e-8);
  return detail::relative_entropy_spectral(rho, rs.values, ss);
}

void WeightedStates::validate() const {
  if (probs.size() != states.size() || probs.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "probs/states size mismatch or empty ensemble");
  }
  double total = 0;
  for (double p : probs) {
    if (p < 0) throw Error(ErrorKind::NotNormalized, "negative probability " + std::to_string(p));
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorKind::NotNormalized, "probabilities sum to " + std::to_string(total));
  for (const auto& s : states) {
    if (s.dim() != states.front().dim()) throw Error(ErrorKind::DimensionMismatch, "ensemble states differ in dimension");
  }
}

Matrix WeightedStates::mean_matrix() const {
  Matrix m = Matrix::Zero(states.front().dim(), states.front().dim());
  for (std::size_t k = 0; k < states.size(); ++k) m += probs[k] * states[k].matrix();
  return m;
}

DensityOperator WeightedStates::mean() const {
  validate();
  return DensityOperator::from_matrix(mean_matrix());
}

bool joint_convexity_check(const std::pair<DensityOperator, DensityOperator>& first,
                           const std::pair<DensityOperator, DensityOperator>& second, double p) {
  if (p < 0 || p > 1) throw Error(ErrorKind::BadParameter, "mixing probability outside [0,1]");
  const auto& [r1, s1] = first;
  const auto& [r2, s2] = second;
  if (r1.dim() != s1.dim() || r2.dim() != s2.dim() || r1.dim() != r2.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "joint convexity pairs must share one dimension");
  }
  const auto rho = DensityOperator::from_matrix(p * r1.matrix() + (1 - p) * r2.matrix());
  const auto sigma = DensityOperator::from_matrix(p * s1.matrix() + (1 - p) * s2.matrix());
  const double lhs = relative_entropy(rho, sigma);
  // p = 0 or 1 must not multiply an infinite term by zero
  double rhs = 0;
  if (p > 0) rhs += p * relative_entropy(r1, s1);
  if (p < 1) rhs += (1 - p) * relative_entropy(r2, s2);
  if (std::isinf(rhs)) return true;
  return lhs <= rhs + 1e-8;
}

double DonaldTerms::residual() const {
  if (std::isinf(lhs) && std::isinf(mean_to_sigma)) return 0.0;
  return std::abs(lhs - (avg_to_mean + mean_to_sigma));
}

DonaldTerms donald_decompose(const WeightedStates& ens, const DensityOperator& sigma) {
  ens.validate();
  if (ens.states.front().dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "sigma dimension");
  const auto mean = ens.mean();
  DonaldTerms t;
  for (std::size_t k = 0; k < ens.states.size(); ++k) {
    if (ens.probs[k] == 0) continue;
    t.lhs += ens.probs[k] * relative_entropy(ens.states[k], sigma);
    t.avg_to_mean += ens.probs[k] * relative_entropy(ens.states[k], mean);
  }
  t.mean_to_sigma = relative_entropy(mean, sigma);
  return t;
}

Vector purify(const DensityOperator& rho) {
  const Eigen::Index d = rho.dim();
  const auto& sp = rho.spectrum();
  Vector omega = Vector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double lam = sp.values[i];
    if (lam <= 0) continue;
    // |v_i> (x) |i'>, ancilla index is the fast one
    for (Eigen::Index s = 0; s < d; ++s) omega(s * d + i) += std::sqrt(lam) * sp.vectors(s, i);
  }
  return omega / omega.norm();
}

DensityOperator random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw Error(ErrorKind::BadRank, "rank " + std::to_string(rank) + " for dim " + std::to_string(dim));
  }
  const Matrix g = ginibre(dim, rank, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator::from_matrix(m);
}

DensityOperator random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

}  // namespace qrelent
