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

#include <cmath>
#include <numbers>

namespace qrelent {

QuantumChannel QuantumChannel::from_kraus(std::vector<Matrix> kraus, double tol) {
  if (kraus.empty()) throw Error(ErrorKind::NotTracePreserving, "channel needs at least one Kraus operator");
  const Eigen::Index in = kraus.front().cols(), out = kraus.front().rows();
  if (in == 0 || out == 0) throw Error(ErrorKind::DimensionMismatch, "empty Kraus operator");
  Matrix sum = Matrix::Zero(in, in);
  for (const auto& k : kraus) {
    if (k.cols() != in || k.rows() != out) throw Error(ErrorKind::DimensionMismatch, "Kraus operators differ in shape");
    if (!k.allFinite()) throw Error(ErrorKind::BadParameter, "non-finite Kraus entry");
    sum += k.adjoint() * k;
  }
  const double defect = max_abs(sum - Matrix::Identity(in, in));
  if (defect > tol) {
    throw Error(ErrorKind::NotTracePreserving, "max |sum K^dagger K - I| = " + std::to_string(defect));
  }
  return QuantumChannel(std::move(kraus));
}

Matrix QuantumChannel::map(const Matrix& m) const {
  Matrix out = Matrix::Zero(out_dim(), out_dim());
  for (const auto& k : kraus_) out.noalias() += k * m * k.adjoint();
  return out;
}

Matrix QuantumChannel::adjoint_map(const Matrix& x) const {
  Matrix out = Matrix::Zero(in_dim(), in_dim());
  for (const auto& k : kraus_) out.noalias() += k.adjoint() * x * k;
  return out;
}

Matrix QuantumChannel::env_map(const Matrix& m) const {
  const Eigen::Index e = env_dim();
  std::vector<Matrix> km;
  km.reserve(kraus_.size());
  for (const auto& k : kraus_) km.emplace_back(k * m);
  Matrix out(e, e);
  for (Eigen::Index i = 0; i < e; ++i) {
    for (Eigen::Index j = 0; j < e; ++j) {
      // Tr(K_i m K_j^dagger) = sum_{ab} (K_i m)_{ab} conj(K_j)_{ab}
      out(i, j) = (km[static_cast<std::size_t>(i)].cwiseProduct(kraus_[static_cast<std::size_t>(j)].conjugate())).sum();
    }
  }
  return out;
}

namespace {

void require_input(const QuantumChannel& ch, const DensityOperator& rho) {
  if (rho.dim() != ch.in_dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dim " + std::to_string(rho.dim()) + " vs channel input " + std::to_string(ch.in_dim()));
  }
}

Matrix clipped_log2(const Matrix& m) {
  auto sp = eigh(m, 1e-8);
  return spectral_function(sp, [](double x) { return std::log2(std::max(x, 1e-15)); });
}

}  // namespace

DensityOperator apply(const QuantumChannel& ch, const DensityOperator& rho) {
  require_input(ch, rho);
  return DensityOperator::from_matrix(ch.map(rho.matrix()));
}

DilatedChannel dilate(const QuantumChannel& ch) {
  const Eigen::Index out = ch.out_dim(), e = ch.env_dim();
  Matrix v(out * e, ch.in_dim());
  for (Eigen::Index i = 0; i < e; ++i) {
    const auto& k = ch.kraus()[static_cast<std::size_t>(i)];
    for (Eigen::Index o = 0; o < out; ++o) v.row(o * e + i) = k.row(o);
  }
  return {ch, std::move(v)};
}

DensityOperator environment_output(const QuantumChannel& ch, const DensityOperator& rho) {
  require_input(ch, rho);
  return DensityOperator::from_matrix(ch.env_map(rho.matrix()));
}

QuantumChannel product(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<Matrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) kraus.push_back(tensor(ka, kb));
  }
  return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first) {
  if (second.in_dim() != first.out_dim()) throw Error(ErrorKind::DimensionMismatch, "channels do not compose");
  std::vector<Matrix> kraus;
  for (const auto& k2 : second.kraus()) {
    for (const auto& k1 : first.kraus()) kraus.emplace_back(k2 * k1);
  }
  return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel identity_channel(Eigen::Index dim) { return QuantumChannel::from_kraus({Matrix::Identity(dim, dim)}); }

QuantumChannel depolarizing_channel(Eigen::Index dim, double p) {
  if (!(p >= 0 && p <= 1)) throw Error(ErrorKind::BadParameter, "depolarizing p = " + std::to_string(p));
  const double d2 = static_cast<double>(dim * dim);
  Matrix shift = Matrix::Zero(dim, dim), clock = Matrix::Zero(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    shift((m + 1) % dim, m) = 1.0;
    clock(m, m) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(dim));
  }
  std::vector<Matrix> kraus;
  Matrix xj = Matrix::Identity(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Matrix w = xj;
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double weight = (j == 0 && k == 0) ? 1.0 - p + p / d2 : p / d2;
      if (weight > 0) kraus.emplace_back(std::sqrt(weight) * w);
      w = w * clock;
    }
    xj = shift * xj;
  }
  return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel dephasing_channel(Eigen::Index dim, double lambda) {
  if (!(lambda >= 0 && lambda <= 1)) throw Error(ErrorKind::BadParameter, "dephasing lambda = " + std::to_string(lambda));
  std::vector<Matrix> kraus;
  if (lambda < 1) kraus.emplace_back(std::sqrt(1 - lambda) * Matrix::Identity(dim, dim));
  if (lambda > 0) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      Matrix pk = Matrix::Zero(dim, dim);
      pk(k, k) = std::sqrt(lambda);
      kraus.push_back(std::move(pk));
    }
  }
  return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel unitary_channel(const Matrix& u) {
  if (!is_unitary(u)) throw Error(ErrorKind::NotUnitary, "unitary channel needs a unitary matrix");
  return QuantumChannel::from_kraus({u});
}

QuantumChannel standard_channel(ChannelFamily family, Eigen::Index dim, double param, const Matrix& u) {
  switch (family) {
    case ChannelFamily::Identity: return identity_channel(dim);
    case ChannelFamily::Depolarizing: return depolarizing_channel(dim, param);
    case ChannelFamily::Dephasing: return dephasing_channel(dim, param);
    case ChannelFamily::Unitary:
      if (u.rows() != dim) throw Error(ErrorKind::DimensionMismatch, "unitary size does not match dim");
      return unitary_channel(u);
  }
  throw Error(ErrorKind::BadParameter, "unknown channel family");
}

MinOutputEntropyResult min_output_entropy(const QuantumChannel& ch, int restarts, std::uint64_t seed, int iterations) {
  MinOutputEntropyResult best{kInfinity, {}};
  const auto output_entropy = [&](const Vector& psi) { return entropy_of(ch.map(projector(psi))); };
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    Rng rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(r)));
    Vector psi = random_pure_vector(ch.in_dim(), rng);
    double s = output_entropy(psi);
    double step = 1.0;
    for (int it = 0; it < iterations; ++it) {
      const Matrix h = ch.adjoint_map(clipped_log2(ch.map(projector(psi))));
      const Vector hpsi = h * psi;
      const Vector dir = hpsi - psi.dot(hpsi) * psi;
      if (dir.norm() < 1e-12) break;
      bool moved = false;
      for (int halve = 0; halve < 40; ++halve, step /= 2) {
        Vector trial = psi + step * dir;
        trial.normalize();
        const double st = output_entropy(trial);
        if (st < s) {
          psi = trial;
          s = st;
          moved = true;
          step *= 2;
          break;
        }
      }
      if (!moved) break;
    }
    if (s < best.value) best = {s, psi};
  }
  return best;
}

}  // namespace qrelent
