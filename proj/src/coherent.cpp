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

#include "qrelent/coherent.hpp"

#include <algorithm>
#include <cmath>

#include "qrelent/capacity.hpp"

namespace qrelent {

TransmissionSetup TransmissionSetup::make(const QuantumChannel& ch, const DensityOperator& input) {
  return with_purification(ch, input, purify(input), input.dim());
}

TransmissionSetup TransmissionSetup::with_purification(const QuantumChannel& ch, const DensityOperator& input, Vector psi,
                                                       Eigen::Index reference_dim) {
  if (input.dim() != ch.in_dim()) throw Error(ErrorKind::DimensionMismatch, "input vs channel dimension");
  if (psi.size() != input.dim() * reference_dim) throw Error(ErrorKind::DimensionMismatch, "purification size");
  const int dims[] = {static_cast<int>(input.dim()), static_cast<int>(reference_dim)};
  const int keep[] = {0};
  const Matrix marginal = reduced_state(psi, dims, keep);
  if (max_abs(marginal - input.matrix()) > 1e-9) throw Error(ErrorKind::ValidationError, "purification marginal differs from input");
  return {ch, input, std::move(psi), reference_dim};
}

Matrix TransmissionSetup::joint_output() const {
  const Matrix id_r = Matrix::Identity(reference_dim, reference_dim);
  const Matrix proj = projector(purification);
  const Eigen::Index n = channel.out_dim() * reference_dim;
  Matrix out = Matrix::Zero(n, n);
  for (const auto& k : channel.kraus()) {
    const Matrix kr = tensor(k, id_r);
    out.noalias() += kr * proj * kr.adjoint();
  }
  return out;
}

Matrix PureEnsemble::average() const {
  if (states.empty() || states.size() != probs.size()) throw Error(ErrorKind::DimensionMismatch, "pure ensemble sizes");
  Matrix m = Matrix::Zero(states.front().size(), states.front().size());
  for (std::size_t k = 0; k < states.size(); ++k) m += probs[k] * projector(states[k]);
  return m;
}

namespace {

void require_pure(const PureEnsemble& ens) {
  for (const auto& s : ens.states) {
    if (std::abs(s.norm() - 1) > 1e-9) throw Error(ErrorKind::NotPure, "ensemble member is not a normalized vector");
  }
}

}  // namespace

double entanglement_fidelity(const TransmissionSetup& setup) {
  if (setup.channel.out_dim() != setup.channel.in_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "entanglement fidelity needs out_dim == in_dim");
  }
  const double f = setup.purification.dot(setup.joint_output() * setup.purification).real();
  return std::clamp(f, 0.0, 1.0);
}

double average_fidelity(const PureEnsemble& ens, const QuantumChannel& ch) {
  require_pure(ens);
  double f = 0;
  for (std::size_t k = 0; k < ens.states.size(); ++k) {
    const auto& phi = ens.states[k];
    f += ens.probs[k] * phi.dot(ch.map(projector(phi)) * phi).real();
  }
  return f;
}

CoherentInfo coherent_information(const TransmissionSetup& setup) {
  const double sq = entropy_of(setup.channel.map(setup.input.matrix()));
  return {sq - entropy_of(setup.joint_output()), sq - entropy_of(setup.channel.env_map(setup.input.matrix()))};
}

double coherent_information(const QuantumChannel& ch, const DensityOperator& input) {
  if (input.dim() != ch.in_dim()) throw Error(ErrorKind::DimensionMismatch, "input vs channel dimension");
  return entropy_of(ch.map(input.matrix())) - entropy_of(ch.env_map(input.matrix()));
}

ChiDifference chi_difference_identity(const PureEnsemble& ens, const QuantumChannel& ch) {
  require_pure(ens);
  const auto input = DensityOperator::from_matrix(ens.average());
  SignalEnsemble q, e;
  q.probs = e.probs = ens.probs;
  for (const auto& phi : ens.states) {
    const Matrix p = projector(phi);
    q.outputs.push_back(DensityOperator::from_matrix(ch.map(p)));
    e.outputs.push_back(DensityOperator::from_matrix(ch.env_map(p)));
  }
  ChiDifference out;
  out.iq = coherent_information(TransmissionSetup::make(ch, input)).value;
  out.chi_q = holevo_chi(q);
  out.chi_e = holevo_chi(e);
  return out;
}

namespace {

Matrix state_from_factor(const Matrix& a) {
  Matrix m = a * a.adjoint();
  return m / m.trace().real();
}

double objective(const QuantumChannel& ch, const Matrix& a) {
  const Matrix rho = state_from_factor(a);
  return entropy_of(ch.map(rho)) - entropy_of(ch.env_map(rho));
}

}  // namespace

DistanceDifferenceCertificate distance_difference_certificate(const QuantumChannel& ch, const DensityOperator& input,
                                                              double iq, const CoherentConfig& config) {
  const auto rho_q = DensityOperator::from_matrix(ch.map(input.matrix()));
  const auto rho_e = DensityOperator::from_matrix(ch.env_map(input.matrix()));
  const auto& sp = input.spectrum();
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
    if (sp.values[i] > 1e-6) support.push_back(i);
  }
  std::vector<Vector> probes;
  for (auto i : support) probes.push_back(sp.vectors.col(i));
  Rng rng(SplitMix64::derive(config.seed, 77));
  for (int k = 0; k < config.random_probes; ++k) {
    Vector v = Vector::Zero(input.dim());
    for (auto i : support) v += cplx(standard_normal(rng), standard_normal(rng)) * sp.vectors.col(i);
    probes.push_back(v / v.norm());
  }
  DistanceDifferenceCertificate cert;
  cert.max_excess = -kInfinity;
  for (const auto& w : probes) {
    const Matrix p = projector(w);
    const double dq = relative_entropy(DensityOperator::from_matrix(ch.map(p)), rho_q);
    const double de = relative_entropy(DensityOperator::from_matrix(ch.env_map(p)), rho_e);
    if (std::isinf(dq) || std::isinf(de)) {
      ++cert.skipped;
      continue;
    }
    ++cert.probes;
    const double diff = dq - de - iq;
    cert.max_excess = std::max(cert.max_excess, diff);
    cert.equality_spread = std::max(cert.equality_spread, std::abs(diff));
  }
  if (cert.probes == 0) cert.max_excess = 0;
  cert.passes = cert.max_excess <= config.equality_tol && cert.equality_spread <= config.equality_tol;
  return cert;
}

CoherentMax maximize_coherent_information(const QuantumChannel& ch, const CoherentConfig& config) {
  const Eigen::Index d = ch.in_dim();
  if (d > 8) throw Error(ErrorKind::DimensionTooLarge, "coherent information search limited to input dim 8");
  double best_val = -kInfinity;
  Matrix best_a;
  for (int r = 0; r <= config.restarts; ++r) {
    Matrix a;
    if (r == 0) {
      a = Matrix::Identity(d, d);
    } else {
      Rng rng(SplitMix64::derive(config.seed, static_cast<std::uint64_t>(r)));
      a = ginibre(d, d, rng);
    }
    a /= a.norm();
    double f = objective(ch, a);
    double step = 0.1;
    for (int it = 0; it < config.max_iterations; ++it) {
      Matrix grad(d, d);
      const double h = config.fd_step;
      for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
          for (const cplx dir : {cplx(1, 0), cplx(0, 1)}) {
            Matrix ap = a, am = a;
            ap(i, j) += h * dir;
            am(i, j) -= h * dir;
            const double g = (objective(ch, ap) - objective(ch, am)) / (2 * h);
            if (dir.real() != 0)
              grad(i, j) = g;
            else
              grad(i, j) += cplx(0, g);
          }
        }
      }
      if (grad.norm() < 1e-10) break;
      bool moved = false;
      for (int k = 0; k < 40; ++k, step /= 2) {
        Matrix trial = a + step * grad;
        trial /= trial.norm();
        const double ft = objective(ch, trial);
        if (ft > f) {
          const double gain = ft - f;
          a = std::move(trial);
          f = ft;
          moved = gain > 1e-14;
          step *= 2;
          break;
        }
      }
      if (!moved) break;
    }
    if (f > best_val) {
      best_val = f;
      best_a = a;
    }
  }
  CoherentMax out;
  out.argmax = DensityOperator::from_matrix(state_from_factor(best_a));
  out.iq_max = coherent_information(ch, out.argmax);
  out.certificate = distance_difference_certificate(ch, out.argmax, out.iq_max, config);
  return out;
}

DataProcessing data_processing_check(const QuantumChannel& first, const QuantumChannel& second,
                                     const DensityOperator& input) {
  DataProcessing dp;
  dp.before = coherent_information(first, input);
  dp.after = coherent_information(compose(second, first), input);
  dp.holds = dp.after <= dp.before + 1e-8;
  return dp;
}

}  // namespace qrelent
