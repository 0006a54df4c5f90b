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

#include "qrelent/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qrelent/random.hpp"

namespace qrelent {

Matrix SeparableAnsatz::assemble() const {
  const Eigen::Index n = dim_a * dim_b;
  Matrix s = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] == 0) continue;
    const Vector v = tensor(a_vecs[j], b_vecs[j]);
    s.noalias() += weights[j] * (v * v.adjoint());
  }
  return s;
}

namespace {

constexpr double kFill = 1e-3;

struct Evaluation {
  double value = kInfinity;
  Matrix gradient;  ///< Frechet derivative of ln at sigma applied to rho
};

class ErSolver {
 public:
  ErSolver(const DensityOperator& rho, Eigen::Index da, Eigen::Index db, const ErConfig& cfg)
      : rho_(rho), da_(da), db_(db), cfg_(cfg), s_rho_(entropy(rho)) {}

  Evaluation evaluate(const SeparableAnsatz& ans, bool with_gradient) const {
    const auto sp = eigh(ans.assemble());
    Evaluation ev;
    const Matrix r = sp.vectors.adjoint() * rho_.matrix() * sp.vectors;
    const Eigen::Index n = r.rows();
    double cross = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double w = r(i, i).real();
      if (sp.values[i] <= kKernelEigenvalue) {
        if (w > kSupportTolerance) return ev;
        continue;
      }
      cross -= w * std::log2(sp.values[i]);
    }
    ev.value = std::max(0.0, cross - s_rho_);
    if (!with_gradient) return ev;
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double a = std::max(sp.values[i], kKernelEigenvalue), b = std::max(sp.values[j], kKernelEigenvalue);
        const double f = std::abs(a - b) > 1e-12 * std::max(a, b) ? (std::log(a) - std::log(b)) / (a - b) : 2 / (a + b);
        g(i, j) = r(i, j) * f;
      }
    }
    ev.gradient = sp.vectors * g * sp.vectors.adjoint();
    return ev;
  }

  // One multiplicative weight update plus a sphere step on every factor.
  SeparableAnsatz propose(const SeparableAnsatz& ans, const Matrix& g, double t, double h) const {
    SeparableAnsatz next = ans;
    double total = 0;
    for (std::size_t j = 0; j < ans.size(); ++j) {
      const Vector v = tensor(ans.a_vecs[j], ans.b_vecs[j]);
      const Vector gv = g * v;
      const double score = std::max(0.0, v.dot(gv).real());
      next.weights[j] = (1 - t) * ans.weights[j] + t * ans.weights[j] * score;
      total += next.weights[j];
      const Eigen::Map<const Matrix> w(gv.data(), db_, da_);  // column-major: w(k, i) = gv[i*db + k]
      const Vector ga = w.transpose() * ans.b_vecs[j].conjugate();
      const Vector gb = w * ans.a_vecs[j].conjugate();
      Vector a = ans.a_vecs[j] + h * (ga - ans.a_vecs[j].dot(ga) * ans.a_vecs[j]);
      Vector b = ans.b_vecs[j] + h * (gb - ans.b_vecs[j].dot(gb) * ans.b_vecs[j]);
      next.a_vecs[j] = a.normalized();
      next.b_vecs[j] = b.normalized();
    }
    for (auto& q : next.weights) q /= total;
    return next;
  }

  struct Run {
    SeparableAnsatz ans;
    double value;
    bool converged;
  };

  Run descend(SeparableAnsatz ans) const {
    Evaluation cur = evaluate(ans, true);
    std::vector<double> history{cur.value};
    double h = 0.1;
    for (int it = 0; it < cfg_.max_iterations; ++it) {
      if (cur.value < 1e-12) return {std::move(ans), cur.value, true};
      bool accepted = false;
      for (int k = 0; k < 60; ++k) {
        const double hk = h * std::ldexp(1.0, -k);
        const double tk = k < 12 ? 1.0 : std::ldexp(1.0, 12 - k);
        SeparableAnsatz trial = propose(ans, cur.gradient, tk, hk);
        Evaluation ev = evaluate(trial, false);
        if (ev.value < cur.value) {
          ans = std::move(trial);
          cur = evaluate(ans, true);
          h = std::min(hk * 2, 10.0);
          accepted = true;
          break;
        }
      }
      if (!accepted) return {std::move(ans), cur.value, true};
      history.push_back(cur.value);
      const auto w = static_cast<std::size_t>(cfg_.window);
      if (history.size() > w && history[history.size() - 1 - w] - cur.value < cfg_.tol) {
        return {std::move(ans), cur.value, true};
      }
    }
    return {std::move(ans), cur.value, false};
  }

  // Deterministic starts sit in the marginal eigenbases; the rest are random.
  SeparableAnsatz start(int restart, std::size_t terms) const {
    SeparableAnsatz ans;
    ans.dim_a = da_;
    ans.dim_b = db_;
    const int dims[] = {static_cast<int>(da_), static_cast<int>(db_)};
    const int keep_a[] = {0}, keep_b[] = {1};
    const auto sa = eigh(partial_trace(rho_.matrix(), dims, keep_a));
    const auto sb = eigh(partial_trace(rho_.matrix(), dims, keep_b));
    Rng rng(SplitMix64::derive(cfg_.seed, static_cast<std::uint64_t>(restart)));
    if (restart <= 1) {
      for (Eigen::Index i = 0; i < da_; ++i) {
        for (Eigen::Index k = 0; k < db_; ++k) {
          const Vector v = tensor(sa.vectors.col(i), sb.vectors.col(k));
          const double q = restart == 0 ? v.dot(rho_.matrix() * v).real()
                                        : std::max(sa.values[i], 0.0) * std::max(sb.values[k], 0.0);
          ans.weights.push_back(q);
          ans.a_vecs.push_back(sa.vectors.col(i));
          ans.b_vecs.push_back(sb.vectors.col(k));
        }
      }
      double total = 0;
      for (double q : ans.weights) total += q;
      for (auto& q : ans.weights) q = (1 - kFill) * q / total;
      const std::size_t fixed = ans.size();
      for (std::size_t j = fixed; j < terms; ++j) {
        ans.weights.push_back(kFill / static_cast<double>(terms - fixed));
        ans.a_vecs.push_back(random_pure_vector(da_, rng));
        ans.b_vecs.push_back(random_pure_vector(db_, rng));
      }
      if (fixed >= terms) {
        for (auto& q : ans.weights) q /= (1 - kFill);
      }
      return ans;
    }
    double total = 0;
    for (std::size_t j = 0; j < terms; ++j) {
      const double q = -std::log(1 - uniform01(rng));
      ans.weights.push_back(q);
      total += q;
      ans.a_vecs.push_back(random_pure_vector(da_, rng));
      ans.b_vecs.push_back(random_pure_vector(db_, rng));
    }
    for (auto& q : ans.weights) q /= total;
    return ans;
  }

 private:
  const DensityOperator& rho_;
  Eigen::Index da_, db_;
  ErConfig cfg_;
  double s_rho_;
};

}  // namespace

ErResult relative_entropy_of_entanglement(const DensityOperator& rho, Eigen::Index dim_a, Eigen::Index dim_b,
                                          const ErConfig& config) {
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "d_A * d_B must equal the state dimension");
  }
  if (dim_a * dim_b > 16) throw Error(ErrorKind::DimensionTooLarge, "E_r search limited to d_A d_B <= 16");
  if (config.restarts < 1) throw Error(ErrorKind::BadParameter, "restarts must be >= 1");
  const auto terms = static_cast<std::size_t>(config.terms > 0 ? config.terms : (dim_a * dim_b) * (dim_a * dim_b));

  ErSolver solver(rho, dim_a, dim_b, config);
  ErResult out;
  for (int r = 0; r < config.restarts; ++r) {
    auto run = solver.descend(solver.start(r, terms));
    if (run.value < out.value) {
      out.value = run.value;
      out.argmin = std::move(run.ans);
      out.converged = run.converged;
    }
    out.best_by_restart.push_back(out.value);
    ++out.restarts_used;
  }
  // certificate value recomputed from the reported sigma
  out.value = relative_entropy(rho, out.argmin.state());
  return out;
}

double er_pure(const Vector& psi, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (psi.size() != dim_a * dim_b) throw Error(ErrorKind::DimensionMismatch, "vector size vs d_A d_B");
  if (std::abs(psi.norm() - 1) > 1e-9) throw Error(ErrorKind::NotNormalized, "pure state must be normalized");
  const int dims[] = {static_cast<int>(dim_a), static_cast<int>(dim_b)};
  const int keep[] = {0};
  return entropy_of(reduced_state(psi, dims, keep));
}

double er_ensemble_bound(std::span<const double> probs, std::span<const Vector> states, const DensityOperator& rho,
                         Eigen::Index dim_a, Eigen::Index dim_b) {
  if (probs.size() != states.size() || probs.empty()) throw Error(ErrorKind::BadDecomposition, "sizes differ");
  Matrix avg = Matrix::Zero(rho.dim(), rho.dim());
  double bound = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] < 0 || states[k].size() != rho.dim()) throw Error(ErrorKind::BadDecomposition, "bad member");
    avg += probs[k] * projector(states[k]);
    if (probs[k] > 0) bound += probs[k] * er_pure(states[k], dim_a, dim_b);
  }
  if (max_abs(avg - rho.matrix()) > 1e-9) throw Error(ErrorKind::BadDecomposition, "decomposition does not average to rho");
  return bound;
}

}  // namespace qrelent
