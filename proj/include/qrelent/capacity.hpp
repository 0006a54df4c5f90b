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
#include <optional>
#include <span>
#include <vector>

#include "qrelent/channels.hpp"
#include "qrelent/states.hpp"

namespace qrelent {

/// Signal states rho_a (channel outputs) used with probabilities p_a.
/// `inputs`, when non-empty, holds the pure inputs that produced each output.
struct SignalEnsemble {
  std::vector<double> probs;
  std::vector<DensityOperator> outputs;
  std::vector<Vector> inputs;

  void validate() const;
  Matrix average_matrix() const;
  DensityOperator average() const;
};

/// chi = S(mean) - sum_a p_a S(rho_a), clamped at 0.
double holevo_chi(const SignalEnsemble& ens);
/// sum_a p_a D(rho_a || mean); equals holevo_chi up to rounding.
double holevo_chi_divergence(const SignalEnsemble& ens);

class Povm {
 public:
  /// Each element PSD within 1e-10, elements summing to I within 1e-9.
  static Povm from_elements(std::vector<Matrix> elements);
  /// Random POVM with `outcomes` elements: S^{-1/2} G_b S^{-1/2}, S = sum G_b.
  static Povm random(Eigen::Index dim, int outcomes, Rng& rng);

  const std::vector<Matrix>& elements() const { return elements_; }
  Eigen::Index dim() const { return elements_.front().rows(); }

 private:
  explicit Povm(std::vector<Matrix> e) : elements_(std::move(e)) {}
  std::vector<Matrix> elements_;
};

/// P(a,b) = p_a Tr rho_a E_b; rows index signals.
Eigen::MatrixXd joint_distribution(const SignalEnsemble& ens, const Povm& povm);
/// H(A) + H(B) - H(A,B); throws NotNormalized for negative or non-summing tables.
double mutual_information(const Eigen::MatrixXd& joint);

struct DeltaChi {
  double lower = 0;   ///< eta (D(omega || mean') - chi)
  double upper = 0;   ///< eta (D(omega || mean) - chi), may be +inf
  double actual = 0;  ///< chi(modified) - chi
};

/// Mixes omega in with probability eta and brackets the change in chi.
DeltaChi delta_chi_bounds(const SignalEnsemble& ens, const DensityOperator& omega, double eta);

struct ProbePoint {
  Vector input;
  DensityOperator output;
};

/// n points of a Fibonacci lattice on the Bloch sphere as qubit state vectors.
std::vector<Vector> fibonacci_sphere(int n);

/// Pure inputs and their images: Fibonacci lattice for qubit inputs, seeded
/// Haar-random vectors for larger inputs. `size` 0 picks 400 or 2000.
std::vector<ProbePoint> probe_grid(const QuantumChannel& ch, int size = 0, std::uint64_t seed = 0);

struct OptimalityCertificate {
  double chi_star = 0;
  double max_distance_violation = 0;  ///< max over probes of D(omega||mean) - chi
  double equal_distance_spread = 0;   ///< max |D(rho_a||mean) - chi| over members above p_min
  bool support_ok = true;             ///< every probe inside supp(mean)
  int grid_size = 0;

  bool passes(double tol) const { return support_ok && max_distance_violation <= tol && equal_distance_spread <= tol; }
};

OptimalityCertificate certify(const SignalEnsemble& ens, std::span<const DensityOperator> probe, double p_min = 1e-9);

struct EnsembleConfig {
  int grid = 0;  ///< probe grid size, 0 = default for the input dimension
  std::uint64_t seed = 0;
  int max_sweeps = 10000;
  double gain_tol = 1e-9;
  double add_tol = 1e-7;
  double p_min = 1e-9;
  int warmup_sweeps = 200;  ///< multiplicative sweeps over the whole grid before the capped working set
  int refine_top = 4;       ///< grid candidates polished by local ascent per support search
  std::vector<Vector> extra_inputs;  ///< appended to the probe grid
};

struct EnsembleResult {
  SignalEnsemble ensemble;
  OptimalityCertificate certificate;
  std::vector<double> trace;  ///< chi after every accepted step; non-decreasing
  bool converged = false;
  int sweeps = 0;
};

/// Maximizes chi over ensembles of channel outputs of pure inputs. The working
/// set is capped at out_dim^2 members.
EnsembleResult optimize_ensemble(const QuantumChannel& ch, const EnsembleConfig& config = {});

struct MinimaxConfig {
  std::optional<DensityOperator> start;  ///< defaults to the probe mean
  int max_iterations = 4000;
};

struct MinimaxResult {
  double value = 0;  ///< max over probes of D(omega || sigma)
  DensityOperator sigma = DensityOperator::maximally_mixed(1);
};

/// Upper bound min_sigma max_omega D(omega || sigma) over the probe set by
/// descent on sigma = exp(H) / Tr exp(H) with an annealed soft maximum.
MinimaxResult chi_star_minimax(std::span<const DensityOperator> probe, const MinimaxConfig& config = {});

struct AdditivityReport {
  double chi_a = 0;
  double chi_b = 0;
  double chi_ab = 0;  ///< lower bound, found with entangled inputs allowed
  double gap = 0;     ///< chi_ab - (chi_a + chi_b)
  OptimalityCertificate cert_a, cert_b, cert_ab;
};

/// Product input dimension must be <= 16.
AdditivityReport additivity_experiment(const QuantumChannel& a, const QuantumChannel& b, const EnsembleConfig& config = {});

}  // namespace qrelent
