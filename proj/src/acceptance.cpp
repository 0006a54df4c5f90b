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

#include "qrelent/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qrelent/capacity.hpp"
#include "qrelent/coherent.hpp"
#include "qrelent/cost.hpp"
#include "qrelent/distinguish.hpp"
#include "qrelent/entangle.hpp"
#include "qrelent/locc.hpp"
#include "qrelent/qcode.hpp"
#include "qrelent/random.hpp"

namespace qrelent {

namespace {

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Eigen::Index pick(Rng& rng, Eigen::Index lo, Eigen::Index hi) {
  return lo + static_cast<Eigen::Index>(std::uniform_int_distribution<long>(0, static_cast<long>(hi - lo))(rng));
}

// State supported inside the range of `basis` columns.
DensityOperator state_in_range(const Matrix& basis, Eigen::Index rank, Rng& rng) {
  const Matrix g = basis * ginibre(basis.cols(), rank, rng);
  const Matrix m = g * g.adjoint();
  return DensityOperator::from_matrix(m / m.trace().real());
}

bool support_contained(const DensityOperator& rho, const DensityOperator& sigma) {
  const auto& sp = sigma.spectrum();
  Matrix kernel = Matrix::Zero(sigma.dim(), sigma.dim());
  for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
    if (sp.values[i] <= kSupportTolerance) kernel += projector(sp.vectors.col(i));
  }
  return (rho.matrix() * kernel).trace().real() <= kSupportTolerance;
}

CriterionResult c1(std::uint64_t seed) {
  Rng rng(SplitMix64::derive(seed, 1));
  int bad_sign = 0, bad_zero = 0, bad_inf = 0, infinite = 0, equal = 0;
  for (int k = 0; k < 1000; ++k) {
    const Eigen::Index d = pick(rng, 2, 8);
    const int mode = k % 4;
    const auto sigma = random_density(d, mode == 0 ? d : pick(rng, 1, d), rng);
    DensityOperator rho = sigma;
    if (mode == 1) {
      rho = random_density(d, pick(rng, 1, d), rng);
    } else if (mode == 2) {
      Matrix basis(d, d);
      Eigen::Index c = 0;
      for (Eigen::Index i = 0; i < d; ++i) {
        if (sigma.eigenvalues()[i] > kSupportTolerance) basis.col(c++) = sigma.spectrum().vectors.col(i);
      }
      rho = state_in_range(basis.leftCols(c), pick(rng, 1, c), rng);
    } else if (mode == 0) {
      rho = random_density(d, pick(rng, 1, d), rng);
    }
    const double dv = relative_entropy(rho, sigma);
    if (!(dv >= 0)) ++bad_sign;
    const bool same = max_abs(rho.matrix() - sigma.matrix()) <= 1e-6;
    equal += same;
    if (same != (dv <= 1e-9)) ++bad_zero;
    const bool inf = std::isinf(dv);
    infinite += inf;
    if (inf == support_contained(rho, sigma)) ++bad_inf;
  }
  return {1, "relative-entropy axioms", bad_sign + bad_zero + bad_inf == 0,
          fmt("1000 pairs: %d equal, %d infinite; violations sign=%d zero=%d support=%d", equal, infinite, bad_sign,
              bad_zero, bad_inf)};
}

CriterionResult c2(std::uint64_t seed) {
  Rng rng(SplitMix64::derive(seed, 2));
  double worst = 0;
  for (int k = 0; k < 500; ++k) {
    const Eigen::Index d = pick(rng, 2, 6);
    const auto members = pick(rng, 1, 5);
    WeightedStates ens;
    double total = 0;
    for (Eigen::Index m = 0; m < members; ++m) {
      ens.probs.push_back(uniform01(rng) + 1e-3);
      total += ens.probs.back();
      ens.states.push_back(random_density(d, pick(rng, 1, d), rng));
    }
    for (auto& p : ens.probs) p /= total;
    const auto sigma = random_density(d, d, rng);
    worst = std::max(worst, donald_decompose(ens, sigma).residual());
  }
  return {2, "Donald identity", worst <= 1e-8, fmt("500 ensembles, max residual %.3e", worst)};
}

CriterionResult c3(std::uint64_t seed) {
  Rng rng(SplitMix64::derive(seed, 3));
  double worst = -kInfinity;
  for (int k = 0; k < 200; ++k) {
    const Eigen::Index d = pick(rng, 2, 5);
    SignalEnsemble ens;
    const auto members = pick(rng, 2, 5);
    double total = 0;
    for (Eigen::Index m = 0; m < members; ++m) {
      ens.probs.push_back(uniform01(rng) + 1e-3);
      total += ens.probs.back();
      ens.outputs.push_back(random_density(d, pick(rng, 1, d), rng));
    }
    for (auto& p : ens.probs) p /= total;
    const auto povm = Povm::random(d, static_cast<int>(pick(rng, 2, 6)), rng);
    worst = std::max(worst, mutual_information(joint_distribution(ens, povm)) - holevo_chi(ens));
  }
  return {3, "Holevo bound", worst <= 1e-8, fmt("200 (ensemble, POVM) pairs, max I - chi = %.3e", worst)};
}

CriterionResult c4(std::uint64_t seed) {
  EnsembleConfig cfg;
  cfg.grid = 400;
  cfg.seed = seed;
  const auto res = optimize_ensemble(identity_channel(2), cfg);
  const auto grid = probe_grid(identity_channel(2), 400, seed);
  std::vector<DensityOperator> probes;
  for (const auto& p : grid) probes.push_back(p.output);
  const auto cert = certify(res.ensemble, probes);
  const double chi = res.certificate.chi_star;
  const bool ok = std::abs(chi - 1.0) <= 1e-6 && cert.support_ok && cert.max_distance_violation <= 1e-6 &&
                  cert.equal_distance_spread <= 1e-6;
  return {4, "identity qubit chi*", ok,
          fmt("chi*=%.9f violation=%.2e spread=%.2e probes=%d", chi, cert.max_distance_violation,
              cert.equal_distance_spread, cert.grid_size)};
}

CriterionResult c5(std::uint64_t seed) {
  EnsembleConfig cfg;
  cfg.seed = seed;
  const auto rep = additivity_experiment(identity_channel(2), depolarizing_channel(2, 0.5), cfg);
  return {5, "half-noisy additivity", std::abs(rep.gap) <= 1e-3,
          fmt("chi_A=%.6f chi_B=%.6f chi_AB=%.6f gap=%.2e", rep.chi_a, rep.chi_b, rep.chi_ab, rep.gap)};
}

CriterionResult c6(std::uint64_t seed) {
  Rng rng(SplitMix64::derive(seed, 6));
  double worst_rel = 0, worst_ratio = -kInfinity;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Index d = pick(rng, 2, 3);
    ThermalModel tm{random_hermitian(d, rng), 0.5 + 1.5 * uniform01(rng), 1.0};
    const auto rho1 = random_density(d, pick(rng, 1, d), rng);
    const auto gap = free_energy_gap(rho1, tm);
    worst_rel = std::max(worst_rel, std::abs(gap.via_free_energies - gap.via_relative_entropy) /
                                        std::max(1.0, std::abs(gap.via_relative_entropy)));
    WeightedStates ens;
    const auto members = pick(rng, 2, 4);
    for (Eigen::Index m = 0; m < members; ++m) {
      ens.probs.push_back(1.0 / static_cast<double>(members));
      ens.states.push_back(random_density(d, pick(rng, 1, d), rng));
    }
    worst_ratio = std::max(worst_ratio, bits_per_free_energy(ens, tm) - 1 / (tm.kT() * std::numbers::ln2));
  }
  return {6, "free-energy identity", worst_rel <= 1e-8 && worst_ratio <= 1e-8,
          fmt("100 cases, max relative error %.2e, max chi/f - 1/(kT ln2) = %.3e", worst_rel, worst_ratio)};
}

// Pure decomposition rho = sum_k p_k |psi_k><psi_k| from a K x d isometry.
PureEnsemble decomposition(const DensityOperator& rho, Eigen::Index members, Rng* rng) {
  const auto& sp = rho.spectrum();
  const Eigen::Index d = rho.dim();
  Matrix iso = Matrix::Identity(members, d);
  if (rng != nullptr) iso = random_unitary(members, *rng).leftCols(d);
  PureEnsemble ens;
  for (Eigen::Index k = 0; k < members; ++k) {
    Vector v = Vector::Zero(d);
    for (Eigen::Index i = 0; i < d; ++i) v += std::sqrt(std::max(sp.values[i], 0.0)) * iso(k, i) * sp.vectors.col(i);
    const double p = v.squaredNorm();
    if (p < 1e-14) continue;
    ens.probs.push_back(p);
    ens.states.push_back(v / std::sqrt(p));
  }
  return ens;
}

CriterionResult c7(std::uint64_t seed) {
  Rng rng(SplitMix64::derive(seed, 7));
  std::vector<QuantumChannel> zoo = {identity_channel(2),          depolarizing_channel(2, 0.3),
                                     dephasing_channel(2, 0.4),    unitary_channel(random_unitary(2, rng)),
                                     depolarizing_channel(3, 0.2), dephasing_channel(3, 0.7)};
  double worst_identity = 0, worst_spread = 0;
  int cases = 0;
  for (const auto& ch : zoo) {
    for (int rep = 0; rep < 3; ++rep) {
      const Eigen::Index d = ch.in_dim();
      const auto rho = random_density(d, d, rng);
      std::vector<double> diffs;
      for (int dec = 0; dec < 3; ++dec) {
        const auto ens = decomposition(rho, dec == 0 ? d : d + dec, dec == 0 ? nullptr : &rng);
        const auto cd = chi_difference_identity(ens, ch);
        worst_identity = std::max(worst_identity, cd.residual());
        diffs.push_back(cd.chi_q - cd.chi_e);
        ++cases;
      }
      const auto [lo, hi] = std::minmax_element(diffs.begin(), diffs.end());
      worst_spread = std::max(worst_spread, *hi - *lo);
    }
  }
  return {7, "coherent-information identity", worst_identity <= 1e-8 && worst_spread <= 1e-8,
          fmt("%d decompositions, max residual %.2e, decomposition spread %.2e", cases, worst_identity, worst_spread)};
}

CriterionResult c8(std::uint64_t seed) {
  Rng rng(SplitMix64::derive(seed, 8));
  double worst = 0, worst_bound = -kInfinity;
  for (int k = 0; k < 200; ++k) {
    const Eigen::Index m = pick(rng, 2, 6);
    std::vector<int> lengths;
    for (Eigen::Index i = 0; i < m; ++i) lengths.push_back(static_cast<int>(pick(rng, 1, 4)));
    ZefCode code = [&] {
      try {
        return ZefCode::from_lengths(lengths, 0, random_unitary(m, rng));
      } catch (const Error&) {
        std::vector<int> fallback(static_cast<std::size_t>(m), 3);
        return ZefCode::from_lengths(fallback, 0, random_unitary(m, rng));
      }
    }();
    const auto rho = random_density(m, pick(rng, 1, m), rng);
    const auto led = average_length(code, rho);
    worst = std::max(worst, led.residual());
    if (kraft_sum(code) <= 1 + 1e-12) worst_bound = std::max(worst_bound, led.entropy - led.average_length);
  }
  const double dy[] = {0.5, 0.25, 0.25};
  const auto rho = DensityOperator::diagonal(dy);
  const auto led = average_length(shannon_fano_lengths(rho), rho);
  const bool dyadic = std::abs(led.average_length - 1.5) <= 1e-12 && std::abs(led.entropy - 1.5) <= 1e-12;
  return {8, "coding ledger", worst <= 1e-8 && worst_bound <= 1e-9 && dyadic,
          fmt("200 codes, max residual %.2e, max S - lbar %.2e; dyadic lbar=%.15g S=%.15g", worst, worst_bound,
              led.average_length, led.entropy)};
}

ErConfig er_config(std::uint64_t seed) {
  ErConfig cfg;
  cfg.seed = seed;
  cfg.restarts = 6;
  return cfg;
}

CriterionResult c9(std::uint64_t seed) {
  const auto cfg = er_config(seed);
  Vector epr = Vector::Zero(4);
  epr(0) = epr(3) = 1 / std::sqrt(2.0);
  const double e_epr = relative_entropy_of_entanglement(DensityOperator::pure(epr), 2, 2, cfg).value;
  const auto ghz = ghz_state();
  const int bc[] = {1, 2};
  const double e_ghz = relative_entropy_of_entanglement(DensityOperator::from_matrix(ghz.marginal(bc)), 2, 2, cfg).value;
  Rng rng(SplitMix64::derive(seed, 9));
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const Eigen::Index da = 2, db = k % 2 == 0 ? 2 : 3;
    const Vector psi = random_pure_vector(da * db, rng);
    const double er = relative_entropy_of_entanglement(DensityOperator::pure(psi), da, db, cfg).value;
    worst = std::max(worst, std::abs(er - er_pure(psi, da, db)));
  }
  const bool ok = std::abs(e_epr - 1.0) <= 2e-3 && e_ghz <= 2e-3 && worst <= 2e-3;
  return {9, "E_r anchors", ok, fmt("EPR %.6f, GHZ BC marginal %.2e, pure-state max |E_r - S(A)| %.2e", e_epr, e_ghz, worst)};
}

CriterionResult c10(std::uint64_t seed) {
  const auto cfg = er_config(seed);
  const auto demo = ghz_to_epr_demo(cfg);
  const auto& first = demo.run.events.front();
  double worst_branch = 0;
  for (const auto& child : first.measurement.children) {
    worst_branch = std::max(worst_branch, std::abs(pair_er(child.state, 1, 2, cfg) - 1.0));
  }
  const bool ghz_ok = worst_branch <= 5e-3 && std::abs(demo.bc_ledger.entropy_drop - 1.0) <= 1e-9 &&
                      first.measurement.children.size() == 2;

  Rng rng(SplitMix64::derive(seed, 10));
  int ledger_fail = 0;
  for (int k = 0; k < 20; ++k) {
    const auto s = MultipartyState::make({2, 2, 2}, random_pure_vector(8, rng));
    const auto event = local_measure(ProtocolNode::root(s), 0, random_unitary(2, rng));
    ledger_fail += !er_ledger(ProtocolNode::root(s), event, 0, 1, 2, cfg).holds;
  }

  const auto two_ghz = party_power(ghz_state(), 2);
  const auto three_epr = party_product(party_product(epr_state(3, 0, 1), epr_state(3, 1, 2)), epr_state(3, 0, 2));
  const auto rev = reversibility_necessary_conditions(two_ghz, three_epr, cfg);
  bool entropies_ok = true;
  double er_bc_gap = 0;
  for (const auto& e : rev.entries) {
    if (e.quantity == "S(A)" || e.quantity == "S(B)" || e.quantity == "S(C)") {
      entropies_ok = entropies_ok && std::abs(e.first - 2.0) <= 1e-9 && std::abs(e.second - 2.0) <= 1e-9;
    }
    if (e.quantity == "E_r(BC)") er_bc_gap = e.second - e.first;
  }
  const bool rev_ok = !rev.consistent && entropies_ok && std::abs(er_bc_gap - 1.0) <= 5e-3;
  return {10, "GHZ demo", ghz_ok && ledger_fail == 0 && rev_ok,
          fmt("branch |E_r(BC) - 1| max %.2e, S(A) drop %.6f; ledger failures %d/20; 2GHZ vs 3EPR %s, E_r(BC) gap %.6f",
              worst_branch, demo.bc_ledger.entropy_drop, ledger_fail, rev.verdict().c_str(), er_bc_gap)};
}

CriterionResult c11(std::uint64_t) {
  const double zero[] = {1, 0}, half[] = {0.5, 0.5};
  const auto rho = DensityOperator::diagonal(zero), sigma = DensityOperator::diagonal(half);
  bool exact = true;
  for (int n = 1; n <= 10; ++n) exact = exact && stein_exponent(stein_error(rho, sigma, n), n) == 1.0;
  const double p[] = {0.75, 0.25}, q[] = {0.25, 0.75};
  const auto rep = exponent_trend(DensityOperator::diagonal(p), DensityOperator::diagonal(q), 10);
  return {11, "Stein exponents", exact && rep.approaches,
          fmt("pure vs mixed exponent exactly 1 for N<=10: %s; commuting pair D=%.6f, exp(1)=%.6f, exp(10)=%.6f",
              exact ? "yes" : "no", rep.target, rep.exponents.front(), rep.exponents.back())};
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  using Fn = CriterionResult (*)(std::uint64_t);
  static constexpr Fn table[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11};
  if (id < 1 || id > 11) throw Error(ErrorKind::BadParameter, "criteria 1..11 are seeded");
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](seed);
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<std::uint64_t>& replay,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 11; ++id) {
    out.push_back(run_criterion(id, seed));
    if (report) report(out.back());
  }
  const auto t1 = std::chrono::steady_clock::now();
  int mismatches = 0;
  std::string detail = "verdicts at seed " + std::to_string(seed);
  for (auto s : replay) {
    detail += " vs " + std::to_string(s);
    for (int id = 1; id <= 11; ++id) mismatches += run_criterion(id, s).passed != out[static_cast<std::size_t>(id - 1)].passed;
  }
  CriterionResult det{12, "determinism across seeds", mismatches == 0,
                      detail + ": " + std::to_string(mismatches) + " mismatches"};
  det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  out.push_back(det);
  if (report) report(out.back());
  return out;
}

std::string format_line(const CriterionResult& r) {
  return fmt("[%s] %2d %-30s %s (%.1fs)", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str(), r.seconds);
}

}  // namespace qrelent
