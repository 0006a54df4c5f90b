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

#include "qrelent/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qrelent {

void SignalEnsemble::validate() const {
  if (probs.empty() || probs.size() != outputs.size()) {
    throw Error(ErrorKind::DimensionMismatch, "ensemble probs/outputs size mismatch or empty");
  }
  if (!inputs.empty() && inputs.size() != outputs.size()) {
    throw Error(ErrorKind::DimensionMismatch, "ensemble inputs/outputs size mismatch");
  }
  double total = 0;
  for (double p : probs) {
    if (p < 0) throw Error(ErrorKind::NotNormalized, "negative signal probability");
    total += p;
  }
  if (std::abs(total - 1) > 1e-9) throw Error(ErrorKind::NotNormalized, "signal probabilities sum to " + std::to_string(total));
  for (const auto& o : outputs) {
    if (o.dim() != outputs.front().dim()) throw Error(ErrorKind::DimensionMismatch, "signal states differ in dimension");
  }
}

Matrix SignalEnsemble::average_matrix() const {
  Matrix m = Matrix::Zero(outputs.front().dim(), outputs.front().dim());
  for (std::size_t a = 0; a < outputs.size(); ++a) m += probs[a] * outputs[a].matrix();
  return m;
}

DensityOperator SignalEnsemble::average() const {
  validate();
  return DensityOperator::from_matrix(average_matrix());
}

double holevo_chi(const SignalEnsemble& ens) {
  const auto mean = ens.average();
  double chi = entropy(mean);
  for (std::size_t a = 0; a < ens.outputs.size(); ++a) chi -= ens.probs[a] * entropy(ens.outputs[a]);
  return std::max(chi, 0.0);
}

double holevo_chi_divergence(const SignalEnsemble& ens) {
  const auto mean = ens.average();
  double chi = 0;
  for (std::size_t a = 0; a < ens.outputs.size(); ++a) {
    if (ens.probs[a] > 0) chi += ens.probs[a] * relative_entropy(ens.outputs[a], mean);
  }
  return chi;
}

Povm Povm::from_elements(std::vector<Matrix> elements) {
  if (elements.empty()) throw Error(ErrorKind::DimensionMismatch, "POVM has no elements");
  const Eigen::Index d = elements.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& e : elements) {
    if (e.rows() != d || e.cols() != d) throw Error(ErrorKind::DimensionMismatch, "POVM elements differ in shape");
    const auto sp = eigh(e);
    if (sp.values.minCoeff() < -1e-10) throw Error(ErrorKind::NotPositive, "POVM element is not positive");
    sum += e;
  }
  if (max_abs(sum - Matrix::Identity(d, d)) > 1e-9) throw Error(ErrorKind::NotNormalized, "POVM elements do not sum to I");
  return Povm(std::move(elements));
}

Povm Povm::random(Eigen::Index dim, int outcomes, Rng& rng) {
  std::vector<Matrix> raw;
  Matrix sum = Matrix::Zero(dim, dim);
  for (int b = 0; b < outcomes; ++b) {
    const Matrix g = ginibre(dim, dim, rng);
    raw.emplace_back(g * g.adjoint());
    sum += raw.back();
  }
  const auto sp = eigh(sum);
  const Matrix inv_sqrt = spectral_function(sp, [](double x) { return 1.0 / std::sqrt(x); });
  for (auto& e : raw) {
    e = inv_sqrt * e * inv_sqrt;
    e = (e + e.adjoint()).eval() / 2.0;
  }
  return from_elements(std::move(raw));
}

Eigen::MatrixXd joint_distribution(const SignalEnsemble& ens, const Povm& povm) {
  ens.validate();
  if (povm.dim() != ens.outputs.front().dim()) throw Error(ErrorKind::DimensionMismatch, "POVM and signal dimensions");
  const auto na = static_cast<Eigen::Index>(ens.outputs.size());
  const auto nb = static_cast<Eigen::Index>(povm.elements().size());
  Eigen::MatrixXd joint(na, nb);
  for (Eigen::Index a = 0; a < na; ++a) {
    for (Eigen::Index b = 0; b < nb; ++b) {
      const double v = ens.probs[static_cast<std::size_t>(a)] *
                       (ens.outputs[static_cast<std::size_t>(a)].matrix() * povm.elements()[static_cast<std::size_t>(b)])
                           .trace()
                           .real();
      joint(a, b) = v < 0 && v >= -1e-12 ? 0.0 : v;
    }
  }
  return joint;
}

double mutual_information(const Eigen::MatrixXd& joint) {
  if (joint.size() == 0 || (joint.array() < 0).any()) throw Error(ErrorKind::NotNormalized, "joint table has negative entries");
  if (std::abs(joint.sum() - 1) > 1e-9) throw Error(ErrorKind::NotNormalized, "joint table sums to " + std::to_string(joint.sum()));
  const Eigen::VectorXd pa = joint.rowwise().sum();
  const Eigen::VectorXd pb = joint.colwise().sum().transpose();
  const Eigen::Map<const Eigen::VectorXd> pab(joint.data(), joint.size());
  return std::max(shannon_entropy(pa) + shannon_entropy(pb) - shannon_entropy(RealVector(pab)), 0.0);
}

DeltaChi delta_chi_bounds(const SignalEnsemble& ens, const DensityOperator& omega, double eta) {
  if (!(eta > 0 && eta < 1)) throw Error(ErrorKind::BadParameter, "eta must lie in (0,1)");
  const auto mean = ens.average();
  if (omega.dim() != mean.dim()) throw Error(ErrorKind::DimensionMismatch, "omega dimension");
  const double chi = holevo_chi(ens);
  SignalEnsemble modified;
  for (std::size_t a = 0; a < ens.outputs.size(); ++a) {
    modified.probs.push_back((1 - eta) * ens.probs[a]);
    modified.outputs.push_back(ens.outputs[a]);
  }
  modified.probs.push_back(eta);
  modified.outputs.push_back(omega);
  const auto mean_mod = modified.average();
  DeltaChi out;
  out.lower = eta * (relative_entropy(omega, mean_mod) - chi);
  out.upper = eta * (relative_entropy(omega, mean) - chi);
  out.actual = holevo_chi(modified) - chi;
  return out;
}

std::vector<Vector> fibonacci_sphere(int n) {
  std::vector<Vector> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double theta = std::acos(std::clamp(z, -1.0, 1.0));
    const double phi = golden * i;
    Vector v(2);
    v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
    pts.push_back(v);
  }
  return pts;
}

std::vector<ProbePoint> probe_grid(const QuantumChannel& ch, int size, std::uint64_t seed) {
  const Eigen::Index d = ch.in_dim();
  std::vector<Vector> inputs;
  if (d == 2) {
    inputs = fibonacci_sphere(size > 0 ? size : 400);
  } else {
    Rng rng(seed);
    const int n = size > 0 ? size : 2000;
    for (int i = 0; i < n; ++i) inputs.push_back(random_pure_vector(d, rng));
  }
  std::vector<ProbePoint> grid;
  grid.reserve(inputs.size());
  for (auto& v : inputs) {
    Matrix out = ch.map(projector(v));
    grid.push_back({std::move(v), DensityOperator::from_matrix(out)});
  }
  return grid;
}

namespace {

/// D(omega||mean) for every probe given mean's spectrum and the probe entropies.
double distance_to(const Matrix& omega, double omega_entropy, const Spectrum<cplx>& mean_sp) {
  const auto [cross, outside] = detail::cross_entropy_spectral(omega, mean_sp);
  if (outside > kSupportTolerance) return kInfinity;
  return std::max(cross - omega_entropy, 0.0);
}

}  // namespace

OptimalityCertificate certify(const SignalEnsemble& ens, std::span<const DensityOperator> probe, double p_min) {
  const auto mean = ens.average();
  OptimalityCertificate cert;
  cert.chi_star = holevo_chi(ens);
  cert.grid_size = static_cast<int>(probe.size());
  cert.max_distance_violation = -kInfinity;
  for (const auto& w : probe) {
    const double d = relative_entropy(w, mean);
    if (std::isinf(d)) cert.support_ok = false;
    cert.max_distance_violation = std::max(cert.max_distance_violation, d - cert.chi_star);
  }
  if (probe.empty()) cert.max_distance_violation = 0;
  for (std::size_t a = 0; a < ens.outputs.size(); ++a) {
    if (ens.probs[a] <= p_min) continue;
    cert.equal_distance_spread =
        std::max(cert.equal_distance_spread, std::abs(relative_entropy(ens.outputs[a], mean) - cert.chi_star));
  }
  return cert;
}

namespace {

struct Member {
  Vector input;
  Matrix output;
  double entropy = 0;
};

constexpr int kPolishSweeps = 200;
constexpr double kBalanceTol = 1e-8;

class EnsembleOptimizer {
 public:
  EnsembleOptimizer(const QuantumChannel& ch, const EnsembleConfig& cfg) : ch_(ch), cfg_(cfg) {
    auto grid = probe_grid(ch, cfg.grid, cfg.seed);
    for (const auto& v : cfg.extra_inputs) {
      Vector u = v / v.norm();
      grid.push_back({u, DensityOperator::from_matrix(ch.map(projector(u)))});
    }
    for (auto& g : grid) {
      probe_.push_back({g.input, g.output.matrix(), entropy(g.output)});
    }
    cap_ = static_cast<std::size_t>(ch.out_dim() * ch.out_dim());
  }

  EnsembleResult run() {
    warmup();
    EnsembleResult res;
    double chi = chi_of(members_, probs_);
    res.trace.push_back(chi);
    int sweeps = 0;
    bool converged = false;
    while (sweeps < cfg_.max_sweeps) {
      ++sweeps;
      const double gained = multiplicative_sweep(chi);
      if (gained > 0) res.trace.push_back(chi);
      if (gained >= cfg_.gain_tol) continue;
      // tiny gains can hide an unbalanced support
      if (gained > 0 && member_violation(chi) > kBalanceTol) continue;
      // stalled on the current support: look for a state farther than chi
      if (!support_step(chi)) {
        converged = true;
        break;
      }
      res.trace.push_back(chi);
    }
    prune();
    res.sweeps = sweeps;
    res.converged = converged;
    for (std::size_t a = 0; a < members_.size(); ++a) {
      res.ensemble.probs.push_back(probs_[a]);
      res.ensemble.outputs.push_back(DensityOperator::from_matrix(members_[a].output));
      res.ensemble.inputs.push_back(members_[a].input);
    }
    normalize(res.ensemble.probs);
    std::vector<DensityOperator> probe_states;
    probe_states.reserve(probe_.size() + found_.size());
    for (const auto& p : probe_) probe_states.push_back(DensityOperator::from_matrix(p.output));
    for (const auto& f : found_) probe_states.push_back(DensityOperator::from_matrix(f.output));
    res.certificate = certify(res.ensemble, probe_states, cfg_.p_min);
    return res;
  }

 private:
  static void normalize(std::vector<double>& p) {
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p) x /= s;
  }

  Matrix mean_of(const std::vector<Member>& m, const std::vector<double>& p) const {
    Matrix mean = Matrix::Zero(ch_.out_dim(), ch_.out_dim());
    for (std::size_t a = 0; a < m.size(); ++a) mean.noalias() += p[a] * m[a].output;
    return mean;
  }

  double chi_of(const std::vector<Member>& m, const std::vector<double>& p) const {
    double chi = entropy_of(mean_of(m, p));
    for (std::size_t a = 0; a < m.size(); ++a) chi -= p[a] * m[a].entropy;
    return chi;
  }

  /// p_a <- p_a 2^{t D(rho_a||mean)}, halving t until chi does not drop.
  std::vector<double> reweighted(const std::vector<Member>& m, const std::vector<double>& p, double t,
                                 const std::vector<double>& dist) const {
    std::vector<double> q(p.size());
    const double dmax = *std::max_element(dist.begin(), dist.end());
    for (std::size_t a = 0; a < p.size(); ++a) q[a] = p[a] * std::exp2(t * (dist[a] - dmax));
    normalize(q);
    (void)m;
    return q;
  }

  std::vector<double> distances(const std::vector<Member>& m, const std::vector<double>& p) const {
    const auto sp = eigh(mean_of(m, p), 1e-8);
    std::vector<double> dist(m.size());
    for (std::size_t a = 0; a < m.size(); ++a) {
      dist[a] = distance_to(m[a].output, m[a].entropy, sp);
      if (std::isinf(dist[a])) dist[a] = 0;  // only for zero-weight members
    }
    return dist;
  }

  /// One multiplicative update with over-relaxation t, halved until chi does not drop.
  double sweep(const std::vector<Member>& m, std::vector<double>& p, double& chi) const {
    const auto dist = distances(m, p);
    for (double t = 4.0; t > 1e-6; t /= 2) {
      auto q = reweighted(m, p, t, dist);
      const double c = chi_of(m, q);
      if (c >= chi) {
        const double gain = c - chi;
        p = std::move(q);
        chi = c;
        return gain;
      }
    }
    return 0.0;
  }

  double multiplicative_sweep(double& chi) { return sweep(members_, probs_, chi); }

  void warmup() {
    members_ = probe_;
    probs_.assign(members_.size(), 1.0 / static_cast<double>(members_.size()));
    double chi = chi_of(members_, probs_);
    for (int s = 0; s < cfg_.warmup_sweeps; ++s) {
      if (multiplicative_sweep(chi) < 1e-12) break;
    }
    std::vector<std::size_t> order(members_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return probs_[a] > probs_[b]; });
    order.resize(std::min(cap_, order.size()));
    std::sort(order.begin(), order.end());
    std::vector<Member> kept;
    std::vector<double> kp;
    for (auto i : order) {
      kept.push_back(members_[i]);
      kp.push_back(probs_[i]);
    }
    members_ = std::move(kept);
    probs_ = std::move(kp);
    normalize(probs_);
  }

  /// Local ascent of D(E(psi)||mean) over the input sphere.
  Member refine(Member m, const Spectrum<cplx>& mean_sp, const Matrix& log_mean) const {
    double f = distance_to(m.output, m.entropy, mean_sp);
    if (std::isinf(f)) return m;
    double step = 0.5;
    for (int it = 0; it < 40; ++it) {
      const auto osp = eigh(m.output, 1e-8);
      const Matrix log_out = spectral_function(osp, [](double x) { return std::log2(std::max(x, 1e-15)); });
      const Matrix g = ch_.adjoint_map(log_out - log_mean);
      const Vector gv = g * m.input;
      const Vector dir = gv - m.input.dot(gv) * m.input;
      if (dir.norm() < 1e-12) break;
      bool moved = false;
      for (int h = 0; h < 30; ++h, step /= 2) {
        Vector trial = m.input + step * dir;
        trial.normalize();
        Member cand{trial, ch_.map(projector(trial)), 0};
        cand.entropy = entropy_of(cand.output);
        const double ft = distance_to(cand.output, cand.entropy, mean_sp);
        if (ft > f) {
          m = std::move(cand);
          f = ft;
          moved = true;
          step *= 2;
          break;
        }
      }
      if (!moved) break;
    }
    return m;
  }

  /// Adds the probe farthest from the mean when it beats chi by more than
  /// add_tol; returns false when no such state improves chi.
  bool support_step(double& chi) {
    const Matrix mean = mean_of(members_, probs_);
    const auto sp = eigh(mean, 1e-8);
    const Matrix log_mean = spectral_function(sp, [](double x) { return std::log2(std::max(x, 1e-15)); });
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(probe_.size());
    for (std::size_t i = 0; i < probe_.size(); ++i) {
      scored.emplace_back(distance_to(probe_[i].output, probe_[i].entropy, sp), i);
    }
    const auto top = std::min<std::size_t>(static_cast<std::size_t>(std::max(cfg_.refine_top, 1)), scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(top), scored.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
    Member best;
    double best_d = -kInfinity;
    for (std::size_t k = 0; k < top; ++k) {
      Member cand = refine(probe_[scored[k].second], sp, log_mean);
      const double d = distance_to(cand.output, cand.entropy, sp);
      if (d > best_d) {
        best_d = d;
        best = std::move(cand);
      }
    }
    if (!(best_d - chi > cfg_.add_tol)) return false;
    if (try_insert(best, chi)) {
      found_.push_back(best);
      return true;
    }
    return false;
  }

  /// Inserts `cand` at the best mixing weight eta and polishes. A full working
  /// set grows by one during the polish, then drops its lowest-weight member.
  /// The move is kept only if chi increases.
  bool try_insert(const Member& cand, double& chi) {
    std::vector<Member> m = members_;
    m.push_back(cand);
    double local = -kInfinity;
    std::vector<double> p;
    for (double eta = 0.5; eta > 1e-12; eta /= 2) {
      std::vector<double> q(probs_.size() + 1);
      for (std::size_t a = 0; a < probs_.size(); ++a) q[a] = (1 - eta) * probs_[a];
      q.back() = eta;
      const double c = chi_of(m, q);
      if (c > local) {
        local = c;
        p = std::move(q);
      }
    }
    polish(m, p, local);
    if (m.size() > cap_) {
      const auto low = std::min_element(p.begin(), p.end()) - p.begin();
      m.erase(m.begin() + low);
      p.erase(p.begin() + low);
      normalize(p);
      local = chi_of(m, p);
      polish(m, p, local);
    }
    if (!(local > chi)) return false;
    members_ = std::move(m);
    probs_ = std::move(p);
    chi = local;
    return true;
  }

  void polish(const std::vector<Member>& m, std::vector<double>& p, double& chi) const {
    for (int s = 0; s < kPolishSweeps; ++s) {
      if (sweep(m, p, chi) <= 0) break;
    }
  }

  /// Largest D(rho_a||mean) - chi over members carrying weight.
  double member_violation(double chi) const {
    const auto dist = distances(members_, probs_);
    double worst = 0;
    for (std::size_t a = 0; a < dist.size(); ++a) {
      if (probs_[a] > cfg_.p_min) worst = std::max(worst, std::abs(dist[a] - chi));
    }
    return worst;
  }

  void prune() {
    std::vector<Member> kept;
    std::vector<double> kp;
    for (std::size_t a = 0; a < members_.size(); ++a) {
      if (probs_[a] > cfg_.p_min) {
        kept.push_back(members_[a]);
        kp.push_back(probs_[a]);
      }
    }
    members_ = std::move(kept);
    probs_ = std::move(kp);
  }

  const QuantumChannel& ch_;
  const EnsembleConfig& cfg_;
  std::vector<Member> probe_;
  std::vector<Member> found_;
  std::vector<Member> members_;
  std::vector<double> probs_;
  std::size_t cap_ = 0;
};

}  // namespace

EnsembleResult optimize_ensemble(const QuantumChannel& ch, const EnsembleConfig& config) {
  EnsembleOptimizer opt(ch, config);
  return opt.run();
}

MinimaxResult chi_star_minimax(std::span<const DensityOperator> probe, const MinimaxConfig& config) {
  if (probe.empty()) throw Error(ErrorKind::DimensionMismatch, "minimax needs a non-empty probe set");
  const Eigen::Index d = probe.front().dim();
  const double ln2 = std::numbers::ln2;
  std::vector<double> ent;
  Matrix probe_mean = Matrix::Zero(d, d);
  for (const auto& w : probe) {
    ent.push_back(entropy(w));
    probe_mean += w.matrix() / static_cast<double>(probe.size());
  }
  const DensityOperator start = config.start ? *config.start : DensityOperator::from_matrix(probe_mean);

  auto exact_max = [&](const DensityOperator& sigma) {
    double m = 0;
    for (const auto& w : probe) m = std::max(m, relative_entropy(w, sigma));
    return m;
  };

  MinimaxResult best{exact_max(start), start};

  // f_i(H) = -S(w_i) - Tr(w_i H)/ln2 + log2 Tr e^H, convex in H
  Matrix h = spectral_function(start.spectrum(), [](double x) { return std::log(std::max(x, 1e-12)); });
  auto evaluate = [&](const Matrix& hm, std::vector<double>& f, Matrix& sigma) {
    const auto sp = eigh(hm, 1e-8);
    const double shift = sp.values.maxCoeff();
    const Matrix e = spectral_function(sp, [&](double x) { return std::exp(x - shift); });
    const double z = e.trace().real();
    sigma = e / z;
    const double log2z = (std::log(z) + shift) / ln2;
    f.resize(probe.size());
    for (std::size_t i = 0; i < probe.size(); ++i) {
      f[i] = -ent[i] - (probe[i].matrix().cwiseProduct(hm.transpose())).sum().real() / ln2 + log2z;
    }
  };
  auto soft = [](const std::vector<double>& f, double tau, std::vector<double>* w) {
    const double m = *std::max_element(f.begin(), f.end());
    double s = 0;
    for (double x : f) s += std::exp((x - m) / tau);
    if (w) {
      w->resize(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) (*w)[i] = std::exp((f[i] - m) / tau) / s;
    }
    return m + tau * std::log(s);
  };

  std::vector<double> f, w;
  Matrix sigma;
  int iterations = 0;
  for (double tau = 1e-2; tau >= 1e-7 && iterations < config.max_iterations; tau /= 10) {
    evaluate(h, f, sigma);
    double fs = soft(f, tau, &w);
    double step = 1.0;
    int stall = 0;
    while (iterations < config.max_iterations && stall < 3) {
      ++iterations;
      Matrix grad = Matrix::Zero(d, d);
      for (std::size_t i = 0; i < probe.size(); ++i) {
        if (w[i] > 1e-14) grad.noalias() += w[i] * (sigma - probe[i].matrix());
      }
      grad /= ln2;
      const double gnorm = grad.norm();
      if (gnorm < 1e-13) break;
      bool moved = false;
      for (int k = 0; k < 40; ++k, step /= 2) {
        const Matrix trial = h - step * grad;
        std::vector<double> ft;
        Matrix st;
        evaluate(trial, ft, st);
        const double fst = soft(ft, tau, nullptr);
        if (fst < fs) {
          stall = (fs - fst < 1e-13) ? stall + 1 : 0;
          h = trial;
          f = std::move(ft);
          sigma = std::move(st);
          fs = soft(f, tau, &w);
          step *= 2;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    const double true_max = *std::max_element(f.begin(), f.end());
    if (true_max < best.value) best = {true_max, DensityOperator::from_matrix(sigma)};
  }
  return best;
}

AdditivityReport additivity_experiment(const QuantumChannel& a, const QuantumChannel& b, const EnsembleConfig& config) {
  if (a.in_dim() * b.in_dim() > 16) throw Error(ErrorKind::DimensionTooLarge, "product input dimension exceeds 16");
  AdditivityReport rep;
  const auto ra = optimize_ensemble(a, config);
  const auto rb = optimize_ensemble(b, config);
  rep.chi_a = ra.certificate.chi_star;
  rep.chi_b = rb.certificate.chi_star;
  rep.cert_a = ra.certificate;
  rep.cert_b = rb.certificate;

  const auto ab = product(a, b);
  EnsembleConfig cab = config;
  cab.seed = SplitMix64::derive(config.seed, 1);
  // product signals keep chi_a + chi_b reachable; the random grid supplies entangled inputs
  for (const auto& ia : ra.ensemble.inputs) {
    for (const auto& ib : rb.ensemble.inputs) cab.extra_inputs.push_back(tensor(ia, ib));
  }
  const auto rab = optimize_ensemble(ab, cab);
  rep.chi_ab = rab.certificate.chi_star;
  rep.cert_ab = rab.certificate;
  rep.gap = rep.chi_ab - (rep.chi_a + rep.chi_b);
  return rep;
}

}  // namespace qrelent
