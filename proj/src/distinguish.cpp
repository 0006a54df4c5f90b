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

#include "qrelent/distinguish.hpp"

#include <algorithm>
#include <cmath>

namespace qrelent {

namespace {

constexpr double kAcceptSlack = 1e-12;

void check_alpha(double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw Error(ErrorKind::BadParameter, "alpha must lie in (0,1)");
}

void check_size(Eigen::Index dim, int copies) {
  if (copies < 1) throw Error(ErrorKind::BadParameter, "copies must be >= 1");
  double total = 1;
  for (int n = 0; n < copies; ++n) total *= static_cast<double>(dim);
  if (total > static_cast<double>(kMaxTensorDim)) {
    throw Error(ErrorKind::DimensionTooLarge, "dim^N exceeds " + std::to_string(kMaxTensorDim));
  }
}

struct TypeClass {
  double p;       ///< probability of one sequence under p
  double q;       ///< same under q
  double count;   ///< sequences in the class
  double weight;  ///< log likelihood ratio, +inf when q = 0
};

// Compositions of `copies` into p.size() parts. Products are formed directly
// so dyadic inputs stay exact.
void enumerate(std::span<const double> p, std::span<const double> q, int copies, std::vector<int>& counts,
               std::size_t symbol, std::vector<TypeClass>& out) {
  if (symbol + 1 == p.size()) {
    int used = 0;
    for (std::size_t i = 0; i < symbol; ++i) used += counts[i];
    counts[symbol] = copies - used;
    double cp = 1, cq = 1, mult = 1;
    int placed = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int n = counts[i];
      cp *= std::pow(p[i], n);
      cq *= std::pow(q[i], n);
      for (int k = 1; k <= n; ++k) mult = mult * (placed + k) / k;
      placed += n;
    }
    if (cp == 0) return;  // never accepted: adds nothing to the rho side
    out.push_back({cp, cq, std::round(mult), cq == 0 ? kInfinity : std::log(cp) - std::log(cq)});
    return;
  }
  int used = 0;
  for (std::size_t i = 0; i < symbol; ++i) used += counts[i];
  for (int n = 0; n <= copies - used; ++n) {
    counts[symbol] = n;
    enumerate(p, q, copies, counts, symbol + 1, out);
  }
}

// (acceptance, beta) points of a test family, plus the trivial tests.
struct TestPoint {
  double a;
  double b;
};

double best_from_points(std::vector<TestPoint> pts, double target, TestKind kind) {
  pts.push_back({0, 0});
  pts.push_back({1, 1});
  double best = 1;
  for (const auto& t : pts) {
    if (t.a >= target - kAcceptSlack) best = std::min(best, t.b);
  }
  if (kind == TestKind::Deterministic) return best;
  for (const auto& lo : pts) {
    if (lo.a >= target) continue;
    for (const auto& hi : pts) {
      if (hi.a < target) continue;
      const double lam = (target - lo.a) / (hi.a - lo.a);
      best = std::min(best, lo.b + lam * (hi.b - lo.b));
    }
  }
  return std::clamp(best, 0.0, 1.0);
}

double classical_single(std::span<const double> p, std::span<const double> q, int copies, double alpha, TestKind kind) {
  std::vector<TypeClass> classes;
  std::vector<int> counts(p.size(), 0);
  enumerate(p, q, copies, counts, 0, classes);
  std::stable_sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.weight > y.weight; });
  const double target = 1 - alpha;
  double a = 0, b = 0;
  for (const auto& c : classes) {
    const double full = c.p * c.count;
    if (a + full < target - kAcceptSlack) {
      a += full;
      b += c.q * c.count;
      continue;
    }
    const double need = (target - a) / c.p;
    const double m = kind == TestKind::Randomized ? std::max(0.0, need)
                                                  : std::min(c.count, std::max(0.0, std::ceil(need - 1e-9)));
    return std::clamp(b + m * c.q, 0.0, 1.0);
  }
  return std::clamp(b, 0.0, 1.0);
}

bool commute(const Matrix& a, const Matrix& b) { return max_abs(a * b - b * a) < 1e-12; }

std::pair<std::vector<double>, std::vector<double>> common_diagonal(const DensityOperator& rho,
                                                                    const DensityOperator& sigma) {
  const auto sp = eigh(Matrix(rho.matrix() + 0.5772156649 * sigma.matrix()));
  std::vector<double> p, q;
  for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
    const Vector v = sp.vectors.col(i);
    p.push_back(std::max(0.0, v.dot(rho.matrix() * v).real()));
    q.push_back(std::max(0.0, v.dot(sigma.matrix() * v).real()));
  }
  return {p, q};
}

TestPoint threshold_test(const Matrix& rn, const Matrix& sn, double t) {
  const auto sp = eigh(Matrix(rn - t * sn));
  const double scale = std::max(1.0, t);
  TestPoint pt{0, 0};
  for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
    if (sp.values[i] <= 1e-14 * scale) continue;
    const Vector v = sp.vectors.col(i);
    pt.a += v.dot(rn * v).real();
    pt.b += v.dot(sn * v).real();
  }
  return pt;
}

// Projectors onto the positive part of rho^N - t sigma^N: a log-spaced scan
// over the range where the projector can change, then bisection for the
// largest t still accepting rho with each target probability.
std::vector<TestPoint> quantum_family(const DensityOperator& rho, const DensityOperator& sigma, int copies,
                                      std::span<const double> targets) {
  const Matrix rn = tensor_power(rho.matrix(), copies);
  const Matrix sn = tensor_power(sigma.matrix(), copies);
  const double smin = std::max(sigma.eigenvalues().minCoeff(), 1e-300);
  const int top = static_cast<int>(std::ceil(std::min(1000.0, -copies * std::log2(smin)))) + 1;
  std::vector<double> ts;
  std::vector<TestPoint> pts{threshold_test(rn, sn, 0)};
  for (int s = -8; s <= top; ++s) {
    ts.push_back(std::ldexp(1.0, s));
    pts.push_back(threshold_test(rn, sn, ts.back()));
  }
  std::vector<double> done;
  for (double target : targets) {
    if (std::find(done.begin(), done.end(), target) != done.end()) continue;
    done.push_back(target);
    double lo = -1, hi = -1;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (pts[k + 1].a >= target - kAcceptSlack) {
        lo = ts[k];
      } else if (lo > 0) {
        hi = ts[k];
        break;
      }
    }
    if (lo < 0 || hi < 0) continue;
    for (int k = 0; k < 25 && hi / lo > 1 + 1e-8; ++k) {
      const double mid = std::sqrt(lo * hi);
      const auto pt = threshold_test(rn, sn, mid);
      pts.push_back(pt);
      (pt.a >= target - kAcceptSlack ? lo : hi) = mid;
    }
  }
  return pts;
}

std::vector<double> single_size(const DensityOperator& rho, const DensityOperator& sigma, int copies,
                                std::span<const double> alphas, TestKind kind) {
  std::vector<double> out;
  if (commute(rho.matrix(), sigma.matrix())) {
    const auto [p, q] = common_diagonal(rho, sigma);
    for (double a : alphas) out.push_back(classical_single(p, q, copies, a, kind));
    return out;
  }
  std::vector<double> targets;
  for (double a : alphas) targets.push_back(1 - a);
  const auto pts = quantum_family(rho, sigma, copies, targets);
  for (double a : alphas) {
    out.push_back(std::min(best_from_points(pts, 1 - a, kind), eigenbasis_stein_error(rho, sigma, copies, a)));
  }
  return out;
}

}  // namespace

double classical_stein_error(std::span<const double> p, std::span<const double> q, int copies, double alpha,
                             TestKind kind) {
  check_alpha(alpha);
  if (p.size() != q.size() || p.empty()) throw Error(ErrorKind::DimensionMismatch, "distributions must align");
  check_size(static_cast<Eigen::Index>(p.size()), copies);
  double best = 1;
  for (int m = 1; m <= copies; ++m) best = std::min(best, classical_single(p, q, m, alpha, kind));
  return best;
}

double eigenbasis_stein_error(const DensityOperator& rho, const DensityOperator& sigma, int copies, double alpha) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "rho vs sigma dimension");
  const auto& sp = rho.spectrum();
  std::vector<double> p, q;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const Vector v = sp.vectors.col(i);
    p.push_back(sp.values[i]);
    q.push_back(std::max(0.0, v.dot(sigma.matrix() * v).real()));
  }
  return classical_stein_error(p, q, copies, alpha);
}

double stein_error(const DensityOperator& rho, const DensityOperator& sigma, int copies, double alpha, TestKind kind) {
  check_alpha(alpha);
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "rho vs sigma dimension");
  check_size(rho.dim(), copies);
  // a test on fewer copies is also a test on N copies
  double best = 1;
  const double alphas[] = {alpha};
  for (int m = 1; m <= copies; ++m) best = std::min(best, single_size(rho, sigma, m, alphas, kind).front());
  return best;
}

SteinReport exponent_trend(const DensityOperator& rho, const DensityOperator& sigma, int n_max, double alpha) {
  check_alpha(alpha);
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "rho vs sigma dimension");
  check_size(rho.dim(), n_max);
  SteinReport rep;
  rep.alpha = alpha;
  rep.target = relative_entropy(rho, sigma);
  const double alphas[] = {alpha, 0.01, 0.05, 0.2};
  std::vector<double> best(std::size(alphas), 1.0);
  for (int n = 1; n <= n_max; ++n) {
    const auto betas = single_size(rho, sigma, n, alphas, TestKind::Deterministic);
    for (std::size_t k = 0; k < best.size(); ++k) best[k] = std::min(best[k], betas[k]);
    rep.copies.push_back(n);
    rep.betas.push_back(best[0]);
    rep.exponents.push_back(stein_exponent(best[0], n));
    rep.classical_exponents.push_back(stein_exponent(eigenbasis_stein_error(rho, sigma, n, alpha), n));
    rep.finite_size_flags.push_back(rep.exponents.back() > rep.target + 3.0 / n);
  }
  for (std::size_t k = 1; k < best.size(); ++k) {
    rep.alpha_sensitivity.emplace_back(alphas[k], stein_exponent(best[k], n_max));
  }
  const auto gap = [&](double e) { return std::isinf(e) && std::isinf(rep.target) ? 0.0 : std::abs(e - rep.target); };
  rep.approaches = n_max == 1 || gap(rep.exponents.back()) < gap(rep.exponents.front()) ||
                   (std::isinf(rep.target) && std::isinf(rep.exponents.back()));
  return rep;
}

}  // namespace qrelent
