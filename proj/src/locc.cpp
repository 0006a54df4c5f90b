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

#include "qrelent/locc.hpp"

#include <algorithm>
#include <cmath>

namespace qrelent {

namespace {

void require_party(const MultipartyState& s, int party) {
  if (party < 0 || party >= s.parties()) throw Error(ErrorKind::BadParty, "party " + std::to_string(party) + " out of range");
}

}  // namespace

MultipartyState MultipartyState::make(std::vector<int> dims, Vector psi, std::vector<std::string> labels) {
  if (dims.empty()) throw Error(ErrorKind::DimensionMismatch, "no parties");
  if (dims_product(dims) != static_cast<std::size_t>(psi.size())) {
    throw Error(ErrorKind::DimensionMismatch, "state size is not the product of party dimensions");
  }
  if (std::abs(psi.norm() - 1) > 1e-10) throw Error(ErrorKind::NotNormalized, "global state must be normalized");
  if (labels.empty()) {
    for (std::size_t k = 0; k < dims.size(); ++k) labels.emplace_back(1, static_cast<char>('A' + k));
  }
  if (labels.size() != dims.size()) throw Error(ErrorKind::DimensionMismatch, "one label per party");
  return {std::move(dims), std::move(psi), std::move(labels)};
}

Matrix MultipartyState::marginal(std::span<const int> parties) const { return reduced_state(psi, dims, parties); }

double MultipartyState::entropy(std::span<const int> parties) const { return entropy_of(marginal(parties)); }

MultipartyState ghz_state() {
  Vector v = Vector::Zero(8);
  v(0) = v(7) = 1 / std::sqrt(2.0);
  return MultipartyState::make({2, 2, 2}, v);
}

MultipartyState epr_state(int n_parties, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n_parties || j >= n_parties) throw Error(ErrorKind::BadParty, "EPR needs two distinct parties");
  std::vector<int> dims(static_cast<std::size_t>(n_parties), 1);
  dims[static_cast<std::size_t>(i)] = dims[static_cast<std::size_t>(j)] = 2;
  // with all other factors trivial, the global index is 2*first + second
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1 / std::sqrt(2.0);
  return MultipartyState::make(std::move(dims), v);
}

MultipartyState party_product(const MultipartyState& a, const MultipartyState& b) {
  if (a.parties() != b.parties()) throw Error(ErrorKind::StructureMismatch, "party counts differ");
  const int n = a.parties();
  const Vector joint = tensor(a.psi, b.psi);
  // joint factors: a_0..a_{n-1}, b_0..b_{n-1}; target factors: (a_0 b_0), (a_1 b_1), ...
  std::vector<int> dims(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) dims[static_cast<std::size_t>(k)] = a.dims[static_cast<std::size_t>(k)] * b.dims[static_cast<std::size_t>(k)];
  Vector out = Vector::Zero(joint.size());
  const auto na = static_cast<Eigen::Index>(a.psi.size()), nb = static_cast<Eigen::Index>(b.psi.size());
  for (Eigen::Index ia = 0; ia < na; ++ia) {
    for (Eigen::Index ib = 0; ib < nb; ++ib) {
      Eigen::Index ra = ia, rb = ib, idx = 0, stride = 1;
      for (int k = n - 1; k >= 0; --k) {
        const int da = a.dims[static_cast<std::size_t>(k)], db = b.dims[static_cast<std::size_t>(k)];
        const Eigen::Index xa = ra % da, xb = rb % db;
        ra /= da;
        rb /= db;
        idx += (xa * db + xb) * stride;
        stride *= da * db;
      }
      out(idx) = joint(ia * nb + ib);
    }
  }
  return MultipartyState::make(std::move(dims), std::move(out), a.labels);
}

MultipartyState party_power(const MultipartyState& s, int copies) {
  if (copies < 1) throw Error(ErrorKind::BadParameter, "copies must be >= 1");
  MultipartyState out = s;
  for (int c = 1; c < copies; ++c) out = party_product(out, s);
  return out;
}

std::optional<int> ProtocolNode::outcome_of(int step) const {
  for (const auto& r : record) {
    if (r.step == step && r.outcome >= 0) return r.outcome;
  }
  return std::nullopt;
}

ProtocolNode local_unitary(const ProtocolNode& node, int party, const Matrix& u, int step) {
  require_party(node.state, party);
  const int d = node.state.dims[static_cast<std::size_t>(party)];
  if (u.rows() != d || !is_unitary(u)) throw Error(ErrorKind::NotUnitary, "local operation must be a unitary on the party");
  ProtocolNode child = node;
  child.state.psi = embed(u, node.state.dims, party) * node.state.psi;
  child.state.psi.normalize();
  child.record.push_back({step, party, "unitary", -1});
  return child;
}

Measurement local_measure(const ProtocolNode& node, int party, const Matrix& basis, int step) {
  require_party(node.state, party);
  const int d = node.state.dims[static_cast<std::size_t>(party)];
  if (basis.rows() != d || basis.cols() != d || !has_orthonormal_columns(basis)) {
    throw Error(ErrorKind::NotOrthonormal, "measurement basis must be a complete orthonormal basis of the party");
  }
  Measurement m;
  for (int k = 0; k < d; ++k) {
    const Matrix proj = projector(basis.col(k));
    Vector v = embed(proj, node.state.dims, party) * node.state.psi;
    const double p = v.squaredNorm();
    if (p < kPruneThreshold) {
      m.pruned_mass += p * node.probability;
      continue;
    }
    ProtocolNode child = node;
    child.state.psi = v / std::sqrt(p);
    child.probability = node.probability * p;
    child.record.push_back({step, party, "measure", k});
    m.children.push_back(std::move(child));
    m.branch_probs.push_back(p);
  }
  return m;
}

EntropyLedger entropy_ledger(const ProtocolNode& parent, const Measurement& event, int measured_party,
                             std::span<const int> parties) {
  EntropyLedger led;
  led.before = parent.state.entropy(parties);
  for (std::size_t k = 0; k < event.children.size(); ++k) {
    led.after_avg += event.branch_probs[k] * event.children[k].state.entropy(parties);
  }
  led.asserted = std::find(parties.begin(), parties.end(), measured_party) == parties.end();
  led.holds = led.after_avg <= led.before + 1e-8;
  return led;
}

double pair_er(const MultipartyState& s, int i, int j, const ErConfig& config) {
  require_party(s, i);
  require_party(s, j);
  if (i == j) throw Error(ErrorKind::BadParty, "pair needs two distinct parties");
  const int lo = std::min(i, j), hi = std::max(i, j);
  const int keep[] = {lo, hi};
  const auto rho = DensityOperator::from_matrix(s.marginal(keep));
  return relative_entropy_of_entanglement(rho, s.dims[static_cast<std::size_t>(lo)], s.dims[static_cast<std::size_t>(hi)],
                                          config)
      .value;
}

ErLedger er_ledger(const ProtocolNode& parent, const Measurement& event, int measured_party, int i, int j,
                   const ErConfig& config) {
  if (measured_party == i || measured_party == j) throw Error(ErrorKind::BadParty, "measured party must lie outside the pair");
  ErLedger led;
  const int measured[] = {measured_party};
  led.before = pair_er(parent.state, i, j, config);
  double s_after = 0;
  for (std::size_t k = 0; k < event.children.size(); ++k) {
    led.after_avg += event.branch_probs[k] * pair_er(event.children[k].state, i, j, config);
    s_after += event.branch_probs[k] * event.children[k].state.entropy(measured);
  }
  led.entropy_drop = parent.state.entropy(measured) - s_after;
  led.holds = led.after_avg - led.before <= led.entropy_drop + kErLedgerTolerance;
  return led;
}

namespace {

// Every nonempty proper subset of parties, as index lists.
std::vector<std::vector<int>> clusters(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> c;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) c.push_back(k);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string cluster_name(const MultipartyState& s, const std::vector<int>& c) {
  std::string name;
  for (int k : c) name += s.labels[static_cast<std::size_t>(k)];
  return name;
}

}  // namespace

ReversibilityReport reversibility_necessary_conditions(const MultipartyState& s1, const MultipartyState& s2,
                                                       const ErConfig& config) {
  if (s1.dims != s2.dims) throw Error(ErrorKind::StructureMismatch, "states need identical party dimensions");
  ReversibilityReport rep;
  const int n = s1.parties();
  for (const auto& c : clusters(n)) {
    ReversibilityEntry e{"S(" + cluster_name(s1, c) + ")", s1.entropy(c), s2.entropy(c), false};
    e.differs = std::abs(e.first - e.second) > kErLedgerTolerance;
    rep.entries.push_back(e);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ReversibilityEntry e{"E_r(" + cluster_name(s1, {i, j}) + ")", pair_er(s1, i, j, config), pair_er(s2, i, j, config),
                           false};
      e.differs = std::abs(e.first - e.second) > kErLedgerTolerance;
      rep.entries.push_back(e);
    }
  }
  for (const auto& e : rep.entries) rep.consistent = rep.consistent && !e.differs;
  return rep;
}

ProtocolRun run_protocol(const MultipartyState& initial, std::span<const ProtocolStep> steps, bool with_er,
                         const ErConfig& config) {
  ProtocolRun run;
  run.leaves.push_back(ProtocolNode::root(initial));
  const int n = initial.parties();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& step = steps[s];
    const int id = static_cast<int>(s);
    if (step.when && (step.when->step < 0 || step.when->step >= id)) {
      throw Error(ErrorKind::ValidationError, "step " + std::to_string(id) + " conditions on a later step");
    }
    std::vector<ProtocolNode> next;
    for (const auto& node : run.leaves) {
      if (step.when && node.outcome_of(step.when->step) != step.when->outcome) {
        next.push_back(node);
        continue;
      }
      ProtocolEvent ev;
      ev.step = id;
      ev.parent = node;
      if (step.kind == ProtocolStep::Kind::Unitary) {
        ev.measurement.children.push_back(local_unitary(node, step.party, step.matrix, id));
        ev.measurement.branch_probs.push_back(1.0);
      } else {
        ev.measurement = local_measure(node, step.party, step.matrix, id);
      }
      for (int p = 0; p < n; ++p) {
        const int parties[] = {p};
        ev.entropy.push_back(entropy_ledger(node, ev.measurement, step.party, parties));
      }
      if (with_er && step.kind == ProtocolStep::Kind::Measure) {
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (i == step.party || j == step.party) continue;
            if (initial.dims[static_cast<std::size_t>(i)] * initial.dims[static_cast<std::size_t>(j)] > 16) continue;
            ev.er.push_back({{i, j}, er_ledger(node, ev.measurement, step.party, i, j, config)});
          }
        }
      }
      run.pruned_mass += ev.measurement.pruned_mass;
      for (const auto& c : ev.measurement.children) next.push_back(c);
      run.events.push_back(std::move(ev));
    }
    run.leaves = std::move(next);
  }
  return run;
}

GhzDemo ghz_to_epr_demo(const ErConfig& config) {
  const double h = 1 / std::sqrt(2.0);
  Matrix pm(2, 2);
  pm << h, h, h, -h;
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1;
  z(1, 1) = -1;
  const ProtocolStep steps[] = {
      {ProtocolStep::Kind::Measure, 0, pm, std::nullopt},
      {ProtocolStep::Kind::Unitary, 1, z, ProtocolStep::Condition{0, 1}},
  };
  GhzDemo demo;
  demo.run = run_protocol(ghz_state(), steps, true, config);
  const auto& first = demo.run.events.front();
  for (const auto& [pair, led] : first.er) {
    if (pair == std::pair{1, 2}) demo.bc_ledger = led;
  }
  demo.a_ledger = first.entropy[0];
  const Vector epr = epr_state(2, 0, 1).psi;
  const int bc[] = {1, 2};
  for (const auto& leaf : demo.run.leaves) {
    demo.epr_fidelity.push_back(epr.dot(leaf.state.marginal(bc) * epr).real());
  }
  return demo;
}

}  // namespace qrelent
