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

// Pure-state LOCC protocols. Every party sees the shared classical record;
// ancillas are pre-tensored into the party dimensions.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrelent/entangle.hpp"
#include "qrelent/states.hpp"

namespace qrelent {

inline constexpr double kPruneThreshold = 1e-12;
inline constexpr double kErLedgerTolerance = 5e-3;

struct MultipartyState {
  std::vector<int> dims;
  Vector psi;
  std::vector<std::string> labels;

  /// Validates normalization (1e-10) and the product dimension. Labels default to A, B, C, ...
  static MultipartyState make(std::vector<int> dims, Vector psi, std::vector<std::string> labels = {});

  int parties() const { return static_cast<int>(dims.size()); }
  Matrix marginal(std::span<const int> parties) const;
  double entropy(std::span<const int> parties) const;
};

MultipartyState ghz_state();
/// EPR pair between parties i and j of an n-party structure; other parties get dimension 1.
MultipartyState epr_state(int n_parties, int i, int j);
/// Party-wise tensor product: party k of the result holds both copies of party k.
MultipartyState party_product(const MultipartyState& a, const MultipartyState& b);
MultipartyState party_power(const MultipartyState& s, int copies);

struct RecordEntry {
  int step = 0;
  int party = 0;
  std::string op;
  int outcome = -1;  ///< -1 for unitaries
};

struct ProtocolNode {
  MultipartyState state;
  double probability = 1;
  std::vector<RecordEntry> record;

  static ProtocolNode root(MultipartyState s) { return {std::move(s), 1.0, {}}; }
  std::optional<int> outcome_of(int step) const;
};

ProtocolNode local_unitary(const ProtocolNode& node, int party, const Matrix& u, int step = 0);

struct Measurement {
  std::vector<ProtocolNode> children;
  std::vector<double> branch_probs;  ///< relative to the parent
  double pruned_mass = 0;
};

/// Ideal measurement of `party` in the orthonormal basis given by the columns of `basis`.
Measurement local_measure(const ProtocolNode& node, int party, const Matrix& basis, int step = 0);

struct EntropyLedger {
  double before = 0;
  double after_avg = 0;
  bool asserted = false;  ///< measured party outside the party set
  bool holds = true;
};

EntropyLedger entropy_ledger(const ProtocolNode& parent, const Measurement& event, int measured_party,
                             std::span<const int> parties);

struct ErLedger {
  double before = 0;
  double after_avg = 0;
  double entropy_drop = 0;  ///< average decrease of the measured party's entropy
  bool holds = true;        ///< after_avg - before <= entropy_drop + 5e-3
};

ErLedger er_ledger(const ProtocolNode& parent, const Measurement& event, int measured_party, int i, int j,
                   const ErConfig& config = {});

/// E_r of the two-party marginal (i, j).
double pair_er(const MultipartyState& s, int i, int j, const ErConfig& config = {});

struct ReversibilityEntry {
  std::string quantity;
  double first = 0;
  double second = 0;
  bool differs = false;
};

struct ReversibilityReport {
  std::vector<ReversibilityEntry> entries;
  bool consistent = true;

  std::string verdict() const { return consistent ? "CONSISTENT" : "INCOMPATIBLE"; }
};

/// Necessary conditions only: equal cluster entropies and pairwise E_r within 5e-3.
ReversibilityReport reversibility_necessary_conditions(const MultipartyState& s1, const MultipartyState& s2,
                                                       const ErConfig& config = {});

struct ProtocolStep {
  enum class Kind { Unitary, Measure };
  Kind kind = Kind::Unitary;
  int party = 0;
  Matrix matrix;  ///< the unitary, or the basis as columns
  struct Condition {
    int step;
    int outcome;
  };
  std::optional<Condition> when;  ///< classical control on an earlier outcome
};

struct ProtocolEvent {
  int step = 0;
  ProtocolNode parent;
  Measurement measurement;
  std::vector<EntropyLedger> entropy;  ///< one per party
  std::vector<std::pair<std::pair<int, int>, ErLedger>> er;
};

struct ProtocolRun {
  std::vector<ProtocolNode> leaves;
  std::vector<ProtocolEvent> events;
  double pruned_mass = 0;
};

/// Runs steps in order on every branch. Pair E_r ledgers are computed when `with_er`.
ProtocolRun run_protocol(const MultipartyState& initial, std::span<const ProtocolStep> steps, bool with_er = true,
                         const ErConfig& config = {});

struct GhzDemo {
  ProtocolRun run;
  ErLedger bc_ledger;
  EntropyLedger a_ledger;
  std::vector<double> epr_fidelity;  ///< per leaf after local correction
};

/// GHZ: measure A in the +/- basis, then Z on B for the minus outcome.
GhzDemo ghz_to_epr_demo(const ErConfig& config = {});

}  // namespace qrelent
