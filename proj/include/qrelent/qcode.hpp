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

// Indeterminate-length quantum codes in zero-extended form.
//
// Codewords live in an n-qubit register (qubit 1 is the most significant bit
// of the basis index). A codeword of length l has |0> on qubits l+1..n. A
// source state is written in "source coordinates": column k of the encoding
// isometry is the source vector sent to codeword k.

#include <cstdint>
#include <span>
#include <vector>

#include "qrelent/states.hpp"

namespace qrelent {

/// Length observable as its projector family on the zef subspace.
struct LengthObservable {
  int register_len = 0;
  std::vector<int> lengths;       ///< distinct eigenvalues, ascending
  std::vector<Matrix> projectors; ///< Pi_l on the 2^n register, one per entry of `lengths`

  /// Lambda = +inf off the zef subspace: membership test, weight of psi on it.
  double zef_weight(const Vector& psi) const;
};

class ZefCode {
 public:
  /// Validates that codewords are orthonormal and zero beyond their length.
  static ZefCode from_codewords(int register_len, std::vector<Vector> codewords, std::vector<int> lengths,
                                Matrix encoding = {});
  /// Computational-basis codewords: canonical prefix-free strings when
  /// sum 2^{-l} <= 1, otherwise the smallest unused zef strings.
  /// Throws InfeasibleLengths when fewer than the requested codewords fit.
  static ZefCode from_lengths(std::vector<int> lengths, int register_len = 0, Matrix encoding = {});

  int register_len() const { return register_len_; }
  std::size_t size() const { return lengths_.size(); }
  const std::vector<int>& lengths() const { return lengths_; }
  const std::vector<Vector>& codewords() const { return codewords_; }
  /// Source basis -> codeword index; identity unless given.
  const Matrix& encoding() const { return encoding_; }
  /// Bit strings of computational-basis codewords; empty entries otherwise.
  const std::vector<std::vector<int>>& bits() const { return bits_; }

  LengthObservable length_observable() const;
  /// Prefix-free set of basis codewords, which makes condense invertible.
  bool is_prefix_free() const;

 private:
  int register_len_ = 0;
  std::vector<Vector> codewords_;
  std::vector<int> lengths_;
  Matrix encoding_;
  std::vector<std::vector<int>> bits_;
};

/// K = sum_k 2^{-l_k}.
double kraft_sum(std::span<const int> lengths);
double kraft_sum(const ZefCode& code);
/// Tr 2^{-Lambda} on the zef subspace, from projector ranks.
double kraft_trace(const LengthObservable& lambda);
inline bool is_condensable_lengths(std::span<const int> lengths) { return kraft_sum(lengths) <= 1 + 1e-12; }

/// omega = 2^{-Lambda} / K in source coordinates.
DensityOperator implied_omega(const ZefCode& code);

struct LengthLedger {
  double average_length = 0;  ///< Tr rho Lambda
  double entropy = 0;         ///< S(rho)
  double divergence = 0;      ///< D(rho || omega)
  double log_kraft = 0;       ///< log2 K

  /// |lbar - (S + D - log2 K)|
  double residual() const { return std::abs(average_length - (entropy + divergence - log_kraft)); }
};

/// rho in source coordinates (dimension = number of codewords).
LengthLedger average_length(const ZefCode& code, const DensityOperator& rho);
/// rho on the full 2^n register; throws SupportViolation if it leaks off the zef subspace.
LengthLedger average_length_register(const ZefCode& code, const DensityOperator& rho);

/// Extra qubits per codeword when the code is length optimizing for omega (K = 1).
double mismatch_cost(const DensityOperator& rho, const ZefCode& code);

/// Eigenbasis of rho encoded with lengths ceil(-log2 lambda_k) clamped to [1, n].
ZefCode shannon_fano_lengths(const DensityOperator& rho);

struct Condensed {
  Vector packed;      ///< state of the N*n qubit string
  int total_length;   ///< payload length L = l_1 + ... + l_N
  int register_len;   ///< n
  int count;          ///< N
};

/// Packs N length-eigenstate registers (each a 2^n vector) into one zef string.
/// Requires a prefix-free basis code; N*n <= 14.
Condensed condense(const ZefCode& code, std::span<const Vector> registers);
/// Inverse packing: returns the N-register tensor product state (dimension 2^{N n}).
Vector uncondense(const ZefCode& code, const Condensed& packed);

}  // namespace qrelent
