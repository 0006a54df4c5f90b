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

#include "qrelent/qcode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace qrelent {

namespace {

constexpr int kMaxRegister = 14;

std::size_t basis_index(const std::vector<int>& bits, int register_len) {
  std::size_t idx = 0;
  for (int b : bits) idx = (idx << 1) | static_cast<std::size_t>(b);
  return idx << (register_len - static_cast<int>(bits.size()));
}

Vector basis_vector(std::size_t index, int register_len) {
  Vector v = Vector::Zero(Eigen::Index{1} << register_len);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

std::vector<int> to_bits(std::size_t value, int len) {
  std::vector<int> bits(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i, value >>= 1) bits[static_cast<std::size_t>(i)] = static_cast<int>(value & 1);
  return bits;
}

}  // namespace

double LengthObservable::zef_weight(const Vector& psi) const {
  double w = 0;
  for (const auto& p : projectors) w += psi.dot(p * psi).real();
  return w;
}

ZefCode ZefCode::from_codewords(int register_len, std::vector<Vector> codewords, std::vector<int> lengths,
                                Matrix encoding) {
  if (register_len < 1 || register_len > kMaxRegister) throw Error(ErrorKind::RegisterTooLarge, "register length");
  if (codewords.size() != lengths.size() || codewords.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "codewords and lengths must align");
  }
  const Eigen::Index full = Eigen::Index{1} << register_len;
  const auto m = static_cast<Eigen::Index>(codewords.size());
  Matrix cols(full, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& c = codewords[static_cast<std::size_t>(k)];
    const int l = lengths[static_cast<std::size_t>(k)];
    if (l < 1 || l > register_len) throw Error(ErrorKind::InfeasibleLengths, "codeword length outside [1, n]");
    if (c.size() != full) throw Error(ErrorKind::DimensionMismatch, "codeword is not a register state");
    const std::size_t tail_mask = (std::size_t{1} << (register_len - l)) - 1;
    for (Eigen::Index i = 0; i < full; ++i) {
      if ((static_cast<std::size_t>(i) & tail_mask) != 0 && std::abs(c(i)) > 1e-10) {
        throw Error(ErrorKind::NotLengthEigenstate, "codeword " + std::to_string(k) + " has support past its length");
      }
    }
    cols.col(k) = c;
  }
  if (!has_orthonormal_columns(cols, 1e-10)) throw Error(ErrorKind::NotOrthonormal, "codewords are not orthonormal");
  if (encoding.size() == 0) encoding = Matrix::Identity(m, m);
  if (!is_unitary(encoding)) throw Error(ErrorKind::NotUnitary, "encoding must be a unitary on the source space");
  if (encoding.rows() != m) throw Error(ErrorKind::DimensionMismatch, "encoding size vs codeword count");

  ZefCode code;
  code.register_len_ = register_len;
  code.lengths_ = std::move(lengths);
  code.encoding_ = std::move(encoding);
  code.bits_.resize(codewords.size());
  for (std::size_t k = 0; k < codewords.size(); ++k) {
    const auto& c = codewords[k];
    Eigen::Index arg = 0;
    if (std::abs(std::abs(c.cwiseAbs().maxCoeff(&arg)) - 1.0) < 1e-12) {
      // basis codeword; record its payload bits
      auto all = to_bits(static_cast<std::size_t>(arg), register_len);
      code.bits_[k].assign(all.begin(), all.begin() + code.lengths_[k]);
    }
  }
  code.codewords_ = std::move(codewords);
  return code;
}

ZefCode ZefCode::from_lengths(std::vector<int> lengths, int register_len, Matrix encoding) {
  if (lengths.empty()) throw Error(ErrorKind::InfeasibleLengths, "no codewords requested");
  const int lmax = *std::max_element(lengths.begin(), lengths.end());
  if (*std::min_element(lengths.begin(), lengths.end()) < 1) throw Error(ErrorKind::InfeasibleLengths, "lengths must be >= 1");
  if (register_len == 0) register_len = lmax;
  if (lmax > register_len) throw Error(ErrorKind::InfeasibleLengths, "codeword longer than register");
  if (register_len > kMaxRegister) throw Error(ErrorKind::RegisterTooLarge, "register longer than 14 qubits");

  std::vector<std::size_t> order(lengths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

  std::vector<std::size_t> index(lengths.size());
  if (is_condensable_lengths(lengths)) {
    // canonical prefix-free assignment
    std::size_t value = 0;
    int prev = 0;
    for (std::size_t r = 0; r < order.size(); ++r) {
      const int l = lengths[order[r]];
      value = r == 0 ? 0 : (value + 1) << (l - prev);
      prev = l;
      index[order[r]] = basis_index(to_bits(value, l), register_len);
    }
  } else {
    std::set<std::size_t> used;
    for (auto k : order) {
      const int l = lengths[k];
      bool placed = false;
      for (std::size_t x = 0; x < (std::size_t{1} << l); ++x) {
        const std::size_t idx = x << (register_len - l);
        if (used.insert(idx).second) {
          index[k] = idx;
          placed = true;
          break;
        }
      }
      if (!placed) {
        throw Error(ErrorKind::InfeasibleLengths, "no free zef string of length " + std::to_string(l));
      }
    }
  }
  std::vector<Vector> words;
  for (auto idx : index) words.push_back(basis_vector(idx, register_len));
  return from_codewords(register_len, std::move(words), std::move(lengths), std::move(encoding));
}

LengthObservable ZefCode::length_observable() const {
  LengthObservable lam;
  lam.register_len = register_len_;
  std::set<int> distinct(lengths_.begin(), lengths_.end());
  const Eigen::Index full = Eigen::Index{1} << register_len_;
  for (int l : distinct) {
    Matrix p = Matrix::Zero(full, full);
    for (std::size_t k = 0; k < lengths_.size(); ++k) {
      if (lengths_[k] == l) p += projector(codewords_[k]);
    }
    lam.lengths.push_back(l);
    lam.projectors.push_back(std::move(p));
  }
  return lam;
}

bool ZefCode::is_prefix_free() const {
  for (const auto& b : bits_) {
    if (b.empty()) return false;
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    for (std::size_t j = 0; j < bits_.size(); ++j) {
      if (i == j || bits_[i].size() > bits_[j].size()) continue;
      if (std::equal(bits_[i].begin(), bits_[i].end(), bits_[j].begin())) return false;
    }
  }
  return true;
}

double kraft_sum(std::span<const int> lengths) {
  double k = 0;
  for (int l : lengths) k += std::ldexp(1.0, -l);
  return k;
}

double kraft_sum(const ZefCode& code) { return kraft_sum(code.lengths()); }

double kraft_trace(const LengthObservable& lambda) {
  double k = 0;
  for (std::size_t i = 0; i < lambda.lengths.size(); ++i) {
    k += lambda.projectors[i].trace().real() * std::ldexp(1.0, -lambda.lengths[i]);
  }
  return k;
}

DensityOperator implied_omega(const ZefCode& code) {
  const double k = kraft_sum(code);
  const auto m = static_cast<Eigen::Index>(code.size());
  RealVector w(m);
  for (Eigen::Index i = 0; i < m; ++i) w[i] = std::ldexp(1.0, -code.lengths()[static_cast<std::size_t>(i)]) / k;
  const Matrix& e = code.encoding();
  return DensityOperator::from_matrix(e * w.cast<cplx>().asDiagonal() * e.adjoint());
}

LengthLedger average_length(const ZefCode& code, const DensityOperator& rho) {
  if (rho.dim() != static_cast<Eigen::Index>(code.size())) {
    throw Error(ErrorKind::DimensionMismatch, "source state dimension must equal the codeword count");
  }
  const Matrix in_code = code.encoding().adjoint() * rho.matrix() * code.encoding();
  LengthLedger led;
  for (std::size_t k = 0; k < code.size(); ++k) {
    led.average_length += code.lengths()[k] * in_code(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
  }
  led.entropy = entropy(rho);
  led.divergence = relative_entropy(rho, implied_omega(code));
  led.log_kraft = std::log2(kraft_sum(code));
  return led;
}

LengthLedger average_length_register(const ZefCode& code, const DensityOperator& rho) {
  const Eigen::Index full = Eigen::Index{1} << code.register_len();
  if (rho.dim() != full) throw Error(ErrorKind::DimensionMismatch, "register state dimension");
  const auto m = static_cast<Eigen::Index>(code.size());
  Matrix c(full, m);
  for (Eigen::Index k = 0; k < m; ++k) c.col(k) = code.codewords()[static_cast<std::size_t>(k)];
  const Matrix in_code = c.adjoint() * rho.matrix() * c;
  const double weight = in_code.trace().real();
  if (weight < 1 - 1e-9) {
    throw Error(ErrorKind::SupportViolation, "state has weight " + std::to_string(1 - weight) + " off the zef subspace");
  }
  const Matrix source = code.encoding() * in_code * code.encoding().adjoint();
  return average_length(code, DensityOperator::from_matrix(source / weight));
}

double mismatch_cost(const DensityOperator& rho, const ZefCode& code) {
  if (std::abs(kraft_sum(code) - 1) > 1e-9) throw Error(ErrorKind::NotLengthOptimizing, "code has Kraft sum != 1");
  return relative_entropy(rho, implied_omega(code));
}

ZefCode shannon_fano_lengths(const DensityOperator& rho) {
  if (rho.dim() > 64) throw Error(ErrorKind::DimensionTooLarge, "Shannon-Fano coding limited to dim 64");
  const auto& sp = rho.spectrum();
  const Eigen::Index d = rho.dim();
  // descending eigenvalues so the longest codewords come last
  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sp.values[a] > sp.values[b]; });

  std::vector<int> lengths;
  std::size_t zeros = 0;
  for (auto i : order) {
    const double lam = sp.values[i];
    if (lam > 1e-12) {
      lengths.push_back(std::max(1, static_cast<int>(std::ceil(-std::log2(lam) - 1e-9))));
    } else {
      ++zeros;
    }
  }
  if (zeros > 0) {
    // unused eigenvectors still need codewords; free Kraft room if there is none
    if (kraft_sum(lengths) >= 1 - 1e-12) ++lengths.back();
    const int lmax = *std::max_element(lengths.begin(), lengths.end());
    const int extra = static_cast<int>(std::ceil(std::log2(static_cast<double>(zeros))));
    lengths.insert(lengths.end(), zeros, lmax + std::max(extra, 0) + (kraft_sum(lengths) >= 1 - 1e-12 ? 1 : 0));
  }
  const int n = *std::max_element(lengths.begin(), lengths.end());
  Matrix enc(d, d);
  for (Eigen::Index k = 0; k < d; ++k) enc.col(k) = sp.vectors.col(order[static_cast<std::size_t>(k)]);
  return ZefCode::from_lengths(std::move(lengths), n, std::move(enc));
}

Condensed condense(const ZefCode& code, std::span<const Vector> registers) {
  const int n = code.register_len();
  const int count = static_cast<int>(registers.size());
  if (count < 1) throw Error(ErrorKind::DimensionMismatch, "nothing to condense");
  if (count * n > kMaxRegister) throw Error(ErrorKind::RegisterTooLarge, "N*n exceeds 14 qubits");
  if (!code.is_prefix_free()) throw Error(ErrorKind::NotCondensable, "condense needs a prefix-free basis code");
  const auto lambda = code.length_observable();

  struct Partial {
    std::size_t prefix;
    int len;
    cplx amp;
  };
  std::vector<Partial> acc{{0, 0, 1.0}};
  int total = 0;
  for (const auto& reg : registers) {
    if (reg.size() != (Eigen::Index{1} << n)) throw Error(ErrorKind::DimensionMismatch, "register size");
    int length = -1;
    for (std::size_t i = 0; i < lambda.lengths.size(); ++i) {
      if (std::abs(reg.dot(lambda.projectors[i] * reg).real() - reg.squaredNorm()) < 1e-10) length = lambda.lengths[i];
    }
    if (length < 0) throw Error(ErrorKind::NotLengthEigenstate, "register is not a length eigenstate");
    total += length;
    std::vector<Partial> next;
    for (const auto& p : acc) {
      for (std::size_t k = 0; k < code.size(); ++k) {
        if (code.lengths()[k] != length) continue;
        const cplx a = code.codewords()[k].dot(reg);
        if (a == cplx(0)) continue;
        std::size_t word = 0;
        for (int b : code.bits()[k]) word = (word << 1) | static_cast<std::size_t>(b);
        next.push_back({(p.prefix << length) | word, p.len + length, p.amp * a});
      }
    }
    acc = std::move(next);
  }
  const int width = count * n;
  Vector packed = Vector::Zero(Eigen::Index{1} << width);
  for (const auto& p : acc) packed(static_cast<Eigen::Index>(p.prefix << (width - p.len))) += p.amp;
  return {std::move(packed), total, n, count};
}

Vector uncondense(const ZefCode& code, const Condensed& packed) {
  if (!code.is_prefix_free()) throw Error(ErrorKind::NotCondensable, "uncondense needs a prefix-free basis code");
  const int n = packed.register_len, count = packed.count, width = n * count;
  Vector out = Vector::Zero(Eigen::Index{1} << width);
  for (Eigen::Index idx = 0; idx < packed.packed.size(); ++idx) {
    const cplx amp = packed.packed(idx);
    if (amp == cplx(0)) continue;
    const auto bits = to_bits(static_cast<std::size_t>(idx), width);
    std::size_t pos = 0, target = 0;
    for (int r = 0; r < count; ++r) {
      std::size_t match = code.size();
      for (std::size_t k = 0; k < code.size(); ++k) {
        const auto& w = code.bits()[k];
        if (pos + w.size() <= bits.size() && std::equal(w.begin(), w.end(), bits.begin() + static_cast<std::ptrdiff_t>(pos))) {
          match = k;
          break;
        }
      }
      if (match == code.size()) throw Error(ErrorKind::NotCondensable, "packed string does not parse");
      target = (target << n) | basis_index(code.bits()[match], n);
      pos += code.bits()[match].size();
    }
    for (std::size_t i = pos; i < bits.size(); ++i) {
      if (bits[i] != 0) throw Error(ErrorKind::NotCondensable, "packed string has payload past its length");
    }
    out(static_cast<Eigen::Index>(target)) += amp;
  }
  return out;
}

}  // namespace qrelent
