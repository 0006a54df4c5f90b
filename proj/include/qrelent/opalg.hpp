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

// Dense operator kernel. Everything here is a free function templated on the
// Eigen expression type, so callers can pass blocks, maps and products
// without materializing temporaries first.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qrelent/error.hpp"

namespace qrelent {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues below this are numerical noise of a PSD matrix and become 0.
inline constexpr double kClipTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-9;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Hermitian eigendecomposition: ascending real eigenvalues, unitary columns.
template <typename Scalar>
struct Spectrum {
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;
  Eigen::Matrix<RealScalar, Eigen::Dynamic, 1> values;
  DenseMatrix<Scalar> vectors;

  DenseMatrix<Scalar> reconstruct() const {
    return vectors * values.template cast<Scalar>().asDiagonal() * vectors.adjoint();
  }
};

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  return max_abs(m - m.adjoint());
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NotSquare, std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
}

/// Decomposes a Hermitian matrix. The input is symmetrized before the solve so
/// that drift below `herm_tol` never leaks into the eigenvectors.
template <typename Derived>
Spectrum<typename Derived::Scalar> eigh(const Eigen::MatrixBase<Derived>& m,
                                        double herm_tol = kHermitianTolerance) {
  using Scalar = typename Derived::Scalar;
  require_square(m, "eigh input");
  const auto defect = hermitian_defect(m);
  if (!(defect <= herm_tol)) {
    throw Error(ErrorKind::NotHermitian, "max |m - m^dagger| = " + std::to_string(double(defect)));
  }
  DenseMatrix<Scalar> sym = (m + m.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Applies f to each eigenvalue: V f(Lambda) V^dagger.
template <typename Scalar, typename F>
DenseMatrix<Scalar> spectral_function(const Spectrum<Scalar>& sp, F&& f) {
  using Real = typename Spectrum<Scalar>::RealScalar;
  Eigen::Matrix<Real, Eigen::Dynamic, 1> fv = sp.values.unaryExpr([&](Real x) { return Real(f(x)); });
  return sp.vectors * fv.template cast<Scalar>().asDiagonal() * sp.vectors.adjoint();
}

/// Clips PSD noise in [-kClipTolerance, 0) to zero; anything lower is an error.
template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> clip_psd(const Eigen::Matrix<Real, Eigen::Dynamic, 1>& values) {
  Eigen::Matrix<Real, Eigen::Dynamic, 1> out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] < -kClipTolerance) {
      throw Error(ErrorKind::NegativeEigenvalue, "eigenvalue " + std::to_string(double(out[i])));
    }
    if (out[i] < 0) out[i] = 0;
  }
  return out;
}

/// Base-2 logarithm restricted to the support. Kernel eigenvalues map to 0 so
/// that products like rho*log(rho) vanish there.
template <typename Scalar>
DenseMatrix<Scalar> matrix_log2(const Spectrum<Scalar>& sp) {
  using Real = typename Spectrum<Scalar>::RealScalar;
  Spectrum<Scalar> clipped{clip_psd(sp.values), sp.vectors};
  return spectral_function(clipped, [](Real x) { return x > 0 ? std::log2(x) : Real(0); });
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> matrix_log2(const Eigen::MatrixBase<Derived>& m) {
  return matrix_log2(eigh(m));
}

/// Kronecker product: (a (x) b)[i*rb + k, j*cb + l] = a[i,j] * b[k,l].
template <typename DA, typename DB>
DenseMatrix<typename DA::Scalar> tensor(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  const Eigen::Index rb = b.rows(), cb = b.cols();
  DenseMatrix<Scalar> out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> tensor_power(const Eigen::MatrixBase<Derived>& a, int copies) {
  DenseMatrix<typename Derived::Scalar> out = DenseMatrix<typename Derived::Scalar>::Identity(1, 1);
  for (int n = 0; n < copies; ++n) out = tensor(out, a);
  return out;
}

inline std::size_t dims_product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         [](std::size_t acc, int d) { return acc * static_cast<std::size_t>(d); });
}

namespace detail {

struct FactorSplit {
  std::vector<int> kept;
  std::vector<int> traced;
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
};

inline FactorSplit split_factors(std::span<const int> dims, std::span<const int> keep) {
  if (keep.empty()) throw Error(ErrorKind::EmptyKeepSet, "keep set is empty");
  std::vector<bool> flag(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= dims.size()) {
      throw Error(ErrorKind::DimensionMismatch, "keep index " + std::to_string(k) + " out of range");
    }
    flag[static_cast<std::size_t>(k)] = true;
  }
  FactorSplit s;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (dims[f] < 1) throw Error(ErrorKind::DimensionMismatch, "factor dimension < 1");
    if (flag[f]) {
      s.kept.push_back(static_cast<int>(f));
      s.kept_dim *= static_cast<std::size_t>(dims[f]);
    } else {
      s.traced.push_back(static_cast<int>(f));
      s.traced_dim *= static_cast<std::size_t>(dims[f]);
    }
  }
  return s;
}

/// Global index of the basis state whose kept digits encode `k` and traced digits encode `t`.
inline std::vector<std::size_t> interleave_table(std::span<const int> dims, const FactorSplit& s) {
  const std::size_t n = dims.size();
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t f = n; f-- > 1;) stride[f - 1] = stride[f] * static_cast<std::size_t>(dims[f]);
  std::vector<std::size_t> table(s.kept_dim * s.traced_dim);
  for (std::size_t k = 0; k < s.kept_dim; ++k) {
    std::size_t base = 0, rem = k;
    for (std::size_t i = s.kept.size(); i-- > 0;) {
      const auto f = static_cast<std::size_t>(s.kept[i]);
      base += (rem % static_cast<std::size_t>(dims[f])) * stride[f];
      rem /= static_cast<std::size_t>(dims[f]);
    }
    for (std::size_t t = 0; t < s.traced_dim; ++t) {
      std::size_t idx = base, r = t;
      for (std::size_t i = s.traced.size(); i-- > 0;) {
        const auto f = static_cast<std::size_t>(s.traced[i]);
        idx += (r % static_cast<std::size_t>(dims[f])) * stride[f];
        r /= static_cast<std::size_t>(dims[f]);
      }
      table[k * s.traced_dim + t] = idx;
    }
  }
  return table;
}

}  // namespace detail

/// Traces out every factor not listed in `keep`. Kept factors appear in
/// ascending index order in the result.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& m, std::span<const int> dims,
                                                    std::span<const int> keep) {
  using Scalar = typename Derived::Scalar;
  require_square(m, "partial_trace input");
  if (dims_product(dims) != static_cast<std::size_t>(m.rows())) {
    throw Error(ErrorKind::DimensionMismatch, "factor dimensions do not multiply to " + std::to_string(m.rows()));
  }
  const auto split = detail::split_factors(dims, keep);
  const auto table = detail::interleave_table(dims, split);
  const auto kd = static_cast<Eigen::Index>(split.kept_dim);
  const std::size_t td = split.traced_dim;
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(kd, kd);
  for (Eigen::Index i = 0; i < kd; ++i) {
    for (Eigen::Index j = 0; j < kd; ++j) {
      Scalar acc(0);
      for (std::size_t t = 0; t < td; ++t) {
        acc += m(static_cast<Eigen::Index>(table[static_cast<std::size_t>(i) * td + t]),
                 static_cast<Eigen::Index>(table[static_cast<std::size_t>(j) * td + t]));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& m, std::initializer_list<int> dims,
                                                    std::initializer_list<int> keep) {
  return partial_trace(m, std::span<const int>(dims.begin(), dims.size()),
                       std::span<const int>(keep.begin(), keep.size()));
}

/// Reduced state of a pure vector: Tr_rest |psi><psi| without forming the
/// full projector. Reshapes psi into a kept x traced matrix M and returns M M^dagger.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> reduced_state(const Eigen::MatrixBase<Derived>& psi, std::span<const int> dims,
                                                    std::span<const int> keep) {
  using Scalar = typename Derived::Scalar;
  if (dims_product(dims) != static_cast<std::size_t>(psi.size())) {
    throw Error(ErrorKind::DimensionMismatch, "factor dimensions do not multiply to " + std::to_string(psi.size()));
  }
  const auto split = detail::split_factors(dims, keep);
  const auto table = detail::interleave_table(dims, split);
  const auto kd = static_cast<Eigen::Index>(split.kept_dim);
  const auto td = static_cast<Eigen::Index>(split.traced_dim);
  DenseMatrix<Scalar> shaped(kd, td);
  for (Eigen::Index k = 0; k < kd; ++k) {
    for (Eigen::Index t = 0; t < td; ++t) shaped(k, t) = psi(static_cast<Eigen::Index>(table[k * td + t]));
  }
  return shaped * shaped.adjoint();
}

/// Embeds an operator on factor `site` into the full product space.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> embed(const Eigen::MatrixBase<Derived>& op, std::span<const int> dims, int site) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Identity(1, 1);
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (static_cast<int>(f) == site) {
      out = tensor(out, op);
    } else {
      out = tensor(out, DenseMatrix<Scalar>::Identity(dims[f], dims[f]));
    }
  }
  return out;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = 1e-9) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - DenseMatrix<typename Derived::Scalar>::Identity(u.rows(), u.cols())) <= tol;
}

/// Columns orthonormal within `tol` (isometries, bases).
template <typename Derived>
bool has_orthonormal_columns(const Eigen::MatrixBase<Derived>& v, double tol = 1e-9) {
  return max_abs(v.adjoint() * v - DenseMatrix<typename Derived::Scalar>::Identity(v.cols(), v.cols())) <= tol;
}

}  // namespace qrelent
