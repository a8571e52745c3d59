// Copyright 2026 The triqent authors
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

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triqent/numeric.hpp"
#include "triqent/types.hpp"

namespace triqent {

enum class Subsystem { A = 0, B = 1, C = 2 };

/// Dense pure state of three subsystems with dimensions (d_a, d_b, d_c).
/// Amplitudes are stored row-major over (i, j, k). The value is immutable
/// after construction; operations return new states.
class TripartiteState {
 public:
  TripartiteState(std::array<int, 3> dims, std::vector<Complex> amplitudes,
                  std::string label = {})
      : dims_(dims), amps_(std::move(amplitudes)), label_(std::move(label)) {
    if (dims_[0] < 1 || dims_[1] < 1 || dims_[2] < 1) {
      throw InvalidStateError("dimensions must all be >= 1");
    }
    const std::size_t expected = static_cast<std::size_t>(dims_[0]) *
                                 static_cast<std::size_t>(dims_[1]) *
                                 static_cast<std::size_t>(dims_[2]);
    if (amps_.size() != expected) {
      throw InvalidStateError("amplitude array length does not match dimensions");
    }
    double n2 = 0.0;
    for (const Complex& a : amps_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw InvalidStateError("amplitudes must be finite");
      }
      n2 += std::norm(a);
    }
    if (n2 <= 0.0) {
      throw InvalidStateError("zero tensor");
    }
    squared_norm_ = n2;
  }

  const std::array<int, 3>& dims() const { return dims_; }
  int dim(Subsystem s) const { return dims_[static_cast<int>(s)]; }
  const std::string& label() const { return label_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  std::size_t flat_index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k;
  }

  const Complex& at(int i, int j, int k) const { return amps_[flat_index(i, j, k)]; }

  double squared_norm() const { return squared_norm_; }
  double norm() const { return std::sqrt(squared_norm_); }

  TripartiteState normalized() const {
    std::vector<Complex> amps = amps_;
    const double inv = 1.0 / norm();
    for (Complex& a : amps) a *= inv;
    return TripartiteState(dims_, std::move(amps), label_);
  }

  TripartiteState scaled(Complex factor) const {
    std::vector<Complex> amps = amps_;
    for (Complex& a : amps) a *= factor;
    return TripartiteState(dims_, std::move(amps), label_);
  }

  TripartiteState with_label(std::string label) const {
    return TripartiteState(dims_, amps_, std::move(label));
  }

  /// Coefficient matrix of the k-th qubit slice: row = a index, col = b index.
  Matrix slice(int k) const {
    Matrix m(dims_[0], dims_[1]);
    for (int i = 0; i < dims_[0]; ++i) {
      for (int j = 0; j < dims_[1]; ++j) m(i, j) = at(i, j, k);
    }
    return m;
  }

  Complex inner(const TripartiteState& other) const {
    if (dims_ != other.dims_) {
      throw InvalidStateError("inner product requires equal dimensions");
    }
    Complex acc = 0.0;
    for (std::size_t p = 0; p < amps_.size(); ++p) {
      acc += std::conj(amps_[p]) * other.amps_[p];
    }
    return acc;
  }

 private:
  std::array<int, 3> dims_;
  std::vector<Complex> amps_;
  std::string label_;
  double squared_norm_ = 0.0;
};

/// Overlap of the two rays: |<x|y>|^2 / (|x|^2 |y|^2).
inline double fidelity(const TripartiteState& x, const TripartiteState& y) {
  return std::norm(x.inner(y)) / (x.squared_norm() * y.squared_norm());
}

/// Numerical ranks of the three reduced density matrices together with
/// column-orthonormal isometries from support coordinates to ambient ones.
struct LocalSupport {
  std::array<int, 3> ranks;
  std::array<Matrix, 3> isometries;
  double tolerance_used = 0.0;
};

/// Qubit-relative split of an (n,n,2) state: |psi> = sum_k c_k |r_k>|k>,
/// with unit-norm matricized relative states R_k (row = a index).
struct RelativeDecomposition {
  double c0 = 0.0;
  double c1 = 0.0;
  Matrix R0;
  Matrix R1;
  Matrix2 qubit_basis = Matrix2::Identity();

  int n() const { return static_cast<int>(R0.rows()); }
};

/// Dense tensor over m factors, used as the input of group_subsystems.
struct MultiFactorTensor {
  std::vector<int> factor_dims;
  std::vector<Complex> amplitudes;  // row-major over the factor indices

  std::size_t size() const {
    std::size_t s = 1;
    for (int d : factor_dims) s *= static_cast<std::size_t>(d);
    return s;
  }
};

/// Regroups an m-factor tensor into a tripartite state. Each group lists
/// 0-based factor indices; the group's joint index is flattened mixed-radix
/// with the first listed factor most significant. The global norm is
/// preserved exactly (this is an index permutation).
inline TripartiteState group_subsystems(const MultiFactorTensor& multi,
                                        const std::array<std::vector<int>, 3>& groups,
                                        std::string label = {}) {
  const int m = static_cast<int>(multi.factor_dims.size());
  if (m < 1) throw InvalidStateError("empty factor list");
  for (int d : multi.factor_dims) {
    if (d < 1) throw InvalidStateError("factor dimensions must be >= 1");
  }
  if (multi.amplitudes.size() != multi.size()) {
    throw InvalidStateError("amplitude array length does not match factor dimensions");
  }
  std::vector<int> seen(m, 0);
  for (const auto& g : groups) {
    if (g.empty()) throw InvalidStateError("empty group");
    for (int f : g) {
      if (f < 0 || f >= m) throw InvalidStateError("group refers to unknown factor");
      if (seen[f]++) throw InvalidStateError("groups are not a partition: duplicate factor");
    }
  }
  for (int f = 0; f < m; ++f) {
    if (!seen[f]) throw InvalidStateError("groups are not a partition: missing factor");
  }

  std::array<int, 3> dims{1, 1, 1};
  for (int g = 0; g < 3; ++g) {
    for (int f : groups[g]) dims[g] *= multi.factor_dims[f];
  }

  std::vector<Complex> out(static_cast<std::size_t>(dims[0]) * dims[1] * dims[2], Complex{0.0});
  std::vector<int> idx(m, 0);
  for (std::size_t flat = 0; flat < multi.amplitudes.size(); ++flat) {
    // decode row-major multi-index
    std::size_t rem = flat;
    for (int f = m - 1; f >= 0; --f) {
      idx[f] = static_cast<int>(rem % multi.factor_dims[f]);
      rem /= multi.factor_dims[f];
    }
    std::array<std::size_t, 3> gi{0, 0, 0};
    for (int g = 0; g < 3; ++g) {
      for (int f : groups[g]) gi[g] = gi[g] * multi.factor_dims[f] + idx[f];
    }
    out[(gi[0] * dims[1] + gi[1]) * dims[2] + gi[2]] = multi.amplitudes[flat];
  }
  return TripartiteState(dims, std::move(out), std::move(label));
}

/// Reduced density matrix of one subsystem, normalized to unit trace.
inline Matrix reduced_density(const TripartiteState& state, Subsystem s) {
  const auto& d = state.dims();
  const int ds = d[static_cast<int>(s)];
  Matrix rho = Matrix::Zero(ds, ds);
  for (int i = 0; i < d[0]; ++i) {
    for (int j = 0; j < d[1]; ++j) {
      for (int k = 0; k < d[2]; ++k) {
        const Complex a = state.at(i, j, k);
        if (a == Complex{0.0}) continue;
        // accumulate outer products over the traced indices
        switch (s) {
          case Subsystem::A:
            for (int i2 = 0; i2 < d[0]; ++i2) rho(i, i2) += a * std::conj(state.at(i2, j, k));
            break;
          case Subsystem::B:
            for (int j2 = 0; j2 < d[1]; ++j2) rho(j, j2) += a * std::conj(state.at(i, j2, k));
            break;
          case Subsystem::C:
            for (int k2 = 0; k2 < d[2]; ++k2) rho(k, k2) += a * std::conj(state.at(i, j, k2));
            break;
        }
      }
    }
  }
  rho /= state.squared_norm();
  return rho;
}

/// Support ranks and eigenbases of the three reduced densities. Eigenvalues
/// below tol * (largest eigenvalue) count as zero. Basis columns are ordered
/// by descending eigenvalue.
inline LocalSupport local_supports(const TripartiteState& state, double tol) {
  if (!(tol > 0.0)) throw InvalidStateError("support tolerance must be positive");
  LocalSupport sup;
  sup.tolerance_used = tol;
  for (int s = 0; s < 3; ++s) {
    const Matrix rho = reduced_density(state, static_cast<Subsystem>(s));
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    if (es.info() != Eigen::Success) {
      throw NumericalError("reduced density eigendecomposition failed");
    }
    const auto& ev = es.eigenvalues();  // ascending
    const int ds = static_cast<int>(ev.size());
    const double top = ev(ds - 1);
    int rank = 0;
    for (int i = 0; i < ds; ++i) {
      if (ev(i) > tol * top) ++rank;
    }
    Matrix iso(ds, rank);
    for (int c = 0; c < rank; ++c) iso.col(c) = es.eigenvectors().col(ds - 1 - c);
    sup.ranks[s] = rank;
    sup.isometries[s] = std::move(iso);
  }
  return sup;
}

/// Rewrites the state in its support bases; the returned dimensions are the
/// support ranks. Applying the isometries to the result reproduces the input.
inline TripartiteState compress(const TripartiteState& state, const LocalSupport& sup) {
  const auto& d = state.dims();
  const auto& r = sup.ranks;
  std::vector<Complex> out(static_cast<std::size_t>(r[0]) * r[1] * r[2], Complex{0.0});
  const Matrix& ua = sup.isometries[0];
  const Matrix& ub = sup.isometries[1];
  const Matrix& uc = sup.isometries[2];
  for (int p = 0; p < r[0]; ++p) {
    for (int q = 0; q < r[1]; ++q) {
      for (int t = 0; t < r[2]; ++t) {
        Complex acc = 0.0;
        for (int i = 0; i < d[0]; ++i) {
          for (int j = 0; j < d[1]; ++j) {
            for (int k = 0; k < d[2]; ++k) {
              acc += std::conj(ua(i, p)) * std::conj(ub(j, q)) * std::conj(uc(k, t)) *
                     state.at(i, j, k);
            }
          }
        }
        out[(static_cast<std::size_t>(p) * r[1] + q) * r[2] + t] = acc;
      }
    }
  }
  return TripartiteState({r[0], r[1], r[2]}, std::move(out), state.label());
}

/// Embeds a compressed state back into ambient coordinates.
inline TripartiteState decompress(const TripartiteState& state, const LocalSupport& sup) {
  const Matrix& ua = sup.isometries[0];
  const Matrix& ub = sup.isometries[1];
  const Matrix& uc = sup.isometries[2];
  const int da = static_cast<int>(ua.rows());
  const int db = static_cast<int>(ub.rows());
  const int dc = static_cast<int>(uc.rows());
  const auto& r = state.dims();
  std::vector<Complex> out(static_cast<std::size_t>(da) * db * dc, Complex{0.0});
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) {
      for (int k = 0; k < dc; ++k) {
        Complex acc = 0.0;
        for (int p = 0; p < r[0]; ++p) {
          for (int q = 0; q < r[1]; ++q) {
            for (int t = 0; t < r[2]; ++t) {
              acc += ua(i, p) * ub(j, q) * uc(k, t) * state.at(p, q, t);
            }
          }
        }
        out[(static_cast<std::size_t>(i) * db + j) * dc + k] = acc;
      }
    }
  }
  return TripartiteState({da, db, dc}, std::move(out), state.label());
}

/// Applies A (x) B (x) C to the state.
inline TripartiteState apply_local(const TripartiteState& state, const Matrix& a,
                                   const Matrix& b, const Matrix& c) {
  const auto& d = state.dims();
  if (a.cols() != d[0] || b.cols() != d[1] || c.cols() != d[2]) {
    throw InvalidStateError("local operator shapes do not match the state");
  }
  const int pa = static_cast<int>(a.rows());
  const int pb = static_cast<int>(b.rows());
  const int pc = static_cast<int>(c.rows());
  std::vector<Complex> out(static_cast<std::size_t>(pa) * pb * pc, Complex{0.0});
  for (int k = 0; k < d[2]; ++k) {
    const Matrix sk = a * state.slice(k) * b.transpose();
    for (int m = 0; m < pc; ++m) {
      const Complex cf = c(m, k);
      if (cf == Complex{0.0}) continue;
      for (int p = 0; p < pa; ++p) {
        for (int q = 0; q < pb; ++q) {
          out[(static_cast<std::size_t>(p) * pb + q) * pc + m] += cf * sk(p, q);
        }
      }
    }
  }
  return TripartiteState({pa, pb, pc}, std::move(out), state.label());
}

/// Splits an (n,n,2) state against the computational qubit basis:
/// c_k is the norm of the k-th qubit slice and R_k that slice divided by
/// c_k. Refuses states whose qubit is not genuinely entangled with the rest.
inline RelativeDecomposition relative_decomposition(const TripartiteState& state) {
  const auto& d = state.dims();
  if (d[2] != 2 || d[0] != d[1]) {
    throw UnsupportedDimensionalityError(
        "unsupported dimensionality: relative decomposition needs dims (n,n,2)");
  }
  const Matrix s0 = state.slice(0);
  const Matrix s1 = state.slice(1);
  const double c0 = s0.norm();
  const double c1 = s1.norm();
  const double scale = state.norm();
  if (c0 <= kNormTol * scale || c1 <= kNormTol * scale) {
    throw QubitUnentangledError("qubit unentangled - bipartite or product state");
  }
  // Proportional slices mean a rank-1 qubit density.
  Matrix gram(2, 2);
  const Complex cross = (s0.adjoint() * s1).trace();
  gram << Complex{c0 * c0}, cross, std::conj(cross), Complex{c1 * c1};
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const auto& ev = es.eigenvalues();
  if (ev(0) <= kNormTol * ev(1)) {
    throw QubitUnentangledError("qubit unentangled - bipartite or product state");
  }
  RelativeDecomposition dec;
  dec.c0 = c0;
  dec.c1 = c1;
  dec.R0 = s0 / c0;
  dec.R1 = s1 / c1;
  dec.qubit_basis = Matrix2::Identity();
  return dec;
}

/// Rebuilds the tensor sum_k c_k |r_k>|k> from a relative decomposition.
inline TripartiteState assemble(const RelativeDecomposition& dec) {
  const int n = dec.n();
  std::vector<Complex> amps(static_cast<std::size_t>(n) * n * 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      amps[(static_cast<std::size_t>(i) * n + j) * 2 + 0] = dec.c0 * dec.R0(i, j);
      amps[(static_cast<std::size_t>(i) * n + j) * 2 + 1] = dec.c1 * dec.R1(i, j);
    }
  }
  return TripartiteState({n, n, 2}, std::move(amps));
}

}  // namespace triqent
