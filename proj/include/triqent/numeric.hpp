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

#include <cmath>
#include <random>

#include "triqent/types.hpp"

namespace triqent {

/// Numerical rank at threshold `tol * max(largest singular value, floor_abs)`.
inline int numerical_rank(const Matrix& m, double tol, double floor_abs = 0.0) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(sv(0), floor_abs);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

/// 2-norm condition number; infinity when the smallest singular value is zero.
inline double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

/// Orthonormal basis of the numerical kernel of `m` (columns), using the
/// relative threshold `tol` with an optional absolute floor on the largest
/// singular value considered significant.
inline Matrix kernel_basis(const Matrix& m, double tol, double floor_abs = 0.0) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(sv.size() > 0 ? sv(0) : 0.0, floor_abs);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

/// Extends a column-orthonormal matrix to a full orthonormal basis and
/// returns the complementary columns.
inline Matrix orthonormal_complement(const Matrix& iso, int dim) {
  Matrix full = Matrix::Identity(dim, dim);
  Matrix work(dim, iso.cols() + dim);
  work.leftCols(iso.cols()) = iso;
  work.rightCols(dim) = full;
  Eigen::HouseholderQR<Matrix> qr(work);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  return q.rightCols(dim - iso.cols());
}

/// Squared-magnitude overlap |<x|y>|^2 / (|x|^2 |y|^2); 1 means equal rays.
inline double ray_fidelity(const Vector& x, const Vector& y) {
  const double nx = x.squaredNorm();
  const double ny = y.squaredNorm();
  if (nx <= 0.0 || ny <= 0.0) return 0.0;
  return std::norm(x.dot(y)) / (nx * ny);
}

/// Seeded complex standard-normal entries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  Complex next() {
    const double re = dist_(engine_);
    const double im = dist_(engine_);
    return {re, im};
  }

  Matrix matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = next();
    }
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> dist_{0.0, 1.0};
};

}  // namespace triqent
