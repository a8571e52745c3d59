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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "triqent/errors.hpp"

namespace triqent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

/// Numerical thresholds used throughout the pipeline. All values are
/// relative tolerances except where noted.
struct Tolerances {
  double rank = 1e-9;     ///< singular/eigenvalue cutoff, relative to the largest
  double cluster = 1e-6;  ///< eigenvalue cluster radius, relative to ||M||_F
  double recon = 1e-9;    ///< reconstruction fidelity slack (1 - fidelity)
  double cert = 1e-8;     ///< certificate verification residual
  double sys = 1e-8;      ///< null-space threshold of the eigenvalue-matching system

  void validate() const {
    for (double t : {rank, cluster, recon, cert, sys}) {
      if (!(t > 0.0 && t < 1.0)) {
        throw InvalidStateError("tolerances must be positive and < 1");
      }
    }
  }
};

/// Normalization slack for unit-norm checks.
inline constexpr double kNormTol = 1e-9;

/// Default seed for the seeded deterministic fallbacks.
inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

}  // namespace triqent
