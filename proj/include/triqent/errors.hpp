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

#include <stdexcept>
#include <string>

namespace triqent {

/// Base class for all triqent errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed documents, invalid arguments, inconsistent tensors.
struct InvalidStateError : Error {
  using Error::Error;
};

/// Inputs whose compressed dimensionality is not (n,n,2).
struct UnsupportedDimensionalityError : Error {
  using Error::Error;
};

/// The qubit factors out: the two slice matrices are proportional, so the
/// state is bipartite or product and has no pencil classification.
struct QubitUnentangledError : Error {
  using Error::Error;
};

/// Numerical failures: non-convergence, singular pencils, rank staircases
/// that do not close, certificate verification above tolerance.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace triqent
