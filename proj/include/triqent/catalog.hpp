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

#include <optional>
#include <string>
#include <vector>

#include "triqent/pencil.hpp"
#include "triqent/slocc.hpp"
#include "triqent/tensor_state.hpp"

namespace triqent {

/// A named example state together with its known classification.
struct CatalogEntry {
  std::string name;
  TripartiteState state;
  JordanFamilySignature expected_family;
  int expected_min_terms = 0;
};

namespace detail {

struct Entry {
  int i, j, k;
  Complex amp;
};

inline TripartiteState build(std::array<int, 3> dims, const std::vector<Entry>& entries,
                             std::string label) {
  std::vector<Complex> amps(static_cast<std::size_t>(dims[0]) * dims[1] * dims[2], Complex{0.0});
  for (const auto& e : entries) {
    amps[(static_cast<std::size_t>(e.i) * dims[1] + e.j) * dims[2] + e.k] = e.amp;
  }
  return TripartiteState(dims, std::move(amps), std::move(label)).normalized();
}

inline JordanFamilySignature sig(int n, std::vector<std::vector<int>> blocks) {
  JordanFamilySignature s;
  for (auto& b : blocks) s.towers.push_back({std::move(b), {}});
  s.n = n;
  s.canonicalize();
  return s;
}

/// GHZ or W on qubits (0,1,2) tensored with a Bell pair on qubits (3,4),
/// regrouped as ((0,3),(1,4),(2)) into a (4,4,2) state.
inline TripartiteState five_qubit_grouped(bool ghz_core, std::string label) {
  MultiFactorTensor multi;
  multi.factor_dims = {2, 2, 2, 2, 2};
  multi.amplitudes.assign(32, Complex{0.0});
  auto at = [&](int q0, int q1, int q2, int q3, int q4) -> Complex& {
    return multi.amplitudes[(((q0 * 2 + q1) * 2 + q2) * 2 + q3) * 2 + q4];
  };
  if (ghz_core) {
    for (int p = 0; p < 2; ++p) {
      at(0, 0, 0, p, p) = 0.5;
      at(1, 1, 1, p, p) = 0.5;
    }
  } else {
    const double w = 1.0 / std::sqrt(6.0);
    for (int p = 0; p < 2; ++p) {
      at(0, 0, 1, p, p) = w;
      at(0, 1, 0, p, p) = w;
      at(1, 0, 0, p, p) = w;
    }
  }
  return group_subsystems(multi, {{std::vector<int>{0, 3}, {1, 4}, {2}}}, std::move(label));
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "ghz",      "w",       "psi_a",   "psi_b",   "psi_c3",  "psi_d3",  "psi_e3", "ghz_bell",
      "w_bell",   "psi_c4",  "psi_d4",  "psi_e4",  "psi_f4",  "psi_g4",  "psi_h4"};
  return names;
}

/// Constructs a named catalog state. psi_h4 takes the family parameter,
/// which must avoid 0 and +/-1 (at those values the four pencil eigenvalues
/// collide and the state leaves the family).
inline CatalogEntry named(const std::string& name, std::optional<Complex> param = std::nullopt) {
  using detail::build;
  using detail::sig;
  const double s2 = 1.0 / std::sqrt(2.0);

  if (name == "ghz") {
    return {name, build({2, 2, 2}, {{0, 0, 0, s2}, {1, 1, 1, s2}}, "ghz"), sig(2, {{1}, {1}}), 2};
  }
  if (name == "w") {
    const double w = 1.0 / std::sqrt(3.0);
    return {name, build({2, 2, 2}, {{0, 0, 1, w}, {0, 1, 0, w}, {1, 0, 0, w}}, "w"),
            sig(2, {{2}}), 3};
  }
  if (name == "psi_a") {
    const double a = 1.0 / std::sqrt(5.0);
    return {name,
            build({3, 3, 2},
                  {{1, 0, 0, a}, {2, 1, 0, a}, {0, 0, 1, a}, {1, 1, 1, a}, {2, 2, 1, a}},
                  "psi_a"),
            sig(3, {{3}}), 5};
  }
  if (name == "psi_b") {
    return {name,
            build({3, 3, 2},
                  {{2, 1, 0, 0.5}, {0, 0, 1, 0.5}, {1, 1, 1, 0.5}, {2, 2, 1, 0.5}}, "psi_b"),
            sig(3, {{2, 1}}), 4};
  }
  if (name == "psi_c3") {
    return {name,
            build({3, 3, 2},
                  {{0, 0, 0, 0.5}, {2, 1, 0, 0.5}, {1, 1, 1, 0.5}, {2, 2, 1, 0.5}}, "psi_c3"),
            sig(3, {{2}, {1}}), 4};
  }
  if (name == "psi_d3") {
    const double a = 1.0 / std::sqrt(3.0);
    return {name, build({3, 3, 2}, {{0, 0, 0, a}, {1, 1, 1, a}, {2, 2, 1, a}}, "psi_d3"),
            sig(3, {{1, 1}, {1}}), 3};
  }
  if (name == "psi_e3") {
    return {name,
            build({3, 3, 2},
                  {{0, 0, 0, 0.5}, {1, 1, 0, 0.5}, {1, 1, 1, 0.5}, {2, 2, 1, 0.5}}, "psi_e3"),
            sig(3, {{1}, {1}, {1}}), 4};
  }
  if (name == "ghz_bell") {
    return {name, detail::five_qubit_grouped(true, "ghz_bell"), sig(4, {{1, 1}, {1, 1}}), 4};
  }
  if (name == "w_bell") {
    return {name, detail::five_qubit_grouped(false, "w_bell"), sig(4, {{2, 2}}), 6};
  }
  if (name == "psi_c4") {
    const double a = 1.0 / std::sqrt(6.0);
    return {name,
            build({4, 4, 2},
                  {{2, 1, 1, a},
                   {3, 2, 1, a},
                   {0, 0, 0, a},
                   {1, 1, 0, a},
                   {2, 2, 0, a},
                   {3, 3, 0, a}},
                  "psi_c4"),
            sig(4, {{3, 1}}), 6};
  }
  if (name == "psi_d4") {
    const double a = 1.0 / std::sqrt(6.0);
    return {name,
            build({4, 4, 2},
                  {{1, 1, 0, a},
                   {2, 2, 0, a},
                   {3, 3, 0, a},
                   {0, 0, 1, a},
                   {2, 1, 1, a},
                   {3, 2, 1, a}},
                  "psi_d4"),
            sig(4, {{3}, {1}}), 6};
  }
  if (name == "psi_e4") {
    const double a = 1.0 / std::sqrt(6.0);
    return {name,
            build({4, 4, 2},
                  {{1, 0, 0, a},
                   {2, 2, 0, a},
                   {3, 3, 0, a},
                   {0, 0, 1, a},
                   {1, 1, 1, a},
                   {3, 2, 1, a}},
                  "psi_e4"),
            sig(4, {{2}, {2}}), 6};
  }
  if (name == "psi_f4") {
    const double a = 1.0 / std::sqrt(5.0);
    return {name,
            build({4, 4, 2},
                  {{1, 1, 0, a}, {2, 2, 0, a}, {3, 3, 0, a}, {0, 0, 1, a}, {2, 3, 1, a}},
                  "psi_f4"),
            sig(4, {{2, 1}, {1}}), 5};
  }
  if (name == "psi_g4") {
    const double a = 1.0 / std::sqrt(5.0);
    return {name,
            build({4, 4, 2},
                  {{2, 2, 0, a}, {3, 3, 0, a}, {1, 0, 0, a}, {0, 0, 1, a}, {1, 1, 1, a}},
                  "psi_g4"),
            sig(4, {{2}, {1, 1}}), 5};
  }
  if (name == "psi_h4") {
    if (!param) throw InvalidStateError("psi_h4 requires a family parameter");
    const Complex a = *param;
    if (std::abs(a) < 1e-6 || std::abs(a - 1.0) < 1e-6 || std::abs(a + 1.0) < 1e-6) {
      throw InvalidStateError(
          "invalid psi_h4 parameter: the four eigenvalues collide at a in {0, 1, -1}");
    }
    const double nrm = 1.0 / std::sqrt(4.0 + 2.0 * std::norm(a));
    return {name,
            build({4, 4, 2},
                  {{1, 1, 0, nrm},
                   {2, 2, 0, nrm * a},
                   {3, 3, 0, nrm},
                   {0, 0, 1, nrm},
                   {1, 1, 1, nrm * a},
                   {2, 2, 1, nrm}},
                  "psi_h4"),
            sig(4, {{1}, {1}, {1}, {1}}), 6};
  }
  throw InvalidStateError("unknown catalog state: " + name);
}

/// Generalized GHZ in n dimensions: sum_k d_k |a_k>|b_k>|c_k> over linearly
/// independent (not necessarily orthogonal) local bases.
inline TripartiteState general_ghz(int n, const std::vector<Complex>& coeffs,
                                   const std::vector<Vector>& bases_a,
                                   const std::vector<Vector>& bases_b,
                                   const std::vector<Vector>& bases_c) {
  if (static_cast<int>(coeffs.size()) != n || static_cast<int>(bases_a.size()) != n ||
      static_cast<int>(bases_b.size()) != n || static_cast<int>(bases_c.size()) != n) {
    throw InvalidStateError("general GHZ needs n coefficients and n vectors per subsystem");
  }
  for (const Complex& c : coeffs) {
    if (std::abs(c) == 0.0) throw InvalidStateError("general GHZ coefficients must be nonzero");
  }
  for (const auto* basis : {&bases_a, &bases_b, &bases_c}) {
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) {
      if ((*basis)[k].size() != n) {
        throw InvalidStateError("general GHZ basis vectors must have length n");
      }
      m.col(k) = (*basis)[k];
    }
    if (numerical_rank(m, 1e-9) != n) {
      throw InvalidStateError("general GHZ basis vectors are linearly dependent");
    }
  }
  std::vector<Complex> amps(static_cast<std::size_t>(n) * n * n, Complex{0.0});
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          amps[(static_cast<std::size_t>(i) * n + j) * n + l] +=
              coeffs[k] * bases_a[k](i) * bases_b[k](j) * bases_c[k](l);
        }
      }
    }
  }
  return TripartiteState({n, n, n}, std::move(amps), "general_ghz").normalized();
}

/// Random invertible operator with complex standard-normal entries,
/// resampled until the smallest singular value exceeds `sv_floor` times the
/// largest (at most 100 attempts).
inline Matrix random_invertible(int n, GaussianSource& rng, double sv_floor = 0.05) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix m = rng.matrix(n, n);
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > sv_floor * sv(0)) return m;
  }
  throw NumericalError("failed to sample a well-conditioned invertible operator");
}

/// Seeded random SLOCC image: applies invertible A (x) B (x) C with entries
/// from a fixed continuous distribution and returns the normalized image.
inline TripartiteState random_in_class(const CatalogEntry& entry, std::uint64_t seed) {
  GaussianSource rng(seed);
  const auto& d = entry.state.dims();
  const Matrix a = random_invertible(d[0], rng);
  const Matrix b = random_invertible(d[1], rng);
  const Matrix c = random_invertible(d[2], rng);
  return apply_local(entry.state, a, b, c)
      .normalized()
      .with_label(entry.name + " (SLOCC image)");
}

/// Seeded random state with full (n,n,2) local support.
inline TripartiteState random_full_support_state(int n, std::uint64_t seed) {
  GaussianSource rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Complex> amps(static_cast<std::size_t>(n) * n * 2);
    for (Complex& a : amps) a = rng.next();
    TripartiteState state =
        TripartiteState({n, n, 2}, std::move(amps), "random").normalized();
    const LocalSupport sup = local_supports(state, 1e-9);
    if (sup.ranks[0] == n && sup.ranks[1] == n && sup.ranks[2] == 2) return state;
  }
  throw NumericalError("failed to sample a full-support state");
}

/// Representative of an arbitrary family: R1 = identity, R0 = direct sum of
/// Jordan blocks with distinct integer eigenvalues in the signature's tower
/// order. Useful for families without a displayed example.
inline CatalogEntry synthetic(const JordanFamilySignature& signature) {
  const int n = signature.n;
  if (n < 2) throw InvalidStateError("synthetic representative needs n >= 2");
  Matrix m = Matrix::Zero(n, n);
  int offset = 0;
  double lambda = 1.0;
  for (const auto& tower : signature.towers) {
    for (int size : tower.blocks) {
      for (int r = 0; r < size; ++r) {
        m(offset + r, offset + r) = lambda;
        if (r + 1 < size) m(offset + r, offset + r + 1) = 1.0;
      }
      offset += size;
    }
    lambda += 1.0;
  }

  std::vector<Complex> amps(static_cast<std::size_t>(n) * n * 2, Complex{0.0});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      amps[(static_cast<std::size_t>(i) * n + j) * 2 + 0] = m(i, j);
      if (i == j) amps[(static_cast<std::size_t>(i) * n + j) * 2 + 1] = 1.0;
    }
  }
  CatalogEntry entry{"synthetic " + signature.to_string(),
                     TripartiteState({n, n, 2}, std::move(amps), "synthetic").normalized(),
                     signature, 0};

  // Minimal term count follows from the signature alone: the rank at an
  // eigenvalue point is n minus its block count.
  std::vector<int> ranks;
  for (const auto& tower : signature.towers) ranks.push_back(n - tower.block_count());
  if (ranks.size() == 1) {
    entry.expected_min_terms = ranks[0] + n;
  } else {
    std::sort(ranks.begin(), ranks.end());
    entry.expected_min_terms = ranks[0] + ranks[1];
  }
  return entry;
}

/// All catalog entries with fixed defaults (psi_h4 at a = 2).
inline std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> all;
  for (const auto& name : catalog_names()) {
    if (name == "psi_h4") {
      all.push_back(named(name, Complex{2.0}));
    } else {
      all.push_back(named(name));
    }
  }
  return all;
}

}  // namespace triqent
