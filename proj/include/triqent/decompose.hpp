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

#include <algorithm>
#include <optional>
#include <vector>

#include "triqent/pencil.hpp"
#include "triqent/tensor_state.hpp"

namespace triqent {

/// A state of the local-support plane, alpha0 R0 + alpha1 R1, normalized to
/// unit Frobenius norm. Degenerate plane states sit at the pencil's
/// eigenvalue points and have Schmidt rank below n; the generic partner has
/// full rank n.
struct PlaneState {
  ProjectiveEigenvalue point;
  bool degenerate = true;
  Matrix matrix;
  int schmidt_rank = 0;
};

/// One product term w * |a>|b>|c> with unit-norm vectors whose first
/// significant component is real positive.
struct ProductTerm {
  Complex weight{0.0};
  Vector vec_a;
  Vector vec_b;
  Vector vec_c;
};

/// Expansion of the state over two plane states, each written in its Schmidt
/// form; term_count is the sum of the two Schmidt ranks.
struct SubSchmidtDecomposition {
  std::vector<ProductTerm> terms;
  std::array<PlaneState, 2> pair;
  int term_count = 0;
  double fidelity = 0.0;
};

namespace detail {

inline Vector gauge_fixed(Vector v, Complex* phase_out) {
  Complex lead{1.0, 0.0};
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9) {
      lead = v(i) / std::abs(v(i));
      break;
    }
  }
  *phase_out = lead;
  return v / lead;
}

/// Deterministic grid on the projective line (a spherical spiral), used to
/// pick generic partners away from the degenerate points.
inline std::vector<ProjectiveEigenvalue> projective_grid(int count) {
  std::vector<ProjectiveEigenvalue> grid;
  grid.reserve(count);
  const double golden = 2.399963229728653;  // 2*pi*(1 - 1/phi)
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double theta = std::acos(std::clamp(z, -1.0, 1.0));
    const double phi = golden * i;
    grid.push_back(ProjectiveEigenvalue::make(
        Complex{std::cos(theta / 2.0)},
        std::polar(std::sin(theta / 2.0), phi)));
  }
  return grid;
}

}  // namespace detail

/// The plane state at a given projective point.
inline PlaneState plane_state_at(const ProjectiveEigenvalue& point,
                                 const RelativeDecomposition& dec, bool degenerate,
                                 const Tolerances& tol) {
  PlaneState ps;
  ps.point = point;
  ps.degenerate = degenerate;
  Matrix m = point.alpha0 * dec.R0 + point.alpha1 * dec.R1;
  const double nrm = m.norm();
  if (!(nrm > 0.0)) throw NumericalError("plane state vanished");
  ps.matrix = m / nrm;
  ps.schmidt_rank = numerical_rank(ps.matrix, tol.rank);
  return ps;
}

/// One plane state per pencil eigenvalue; the ranks obey the first-rank law
/// (n minus the number of Jordan blocks at that eigenvalue).
inline std::vector<PlaneState> degenerate_states(const PencilAnalysis& analysis,
                                                 const RelativeDecomposition& dec,
                                                 const Tolerances& tol = {}) {
  std::vector<PlaneState> out;
  out.reserve(analysis.eigenvalues.size());
  for (const auto& e : analysis.eigenvalues) {
    PlaneState ps = plane_state_at(e.point, dec, true, tol);
    const int expected = analysis.n - e.tower.block_count();
    if (ps.schmidt_rank != expected) {
      throw NumericalError("plane-state rank disagrees with the Jordan tower");
    }
    out.push_back(std::move(ps));
  }
  return out;
}

/// The deterministic full-rank partner: the grid point maximizing the least
/// chordal distance to every degenerate point.
inline PlaneState generic_partner(const std::vector<PlaneState>& degenerate,
                                  const RelativeDecomposition& dec, const Tolerances& tol) {
  const auto grid = detail::projective_grid(233);
  double best = -1.0;
  ProjectiveEigenvalue choice = grid[0];
  for (const auto& cand : grid) {
    double least = std::numeric_limits<double>::infinity();
    for (const auto& ds : degenerate) {
      least = std::min(least, chordal_distance(cand, ds.point));
    }
    if (least > best) {
      best = least;
      choice = cand;
    }
  }
  PlaneState ps = plane_state_at(choice, dec, false, tol);
  if (ps.schmidt_rank != dec.n()) {
    throw NumericalError("generic partner is rank deficient");
  }
  return ps;
}

namespace detail {

struct PreparedState {
  TripartiteState compressed;
  LocalSupport support;
  bool was_compressed = false;
  RelativeDecomposition dec;
  PencilAnalysis analysis;
};

/// Compresses to the local support, validates (n,n,2) dimensionality and
/// runs the pencil analysis. Throws the typed errors for product, bipartite
/// and unsupported inputs.
inline PreparedState prepare(const TripartiteState& state, const Tolerances& tol,
                             std::uint64_t seed) {
  LocalSupport sup = local_supports(state, tol.rank);
  const bool full = sup.ranks[0] == state.dims()[0] && sup.ranks[1] == state.dims()[1] &&
                    sup.ranks[2] == state.dims()[2];
  TripartiteState comp = full ? state : compress(state, sup);
  if (sup.ranks[2] < 2) {
    throw QubitUnentangledError("qubit unentangled - bipartite or product state");
  }
  if (sup.ranks[2] > 2 || sup.ranks[0] != sup.ranks[1]) {
    throw UnsupportedDimensionalityError(
        "unsupported dimensionality: compressed support is not (n,n,2)");
  }
  PreparedState prep{std::move(comp), std::move(sup), !full, {}, {}};
  prep.dec = relative_decomposition(prep.compressed);
  prep.analysis = analyze(prep.dec, tol, seed);
  return prep;
}

/// Expands the compressed state over a chosen pair of plane states and
/// Schmidt-decomposes each of them. Terms come back in the compressed frame.
inline SubSchmidtDecomposition expand_over_pair(const PreparedState& prep, const PlaneState& p1,
                                                const PlaneState& p2, const Tolerances& tol) {
  // Coefficients of (W1, W2) over (R0, R1); invert to express R_k in the pair.
  Matrix2 coeff;
  const double n1 = (p1.point.alpha0 * prep.dec.R0 + p1.point.alpha1 * prep.dec.R1).norm();
  const double n2 = (p2.point.alpha0 * prep.dec.R0 + p2.point.alpha1 * prep.dec.R1).norm();
  coeff << p1.point.alpha0 / n1, p1.point.alpha1 / n1, p2.point.alpha0 / n2,
      p2.point.alpha1 / n2;
  const Complex det = coeff(0, 0) * coeff(1, 1) - coeff(0, 1) * coeff(1, 0);
  if (std::abs(det) < 1e-12) {
    throw NumericalError("plane-state pair does not span the plane");
  }
  Matrix2 t;  // R_k = t(k,0) W1 + t(k,1) W2
  t << coeff(1, 1) / det, -coeff(0, 1) / det, -coeff(1, 0) / det, coeff(0, 0) / det;

  // Qubit cofactors: |psi> = |w1>|c1> + |w2>|c2>.
  std::array<Vector2, 2> cof;
  for (int s = 0; s < 2; ++s) {
    cof[s] = Vector2(prep.dec.c0 * t(0, s), prep.dec.c1 * t(1, s));
    if (cof[s].norm() <= 0.0) throw NumericalError("vanishing qubit cofactor");
  }

  SubSchmidtDecomposition out;
  out.pair = {p1, p2};
  const std::array<const PlaneState*, 2> planes = {&p1, &p2};
  for (int s = 0; s < 2; ++s) {
    Eigen::JacobiSVD<Matrix> svd(planes[s]->matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double cn = cof[s].norm();
    Vector qubit = cof[s] / cn;
    for (int r = 0; r < planes[s]->schmidt_rank; ++r) {
      ProductTerm term;
      Complex pa, pb, pc;
      term.vec_a = detail::gauge_fixed(svd.matrixU().col(r), &pa);
      term.vec_b = detail::gauge_fixed(svd.matrixV().col(r).conjugate(), &pb);
      term.vec_c = detail::gauge_fixed(qubit, &pc);
      term.weight = svd.singularValues()(r) * cn * pa * pb * pc;
      out.terms.push_back(std::move(term));
    }
  }
  out.term_count = static_cast<int>(out.terms.size());

  TripartiteState rebuilt = [&] {
    const auto& d = prep.compressed.dims();
    std::vector<Complex> amps(static_cast<std::size_t>(d[0]) * d[1] * d[2], Complex{0.0});
    for (const auto& term : out.terms) {
      for (int i = 0; i < d[0]; ++i) {
        for (int j = 0; j < d[1]; ++j) {
          for (int k = 0; k < d[2]; ++k) {
            amps[(static_cast<std::size_t>(i) * d[1] + j) * d[2] + k] +=
                term.weight * term.vec_a(i) * term.vec_b(j) * term.vec_c(k);
          }
        }
      }
    }
    return TripartiteState({d[0], d[1], d[2]}, std::move(amps));
  }();
  out.fidelity = fidelity(rebuilt, prep.compressed);
  if (out.fidelity < 1.0 - tol.recon) {
    throw NumericalError("sub-Schmidt expansion failed to reconstruct the state");
  }
  return out;
}

/// Lifts the term vectors through the support isometries so decompositions
/// reconstruct the caller's ambient state directly.
inline void lift_terms(SubSchmidtDecomposition& dec, const LocalSupport& sup) {
  for (auto& term : dec.terms) {
    Complex pa, pb, pc;
    term.vec_a = gauge_fixed(sup.isometries[0] * term.vec_a, &pa);
    term.vec_b = gauge_fixed(sup.isometries[1] * term.vec_b, &pb);
    term.vec_c = gauge_fixed(sup.isometries[2] * term.vec_c, &pc);
    term.weight *= pa * pb * pc;
  }
}

inline std::vector<SubSchmidtDecomposition> decompositions(const TripartiteState& state,
                                                           bool all, int limit,
                                                           const Tolerances& tol,
                                                           std::uint64_t seed) {
  PreparedState prep = prepare(state, tol, seed);
  const auto degs = degenerate_states(prep.analysis, prep.dec, tol);
  const int n = prep.dec.n();

  std::vector<std::pair<const PlaneState*, const PlaneState*>> pairs;
  std::optional<PlaneState> generic;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    for (std::size_t j = i + 1; j < degs.size(); ++j) pairs.emplace_back(&degs[i], &degs[j]);
  }
  if (all || degs.size() == 1) {
    generic = generic_partner(degs, prep.dec, tol);
    for (const auto& d : degs) pairs.emplace_back(&d, &*generic);
  }

  std::vector<SubSchmidtDecomposition> out;
  if (!all) {
    // minimal rank sum; ties resolved by enumeration order
    const std::pair<const PlaneState*, const PlaneState*>* best = nullptr;
    int best_sum = std::numeric_limits<int>::max();
    for (const auto& pr : pairs) {
      const int sum = pr.first->schmidt_rank + pr.second->schmidt_rank;
      if (sum < best_sum) {
        best_sum = sum;
        best = &pr;
      }
    }
    out.push_back(expand_over_pair(prep, *best->first, *best->second, tol));
  } else {
    for (const auto& pr : pairs) {
      out.push_back(expand_over_pair(prep, *pr.first, *pr.second, tol));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const SubSchmidtDecomposition& x, const SubSchmidtDecomposition& y) {
                       return x.term_count < y.term_count;
                     });
    if (limit > 0 && static_cast<int>(out.size()) > limit) out.resize(limit);
  }
  for (auto& d : out) {
    if (d.term_count > 2 * n) {
      throw NumericalError("sub-Schmidt bound violated");
    }
    if (prep.was_compressed) lift_terms(d, prep.support);
  }
  return out;
}

}  // namespace detail

/// Minimal sub-Schmidt decomposition: the pair of distinct plane states with
/// the smallest Schmidt-rank sum, or the single degenerate state paired with
/// the deterministic generic partner. Accepts any state whose compressed
/// dimensionality is (n,n,2); terms come back in the ambient coordinates.
inline SubSchmidtDecomposition min_decomposition(const TripartiteState& state,
                                                 const Tolerances& tol = {},
                                                 std::uint64_t seed = kDefaultSeed) {
  return detail::decompositions(state, /*all=*/false, 0, tol, seed)[0];
}

/// Every pairwise decomposition (m choose 2 of them) plus each degenerate
/// state paired with the generic partner, sorted by term count, truncated
/// to `limit` when positive.
inline std::vector<SubSchmidtDecomposition> enumerate_decompositions(
    const TripartiteState& state, int limit, const Tolerances& tol = {},
    std::uint64_t seed = kDefaultSeed) {
  if (limit < 0) throw InvalidStateError("limit must be nonnegative");
  return detail::decompositions(state, /*all=*/true, limit, tol, seed);
}

/// Dense tensor of the weighted product terms, normalized.
inline TripartiteState reconstruct(const SubSchmidtDecomposition& dec,
                                   const std::array<int, 3>& dims) {
  std::vector<Complex> amps(static_cast<std::size_t>(dims[0]) * dims[1] * dims[2],
                            Complex{0.0});
  for (const auto& term : dec.terms) {
    if (term.vec_a.size() != dims[0] || term.vec_b.size() != dims[1] ||
        term.vec_c.size() != dims[2]) {
      throw InvalidStateError("term vectors do not match the requested dimensions");
    }
    for (int i = 0; i < dims[0]; ++i) {
      for (int j = 0; j < dims[1]; ++j) {
        for (int k = 0; k < dims[2]; ++k) {
          amps[(static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k] +=
              term.weight * term.vec_a(i) * term.vec_b(j) * term.vec_c(k);
        }
      }
    }
  }
  return TripartiteState(dims, std::move(amps)).normalized();
}

}  // namespace triqent
