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
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "triqent/decompose.hpp"
#include "triqent/pencil.hpp"
#include "triqent/tensor_state.hpp"

namespace triqent {

/// Tower-respecting bijection between the eigenvalue lists of two analyses:
/// perm[l] is the index in the second list matched to entry l of the first.
struct Labelling {
  std::vector<int> perm;
};

/// Explicit invertible local operators witnessing SLOCC equivalence,
/// verified by application: A (x) B (x) C maps the first state onto the
/// second up to a global scalar, with 1 - fidelity <= residual.
struct SloccCertificate {
  Matrix A;
  Matrix B;
  Matrix2 C;
  MoebiusParams moebius;
  Labelling labelling;
  double residual = 0.0;
  double similarity_condition = 0.0;
};

/// Decision record of the equivalence test.
struct SloccDecision {
  bool equivalent = false;
  std::optional<SloccCertificate> certificate;
  std::string reason;
};

inline constexpr int kLabellingCap = 10000;

/// All tower-respecting bijections, in deterministic lexicographic order.
/// Empty iff the signatures differ. Errors out when the count exceeds `cap`.
inline std::vector<Labelling> signature_match(const PencilAnalysis& a, const PencilAnalysis& b,
                                              int cap = kLabellingCap) {
  if (!(a.signature == b.signature)) return {};
  const int L = static_cast<int>(a.eigenvalues.size());
  if (static_cast<int>(b.eigenvalues.size()) != L) return {};

  // Group the b-side indices by tower shape.
  std::vector<std::vector<int>> group_of_a(L);
  std::vector<std::vector<int>> b_pool;
  std::vector<std::vector<int>> a_members;
  for (int i = 0; i < L; ++i) {
    int g = -1;
    for (std::size_t k = 0; k < b_pool.size(); ++k) {
      if (a.eigenvalues[i].tower == b.eigenvalues[b_pool[k][0]].tower) {
        // pool keyed by tower shape; find via first member
        g = static_cast<int>(k);
        break;
      }
    }
    if (g < 0) {
      std::vector<int> members;
      for (int j = 0; j < L; ++j) {
        if (b.eigenvalues[j].tower == a.eigenvalues[i].tower) members.push_back(j);
      }
      if (members.empty()) return {};
      b_pool.push_back(std::move(members));
      a_members.emplace_back();
      g = static_cast<int>(b_pool.size()) - 1;
    }
    a_members[g].push_back(i);
  }
  long long count = 1;
  for (const auto& pool : b_pool) {
    for (int f = 2; f <= static_cast<int>(pool.size()); ++f) {
      count *= f;
      if (count > cap) {
        throw NumericalError("labelling search space exceeds the cap");
      }
    }
  }
  for (std::size_t g = 0; g < b_pool.size(); ++g) {
    if (a_members[g].size() != b_pool[g].size()) return {};
  }

  // Odometer over per-group permutations.
  std::vector<std::vector<int>> perms(b_pool.size());
  for (std::size_t g = 0; g < b_pool.size(); ++g) perms[g] = b_pool[g];
  std::vector<Labelling> out;
  while (true) {
    Labelling lab;
    lab.perm.assign(L, -1);
    for (std::size_t g = 0; g < b_pool.size(); ++g) {
      for (std::size_t k = 0; k < a_members[g].size(); ++k) {
        lab.perm[a_members[g][k]] = perms[g][k];
      }
    }
    out.push_back(std::move(lab));
    std::size_t g = 0;
    while (g < perms.size() && !std::next_permutation(perms[g].begin(), perms[g].end())) {
      ++g;  // wrapped back to sorted order; carry into the next group
    }
    if (g == perms.size()) break;
  }
  return out;
}

/// Solves the homogeneous eigenvalue-matching system: one equation per
/// matched pair of projective points (target p, source q),
///   p0 q1 a - p0 q0 b + p1 q1 c - p1 q0 d = 0,
/// the homogeneous form of  t s c + t d - s a - b = 0  for affine values
/// t = -p1/p0, s = -q1/q0. Returns parameters with determinant rescaled to 1
/// whenever the null space contains a member with nonzero determinant whose
/// pole (c:d) avoids every source point; empty otherwise.
inline std::optional<MoebiusParams> solve_moebius(const std::vector<ProjectiveEigenvalue>& target,
                                                  const std::vector<ProjectiveEigenvalue>& source,
                                                  const Labelling& labelling,
                                                  const Tolerances& tol = {}) {
  const int L = static_cast<int>(target.size());
  if (static_cast<int>(labelling.perm.size()) != L) {
    throw InvalidStateError("labelling does not match the eigenvalue count");
  }
  Matrix rows(L, 4);
  for (int l = 0; l < L; ++l) {
    const auto& p = target[l];
    const auto& q = source[labelling.perm[l]];
    Eigen::RowVector4cd row;
    row << p.alpha0 * q.alpha1, -p.alpha0 * q.alpha0, p.alpha1 * q.alpha1, -p.alpha1 * q.alpha0;
    rows.row(l) = row / row.norm();
  }

  Eigen::JacobiSVD<Matrix> svd(rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  std::vector<Vector> null_basis;
  for (int i = 0; i < 4; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= tol.sys * smax) null_basis.push_back(svd.matrixV().col(i));
  }
  if (null_basis.empty()) return std::nullopt;  // greatest nonvanishing minor has dimension 4

  std::vector<Vector> candidates;
  {
    // Closest null-space member to the identity parameters first.
    Vector id(4);
    id << 1.0, 0.0, 0.0, 1.0;
    Vector proj = Vector::Zero(4);
    for (const auto& nb : null_basis) proj += nb * nb.dot(id);
    if (proj.norm() > 1e-10) candidates.push_back(proj.normalized());
  }
  for (const auto& nb : null_basis) candidates.push_back(nb);
  for (std::size_t i = 0; i < null_basis.size(); ++i) {
    for (std::size_t j = i + 1; j < null_basis.size(); ++j) {
      candidates.push_back((null_basis[i] + null_basis[j]).normalized());
      candidates.push_back((null_basis[i] - null_basis[j]).normalized());
      candidates.push_back((null_basis[i] + Complex{0, 1} * null_basis[j]).normalized());
    }
  }

  for (const auto& v : candidates) {
    MoebiusParams p{v(0), v(1), v(2), v(3)};
    if (std::abs(p.det()) < 1e-8) continue;
    const auto pole = ProjectiveEigenvalue::make(p.c, p.d);
    bool pole_clear = true;
    for (const auto& q : source) {
      if (chordal_distance(pole, q) < 1e-8) {
        pole_clear = false;
        break;
      }
    }
    if (!pole_clear) continue;
    return p.unit_det();
  }
  return std::nullopt;
}

namespace detail {

/// Jordan chain basis of M for the given eigenvalue clusters, columns
/// grouped per eigenvalue, blocks by descending size, each block ordered
/// eigenvector first. M P = P J for the canonical J implied by the towers.
inline Matrix jordan_chain_basis(const Matrix& m,
                                 const std::vector<std::pair<Complex, JordanBlockTower>>& eigs,
                                 const Tolerances& tol) {
  const int n = static_cast<int>(m.rows());
  Matrix p(n, n);
  int col = 0;
  const double scale = std::max(m.norm(), 1e-300);

  for (const auto& [lambda, tower] : eigs) {
    const Matrix shifted = m - lambda * Matrix::Identity(n, n);
    const Matrix shifted_scaled = shifted / scale;
    const int height = tower.blocks.empty() ? 0 : tower.blocks.front();

    // Kernel filtration of the scaled powers.
    std::vector<Matrix> kernels(height + 1);
    kernels[0] = Matrix::Zero(n, 0);
    Matrix power = Matrix::Identity(n, n);
    double floor_abs = 1.0;
    Eigen::JacobiSVD<Matrix> s1(shifted_scaled);
    const double sigma1 = s1.singularValues()(0);
    for (int k = 1; k <= height; ++k) {
      power = power * shifted_scaled;
      floor_abs *= std::max(sigma1, 1e-300);
      Eigen::JacobiSVD<Matrix> svd(power, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      const double cutoff = tol.rank * std::max(sv(0), floor_abs);
      int rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
      }
      kernels[k] = svd.matrixV().rightCols(n - rank);
    }

    // blocks of size >= k
    std::vector<int> at_least(height + 2, 0);
    for (int b : tower.blocks) {
      for (int k = 1; k <= b; ++k) ++at_least[k];
    }

    // Chains, tallest first. carried[h] collects the height-h members of
    // chains already started above height h.
    std::vector<std::vector<Vector>> members_at(height + 2);
    std::vector<std::vector<Vector>> chains;
    for (int h = height; h >= 1; --h) {
      const int new_tops = at_least[h] - at_least[h + 1];
      if (new_tops == 0) continue;
      // Forbidden span: K_{h-1} plus the carried members at this height.
      Matrix forbidden(n, kernels[h - 1].cols() + members_at[h].size());
      forbidden.leftCols(kernels[h - 1].cols()) = kernels[h - 1];
      for (std::size_t i = 0; i < members_at[h].size(); ++i) {
        forbidden.col(kernels[h - 1].cols() + i) = members_at[h][i].normalized();
      }
      Eigen::HouseholderQR<Matrix> qr(forbidden);
      Matrix q = forbidden.cols() > 0
                     ? Matrix(qr.householderQ() * Matrix::Identity(n, forbidden.cols()))
                     : Matrix(n, 0);
      // Rank of `forbidden` equals its column count here (independent set).
      for (int t = 0; t < new_tops; ++t) {
        int pick = -1;
        double best = -1.0;
        Vector best_residual;
        for (Eigen::Index c = 0; c < kernels[h].cols(); ++c) {
          Vector cand = kernels[h].col(c);
          Vector res = cand - q * (q.adjoint() * cand);
          const double rn = res.norm();
          if (rn > best) {
            best = rn;
            pick = static_cast<int>(c);
            best_residual = std::move(res);
          }
        }
        if (pick < 0 || best < 1e-7) {
          throw NumericalError("Jordan chain construction failed: no independent chain top");
        }
        Vector top = best_residual / best;
        Matrix q2(n, q.cols() + 1);
        q2.leftCols(q.cols()) = q;
        q2.col(q.cols()) = top;
        q = std::move(q2);

        std::vector<Vector> chain(h);
        chain[h - 1] = top;
        for (int k = h - 1; k >= 1; --k) {
          chain[k - 1] = shifted * chain[k];
          members_at[k].push_back(chain[k - 1]);
        }
        const double base = chain[0].norm();
        if (base < 1e-12) {
          throw NumericalError("Jordan chain collapsed before reaching an eigenvector");
        }
        for (auto& v : chain) v /= base;
        chains.push_back(std::move(chain));
      }
    }

    // Emit blocks by descending size; chains were built tallest-first.
    std::stable_sort(chains.begin(), chains.end(),
                     [](const auto& x, const auto& y) { return x.size() > y.size(); });
    for (const auto& chain : chains) {
      for (const auto& v : chain) p.col(col++) = v;
    }
  }
  if (col != n) throw NumericalError("Jordan chain basis is incomplete");
  return p;
}

}  // namespace detail

/// Builds the certificate for a solved labelling. The first state's
/// regularized basis (Psi0, Psi1) plays the role of the reference frame; the
/// solved parameters give the matching frame (Phi'0, Phi'1) of the second
/// state. A similarity S between the two pencil matrices is assembled from
/// Jordan chain bases, and
///   A = Phi'1 S^{-1} Psi1^{-1},  B = S^T,  C = Gamma' Gamma^{-1}
/// maps the first state onto the second; the result is verified by applying
/// it, and rejected if the residual exceeds the certificate tolerance.
inline SloccCertificate build_certificate(const RelativeDecomposition& dec_a,
                                          const RelativeDecomposition& dec_b,
                                          const PencilAnalysis& an_a, const PencilAnalysis& an_b,
                                          const Labelling& labelling,
                                          const MoebiusParams& params,
                                          const Tolerances& tol = {}) {
  const int n = dec_a.n();
  if (dec_b.n() != n) throw InvalidStateError("certificate requires equal pencil sizes");
  if (!(an_a.signature == an_b.signature)) {
    throw InvalidStateError("certificate requires matching Jordan families");
  }

  const MoebiusParams& ga = an_a.regularization;
  const Matrix psi0 = ga.a * dec_a.R0 + ga.b * dec_a.R1;
  const Matrix psi1 = ga.c * dec_a.R0 + ga.d * dec_a.R1;
  const Matrix phi0 = params.a * dec_b.R0 + params.b * dec_b.R1;
  const Matrix phi1 = params.c * dec_b.R0 + params.d * dec_b.R1;
  if (condition_number(phi1) > detail::kMaxCondition) {
    throw NumericalError("matched plane basis is numerically singular");
  }

  const Matrix m_a = psi1.partialPivLu().solve(psi0);
  const Matrix m_b = phi1.partialPivLu().solve(phi0);

  // Eigen-structure of both matrices in the labelling's order. The first
  // state's clusters are already in the analysis; the second matrix's
  // clusters must line up with them value-by-value.
  std::vector<std::pair<Complex, JordanBlockTower>> eigs_a;
  for (const auto& e : an_a.eigenvalues) eigs_a.emplace_back(e.regularized, e.tower);

  auto eigs_b_raw = eigen_structure(phi0, phi1, tol);
  std::vector<std::pair<Complex, JordanBlockTower>> eigs_b;
  std::vector<bool> used(eigs_b_raw.size(), false);
  for (const auto& [mu, tower] : eigs_a) {
    int pick = -1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < eigs_b_raw.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(eigs_b_raw[i].first - mu);
      if (d < best) {
        best = d;
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0 || !(eigs_b_raw[pick].second == tower)) {
      throw NumericalError("matched pencil does not reproduce the Jordan structure");
    }
    used[pick] = true;
    eigs_b.push_back(eigs_b_raw[pick]);
  }

  const Matrix p_a = detail::jordan_chain_basis(m_a, eigs_a, tol);
  const Matrix p_b = detail::jordan_chain_basis(m_b, eigs_b, tol);
  const Matrix s = p_a * p_b.partialPivLu().inverse();
  const double cond_s = condition_number(s);

  const Matrix check = s.partialPivLu().solve(m_a) * s;
  if ((check - m_b).norm() > 1e-5 * std::max(1.0, m_b.norm())) {
    throw NumericalError("similarity construction failed to conjugate the pencils");
  }

  SloccCertificate cert;
  cert.A = phi1 * s.partialPivLu().solve(psi1.partialPivLu().inverse());
  cert.B = s.transpose();
  Matrix2 gamma, gamma_p;
  gamma << ga.d * dec_a.c0, -ga.b * dec_a.c0, -ga.c * dec_a.c1, ga.a * dec_a.c1;
  gamma_p << params.d * dec_b.c0, -params.b * dec_b.c0, -params.c * dec_b.c1,
      params.a * dec_b.c1;
  cert.C = gamma_p * gamma.inverse();
  cert.moebius = params;
  cert.labelling = labelling;
  cert.similarity_condition = cond_s;

  const TripartiteState lhs = apply_local(assemble(dec_a), cert.A, cert.B, cert.C);
  cert.residual = 1.0 - fidelity(lhs, assemble(dec_b));
  if (!(cert.residual <= tol.cert)) {
    throw NumericalError("certificate verification failed: residual " +
                         std::to_string(cert.residual));
  }
  for (const Matrix& op : {cert.A, cert.B, Matrix(cert.C)}) {
    Eigen::JacobiSVD<Matrix> svd(op);
    const auto& sv = svd.singularValues();
    if (!(sv(sv.size() - 1) > tol.rank * sv(0))) {
      throw NumericalError("certificate operator is numerically singular");
    }
  }
  return cert;
}

/// Decides SLOCC interconvertibility. True iff some tower-respecting
/// labelling admits Moebius parameters and a verified certificate.
inline SloccDecision equivalent(const TripartiteState& psi, const TripartiteState& psi_prime,
                                const Tolerances& tol = {}, std::uint64_t seed = kDefaultSeed) {
  const detail::PreparedState a = detail::prepare(psi, tol, seed);
  const detail::PreparedState b = detail::prepare(psi_prime, tol, seed);
  if (a.compressed.dims() != b.compressed.dims()) {
    return {false, std::nullopt, "different dimensionality"};
  }
  if (!(a.analysis.signature == b.analysis.signature)) {
    return {false, std::nullopt, "different Jordan family"};
  }

  // Match the first state's regularized eigenvalues against the second
  // state's original-frame points, so the solved parameters directly give a
  // plane basis of psi' whose pencil matrix reproduces the reference one.
  std::vector<ProjectiveEigenvalue> target;
  std::vector<ProjectiveEigenvalue> source;
  for (const auto& e : a.analysis.eigenvalues) {
    target.push_back(ProjectiveEigenvalue::from_affine(e.regularized));
  }
  for (const auto& e : b.analysis.eigenvalues) source.push_back(e.point);

  bool solvable = false;
  std::string failure;
  for (const Labelling& lab : signature_match(a.analysis, b.analysis)) {
    const auto params = solve_moebius(target, source, lab, tol);
    if (!params) continue;
    solvable = true;
    try {
      SloccCertificate cert =
          build_certificate(a.dec, b.dec, a.analysis, b.analysis, lab, *params, tol);
      return {true, std::move(cert), "SLOCC-equivalent"};
    } catch (const NumericalError& err) {
      failure = err.what();
    }
  }
  if (solvable) {
    throw NumericalError("certificate verification failed for every solvable labelling: " +
                         failure);
  }
  return {false, std::nullopt, "no Moebius solution - distinct SLOCC classes within family"};
}

}  // namespace triqent
