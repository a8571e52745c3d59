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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triqent/numeric.hpp"
#include "triqent/tensor_state.hpp"
#include "triqent/types.hpp"

namespace triqent {

/// Plane basis change |phi_0> = a|r_0> + b|r_1>, |phi_1> = c|r_0> + d|r_1>,
/// normalized so that ad - bc = 1. Acts on eigenvalues as the linear
/// fractional map z -> (az + b)/(cz + d).
struct MoebiusParams {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  Complex det() const { return a * d - b * c; }

  MoebiusParams unit_det() const {
    const Complex dt = det();
    if (std::abs(dt) == 0.0) throw NumericalError("degenerate Moebius parameters");
    const Complex s = std::sqrt(dt);
    return {a / s, b / s, c / s, d / s};
  }

  Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }

  static MoebiusParams identity() { return {}; }
};

/// Point on the projective line in homogeneous coordinates (alpha0 : alpha1),
/// normalized so max(|alpha0|, |alpha1|) = 1 and the first significant
/// coordinate is real positive. The combination alpha0 R0 + alpha1 R1 is the
/// plane state this point denotes; (0 : 1) is the combination along |r_1>.
struct ProjectiveEigenvalue {
  Complex alpha0{1.0};
  Complex alpha1{0.0};

  static ProjectiveEigenvalue make(Complex a0, Complex a1) {
    const double m = std::max(std::abs(a0), std::abs(a1));
    if (!(m > 0.0)) throw NumericalError("projective point has no nonzero coordinate");
    a0 /= m;
    a1 /= m;
    const Complex lead = std::abs(a0) > 1e-9 ? a0 : a1;
    const Complex phase = lead / std::abs(lead);
    return {a0 / phase, a1 / phase};
  }

  /// Affine eigenvalue lambda = -alpha1/alpha0; empty at the point (0:1).
  std::optional<Complex> affine() const {
    if (std::abs(alpha0) <= 1e-12) return std::nullopt;
    return -alpha1 / alpha0;
  }

  static ProjectiveEigenvalue from_affine(Complex lambda) {
    return make(Complex{1.0}, -lambda);
  }
};

/// Chordal distance on the projective line, in [0, 1].
inline double chordal_distance(const ProjectiveEigenvalue& p, const ProjectiveEigenvalue& q) {
  const double np = std::sqrt(std::norm(p.alpha0) + std::norm(p.alpha1));
  const double nq = std::sqrt(std::norm(q.alpha0) + std::norm(q.alpha1));
  return std::abs(p.alpha0 * q.alpha1 - p.alpha1 * q.alpha0) / (np * nq);
}

/// Jordan structure attached to one eigenvalue: block sizes in descending
/// order, plus the rank staircase rank((M - lambda)^k), k = 1..stationary.
struct JordanBlockTower {
  std::vector<int> blocks;
  std::vector<int> staircase;

  int total() const {
    int t = 0;
    for (int b : blocks) t += b;
    return t;
  }
  int block_count() const { return static_cast<int>(blocks.size()); }

  bool operator==(const JordanBlockTower& o) const { return blocks == o.blocks; }
};

/// Canonical order: larger towers first (total descending, then block lists
/// lexicographically descending).
inline bool tower_less(const JordanBlockTower& x, const JordanBlockTower& y) {
  if (x.total() != y.total()) return x.total() > y.total();
  return x.blocks > y.blocks;
}

/// Multiset of block towers with eigenvalue values anonymized; the
/// basis-invariant classification of an (n,n,2) state.
struct JordanFamilySignature {
  std::vector<JordanBlockTower> towers;  // canonically sorted
  int n = 0;

  void canonicalize() { std::sort(towers.begin(), towers.end(), tower_less); }

  bool operator==(const JordanFamilySignature& o) const {
    if (n != o.n || towers.size() != o.towers.size()) return false;
    for (std::size_t i = 0; i < towers.size(); ++i) {
      if (!(towers[i] == o.towers[i])) return false;
    }
    return true;
  }

  /// Single eigenvalue whose blocks are all trivial: the pencil is
  /// proportional to the identity and the qubit factors out.
  bool is_identity_family() const {
    if (towers.size() != 1) return false;
    for (int b : towers[0].blocks) {
      if (b != 1) return false;
    }
    return towers[0].block_count() == n;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t t = 0; t < towers.size(); ++t) {
      s += t ? ",[" : "[";
      for (std::size_t b = 0; b < towers[t].blocks.size(); ++b) {
        if (b) s += ",";
        s += std::to_string(towers[t].blocks[b]);
      }
      s += "]";
    }
    s += "}";
    return s;
  }
};

inline bool signature_less(const JordanFamilySignature& x, const JordanFamilySignature& y) {
  return std::lexicographical_compare(x.towers.begin(), x.towers.end(), y.towers.begin(),
                                      y.towers.end(), tower_less);
}

/// One eigenvalue of the pencil: its point in the original (R0, R1) frame,
/// the value in the regularized frame, and its Jordan tower.
struct PencilEigenvalue {
  ProjectiveEigenvalue point;
  Complex regularized{0.0};
  JordanBlockTower tower;
};

/// Full pencil analysis of a relative decomposition.
struct PencilAnalysis {
  int n = 0;
  std::vector<PencilEigenvalue> eigenvalues;
  JordanFamilySignature signature;
  MoebiusParams regularization;
  double regularized_condition = 0.0;
  std::string family_name;
};

namespace detail {

inline constexpr double kMachineEps = 2.220446049250313e-16;
inline constexpr double kDefectSafety = 64.0;
inline constexpr double kGoodCondition = 1e6;
inline constexpr double kMaxCondition = 1e12;

/// Merge radius for a candidate group of m computed eigenvalues. Defective
/// eigenvalues of an m-sized Jordan block scatter like eps^(1/m) under
/// rounding, so the radius has to grow with the group size.
inline double cluster_radius(int m, double scale, double tol_cluster) {
  const double defect = kDefectSafety * std::pow(kMachineEps, 1.0 / static_cast<double>(m));
  return scale * std::max(tol_cluster, defect);
}

struct EigenvalueCluster {
  Complex centroid;
  int multiplicity = 0;
};

inline JordanBlockTower rank_staircase(const Matrix& m, Complex lambda, int multiplicity,
                                       double tol_rank);

/// True when the kernel filtration of (M - lambda)^k reaches exactly the
/// candidate multiplicity. Distinguishes a rounding-split defective
/// eigenvalue (the staircase closes at the centroid) from genuinely distinct
/// eigenvalues (zero defect at the centroid).
inline bool staircase_closes(const Matrix& m, Complex centroid, int multiplicity,
                             double tol_rank) {
  try {
    rank_staircase(m, centroid, multiplicity, tol_rank);
    return true;
  } catch (const NumericalError&) {
    return false;
  }
}

/// Single-linkage connected components of `members` at the given radius.
inline std::vector<std::vector<int>> components_at(const std::vector<Complex>& ev,
                                                   const std::vector<int>& members,
                                                   double radius) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> used(members.size(), false);
  for (std::size_t s = 0; s < members.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp{members[s]};
    used[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t t = 0; t < members.size(); ++t) {
        if (used[t]) continue;
        if (std::abs(ev[comp[head]] - ev[members[t]]) <= radius) {
          used[t] = true;
          comp.push_back(members[t]);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Top-down clustering of the computed eigenvalues: connected components at
/// a size-aware radius are kept whole whenever the rank staircase closes at
/// their centroid, and split at shrinking radii otherwise. A rounding-split
/// defective eigenvalue closes at its centroid while genuinely distinct
/// eigenvalues have zero defect there, so this grouping is always consistent
/// with the block structure computed afterwards.
inline std::vector<EigenvalueCluster> cluster_eigenvalues(const Matrix& m,
                                                          const std::vector<Complex>& ev,
                                                          double scale, const Tolerances& tol) {
  const int n = static_cast<int>(ev.size());
  std::vector<EigenvalueCluster> out;

  auto refine = [&](auto&& self, const std::vector<int>& members, double radius) -> void {
    Complex mean = 0.0;
    for (int i : members) mean += ev[i];
    mean /= static_cast<double>(members.size());
    if (members.size() == 1 ||
        staircase_closes(m, mean, static_cast<int>(members.size()), tol.rank)) {
      out.push_back({mean, static_cast<int>(members.size())});
      return;
    }
    double r = radius / 2.0;
    std::vector<std::vector<int>> comps = components_at(ev, members, r);
    while (comps.size() == 1 && r > scale * 1e-18) {
      r /= 2.0;
      comps = components_at(ev, members, r);
    }
    if (comps.size() == 1) {
      // numerically coincident values that still refuse to close: keep them
      // separate and let the per-cluster staircase report the inconsistency
      for (int i : members) out.push_back({ev[i], 1});
      return;
    }
    for (const auto& c : comps) self(self, c, r);
  };

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const double start = cluster_radius(n, scale, tol.cluster);
  for (const auto& comp : components_at(ev, all, start)) refine(refine, comp, start);

  std::sort(out.begin(), out.end(), [](const EigenvalueCluster& x, const EigenvalueCluster& y) {
    if (x.centroid.real() != y.centroid.real()) return x.centroid.real() < y.centroid.real();
    return x.centroid.imag() < y.centroid.imag();
  });
  return out;
}

/// Rank staircase of (M - lambda)^k until it reaches the cluster
/// multiplicity, reconstructed into Jordan block sizes via the conjugate
/// partition. Ranks use the relative cutoff with an absolute floor tied to
/// the k-th power of the first-power scale, so fully collapsed powers do
/// not count rounding noise as rank.
inline JordanBlockTower rank_staircase(const Matrix& m, Complex lambda, int multiplicity,
                                       double tol_rank) {
  const int n = static_cast<int>(m.rows());
  const double scale = m.norm();
  const Matrix mh = scale > 0.0 ? Matrix(m / scale) : m;
  const Complex lh = scale > 0.0 ? lambda / scale : lambda;
  const Matrix shifted = mh - lh * Matrix::Identity(n, n);

  Eigen::JacobiSVD<Matrix> first(shifted);
  const double sigma1 = first.singularValues()(0);
  JordanBlockTower tower;
  if (sigma1 <= tol_rank) {
    // M is (numerically) lambda * I: all blocks are trivial.
    if (multiplicity != n) {
      throw NumericalError("eigenvalue cluster multiplicity inconsistent with identity pencil");
    }
    tower.blocks.assign(n, 1);
    tower.staircase.assign(1, 0);
    return tower;
  }

  std::vector<int> defect;  // dim ker (shifted^k)
  Matrix power = shifted;
  double floor_abs = sigma1;
  int d_prev = 0;
  for (int k = 1; k <= n; ++k) {
    Eigen::JacobiSVD<Matrix> svd(power);
    const auto& sv = svd.singularValues();
    const double cutoff = tol_rank * std::max(sv(0), floor_abs);
    int dk = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) <= cutoff) ++dk;
    }
    dk = std::clamp(dk, d_prev, multiplicity);
    if (k == 1 && dk == 0) {
      throw NumericalError("cluster centroid is not an eigenvalue at the rank tolerance");
    }
    if (dk == d_prev) {
      throw NumericalError("rank staircase stalled below the cluster multiplicity");
    }
    defect.push_back(dk);
    tower.staircase.push_back(n - dk);
    d_prev = dk;
    if (dk == multiplicity) break;
    power = power * shifted;
    floor_abs *= sigma1;
  }
  if (d_prev != multiplicity) {
    throw NumericalError("rank staircase did not close at the cluster multiplicity");
  }

  // blocks of size >= k: defect_k - defect_{k-1}
  const int height = static_cast<int>(defect.size());
  std::vector<int> at_least(height + 2, 0);
  for (int k = 1; k <= height; ++k) {
    at_least[k] = defect[k - 1] - (k >= 2 ? defect[k - 2] : 0);
  }
  for (int k = 1; k < height; ++k) {
    if (at_least[k] < at_least[k + 1]) {
      throw NumericalError("rank staircase is not a valid conjugate partition");
    }
  }
  for (int k = height; k >= 1; --k) {
    const int count = at_least[k] - at_least[k + 1];
    for (int c = 0; c < count; ++c) tower.blocks.push_back(k);
  }
  std::sort(tower.blocks.begin(), tower.blocks.end(), std::greater<int>());
  return tower;
}

}  // namespace detail

/// Result of choosing an invertible member of the pencil.
struct RegularizedPencil {
  Matrix phi0;
  Matrix phi1;
  MoebiusParams params;
  double condition = 0.0;
};

/// Picks plane-basis parameters (a,b,c,d), ad - bc = 1, such that
/// Phi1 = c R0 + d R1 is comfortably invertible. Candidates are tried in a
/// deterministic order: the identity, a fixed lattice of sixteen integer
/// parameter sets, then seeded random parameters. The first candidate whose
/// condition number is below 1e6 wins; otherwise the best one found is used
/// if it stays below 1e12.
inline RegularizedPencil regularize(const Matrix& r0, const Matrix& r1,
                                    std::uint64_t seed = kDefaultSeed) {
  if (r0.rows() != r0.cols() || r1.rows() != r1.cols() || r0.rows() != r1.rows()) {
    throw InvalidStateError("pencil matrices must be square and of equal size");
  }

  static const std::vector<std::array<double, 4>> lattice = {
      {1, 0, 0, 1},   {0, -1, 1, 0},  {1, 0, 1, 1},   {0, -1, 1, -1}, {1, 1, 1, 2},
      {1, 0, 2, 1},   {0, -1, 1, -2}, {1, -1, 2, -1}, {1, 2, 1, 3},   {1, 0, 3, 1},
      {0, -1, 1, -3}, {-1, 0, 3, -1}, {1, 1, 2, 3},   {2, 1, 3, 2},   {1, -2, 2, -3},
      {1, -1, 3, -2}, {1, 3, 1, 4}};

  RegularizedPencil best;
  best.condition = std::numeric_limits<double>::infinity();

  auto consider = [&](const MoebiusParams& p) {
    const Matrix phi1 = p.c * r0 + p.d * r1;
    const double cond = condition_number(phi1);
    if (cond < best.condition) {
      best.params = p;
      best.phi0 = p.a * r0 + p.b * r1;
      best.phi1 = phi1;
      best.condition = cond;
    }
    return cond <= detail::kGoodCondition;
  };

  for (const auto& l : lattice) {
    if (consider(MoebiusParams{Complex{l[0]}, Complex{l[1]}, Complex{l[2]}, Complex{l[3]}})) {
      return best;
    }
  }

  GaussianSource rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    MoebiusParams p{rng.next(), rng.next(), rng.next(), rng.next()};
    if (std::abs(p.det()) < 1e-6) continue;
    if (consider(p.unit_det())) return best;
  }

  if (best.condition <= detail::kMaxCondition) return best;
  throw NumericalError("singular pencil: no invertible combination of R0 and R1 found");
}

/// Eigenvalues of M = Phi1^{-1} Phi0 grouped into clusters, each with its
/// Jordan block tower computed from the rank staircase.
inline std::vector<std::pair<Complex, JordanBlockTower>> eigen_structure(
    const Matrix& phi0, const Matrix& phi1, const Tolerances& tol) {
  const int n = static_cast<int>(phi0.rows());
  const Matrix m = phi1.partialPivLu().solve(phi0);
  Eigen::ComplexEigenSolver<Matrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigenvalue iteration did not converge; cond(Phi1) = " +
                         std::to_string(condition_number(phi1)));
  }
  std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  const double scale = std::max(m.norm(), 1e-300);
  const auto clusters = detail::cluster_eigenvalues(m, ev, scale, tol);

  std::vector<std::pair<Complex, JordanBlockTower>> out;
  out.reserve(clusters.size());
  int total = 0;
  for (const auto& cl : clusters) {
    JordanBlockTower tower = detail::rank_staircase(m, cl.centroid, cl.multiplicity, tol.rank);
    total += tower.total();
    out.emplace_back(cl.centroid, std::move(tower));
  }
  if (total != n) {
    throw NumericalError("Jordan tower totals do not account for the whole spectrum");
  }
  return out;
}

/// Maps regularized-frame eigenvalues back to homogeneous points in the
/// (R0, R1) frame: the combination Phi0 - mu Phi1 equals
/// (a - mu c) R0 + (b - mu d) R1.
inline std::vector<ProjectiveEigenvalue> to_original_frame(const std::vector<Complex>& mus,
                                                           const MoebiusParams& params) {
  std::vector<ProjectiveEigenvalue> out;
  out.reserve(mus.size());
  for (const Complex& mu : mus) {
    out.push_back(ProjectiveEigenvalue::make(params.a - mu * params.c,
                                             params.b - mu * params.d));
  }
  return out;
}

long count_families(int n);
std::vector<JordanFamilySignature> enumerate_families(int n);
std::string family_name(const JordanFamilySignature& sig);

/// Full analysis: regularize, take the eigenvalue structure, map the
/// eigenvalues back to the original frame, and attach the anonymized
/// signature. Entries are sorted canonically (towers first, then points).
inline PencilAnalysis analyze(const RelativeDecomposition& dec, const Tolerances& tol = {},
                              std::uint64_t seed = kDefaultSeed) {
  PencilAnalysis an;
  an.n = dec.n();
  RegularizedPencil reg = regularize(dec.R0, dec.R1, seed);
  an.regularization = reg.params;
  an.regularized_condition = reg.condition;

  auto eig = eigen_structure(reg.phi0, reg.phi1, tol);
  for (auto& [mu, tower] : eig) {
    PencilEigenvalue entry;
    entry.regularized = mu;
    entry.point = to_original_frame({mu}, reg.params)[0];
    entry.tower = std::move(tower);
    an.eigenvalues.push_back(std::move(entry));
  }

  std::sort(an.eigenvalues.begin(), an.eigenvalues.end(),
            [](const PencilEigenvalue& x, const PencilEigenvalue& y) {
              if (!(x.tower == y.tower)) return tower_less(x.tower, y.tower);
              const auto kx = std::array<double, 4>{x.point.alpha0.real(), x.point.alpha0.imag(),
                                                    x.point.alpha1.real(), x.point.alpha1.imag()};
              const auto ky = std::array<double, 4>{y.point.alpha0.real(), y.point.alpha0.imag(),
                                                    y.point.alpha1.real(), y.point.alpha1.imag()};
              return kx < ky;
            });

  an.signature.n = an.n;
  for (const auto& e : an.eigenvalues) an.signature.towers.push_back(e.tower);
  an.signature.canonicalize();

  if (an.signature.is_identity_family()) {
    throw NumericalError(
        "pencil is numerically proportional to the identity; the qubit is effectively "
        "unentangled");
  }
  // Distinct eigenvalues must stay separated once mapped to the original frame.
  for (std::size_t i = 0; i < an.eigenvalues.size(); ++i) {
    for (std::size_t j = i + 1; j < an.eigenvalues.size(); ++j) {
      if (chordal_distance(an.eigenvalues[i].point, an.eigenvalues[j].point) <=
          0.01 * tol.cluster) {
        throw NumericalError("projective eigenvalues collapsed in the original frame");
      }
    }
  }
  an.family_name = family_name(an.signature);
  return an;
}

/// The same analysis with subsystems a and b interchanged (transposed
/// matrices). The signature always agrees with analyze(); the tests exercise
/// this rather than assume it.
inline PencilAnalysis transposed_analyze(const RelativeDecomposition& dec,
                                         const Tolerances& tol = {},
                                         std::uint64_t seed = kDefaultSeed) {
  RelativeDecomposition t = dec;
  t.R0 = dec.R0.transpose();
  t.R1 = dec.R1.transpose();
  return analyze(t, tol, seed);
}

namespace detail {

/// All integer partitions of k, each in descending order.
inline const std::vector<std::vector<int>>& partitions_of(int k) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> result;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      result.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, k, k);
  return cache.emplace(k, std::move(result)).first->second;
}

}  // namespace detail

/// All Jordan family signatures of pencil size n: multisets of block towers
/// whose totals sum to n, excluding the identity family, in canonical order.
inline std::vector<JordanFamilySignature> enumerate_families(int n) {
  if (n < 2) throw InvalidStateError("family enumeration needs n >= 2");

  // Pool of all candidate towers, canonically ordered.
  std::vector<JordanBlockTower> pool;
  for (int k = n; k >= 1; --k) {
    for (const auto& p : detail::partitions_of(k)) pool.push_back({p, {}});
  }
  std::sort(pool.begin(), pool.end(), tower_less);

  std::vector<JordanFamilySignature> out;
  std::vector<JordanBlockTower> acc;
  auto rec = [&](auto&& self, int remaining, std::size_t from) -> void {
    if (remaining == 0) {
      JordanFamilySignature sig;
      sig.towers = acc;
      sig.n = n;
      if (!sig.is_identity_family()) out.push_back(std::move(sig));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].total() > remaining) continue;
      acc.push_back(pool[i]);
      self(self, remaining - pool[i].total(), i);
      acc.pop_back();
    }
  };
  rec(rec, n, 0);
  std::sort(out.begin(), out.end(), signature_less);
  return out;
}

/// Number of Jordan families at pencil size n.
inline long count_families(int n) {
  return static_cast<long>(enumerate_families(n).size());
}

/// Family names matching the canonical example matrices for n <= 4; the
/// n = 4 signatures beyond the eight lettered ones get systematic names from
/// the enumeration order. Empty for n > 4.
inline std::string family_name(const JordanFamilySignature& sig) {
  const int n = sig.n;
  if (n < 2 || n > 4) return {};
  static const std::vector<std::pair<JordanFamilySignature, std::string>> named = [] {
    std::vector<std::pair<JordanFamilySignature, std::string>> v;
    auto add = [&](int nn, std::vector<std::vector<int>> blocks, std::string name) {
      JordanFamilySignature s;
      for (auto& b : blocks) s.towers.push_back({std::move(b), {}});
      s.canonicalize();
      s.n = nn;
      v.emplace_back(std::move(s), std::move(name));
    };
    add(2, {{2}}, "2x2x2-(a) / W");
    add(2, {{1}, {1}}, "2x2x2-(b) / GHZ");
    add(3, {{3}}, "3x3x2-(a)");
    add(3, {{2, 1}}, "3x3x2-(b)");
    add(3, {{2}, {1}}, "3x3x2-(c)");
    add(3, {{1, 1}, {1}}, "3x3x2-(d)");
    add(3, {{1}, {1}, {1}}, "3x3x2-(e)");
    add(4, {{1, 1}, {1, 1}}, "4x4x2-(a)");
    add(4, {{2, 2}}, "4x4x2-(b)");
    add(4, {{3, 1}}, "4x4x2-(c)");
    add(4, {{3}, {1}}, "4x4x2-(d)");
    add(4, {{2}, {2}}, "4x4x2-(e)");
    add(4, {{2, 1}, {1}}, "4x4x2-(f)");
    add(4, {{2}, {1, 1}}, "4x4x2-(g)");
    add(4, {{1}, {1}, {1}, {1}}, "4x4x2-(h)");
    return v;
  }();
  for (const auto& [s, name] : named) {
    if (s.n == n && s == sig) return name;
  }
  const auto families = enumerate_families(n);
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (families[i] == sig) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%dx%dx2-#%02zu", n, n, i + 1);
      return buf;
    }
  }
  return {};
}

}  // namespace triqent
