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

#include "triqent/catalog.hpp"
#include "triqent/decompose.hpp"
#include "triqent/io.hpp"
#include "triqent/pencil.hpp"
#include "triqent/tensor_state.hpp"

namespace triqent {

/// Classification outcome of a single state. Degenerate inputs come back as
/// one of the special classes instead of an error.
struct ClassifyReport {
  std::string cls;  // "GHZ", "W", family name, or a special class
  std::array<int, 3> dims{};
  std::array<int, 3> support{};
  std::optional<PencilAnalysis> analysis;
  std::optional<int> min_terms;
  std::string detail;
};

/// Runs supports, pencil analysis and the minimal decomposition. States
/// whose support is not (n,n,2) are reported as "product", "bipartite" or
/// "unsupported dimensionality".
inline ClassifyReport classify(const TripartiteState& state, const Tolerances& tol = {},
                               std::uint64_t seed = kDefaultSeed) {
  ClassifyReport rep;
  rep.dims = state.dims();
  const LocalSupport sup = local_supports(state, tol.rank);
  rep.support = sup.ranks;

  int unit_ranks = 0;
  for (int r : sup.ranks) unit_ranks += (r == 1);
  if (unit_ranks == 3) {
    rep.cls = "product";
    return rep;
  }
  if (unit_ranks > 0) {
    rep.cls = "bipartite";
    if (sup.ranks[2] == 1) rep.detail = "qubit unentangled";
    return rep;
  }
  if (sup.ranks[2] != 2 || sup.ranks[0] != sup.ranks[1]) {
    rep.cls = "unsupported dimensionality";
    return rep;
  }

  const TripartiteState comp =
      (sup.ranks == state.dims()) ? state : compress(state, sup);
  const RelativeDecomposition dec = relative_decomposition(comp);
  rep.analysis = analyze(dec, tol, seed);
  rep.min_terms = min_decomposition(comp, tol, seed).term_count;

  if (rep.analysis->n == 2) {
    rep.cls = rep.analysis->signature.towers.size() == 2 ? "GHZ" : "W";
  } else if (!rep.analysis->family_name.empty()) {
    rep.cls = rep.analysis->family_name;
  } else {
    // no letters assigned beyond n = 4; the signature itself is the class
    rep.cls = rep.analysis->signature.to_string();
  }
  return rep;
}

inline Json classify_report_to_json(const ClassifyReport& rep, const Tolerances& tol) {
  Json doc;
  doc["class"] = rep.cls;
  doc["dims"] = {rep.dims[0], rep.dims[1], rep.dims[2]};
  doc["support"] = {rep.support[0], rep.support[1], rep.support[2]};
  if (!rep.detail.empty()) doc["detail"] = rep.detail;
  if (rep.analysis) {
    const auto& an = *rep.analysis;
    doc["family"] = an.family_name;
    doc["signature"] = signature_to_json(an.signature, an.family_name);
    Json eigs = Json::array();
    for (const auto& e : an.eigenvalues) {
      Json je = detail::point_to_json(e.point);
      je["schmidt_rank"] = an.n - e.tower.block_count();
      je["tower"] = e.tower.blocks;
      je["staircase"] = e.tower.staircase;
      eigs.push_back(std::move(je));
    }
    doc["eigenvalues"] = std::move(eigs);
  }
  if (rep.min_terms) doc["min_terms"] = *rep.min_terms;
  doc["tolerances"] = tolerances_to_json(tol);
  return doc;
}

}  // namespace triqent
