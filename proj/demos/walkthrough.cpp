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
//
// Walks a state through the whole pipeline: relative decomposition, pencil
// analysis, minimal sub-Schmidt decomposition and a SLOCC certificate.

#include <iostream>

#include "triqent/catalog.hpp"
#include "triqent/decompose.hpp"
#include "triqent/slocc.hpp"

using namespace triqent;

int main() {
  CatalogEntry w = named("w");
  std::cout << "state: " << w.name << ", dims (" << w.state.dims()[0] << ","
            << w.state.dims()[1] << "," << w.state.dims()[2] << ")\n";

  RelativeDecomposition dec = relative_decomposition(w.state);
  std::cout << "qubit weights c = (" << dec.c0 << ", " << dec.c1 << ")\n";

  PencilAnalysis an = analyze(dec);
  std::cout << "family: " << an.family_name << ", signature " << an.signature.to_string()
            << "\n";
  for (const auto& e : an.eigenvalues) {
    std::cout << "  eigenvalue point (" << e.point.alpha0 << " : " << e.point.alpha1
              << "), blocks";
    for (int b : e.tower.blocks) std::cout << " " << b;
    std::cout << "\n";
  }

  SubSchmidtDecomposition min = min_decomposition(w.state);
  std::cout << "minimal decomposition: " << min.term_count << " product terms, fidelity "
            << min.fidelity << "\n";

  TripartiteState image = random_in_class(w, 7);
  SloccDecision decision = equivalent(w.state, image);
  std::cout << "equivalent to its seeded local image: " << std::boolalpha
            << decision.equivalent << " (residual "
            << (decision.certificate ? decision.certificate->residual : 0.0) << ")\n";
  return 0;
}
