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

#include <catch2/catch_amalgamated.hpp>

#include "triqent/catalog.hpp"
#include "triqent/decompose.hpp"

using namespace triqent;
using Catch::Approx;

TEST_CASE("degenerate plane states of the three-qubit classics") {
  SECTION("GHZ has two rank-1 plane states") {
    auto dec = relative_decomposition(named("ghz").state);
    auto degs = degenerate_states(analyze(dec), dec);
    REQUIRE(degs.size() == 2);
    for (const auto& d : degs) {
      CHECK(d.schmidt_rank == 1);
      CHECK(d.matrix.norm() == Approx(1.0));
      CHECK(d.degenerate);
    }
    // the matrices are proportional to E00 and E11
    bool e00 = false, e11 = false;
    for (const auto& d : degs) {
      if (std::abs(d.matrix(0, 0)) > 0.9) e00 = true;
      if (std::abs(d.matrix(1, 1)) > 0.9) e11 = true;
    }
    CHECK(e00);
    CHECK(e11);
  }
  SECTION("W has the single unentangled state |00>") {
    auto dec = relative_decomposition(named("w").state);
    auto degs = degenerate_states(analyze(dec), dec);
    REQUIRE(degs.size() == 1);
    CHECK(degs[0].schmidt_rank == 1);
    CHECK(std::abs(degs[0].matrix(0, 0)) == Approx(1.0));
  }
  SECTION("psi_e3 has three rank-2 plane states") {
    auto dec = relative_decomposition(named("psi_e3").state);
    auto degs = degenerate_states(analyze(dec), dec);
    REQUIRE(degs.size() == 3);
    for (const auto& d : degs) CHECK(d.schmidt_rank == 2);
  }
}

TEST_CASE("minimal term counts across the catalog") {
  for (const auto& entry : full_catalog()) {
    auto dec = min_decomposition(entry.state);
    INFO(entry.name);
    CHECK(dec.term_count == entry.expected_min_terms);
    CHECK(dec.term_count == static_cast<int>(dec.terms.size()));
    CHECK(dec.fidelity >= 1.0 - 1e-9);
    CHECK(fidelity(reconstruct(dec, entry.state.dims()), entry.state) >= 1.0 - 1e-9);
  }
}

TEST_CASE("product terms are gauge fixed and unit norm") {
  auto dec = min_decomposition(named("psi_d3").state);
  for (const auto& term : dec.terms) {
    CHECK(term.vec_a.norm() == Approx(1.0));
    CHECK(term.vec_b.norm() == Approx(1.0));
    CHECK(term.vec_c.norm() == Approx(1.0));
    CHECK(std::abs(term.weight) > 0.0);
    for (const Vector* v : {&term.vec_a, &term.vec_b, &term.vec_c}) {
      for (Eigen::Index i = 0; i < v->size(); ++i) {
        if (std::abs((*v)(i)) > 1e-9) {
          CHECK(std::abs(std::arg((*v)(i))) < 1e-12);
          break;
        }
      }
    }
  }
}

TEST_CASE("enumerating decompositions") {
  SECTION("psi_e3: three pairwise four-term expansions") {
    auto all = enumerate_decompositions(named("psi_e3").state, 0);
    REQUIRE(all.size() == 6);  // 3 pairs + 3 generic partners
    for (int i = 0; i < 3; ++i) CHECK(all[i].term_count == 4);
    for (int i = 3; i < 6; ++i) CHECK(all[i].term_count == 5);
    for (const auto& d : all) CHECK(d.fidelity >= 1.0 - 1e-9);
  }
  SECTION("W: exactly one decomposition at the minimum") {
    auto all = enumerate_decompositions(named("w").state, 0);
    REQUIRE(all.size() == 1);
    CHECK(all[0].term_count == 3);
    CHECK_FALSE(all[0].pair[1].degenerate);
  }
  SECTION("psi_h4(2): six pairwise decompositions from four eigenvalues") {
    auto all = enumerate_decompositions(named("psi_h4", Complex{2.0}).state, 0);
    REQUIRE(all.size() == 10);  // 6 pairs + 4 generic partners
    int six_terms = 0;
    for (const auto& d : all) six_terms += (d.term_count == 6);
    CHECK(six_terms == 6);
  }
  SECTION("limit truncates after sorting by term count") {
    auto limited = enumerate_decompositions(named("psi_e3").state, 2);
    REQUIRE(limited.size() == 2);
    CHECK(limited[0].term_count == 4);
    CHECK(limited[1].term_count == 4);
  }
}

TEST_CASE("every enumerated decomposition reconstructs its source") {
  for (const auto& entry : full_catalog()) {
    for (const auto& d : enumerate_decompositions(entry.state, 0)) {
      CHECK(fidelity(reconstruct(d, entry.state.dims()), entry.state) >= 1.0 - 1e-9);
      CHECK(d.term_count <= 2 * entry.expected_family.n);
    }
  }
}

TEST_CASE("random states respect the sub-Schmidt bound") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    auto state = random_full_support_state(n, 2400 + trial);
    auto dec = min_decomposition(state);
    CHECK(dec.term_count <= 2 * n);
    CHECK(dec.fidelity >= 1.0 - 1e-9);
    // a generic pencil has n distinct eigenvalues, so the minimum pairs two
    // rank-(n-1) states
    CHECK(dec.term_count == 2 * (n - 1));
  }
}

TEST_CASE("decomposition of a padded state lifts to ambient coordinates") {
  std::vector<Complex> amps(18, Complex{0.0});
  amps[(0 * 3 + 0) * 2 + 0] = 1.0;
  amps[(1 * 3 + 1) * 2 + 1] = 1.0;
  TripartiteState padded({3, 3, 2}, std::move(amps));
  auto dec = min_decomposition(padded);
  CHECK(dec.term_count == 2);
  CHECK(dec.terms[0].vec_a.size() == 3);
  CHECK(fidelity(reconstruct(dec, {3, 3, 2}), padded) >= 1.0 - 1e-9);
}

TEST_CASE("reconstruct of a single product term") {
  SubSchmidtDecomposition dec;
  ProductTerm term;
  term.weight = 1.0;
  term.vec_a = Vector::Unit(2, 0);
  term.vec_b = Vector::Unit(2, 0);
  term.vec_c = Vector::Unit(2, 0);
  dec.terms.push_back(term);
  dec.term_count = 1;
  auto s = reconstruct(dec, {2, 2, 2});
  CHECK(std::abs(s.at(0, 0, 0)) == Approx(1.0));
  CHECK_THROWS_AS(reconstruct(dec, {3, 3, 2}), InvalidStateError);
}

TEST_CASE("plane states at eigenvalue points are singular") {
  for (const auto& entry : full_catalog()) {
    auto dec = relative_decomposition(entry.state);
    auto an = analyze(dec);
    for (const auto& d : degenerate_states(an, dec)) {
      Eigen::JacobiSVD<Matrix> svd(d.matrix);
      const auto& sv = svd.singularValues();
      CHECK(sv(sv.size() - 1) <= 1e-8 * sv(0));
    }
  }
}

TEST_CASE("decomposition errors on unsupported inputs") {
  std::vector<Complex> amps(8, Complex{0.0});
  amps[0] = 1.0;
  TripartiteState product({2, 2, 2}, std::move(amps));
  CHECK_THROWS_AS(min_decomposition(product), QubitUnentangledError);

  std::vector<Complex> rect(12, Complex{0.0});
  rect[(0 * 2 + 0) * 2 + 0] = 1.0;
  rect[(1 * 2 + 1) * 2 + 0] = 1.0;
  rect[(2 * 2 + 0) * 2 + 1] = 1.0;
  rect[(2 * 2 + 1) * 2 + 1] = 1.0;
  TripartiteState odd({3, 2, 2}, std::move(rect));
  CHECK_THROWS_AS(min_decomposition(odd), UnsupportedDimensionalityError);
}
