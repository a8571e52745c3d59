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
#include "triqent/classify.hpp"

using namespace triqent;
using Catch::Approx;

TEST_CASE("every catalog entry matches its declared classification") {
  for (const auto& entry : full_catalog()) {
    INFO(entry.name);
    auto an = analyze(relative_decomposition(entry.state));
    CHECK(an.signature == entry.expected_family);
    CHECK(min_decomposition(entry.state).term_count == entry.expected_min_terms);
  }
}

TEST_CASE("example families are pairwise distinct") {
  const char* set3[] = {"psi_a", "psi_b", "psi_c3", "psi_d3", "psi_e3"};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      CHECK_FALSE(named(set3[i]).expected_family == named(set3[j]).expected_family);
    }
  }
  std::vector<CatalogEntry> set4;
  for (const char* n : {"ghz_bell", "w_bell", "psi_c4", "psi_d4", "psi_e4", "psi_f4", "psi_g4"}) {
    set4.push_back(named(n));
  }
  set4.push_back(named("psi_h4", Complex{2.0}));
  for (std::size_t i = 0; i < set4.size(); ++i) {
    for (std::size_t j = i + 1; j < set4.size(); ++j) {
      CHECK_FALSE(set4[i].expected_family == set4[j].expected_family);
    }
  }
}

TEST_CASE("catalog naming errors") {
  CHECK_THROWS_AS(named("nope"), InvalidStateError);
  CHECK_THROWS_AS(named("psi_h4"), InvalidStateError);
  CHECK_THROWS_AS(named("psi_h4", Complex{0.0}), InvalidStateError);
  CHECK_THROWS_AS(named("psi_h4", Complex{1.0}), InvalidStateError);
  CHECK_THROWS_AS(named("psi_h4", Complex{-1.0}), InvalidStateError);
  CHECK_NOTHROW(named("psi_h4", Complex{0.0, 1.0}));
}

TEST_CASE("general GHZ construction") {
  SECTION("computational bases at n = 2 give the GHZ state") {
    const double s2 = 1.0 / std::sqrt(2.0);
    std::vector<Vector> basis = {Vector::Unit(2, 0), Vector::Unit(2, 1)};
    auto s = general_ghz(2, {Complex{s2}, Complex{s2}}, basis, basis, basis);
    // (n,n,n) with n = 2 is the three-qubit space
    CHECK(s.dims() == std::array<int, 3>{2, 2, 2});
    CHECK(fidelity(s, named("ghz").state) == Approx(1.0));
  }
  SECTION("diagonal three-level construction") {
    std::vector<Vector> basis = {Vector::Unit(3, 0), Vector::Unit(3, 1), Vector::Unit(3, 2)};
    auto s = general_ghz(3, {Complex{1}, Complex{1}, Complex{1}}, basis, basis, basis);
    CHECK(s.dims() == std::array<int, 3>{3, 3, 3});
    CHECK(local_supports(s, 1e-9).ranks == std::array<int, 3>{3, 3, 3});
    CHECK(std::abs(s.at(0, 0, 0) - Complex{1.0 / std::sqrt(3.0)}) < 1e-12);
  }
  SECTION("oblique but independent bases are accepted") {
    std::vector<Vector> oblique(3);
    oblique[0] = Vector::Unit(3, 0);
    oblique[1] = (Vector::Unit(3, 0) + Vector::Unit(3, 1)).normalized();
    oblique[2] = (Vector::Unit(3, 1) + Vector::Unit(3, 2)).normalized();
    std::vector<Vector> basis = {Vector::Unit(3, 0), Vector::Unit(3, 1), Vector::Unit(3, 2)};
    CHECK_NOTHROW(general_ghz(3, {Complex{1}, Complex{2}, Complex{1}}, oblique, basis, basis));
  }
  SECTION("dependent vectors are rejected") {
    std::vector<Vector> dep = {Vector::Unit(3, 0), Vector::Unit(3, 1),
                               Vector::Unit(3, 0) + Vector::Unit(3, 1)};
    std::vector<Vector> basis = {Vector::Unit(3, 0), Vector::Unit(3, 1), Vector::Unit(3, 2)};
    CHECK_THROWS_AS(general_ghz(3, {Complex{1}, Complex{1}, Complex{1}}, dep, basis, basis),
                    InvalidStateError);
    CHECK_THROWS_AS(general_ghz(3, {Complex{1}, Complex{0}, Complex{1}}, basis, basis, basis),
                    InvalidStateError);
  }
}

TEST_CASE("random images are deterministic and class preserving") {
  auto w = named("w");
  auto img1 = random_in_class(w, 7);
  auto img2 = random_in_class(w, 7);
  REQUIRE(img1.amplitudes().size() == img2.amplitudes().size());
  for (std::size_t i = 0; i < img1.amplitudes().size(); ++i) {
    CHECK(img1.amplitudes()[i] == img2.amplitudes()[i]);
  }
  auto img3 = random_in_class(w, 8);
  CHECK(fidelity(img1, img3) < 1.0 - 1e-6);

  auto an = analyze(relative_decomposition(img1));
  CHECK(an.signature == w.expected_family);
  CHECK(min_decomposition(img1).term_count == w.expected_min_terms);
}

TEST_CASE("random images preserve class across the catalog") {
  for (const auto& entry : full_catalog()) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto img = random_in_class(entry, 1000 + seed);
      INFO(entry.name << " seed " << seed);
      auto rep = classify(img);
      REQUIRE(rep.analysis);
      CHECK(rep.analysis->signature == entry.expected_family);
      CHECK(*rep.min_terms == entry.expected_min_terms);
    }
  }
}

TEST_CASE("transcribed amplitudes of the displayed states") {
  auto d3 = named("psi_d3").state;
  const double r3 = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(d3.at(0, 0, 0) - Complex{r3}) < 1e-14);
  CHECK(std::abs(d3.at(1, 1, 1) - Complex{r3}) < 1e-14);
  CHECK(std::abs(d3.at(2, 2, 1) - Complex{r3}) < 1e-14);

  const Complex a{2.0, 1.0};
  auto h = named("psi_h4", a).state;
  const double nrm = 1.0 / std::sqrt(4.0 + 2.0 * std::norm(a));
  CHECK(std::abs(h.at(1, 1, 0) - Complex{nrm}) < 1e-14);
  CHECK(std::abs(h.at(2, 2, 0) - a * nrm) < 1e-14);
  CHECK(std::abs(h.at(1, 1, 1) - a * nrm) < 1e-14);
  CHECK(std::abs(h.at(3, 3, 1)) < 1e-14);
  CHECK(h.norm() == Approx(1.0));
}

TEST_CASE("synthetic representatives cover every family at n = 4") {
  for (const auto& sig : enumerate_families(4)) {
    auto entry = synthetic(sig);
    INFO(entry.name);
    auto an = analyze(relative_decomposition(entry.state));
    CHECK(an.signature == sig);
    CHECK(min_decomposition(entry.state).term_count == entry.expected_min_terms);
  }
}
