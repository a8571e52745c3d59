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
#include "triqent/io.hpp"
#include "triqent/tensor_state.hpp"

using namespace triqent;
using Catch::Approx;

namespace {

TripartiteState sparse_state(std::array<int, 3> dims,
                             std::vector<std::tuple<int, int, int, Complex>> entries) {
  std::vector<Complex> amps(static_cast<std::size_t>(dims[0]) * dims[1] * dims[2], Complex{0.0});
  for (auto& [i, j, k, a] : entries) {
    amps[(static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k] = a;
  }
  return TripartiteState(dims, std::move(amps));
}

}  // namespace

TEST_CASE("state construction validates its invariants") {
  CHECK_THROWS_AS(TripartiteState({2, 2, 2}, std::vector<Complex>(8, Complex{0.0})),
                  InvalidStateError);
  CHECK_THROWS_AS(TripartiteState({2, 2, 2}, std::vector<Complex>(7, Complex{1.0})),
                  InvalidStateError);
  std::vector<Complex> nan(8, Complex{1.0});
  nan[3] = Complex{std::nan(""), 0.0};
  CHECK_THROWS_AS(TripartiteState({2, 2, 2}, nan), InvalidStateError);

  auto s = sparse_state({2, 2, 2}, {{0, 0, 0, 0.5}});
  CHECK(s.normalized().norm() == Approx(1.0));
  CHECK(std::abs(s.normalized().at(0, 0, 0)) == Approx(1.0));
}

TEST_CASE("loading the GHZ document") {
  const char* doc = R"({
    "dims": [2, 2, 2],
    "amplitudes": [
      {"index": [0, 0, 0], "re": 0.7071067811865476, "im": 0},
      {"index": [1, 1, 1], "re": 0.7071067811865476, "im": 0}
    ],
    "label": "ghz"
  })";
  auto s = state_from_json(parse_json(doc));
  CHECK(s.dims() == std::array<int, 3>{2, 2, 2});
  CHECK(s.label() == "ghz");
  CHECK(s.norm() == Approx(1.0));
  CHECK(fidelity(s, named("ghz").state) == Approx(1.0));
}

TEST_CASE("grouping five qubits reproduces the displayed (4,4,2) states") {
  // GHZ on qubits (0,1,2), Bell pair on (3,4), grouped ((0,3),(1,4),(2)).
  auto gb = named("ghz_bell").state;
  CHECK(gb.dims() == std::array<int, 3>{4, 4, 2});
  // 1/2 [ (|00,00> + |01,01>)|0> + (|10,10> + |11,11>)|1> ]
  CHECK(gb.at(0, 0, 0) == Complex{0.5});
  CHECK(gb.at(1, 1, 0) == Complex{0.5});
  CHECK(gb.at(2, 2, 1) == Complex{0.5});
  CHECK(gb.at(3, 3, 1) == Complex{0.5});
  CHECK(gb.norm() == Approx(1.0));

  auto wb = named("w_bell").state;
  const double w = 1.0 / std::sqrt(6.0);
  CHECK(wb.at(0, 0, 1).real() == Approx(w));
  CHECK(wb.at(1, 1, 1).real() == Approx(w));
  CHECK(wb.at(0, 2, 0).real() == Approx(w));
  CHECK(wb.at(1, 3, 0).real() == Approx(w));
  CHECK(wb.at(2, 0, 0).real() == Approx(w));
  CHECK(wb.at(3, 1, 0).real() == Approx(w));
}

TEST_CASE("grouping is an exact index permutation") {
  MultiFactorTensor multi;
  multi.factor_dims = {2, 2, 2};
  multi.amplitudes.assign(8, Complex{0.0});
  multi.amplitudes[0] = Complex{3.0, 0.0};  // deliberately unnormalized
  multi.amplitudes[7] = Complex{0.0, 4.0};

  SECTION("identity partition reshapes only") {
    auto s = group_subsystems(multi, {{{0}, {1}, {2}}});
    CHECK(s.at(0, 0, 0) == Complex{3.0, 0.0});
    CHECK(s.at(1, 1, 1) == Complex{0.0, 4.0});
    CHECK(s.squared_norm() == Approx(25.0));
  }
  SECTION("pairing factors flattens mixed-radix, first member most significant") {
    MultiFactorTensor m2;
    m2.factor_dims = {2, 3, 2, 2};
    m2.amplitudes.assign(24, Complex{0.0});
    // factors (i0, i1, i2, i3) = (1, 2, 0, 1)
    m2.amplitudes[((1 * 3 + 2) * 2 + 0) * 2 + 1] = Complex{1.0};
    auto s = group_subsystems(m2, {{{0, 2}, {1}, {3}}});
    CHECK(s.dims() == std::array<int, 3>{4, 3, 2});
    // group (0,2): index = i0 * 2 + i2 = 2
    CHECK(s.at(2, 2, 1) == Complex{1.0});
    auto t = group_subsystems(m2, {{{2, 0}, {1}, {3}}});
    // reversed member order: index = i2 * 2 + i0 = 1
    CHECK(t.at(1, 2, 1) == Complex{1.0});
  }
  SECTION("partition validation") {
    CHECK_THROWS_AS(group_subsystems(multi, {{{0, 1}, {1}, {2}}}), InvalidStateError);
    CHECK_THROWS_AS(group_subsystems(multi, {{{0}, {1}, {}}}), InvalidStateError);
    CHECK_THROWS_AS(group_subsystems(multi, {{{0}, {1}, {3}}}), InvalidStateError);
  }
}

TEST_CASE("ground-state product grouping") {
  MultiFactorTensor multi;
  multi.factor_dims = {2, 2, 2, 2};
  multi.amplitudes.assign(16, Complex{0.0});
  multi.amplitudes[0] = Complex{1.0};
  auto s = group_subsystems(multi, {{{0, 1}, {2}, {3}}});
  CHECK(s.dims() == std::array<int, 3>{4, 2, 2});
  CHECK(s.at(0, 0, 0) == Complex{1.0});
  CHECK(s.squared_norm() == Approx(1.0));
}

TEST_CASE("reduced densities of the known states") {
  auto ghz = named("ghz").state;
  Matrix rho_c = reduced_density(ghz, Subsystem::C);
  CHECK(rho_c(0, 0).real() == Approx(0.5));
  CHECK(rho_c(1, 1).real() == Approx(0.5));
  CHECK(std::abs(rho_c(0, 1)) == Approx(0.0).margin(1e-14));

  auto ground = sparse_state({2, 2, 2}, {{0, 0, 0, 1.0}});
  for (auto s : {Subsystem::A, Subsystem::B, Subsystem::C}) {
    Matrix rho = reduced_density(ground, s);
    CHECK(rho(0, 0).real() == Approx(1.0));
    CHECK(rho(1, 1).real() == Approx(0.0).margin(1e-14));
  }

  // Tracing |001>+|010>+|100> over (a,b) leaves diag(2/3, 1/3) on the qubit.
  auto w = named("w").state;
  Matrix rho_w = reduced_density(w, Subsystem::C);
  CHECK(rho_w(0, 0).real() == Approx(2.0 / 3.0));
  CHECK(rho_w(1, 1).real() == Approx(1.0 / 3.0));
}

TEST_CASE("local supports at the default tolerance") {
  CHECK(local_supports(named("ghz").state, 1e-9).ranks == std::array<int, 3>{2, 2, 2});
  auto bell0 = sparse_state({2, 2, 2}, {{0, 0, 0, 1.0}, {1, 1, 0, 1.0}});
  CHECK(local_supports(bell0, 1e-9).ranks == std::array<int, 3>{2, 2, 1});
  CHECK(local_supports(named("psi_d3").state, 1e-9).ranks == std::array<int, 3>{3, 3, 2});
  CHECK(local_supports(named("ghz_bell").state, 1e-9).ranks == std::array<int, 3>{4, 4, 2});
  for (int s = 0; s < 3; ++s) {
    auto sup = local_supports(named("psi_e3").state, 1e-9);
    Matrix gram = sup.isometries[s].adjoint() * sup.isometries[s];
    CHECK((gram - Matrix::Identity(gram.rows(), gram.cols())).norm() < 1e-12);
  }
}

TEST_CASE("compression keeps the state and its spectra") {
  // GHZ embedded in (3,3,2) with the third levels unused
  auto padded = sparse_state({3, 3, 2}, {{0, 0, 0, 1.0}, {1, 1, 1, 1.0}}).normalized();
  auto sup = local_supports(padded, 1e-9);
  CHECK(sup.ranks == std::array<int, 3>{2, 2, 2});
  auto comp = compress(padded, sup);
  CHECK(comp.dims() == std::array<int, 3>{2, 2, 2});
  CHECK(fidelity(decompress(comp, sup), padded) == Approx(1.0));

  // nonzero spectra of the reduced densities are preserved
  for (auto s : {Subsystem::A, Subsystem::B, Subsystem::C}) {
    Eigen::SelfAdjointEigenSolver<Matrix> before(reduced_density(padded, s));
    Eigen::SelfAdjointEigenSolver<Matrix> after(reduced_density(comp, s));
    const auto& eb = before.eigenvalues();
    const auto& ea = after.eigenvalues();
    for (int i = 0; i < ea.size(); ++i) {
      CHECK(ea(ea.size() - 1 - i) == Approx(eb(eb.size() - 1 - i)).margin(1e-12));
    }
  }

  // full-support input stays put
  auto gb = named("ghz_bell").state;
  auto sup2 = local_supports(gb, 1e-9);
  CHECK(compress(gb, sup2).dims() == gb.dims());
}

TEST_CASE("relative decomposition of GHZ and W") {
  auto ghz = relative_decomposition(named("ghz").state);
  CHECK(ghz.c0 == Approx(1.0 / std::sqrt(2.0)));
  CHECK(ghz.c1 == Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(ghz.R0(0, 0) - Complex{1.0}) < 1e-14);
  CHECK(std::abs(ghz.R1(1, 1) - Complex{1.0}) < 1e-14);
  CHECK(ghz.R0.norm() == Approx(1.0));
  CHECK(ghz.R1.norm() == Approx(1.0));

  auto w = relative_decomposition(named("w").state);
  CHECK(w.c0 == Approx(std::sqrt(2.0 / 3.0)));
  CHECK(w.c1 == Approx(1.0 / std::sqrt(3.0)));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(w.R0(0, 1) - Complex{r}) < 1e-14);
  CHECK(std::abs(w.R0(1, 0) - Complex{r}) < 1e-14);
  CHECK(std::abs(w.R1(0, 0) - Complex{1.0}) < 1e-14);
}

TEST_CASE("relative decomposition refuses unentangled qubits") {
  // (|00> + |11>) (x) (|0> + |1>): both slices proportional
  auto s = sparse_state({2, 2, 2},
                        {{0, 0, 0, 0.5}, {0, 0, 1, 0.5}, {1, 1, 0, 0.5}, {1, 1, 1, 0.5}});
  CHECK_THROWS_AS(relative_decomposition(s), QubitUnentangledError);
  auto rect = sparse_state({3, 2, 2}, {{0, 0, 0, 1.0}, {1, 1, 1, 1.0}});
  CHECK_THROWS_AS(relative_decomposition(rect), UnsupportedDimensionalityError);
}

TEST_CASE("relative decomposition round trip on seeded random states") {
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      auto state = random_full_support_state(n, 100 * n + trial);
      auto dec = relative_decomposition(state);
      CHECK(fidelity(assemble(dec), state) >= 1.0 - 1e-9);
      Matrix rho = reduced_density(state, Subsystem::A);
      CHECK(std::abs(rho.trace() - Complex{1.0}) < 1e-9);
    }
  }
}

TEST_CASE("apply_local with identities is the identity") {
  auto s = named("psi_e3").state;
  auto t = apply_local(s, Matrix::Identity(3, 3), Matrix::Identity(3, 3),
                       Matrix::Identity(2, 2));
  CHECK(fidelity(s, t) == Approx(1.0));
}
