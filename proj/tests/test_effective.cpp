// Copyright 2026 The ghzsim Authors
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

#include "doctest.h"
#include "ghzsim/dynamics.hpp"
#include "ghzsim/effective.hpp"

using namespace ghzsim;

namespace {

ModelParams zpump() {
  ModelParams p;
  p.omega = 0.02;
  p.delta = {-0.01, 0.02, -0.01};
  p.gamma_e = 0.1;
  return p;
}

}  // namespace

TEST_CASE("H_g^ap spectrum on the one-excitation manifold") {
  auto s = build_space(3, parse_levels("01e"), 1);
  ModelParams p;
  ZenoDecomposition z = zeno_decompose(build_hg_ap(p, s), one_excitation_basis(s));
  REQUIRE(z.eigenvalues.size() == 3);
  CHECK(z.eigenvalues[0] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
  CHECK(std::abs(z.eigenvalues[1]) < 1e-12);
  CHECK(z.eigenvalues[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(z.dimensions == std::vector<int>{1, 5, 1});
  // projectors resolve the subspace identity and are idempotent
  DenseMatrix sum = DenseMatrix::Zero(s->dimension(), s->dimension());
  for (const auto& pr : z.projectors) {
    DenseMatrix d = pr.dense();
    CHECK((d * d - d).norm() < 1e-12);
    sum += d;
  }
  CHECK(sum.trace().real() == doctest::Approx(7.0));
}

TEST_CASE("Zeno decomposition of a scaled coupling scales eigenvalues") {
  auto s = build_space(3, parse_levels("01e"), 1);
  ModelParams p;
  p.g = {2.0, 2.0, 2.0};
  ZenoDecomposition z = zeno_decompose(build_hg_ap(p, s), one_excitation_basis(s));
  CHECK(z.eigenvalues.back() == doctest::Approx(2 * std::sqrt(3.0)));
}

TEST_CASE("Zeno decomposition rejects a non-invariant subspace") {
  auto s = build_space(3, parse_levels("01e"), 1);
  ModelParams p;
  std::vector<StateVector> sub = {ket_from_labels(s, "e00")};
  CHECK_THROWS_AS(zeno_decompose(build_hg_ap(p, s), sub), Error);
}

TEST_CASE("slow frame terms match the effective couplings") {
  ModelParams p = zpump();
  auto terms = drop_fast_terms(one_excitation_frame_terms(p), 1.0);
  CHECK(terms.size() == 5);
  for (const auto& t : terms) {
    CHECK(std::abs(t.frequency) < 0.03);
    CHECK(std::abs(t.amplitude) < 0.02);
  }
}

TEST_CASE("effective spaces") {
  EffectiveSpace a = effective_space(true), b = effective_space(false);
  CHECK(a.space->dimension() == 32);
  CHECK(b.space->dimension() == 13);
  CHECK(a.parent->dimension() == 64);
  DenseMatrix g = a.embedding.adjoint() * a.embedding;
  CHECK((g - DenseMatrix::Identity(32, 32)).norm() < 1e-12);
  CHECK(a.space->label(31) == "D5");
}

TEST_CASE("effective Z-pump model") {
  ModelParams p = zpump();
  EffectiveZPump z = build_effective_zpump(p);
  CHECK(z.hamiltonian.terms().size() == 11);
  CHECK(z.channels.size() == 16);
  CHECK(z.hamiltonian.at(3.7).is_hermitian());
  // |000> and |111> are dark: no coupling and no decay into other states
  const SpaceSpec& s = z.hamiltonian.space();
  for (const char* q : {"000", "111"}) {
    StateVector k = basis_ket(z.hamiltonian.space_ptr(), s.index_of_label(q));
    CHECK((z.hamiltonian.at(12.0) * k).norm() < 1e-15);
    for (const auto& c : z.channels) CHECK((c.op * k).norm() < 1e-15);
  }
  ModelParams bad = p;
  bad.delta = {0.01, 0.02, 0.01};
  CHECK_THROWS_AS(build_effective_zpump(bad), Error);
}

TEST_CASE("rotating and static frames give the same populations") {
  ModelParams p = zpump();
  p.omega_r = 1.0;
  p.delta_cap = 58.0;
  p.u = {58.0, 58.0, 58.0};
  p.gamma_r = 0.003;
  p.gamma_e = 0.06;
  LindbladModel rot = build_effective_full_model(p, EffectiveFrame::Rotating);
  LindbladModel st = build_effective_full_model(p, EffectiveFrame::Static);
  CHECK(st.is_time_independent());
  DensityMatrix r0 = DensityMatrix::pure(basis_ket(rot.space_ptr(), rot.space().index_of_label("011")));
  DensityMatrix s0 = DensityMatrix::pure(basis_ket(st.space_ptr(), st.space().index_of_label("011")));
  std::vector<NamedObservable> obs;
  for (const char* q : {"011", "101", "110", "000", "rrr"}) {
    Index i = rot.space().index_of_label(q);
    obs.push_back({q, [i](const DensityMatrix& r) { return r.matrix()(i, i).real(); }});
  }
  IntegratorControls c;
  c.rtol = 1e-10;
  c.atol = 1e-12;
  auto grid = linear_grid(0, 300, 7);
  Trajectory a = integrate(rot, r0, grid, obs, c), b = integrate(st, s0, grid, obs, c);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t k = 0; k < 5; ++k) CHECK(std::abs(a.rows()[i][k] - b.rows()[i][k]) < 1e-7);
}

TEST_CASE("adiabatic elimination") {
  AdiabaticResult r = adiabatic_eliminate(1.0, 58.0);
  CHECK(r.omega_eff == doctest::Approx(12 * std::sqrt(2.0) / (58.0 * 58.0)));
  CHECK(r.weak_drive);
  CHECK(!adiabatic_eliminate(1.0, 5.0).weak_drive);
  Eigen::Matrix4cd h = symmetric_hr_4x4(1.0, 58.0, 58.0);
  CHECK((h - h.adjoint()).norm() < 1e-15);
  // |+++> couples to the W-like state with sqrt(6) Omega_r
  CHECK(std::abs(h(1, 0)) == doctest::Approx(std::sqrt(6.0)));
  SymmetricAmplitudes s;
  s.c[0] = 1.0;
  SymmetricAmplitudes d = amplitude_rhs(s, 1.0, 58.0);
  CHECK(std::abs(d.c[1] + Complex(0, std::sqrt(6.0))) < 1e-14);
}

TEST_CASE("symmetric Rydberg kets map the 4x4 block onto the full H_r") {
  auto s = build_space(3, parse_levels("01r"), std::nullopt);
  ModelParams p;
  p.omega_r = 0.7;
  p.delta_cap = 20.0;
  p.u = {20.0, 20.0, 20.0};
  auto kets = symmetric_rydberg_kets(s);
  SparseOperator h = build_hr(p, s);
  Eigen::Matrix4cd ref = symmetric_hr_4x4(0.7, 20.0, 20.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(kets[i].inner(h * kets[j]) - ref(i, j)) < 1e-12);
}

TEST_CASE("Rydberg pump check recovers 2 Omega_eff") {
  RydbergPumpCheck c = rydberg_pump_check(0.01, 1.0);
  CHECK(c.frequency / (2 * c.omega_eff) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(c.max_norm_error < 1e-10);
}
