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
#include "ghzsim/model.hpp"

using namespace ghzsim;

namespace {

ModelParams zpump() {
  ModelParams p;
  p.omega = 0.02;
  p.delta = {-0.01, 0.02, -0.01};
  p.gamma_e = 0.1;
  p.kappa = 0.1;
  return p;
}

ModelParams rydberg() {
  ModelParams p = zpump();
  p.omega_r = 1.0;
  p.delta_cap = 58.0;
  p.u = {58.0, 58.0, 58.0};
  p.gamma_r = 0.144 / 50;
  return p;
}

}  // namespace

TEST_CASE("Hamiltonians are Hermitian") {
  auto s = build_space(3, parse_levels("01er"), 2);
  ModelParams p = rydberg();
  CHECK(build_hk(p, s).is_hermitian());
  CHECK(build_hr(p, s).is_hermitian());
  CHECK(build_stark_compensation(p, s).is_hermitian());
}

TEST_CASE("H_k conserves #1 + #e + n; the coupling alone conserves #e + n") {
  auto s = build_space(3, parse_levels("01e"), 2);
  ModelParams p = zpump();
  SparseOperator n_all = drive_excitation_number(s);
  SparseOperator n_cav = excitation_number(s);
  CHECK(commutator(build_hk(p, s), n_all).max_abs() < 1e-14);
  CHECK(commutator(build_hk_coupling(p, s), n_cav).max_abs() < 1e-14);
  // the Omega drive moves |1> <-> |e>, so #e + n alone is not conserved
  CHECK(commutator(build_hk(p, s), n_cav).max_abs() > 1e-3);
}

TEST_CASE("coupling matrix elements") {
  auto s = build_space(3, parse_levels("01e"), 2);
  ModelParams p = zpump();
  p.g = {1.0, 0.9, 0.8};
  SparseOperator h = build_hk(p, s);
  // g_2 |0e0,0><000,1| with a|1> = |0>
  CHECK(std::abs(h.coeff(s->index_of("0e0", 0), s->index_of("000", 1)) - 0.9) < 1e-15);
  CHECK(std::abs(h.coeff(s->index_of("00e", 1), s->index_of("000", 2)) -
                 0.8 * std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(h.coeff(s->index_of("e00"), s->index_of("100")) - 0.02) < 1e-15);
  CHECK(std::abs(h.coeff(s->index_of("010"), s->index_of("010")) - 0.02) < 1e-15);
}

TEST_CASE("Rydberg Hamiltonian diagonal includes detuning and pair shifts") {
  auto s = build_space(3, parse_levels("01er"), std::nullopt);
  ModelParams p = rydberg();
  p.u = {10.0, 20.0, 30.0};
  SparseOperator h = build_hr(p, s);
  CHECK(h.coeff(s->index_of("rrr"), s->index_of("rrr")).real() ==
        doctest::Approx(-3 * 58.0 + 60.0));
  CHECK(h.coeff(s->index_of("r0r"), s->index_of("r0r")).real() ==
        doctest::Approx(-2 * 58.0 + 20.0));
  CHECK(h.coeff(s->index_of("r00"), s->index_of("000")).real() == doctest::Approx(1.0));
  CHECK(h.coeff(s->index_of("r00"), s->index_of("100")).real() == doctest::Approx(1.0));
}

TEST_CASE("collapse channels") {
  auto s = build_space(3, parse_levels("01er"), 1);
  ModelParams p = rydberg();
  auto ch = build_collapse_channels(p, s);
  CHECK(ch.size() == 13);
  CHECK(ch.back().rate == doctest::Approx(p.kappa));
  CHECK(ch.front().rate == doctest::Approx(p.gamma_e / 2));
  p.kappa = 0;
  p.gamma_r = 0;
  CHECK(build_collapse_channels(p, s).size() == 6);
}

TEST_CASE("named states") {
  auto s = build_space(3, parse_levels("01e"), 1);
  auto st = named_states(s);
  for (const auto& [name, v] : st) CHECK_MESSAGE(v.norm() == doctest::Approx(1.0), name);
  CHECK(std::abs(st.at("GHZ+").inner(st.at("GHZ-"))) < 1e-15);
  // D_k are dark under the cavity coupling
  ModelParams p;
  SparseOperator hm = build_hk_coupling(p, s);
  for (int k = 1; k <= 5; ++k)
    CHECK((hm * st.at("D" + std::to_string(k))).norm() < 1e-14);
  CHECK(std::abs(st.at("+-+").inner(ket_from_labels(s, "010")).real() + 1 / std::sqrt(8.0)) < 1e-15);
  CHECK_THROWS_AS(named_state(s, "nope"), Error);
}

TEST_CASE("fully mixed qubit state") {
  auto s = build_space(3, parse_levels("01er"), 2);
  DensityMatrix r = fully_mixed_qubits(s);
  CHECK(r.trace().real() == doctest::Approx(1.0));
  CHECK(r.matrix()(s->index_of("101"), s->index_of("101")).real() == doctest::Approx(0.125));
  CHECK(r.matrix()(s->index_of("101", 1), s->index_of("101", 1)).real() == 0.0);
}

TEST_CASE("unit conversion and validation") {
  ModelParams p;
  p.units = Units::MHz2Pi;
  p.g = {50, 45, 40};
  p.omega = 0.5;
  p.kappa = 1.0;
  ModelParams q = p.to_g_units(50);
  CHECK(q.units == Units::GUnits);
  CHECK(q.g[1] == doctest::Approx(0.9));
  CHECK(q.kappa == doctest::Approx(0.02));
  CHECK_THROWS_AS(p.require_g_units("test"), Error);
  ModelParams bad;
  bad.gamma_e = -1;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("Rydberg shifts from geometry follow 1/r^3 with angular factor") {
  const std::vector<Vec3> pos = {{0, 0, 0}, {1, 0, 0}, {0, 2, 0}};
  auto sh = rydberg_u_from_geometry(1.0, pos, {0, 0, 1});
  REQUIRE(sh.size() == 3);
  CHECK(sh[0].u == doctest::Approx(1.0));
  CHECK(sh[1].u == doctest::Approx(1.0 / 8));
  // dipoles along the separation: 1 - 3 cos^2 = -2
  auto al = rydberg_u_from_geometry(1.0, {{0, 0, 0}, {0, 0, 1}}, {0, 0, 1});
  CHECK(al[0].u == doctest::Approx(-2.0));
}
