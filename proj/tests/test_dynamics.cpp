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

#include <cmath>

#include "doctest.h"
#include "ghzsim/dynamics.hpp"
#include "ghzsim/model.hpp"

using namespace ghzsim;

namespace {

// Two-level atom {g, e} with H = w |e><e| + o (|e><g| + h.c.) and decay g->e at rate gam.
LindbladModel two_level(double w, double o, double gam) {
  auto s = build_custom_space({"g", "e"});
  DenseMatrix h = DenseMatrix::Zero(2, 2);
  h(1, 1) = w;
  h(0, 1) = h(1, 0) = o;
  DenseMatrix c = DenseMatrix::Zero(2, 2);
  c(0, 1) = 1.0;
  std::vector<CollapseChannel> ch;
  if (gam > 0) ch.push_back({gam, SparseOperator::from_dense(s, c), "decay"});
  return LindbladModel(SparseOperator::from_dense(s, h).with_hint(true), ch);
}

DensityMatrix excited(const LindbladModel& m) {
  return DensityMatrix::pure(basis_ket(m.space_ptr(), 1));
}

NamedObservable pe() {
  return {"Pe", [](const DensityMatrix& r) { return r.matrix()(1, 1).real(); }};
}

}  // namespace

// The stiff propagator takes fixed steps (here clipped to the unit output
// spacing), so its tolerance reflects a 5th-order one-step error, not rtol.
TEST_CASE("spontaneous decay is exponential") {
  LindbladModel m = two_level(0.3, 0.0, 0.5);
  auto grid = linear_grid(0.0, 10.0, 11);
  for (bool stiff : {false, true}) {
    Trajectory t = stiff ? integrate_stiff(m, excited(m), grid, {pe()})
                         : integrate(m, excited(m), grid, {pe()});
    auto p = t.record("Pe");
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(p[i] == doctest::Approx(std::exp(-0.5 * grid[i])).epsilon(stiff ? 1e-5 : 1e-7));
  }
}

TEST_CASE("resonant Rabi oscillation") {
  LindbladModel m = two_level(0.0, 0.7, 0.0);
  auto grid = linear_grid(0.0, 20.0, 41);
  IntegratorControls c;
  c.rtol = 1e-10;
  c.atol = 1e-12;
  Trajectory t = integrate(m, excited(m), grid, {pe()}, c);
  auto p = t.record("Pe");
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(std::abs(p[i] - std::pow(std::cos(0.7 * grid[i]), 2)) < 1e-8);
  for (double tr : t.record(kTraceColumn)) CHECK(std::abs(tr - 1) < 1e-12);
}

TEST_CASE("driven damped two-level steady state") {
  const double o = 0.4, gam = 0.9;
  LindbladModel m = two_level(0.0, o, gam);
  // rho_ee = 4 o^2 / (gam^2 + 8 o^2) for H = o sigma_x
  const double exact = 4 * o * o / (gam * gam + 8 * o * o);
  SteadyStateResult d = steady_state_direct(m);
  SteadyStateResult k = steady_state_krylov(m);
  SteadyStateResult i = steady_state(m, excited(m));
  for (const auto* r : {&d, &k, &i}) {
    CHECK(r->state.matrix()(1, 1).real() == doctest::Approx(exact).epsilon(1e-7));
    CHECK(r->converged);
  }
  CHECK(residual_norm(m, d.state) < 1e-12);
  auto sv = generator_singular_values(m, 2);
  CHECK(sv(0) < 1e-12);
  CHECK(sv(1) > 1e-3);
}

TEST_CASE("rotating terms match the equivalent static frame") {
  // lab frame: w|e><e| + o(|e><g| + h.c.); interaction frame: o e^{iwt}|e><g| + h.c.
  const double w = 0.8, o = 0.05;
  LindbladModel lab = two_level(w, o, 0.1);
  auto s = lab.space_ptr();
  DenseMatrix eg = DenseMatrix::Zero(2, 2);
  eg(1, 0) = 1.0;
  TimeDependentHamiltonian h(SparseOperator::zero(s));
  h.add_term(SparseOperator::from_dense(s, eg), o, w);
  LindbladModel rot(h, lab.channels);
  CHECK(!rot.is_time_independent());
  auto grid = linear_grid(0.0, 40.0, 9);
  IntegratorControls c;
  c.rtol = 1e-10;
  c.atol = 1e-12;
  Trajectory a = integrate(lab, excited(lab), grid, {pe()}, c);
  Trajectory b = integrate(rot, excited(rot), grid, {pe()}, c);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(std::abs(a.rows()[i][0] - b.rows()[i][0]) < 1e-8);
}

TEST_CASE("generator application agrees with the dense superoperator") {
  LindbladModel m = two_level(0.3, 0.2, 0.4);
  DenseMatrix r(2, 2);
  r << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
  DensityMatrix rho(m.space_ptr(), r);
  DenseMatrix sup = dense_generator(m);
  DenseVector v = sup * Eigen::Map<const DenseVector>(r.data(), 4);
  DenseMatrix ref = Eigen::Map<DenseMatrix>(v.data(), 2, 2);
  CHECK((lindblad_rhs(m, rho, 0.0).matrix() - ref).norm() < 1e-14);
  CHECK(std::abs(lindblad_rhs(m, rho, 0.0).trace()) < 1e-15);
}

TEST_CASE("observables") {
  auto s = build_space(3, parse_levels("01"), std::nullopt);
  StateVector gm = named_state(s, "GHZ-"), gp = named_state(s, "GHZ+");
  DensityMatrix pure = DensityMatrix::pure(gm);
  CHECK(purity(pure) == doctest::Approx(1.0));
  CHECK(fidelity(gm, pure) == doctest::Approx(1.0));
  CHECK(fidelity(pure, pure) == doctest::Approx(1.0));
  CHECK(fidelity(gp, pure) < 1e-7);
  DensityMatrix mixed = fully_mixed_qubits(s);
  CHECK(purity(mixed) == doctest::Approx(0.125));
  CHECK(min_eigenvalue(mixed) == doctest::Approx(0.125));
  // Uhlmann fidelity with a pure target is sqrt(<psi|rho|psi>)
  CHECK(fidelity(pure, mixed) == doctest::Approx(std::sqrt(0.125)));
  DenseMatrix bad = mixed.matrix() * 2.0;
  CHECK_THROWS_AS(fidelity(gm, DensityMatrix(s, bad)), Error);
}

TEST_CASE("parity measurement and feedback") {
  auto s = build_space(3, parse_levels("01"), std::nullopt);
  DenseMatrix m = DenseMatrix::Zero(8, 8);
  m(s->index_of("000"), s->index_of("000")) = 7.0 / 8;
  m(s->index_of("111"), s->index_of("111")) = 1.0 / 8;
  DensityMatrix rho(s, m);
  StateVector gm = named_state(s, "GHZ-");
  CHECK(population(rho, gm) == doctest::Approx(0.5));
  ParityFeedback fb = parity_and_feedback(rho);
  // the incoherent mixture has no GHZ parity preference
  CHECK(std::abs(fb.parity) < 1e-15);
  // after conditional Z on atom 1 every GHZ+ component becomes GHZ-
  CHECK(population(fb.corrected, gm) == doctest::Approx(1.0));
  CHECK(fb.corrected.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("trajectory bookkeeping") {
  LindbladModel m = two_level(0.0, 0.3, 0.2);
  Trajectory t = integrate(m, excited(m), linear_grid(0, 5, 6), {pe()});
  CHECK(t.size() == 6);
  CHECK(t.has(kTraceColumn));
  CHECK(t.has(kMinEigColumn));
  CHECK(t.has(kHermColumn));
  CHECK(t.columns().front() == "Pe");
  CHECK(t.stats.accepted > 0);
  CHECK_THROWS_AS(t.record("nope"), Error);
  CHECK_THROWS_AS(linear_grid(1.0, 0.0, 3), Error);
  CHECK_THROWS_AS(integrate(m, excited(m), {1.0, 0.5}, {}), Error);
}
