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

#include "ghzsim/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "generator.hpp"
#include "sylvester.hpp"

namespace ghzsim {

namespace {

double max_population_change(const DenseMatrix& a, const DenseMatrix& b) {
  return (a.diagonal() - b.diagonal()).cwiseAbs().maxCoeff();
}

SteadyStateResult finish(const LindbladModel& model, DenseMatrix m,
                         double tol, double elapsed, int iterations) {
  m /= m.trace();
  DensityMatrix rho(model.space_ptr(), std::move(m));
  rho.symmetrize();
  SteadyStateResult r{rho, 0.0, elapsed, false, iterations};
  r.residual = residual_norm(model, rho);
  r.converged = r.residual <= tol;
  return r;
}

SteadyStateResult integrate_static(const LindbladModel& model,
                                   const DensityMatrix& rho0,
                                   const SteadyStateCriterion& c) {
  // The propagator is L-stable, so once transients are resolved the step
  // can grow geometrically: R(hL) tends to the projector onto ker L.
  SteadyStateResult res{rho0, 0.0, 0.0, false, 0};
  DensityMatrix rho = rho0;
  double t = 0.0, h = c.stiff.max_step;
  StiffControls sc = c.stiff;
  while (t < c.max_time) {
    double span = std::min(h, c.max_time - t);
    sc.max_step = std::max(span, c.stiff.max_step);
    Trajectory tr = integrate_stiff(model, rho, {0.0, span}, {}, sc);
    rho = tr.final_state();
    t += span;
    ++res.iterations;
    res.residual = residual_norm(model, rho);
    if (res.residual < c.residual_tol) {
      res.converged = true;
      break;
    }
    if (t > 10 * c.window) h = std::min(2.0 * h, c.max_time / 8);
  }
  res.state = rho;
  res.elapsed_time = t;
  return res;
}

SteadyStateResult integrate_explicit(const LindbladModel& model,
                                     const DensityMatrix& rho0,
                                     const SteadyStateCriterion& c) {
  SteadyStateResult res{rho0, 0.0, 0.0, false, 0};
  DensityMatrix rho = rho0;
  double t = 0.0;
  while (t < c.max_time) {
    const double span = std::min(c.window, c.max_time - t);
    Trajectory tr = integrate(model, rho, {t, t + span}, {}, c.controls);
    const double change =
        max_population_change(tr.final_state().matrix(), rho.matrix());
    rho = tr.final_state();
    t += span;
    ++res.iterations;
    res.residual = residual_norm(model, rho, t);
    if (res.residual < c.residual_tol || change < c.population_tol) {
      res.converged = true;
      break;
    }
  }
  res.state = rho;
  res.elapsed_time = t;
  return res;
}

}  // namespace

SteadyStateResult steady_state(const LindbladModel& model,
                               const DensityMatrix& rho0,
                               const SteadyStateCriterion& c) {
  check_same_space(model.space(), rho0.space(), "steady_state");
  require(!model.channels.empty(), ErrorCode::InvalidArgument,
          "steady state needs at least one collapse channel");
  switch (c.method) {
    case SteadyStateMethod::Direct:
      return steady_state_direct(model);
    case SteadyStateMethod::Krylov:
      return steady_state_krylov(model);
    case SteadyStateMethod::Integrate:
      break;
  }
  return model.is_time_independent() ? integrate_static(model, rho0, c)
                                     : integrate_explicit(model, rho0, c);
}

SteadyStateResult steady_state_direct(const LindbladModel& model) {
  require(model.is_time_independent(), ErrorCode::InvalidArgument,
          "direct steady state needs a time-independent model");
  const Index n = model.dimension();
  DenseMatrix sup = dense_generator(model);
  // Replace one equation by the trace condition.
  DenseVector rhs = DenseVector::Zero(n * n);
  sup.row(0).setZero();
  for (Index i = 0; i < n; ++i) sup(0, i * n + i) = 1.0;
  rhs(0) = 1.0;
  Eigen::PartialPivLU<DenseMatrix> lu(sup);
  DenseVector x = lu.solve(rhs);
  DenseMatrix m = Eigen::Map<DenseMatrix>(x.data(), n, n);
  return finish(model, std::move(m), 1e-8, 0.0, 0);
}

SteadyStateResult steady_state_krylov(const LindbladModel& model, double tol,
                                      int max_iter) {
  require(model.is_time_independent(), ErrorCode::InvalidArgument,
          "Krylov steady state needs a time-independent model");
  detail::Generator gen(model);
  detail::ShiftedLyapunov sylv(gen.dense_k());
  // Preconditioner (K+a) X + X (K+a)^dagger. a = 0 unless K has (nearly)
  // undamped states, e.g. exact dark states, where a small damping keeps the
  // preconditioned operator well conditioned.
  const double alpha =
      sylv.max_real_eigenvalue() > -1e-9 * sylv.scale() ? 1e-4 * sylv.scale() : 0.0;
  const Complex shift(-2 * alpha, 0.0);
  const Index n = model.dimension();
  const DenseMatrix v = DenseMatrix::Identity(n, n) / static_cast<double>(n);
  DenseMatrix lx;
  detail::MatrixOperator op = [&](const DenseMatrix& s, DenseMatrix& out) {
    DenseMatrix x = sylv.solve(s, shift);
    gen.apply_general(x, lx);
    out = lx + x.trace() * v;
  };
  detail::GmresResult g = detail::gmres(op, v, v, tol, max_iter, 100);
  DenseMatrix x = sylv.solve(g.x, shift);
  SteadyStateResult r = finish(model, std::move(x), 1e-8, 0.0, g.iterations);
  r.converged = r.converged && g.converged;
  return r;
}

Eigen::VectorXd generator_singular_values(const LindbladModel& model,
                                          int count) {
  DenseMatrix sup = dense_generator(model);
  Eigen::BDCSVD<DenseMatrix> svd(sup);
  Eigen::VectorXd s = svd.singularValues();  // descending
  const Index k = std::min<Index>(count, s.size());
  Eigen::VectorXd out(k);
  for (Index i = 0; i < k; ++i) out(i) = s(s.size() - 1 - i);
  return out;
}

}  // namespace ghzsim
