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

#include "generator.hpp"
#include "sylvester.hpp"

namespace ghzsim {

Trajectory::Trajectory(std::vector<std::string> columns, DensityMatrix initial)
    : columns_(std::move(columns)), final_(std::move(initial)) {}

void Trajectory::append(double t, std::vector<double> values) {
  require(values.size() == columns_.size(), ErrorCode::DimensionMismatch,
          "trajectory row has the wrong number of values");
  require(times_.empty() || t > times_.back(), ErrorCode::InvalidArgument,
          "trajectory times must increase");
  times_.push_back(t);
  rows_.push_back(std::move(values));
}

bool Trajectory::has(const std::string& name) const {
  return std::find(columns_.begin(), columns_.end(), name) != columns_.end();
}

std::vector<double> Trajectory::record(const std::string& name) const {
  auto it = std::find(columns_.begin(), columns_.end(), name);
  require(it != columns_.end(), ErrorCode::InvalidArgument,
          "trajectory has no column '" + name + "'");
  const auto c = static_cast<std::size_t>(it - columns_.begin());
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[c]);
  return out;
}

std::vector<double> linear_grid(double t0, double t1, int n_points) {
  require(n_points >= 2 && t1 > t0, ErrorCode::InvalidArgument,
          "time grid needs at least two points and t1 > t0");
  std::vector<double> g(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i)
    g[static_cast<std::size_t>(i)] = t0 + (t1 - t0) * i / (n_points - 1);
  g.back() = t1;
  return g;
}

namespace {

std::vector<std::string> column_names(const std::vector<NamedObservable>& obs) {
  std::vector<std::string> cols;
  for (const auto& o : obs) cols.push_back(o.name);
  cols.emplace_back(kTraceColumn);
  cols.emplace_back(kMinEigColumn);
  cols.emplace_back(kHermColumn);
  return cols;
}

std::vector<double> sample(const DensityMatrix& rho,
                           const std::vector<NamedObservable>& obs) {
  std::vector<double> v;
  v.reserve(obs.size() + 3);
  for (const auto& o : obs) v.push_back(o.fn(rho));
  v.push_back(trace_real(rho));
  v.push_back(min_eigenvalue(rho));
  v.push_back(rho.hermiticity_error());
  return v;
}

void check_grid(const std::vector<double>& times) {
  require(times.size() >= 1, ErrorCode::InvalidArgument, "empty output grid");
  for (std::size_t i = 1; i < times.size(); ++i)
    require(times[i] > times[i - 1], ErrorCode::InvalidArgument,
            "output grid must be strictly increasing");
  for (double t : times)
    require(std::isfinite(t), ErrorCode::InvalidArgument,
            "output grid must be finite");
}

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

double error_norm(const DenseMatrix& err, const DenseMatrix& y0,
                  const DenseMatrix& y1, double rtol, double atol) {
  double acc = 0.0;
  const Index n = err.size();
  const Complex* e = err.data();
  const Complex* p = y0.data();
  const Complex* q = y1.data();
  for (Index i = 0; i < n; ++i) {
    double sc = atol + rtol * std::max(std::abs(p[i]), std::abs(q[i]));
    double r = std::abs(e[i]) / sc;
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(n));
}

}  // namespace

Trajectory integrate(const LindbladModel& model, const DensityMatrix& rho0,
                     const std::vector<double>& output_times,
                     const std::vector<NamedObservable>& observables,
                     const IntegratorControls& ctl) {
  check_same_space(model.space(), rho0.space(), "integrate");
  check_grid(output_times);
  require(ctl.rtol > 0 && ctl.atol > 0, ErrorCode::InvalidArgument,
          "integrator tolerances must be positive");

  detail::Generator gen(model);
  Trajectory traj(column_names(observables), rho0);
  DensityMatrix rho = rho0;
  double t = output_times.front();
  traj.append(t, sample(rho, observables));
  if (output_times.size() == 1) return traj;

  DenseMatrix& y = rho.matrix();
  DenseMatrix k1, k2, k3, k4, k5, k6, k7, ytmp, ynew, err;
  gen.apply(y, t, k1);
  ++traj.stats.rhs_evals;

  double h = ctl.initial_step;
  if (h <= 0.0) {
    double d0 = y.norm(), d1 = k1.norm();
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min(h, output_times[1] - t);
  }
  h = std::min(h, ctl.max_step);

  for (std::size_t next = 1; next < output_times.size(); ++next) {
    const double t_out = output_times[next];
    while (t < t_out) {
      bool last = false;
      const double h_try = h;
      if (t + h >= t_out || t_out - (t + h) < 1e-12 * std::abs(t_out)) {
        h = t_out - t;
        last = true;
      }
      ytmp = y + h * a21 * k1;
      gen.apply(ytmp, t + c2 * h, k2);
      ytmp = y + h * (a31 * k1 + a32 * k2);
      gen.apply(ytmp, t + c3 * h, k3);
      ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
      gen.apply(ytmp, t + c4 * h, k4);
      ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
      gen.apply(ytmp, t + c5 * h, k5);
      ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      gen.apply(ytmp, t + h, k6);
      ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      gen.apply(ynew, t + h, k7);
      traj.stats.rhs_evals += 6;
      err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      double en = error_norm(err, y, ynew, ctl.rtol, ctl.atol);

      if (en <= 1.0) {
        t = last ? t_out : t + h;
        y.swap(ynew);
        if (ctl.resymmetrize) {
          rho.symmetrize();
          gen.apply(y, t, k1);
          ++traj.stats.rhs_evals;
        } else {
          k1.swap(k7);
        }
        ++traj.stats.accepted;
        double fac = en == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
        // a step shortened to hit an output time says nothing about the scale
        h = (last && h_try > h) ? h_try : std::min(h * fac, ctl.max_step);
      } else {
        ++traj.stats.rejected;
        h *= std::max(0.2, 0.9 * std::pow(en, -0.25));
      }
      if (h < ctl.min_step)
        fail(ErrorCode::Numerical,
             "step size underflow at t=" + std::to_string(t) +
                 " (problem too stiff for the explicit integrator)");
      if (traj.stats.accepted + traj.stats.rejected > ctl.max_steps)
        fail(ErrorCode::Numerical, "maximum number of integrator steps exceeded");
    }
    traj.append(t_out, sample(rho, observables));
  }
  traj.set_final_state(rho);
  return traj;
}

namespace detail {

// R(z) = P2(z)/Q3(z), the (2,3) Pade approximant of exp(z), as a sum of
// simple fractions r_j / (z - p_j).
struct PadePoles {
  Complex real_pole, real_residue;
  Complex complex_pole, complex_residue;  // the conjugate pole is implied
};

PadePoles pade23() {
  // Q3 * (-60) = z^3 - 9 z^2 + 36 z - 60
  Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
  comp(0, 2) = 60.0;
  comp(1, 0) = 1.0;
  comp(1, 2) = -36.0;
  comp(2, 1) = 1.0;
  comp(2, 2) = 9.0;
  Eigen::EigenSolver<Eigen::Matrix3d> es(comp);
  auto p2 = [](Complex z) { return 1.0 + 0.4 * z + z * z / 20.0; };
  auto dq = [](Complex z) { return -0.6 + 0.3 * z - z * z / 20.0; };
  PadePoles out;
  for (int i = 0; i < 3; ++i) {
    Complex p = es.eigenvalues()(i);
    Complex r = p2(p) / dq(p);
    if (std::abs(p.imag()) < 1e-10) {
      out.real_pole = Complex(p.real(), 0.0);
      out.real_residue = Complex((p2(out.real_pole) / dq(out.real_pole)).real(), 0.0);
    } else if (p.imag() > 0) {
      out.complex_pole = p;
      out.complex_residue = r;
    }
  }
  return out;
}

}  // namespace detail

Trajectory integrate_stiff(const LindbladModel& model, const DensityMatrix& rho0,
                           const std::vector<double>& output_times,
                           const std::vector<NamedObservable>& observables,
                           const StiffControls& ctl) {
  check_same_space(model.space(), rho0.space(), "integrate_stiff");
  check_grid(output_times);
  require(model.is_time_independent(), ErrorCode::InvalidArgument,
          "the implicit propagator needs a time-independent model");
  require(ctl.max_step > 0, ErrorCode::InvalidArgument,
          "max_step must be positive");

  detail::Generator gen(model);
  detail::ShiftedLyapunov sylv(gen.dense_k());
  const detail::PadePoles poles = detail::pade23();

  Trajectory traj(column_names(observables), rho0);
  DensityMatrix rho = rho0;
  traj.append(output_times.front(), sample(rho, observables));

  DenseMatrix jump_out;
  auto shifted_solve = [&](const DenseMatrix& b, Complex s) {
    // (L - s) X = b with X = P_s Y and (L - s) P_s = I + J P_s
    detail::MatrixOperator op = [&](const DenseMatrix& y, DenseMatrix& out) {
      DenseMatrix x = sylv.solve(y, s);
      gen.apply_jumps(x, jump_out);
      out = y + jump_out;
    };
    detail::GmresResult g =
        detail::gmres(op, b, b, ctl.gmres_tol, ctl.gmres_max_iter, 60);
    if (!g.converged)
      fail(ErrorCode::Numerical,
           "shifted Krylov solve did not converge (relative residual " +
               std::to_string(g.relative_residual) + ")");
    traj.stats.linear_iterations += g.iterations;
    return sylv.solve(g.x, s);
  };

  for (std::size_t next = 1; next < output_times.size(); ++next) {
    const double span = output_times[next] - output_times[next - 1];
    const long n = std::max(1L, static_cast<long>(std::ceil(span / ctl.max_step - 1e-9)));
    const double h = span / static_cast<double>(n);
    for (long s = 0; s < n; ++s) {
      const DenseMatrix& y = rho.matrix();
      DenseMatrix xr = shifted_solve(y, poles.real_pole / h);
      DenseMatrix xc = shifted_solve(y, poles.complex_pole / h);
      DenseMatrix zc = (poles.complex_residue / h) * xc;
      DenseMatrix ynew = (poles.real_residue / h) * xr + zc + zc.adjoint();
      rho.matrix() = std::move(ynew);
      if (ctl.resymmetrize) rho.symmetrize();
      ++traj.stats.accepted;
    }
    traj.append(output_times[next], sample(rho, observables));
  }
  traj.set_final_state(rho);
  return traj;
}

}  // namespace ghzsim
