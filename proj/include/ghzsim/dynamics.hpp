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

#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ghzsim/hilbert.hpp"
#include "ghzsim/lindblad.hpp"

namespace ghzsim {

// -i[H(t), rho] + sum_k rate_k D[c_k] rho
DensityMatrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho,
                           double t);

struct NamedObservable {
  std::string name;
  std::function<double(const DensityMatrix&)> fn;
};

struct IntegratorControls {
  double rtol = 1e-8;
  double atol = 1e-10;
  double initial_step = 0.0;  // 0: pick automatically
  double max_step = std::numeric_limits<double>::infinity();
  double min_step = 1e-12;
  long max_steps = 50'000'000;
  bool resymmetrize = true;
};

// Controls for the implicit rational propagator (time-independent models).
struct StiffControls {
  double max_step = 50.0;
  double gmres_tol = 1e-11;
  int gmres_max_iter = 200;
  bool resymmetrize = true;
};

struct IntegrationStats {
  long accepted = 0;
  long rejected = 0;
  long rhs_evals = 0;
  long linear_iterations = 0;
};

class Trajectory {
 public:
  Trajectory(std::vector<std::string> columns, DensityMatrix initial);

  void append(double t, std::vector<double> values);

  const std::vector<double>& times() const { return times_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  std::vector<double> record(const std::string& name) const;
  bool has(const std::string& name) const;
  std::size_t size() const { return times_.size(); }

  const DensityMatrix& final_state() const { return final_; }
  void set_final_state(DensityMatrix rho) { final_ = std::move(rho); }
  IntegrationStats stats;

 private:
  std::vector<std::string> columns_;
  std::vector<double> times_;
  std::vector<std::vector<double>> rows_;
  DensityMatrix final_;
};

// Observables every trajectory records after the user-supplied ones.
inline constexpr const char* kTraceColumn = "trace";
inline constexpr const char* kMinEigColumn = "min_eig";
inline constexpr const char* kHermColumn = "herm_err";

// Adaptive Dormand-Prince 5(4). output_times must be increasing and start at
// the initial time.
Trajectory integrate(const LindbladModel& model, const DensityMatrix& rho0,
                     const std::vector<double>& output_times,
                     const std::vector<NamedObservable>& observables,
                     const IntegratorControls& controls = {});

// L-stable (2,3) Pade propagator with Krylov shifted solves. Time-independent
// models only; preferred for stiff full models over long horizons.
Trajectory integrate_stiff(const LindbladModel& model, const DensityMatrix& rho0,
                           const std::vector<double>& output_times,
                           const std::vector<NamedObservable>& observables,
                           const StiffControls& controls = {});

std::vector<double> linear_grid(double t0, double t1, int n_points);

enum class SteadyStateMethod { Integrate, Krylov, Direct };

struct SteadyStateCriterion {
  SteadyStateMethod method = SteadyStateMethod::Integrate;
  double residual_tol = 1e-8;
  double window = 100.0;
  double population_tol = 1e-6;
  double max_time = 1e8;
  IntegratorControls controls{};
  StiffControls stiff{};
};

struct SteadyStateResult {
  DensityMatrix state;
  double residual = 0.0;
  double elapsed_time = 0.0;
  bool converged = false;
  int iterations = 0;
};

double residual_norm(const LindbladModel& model, const DensityMatrix& rho,
                     double t = 0.0);

SteadyStateResult steady_state(const LindbladModel& model,
                               const DensityMatrix& rho0,
                               const SteadyStateCriterion& criterion = {});

// Null vector of the dense vectorized generator (dimension <= 64).
SteadyStateResult steady_state_direct(const LindbladModel& model);

// GMRES on the generator, right-preconditioned by the inverse of the
// no-jump part (Sylvester solves in Schur form).
SteadyStateResult steady_state_krylov(const LindbladModel& model,
                                      double tol = 1e-12, int max_iter = 400);

// Smallest singular values (ascending) of the dense vectorized generator.
Eigen::VectorXd generator_singular_values(const LindbladModel& model,
                                          int count);
DenseMatrix dense_generator(const LindbladModel& model, double t = 0.0);

// Observables
double population(const DensityMatrix& rho, const StateVector& ket);
double purity(const DensityMatrix& rho);
double trace_real(const DensityMatrix& rho);
double min_eigenvalue(const DensityMatrix& rho);

double fidelity(const StateVector& target, const DensityMatrix& rho);
double fidelity(const DensityMatrix& target, const DensityMatrix& rho);

SparseOperator parity_operator(const SpacePtr& space);
struct ParityFeedback {
  double parity = 0.0;
  DensityMatrix corrected;
};
ParityFeedback parity_and_feedback(const DensityMatrix& rho);

}  // namespace ghzsim
