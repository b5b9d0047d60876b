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

#include <array>
#include <string>
#include <vector>

#include "ghzsim/hilbert.hpp"
#include "ghzsim/lindblad.hpp"
#include "ghzsim/model.hpp"

namespace ghzsim {

struct ZenoDecomposition {
  std::vector<double> eigenvalues;          // distinct eta_n, ascending
  std::vector<int> dimensions;              // rank of each P_n
  std::vector<SparseOperator> projectors;   // P_n on the parent space
  std::vector<SparseOperator> projected_h0; // P_n H0 P_n (if H0 given)
};

// Eigenprojections of hm restricted to span(subspace). hm must leave the
// subspace invariant and be Hermitian there.
ZenoDecomposition zeno_decompose(const SparseOperator& hm,
                                 const std::vector<StateVector>& subspace,
                                 const SparseOperator* h0 = nullptr,
                                 double rel_tol = 1e-9);
ZenoDecomposition zeno_decompose(const SparseOperator& hm,
                                 const SparseOperator* h0 = nullptr,
                                 double rel_tol = 1e-9);

// The 7-state one-excitation block {|001>,|010>,|100>,E1..E4} (cutoff >= 1).
std::vector<StateVector> one_excitation_basis(const SpacePtr& space);
// g * [(|00e>+|0e0>+|e00>)<000|] |0_c><1_c| + h.c.
SparseOperator build_hg_ap(const ModelParams& p, const SpacePtr& space);

// Slow/fast split of the one-excitation block in the interaction picture.
struct FrameTerm {
  std::string row;  // qubit ket label
  std::string col;  // E_k / D_k label
  Complex amplitude;
  double frequency;
};
std::vector<FrameTerm> one_excitation_frame_terms(const ModelParams& p);
std::vector<FrameTerm> drop_fast_terms(const std::vector<FrameTerm>& terms,
                                       double cutoff);

// Reduced basis of the effective models: the qubit kets (optionally all
// {0,1,r}^3 kets) followed by D1..D5; `embedding` maps it into {0,1,e,r}^3.
struct EffectiveSpace {
  SpacePtr space;
  SpacePtr parent;       // 3 atoms, levels {0,1,e,r}, no cavity
  DenseMatrix embedding; // parent_dim x reduced_dim, orthonormal columns
};
EffectiveSpace effective_space(bool with_rydberg);

struct EffectiveZPump {
  TimeDependentHamiltonian hamiltonian;
  std::vector<CollapseChannel> channels;
};

double effective_delta(const ModelParams& p);  // delta = delta2 / 2

EffectiveZPump build_effective_zpump(const ModelParams& p);
EffectiveZPump build_effective_zpump(const ModelParams& p,
                                     const EffectiveSpace& es);

// Energies of the reduced basis states in the co-moving frame; the rotating
// phases are exp(i (E_row - E_col) t).
std::vector<double> effective_frame_energies(const ModelParams& p,
                                             const EffectiveSpace& es);

// Rotating frame with all phases kept (default), or the equivalent static
// Hamiltonian carrying the delta_i |1><1| energies.
enum class EffectiveFrame { Rotating, Static };
LindbladModel build_effective_full_model(
    const ModelParams& p, EffectiveFrame frame = EffectiveFrame::Rotating);
LindbladModel build_effective_zpump_model(
    const ModelParams& p, EffectiveFrame frame = EffectiveFrame::Rotating);

// Symmetric Rydberg sector {|r^0>,|r^1>,|r^2>,|r^3>}.
struct SymmetricAmplitudes {
  std::array<Complex, 4> c{};
  double norm_squared() const;
};

Eigen::Matrix4cd symmetric_hr_4x4(double omega_r, double delta_cap, double u);
// dc/dt = -i H c with U = Delta.
SymmetricAmplitudes amplitude_rhs(const SymmetricAmplitudes& s, double omega_r,
                                  double delta_cap);
// Symmetric-sector kets on a tensor space with level r (normalized).
std::array<StateVector, 4> symmetric_rydberg_kets(const SpacePtr& space);

struct AdiabaticResult {
  double omega_eff = 0.0;
  Eigen::Matrix2cd hamiltonian;  // on {|+++>, |rrr>}
  double ratio = 0.0;            // Omega_r / Delta
  bool weak_drive = true;        // ratio <= 0.1
};
AdiabaticResult adiabatic_eliminate(double omega_r, double delta_cap);

// Exact 4x4 dynamics from c = (1,0,0,0): samples |c3(t)|^2 on a grid.
struct RydbergPumpCheck {
  std::vector<double> times;
  std::vector<double> exact_c3;
  std::vector<double> effective_c3;  // sin^2(Omega_eff t)
  double max_deviation = 0.0;
  double max_norm_error = 0.0;
  double frequency = 0.0;            // |c3|^2 oscillation frequency
  double omega_eff = 0.0;
};
RydbergPumpCheck rydberg_pump_check(double omega_r, double delta_cap,
                                    int n_points = 2001);

}  // namespace ghzsim
