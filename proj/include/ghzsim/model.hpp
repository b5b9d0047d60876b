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
#include <map>
#include <string>
#include <vector>

#include "ghzsim/hilbert.hpp"

namespace ghzsim {

enum class Units { GUnits, MHz2Pi };

const char* units_name(Units u);

// Physical parameters. Frequencies are angular; in MHz2Pi units every entry
// is a plain MHz number (the 2*pi is implied and cancels on conversion).
struct ModelParams {
  Units units = Units::GUnits;
  std::array<double, 3> g{1.0, 1.0, 1.0};
  double omega = 0.0;
  std::array<double, 3> delta{0.0, 0.0, 0.0};
  double omega_r = 0.0;
  double delta_cap = 0.0;
  std::array<double, 3> u{0.0, 0.0, 0.0};  // U12, U13, U23
  double gamma_e = 0.0;
  double gamma_r = 0.0;
  double kappa = 0.0;
  // Cancel the single-atom light shift 2*Omega_r^2/Delta of the Rydberg
  // drive on |+> and |r>. Off by default; the Rydberg scenarios turn it on.
  bool stark_compensation = false;

  void validate() const;
  // Divide every frequency by g_reference (given in the same MHz units).
  ModelParams to_g_units(double g_reference) const;
  void require_g_units(const char* where) const;

  bool operator==(const ModelParams&) const = default;
};

struct CollapseChannel {
  double rate = 0.0;
  SparseOperator op;
  std::string name;
};

SparseOperator build_hk(const ModelParams& p, const SpacePtr& space);
SparseOperator build_hr(const ModelParams& p, const SpacePtr& space);
SparseOperator build_stark_compensation(const ModelParams& p,
                                        const SpacePtr& space);
std::vector<CollapseChannel> build_collapse_channels(const ModelParams& p,
                                                     const SpacePtr& space);

// sum_i |e><e|_i + a^dagger a
SparseOperator excitation_number(const SpacePtr& space);
// sum_i (|1><1|_i + |e><e|_i) + a^dagger a; commutes with the full H_k
SparseOperator drive_excitation_number(const SpacePtr& space);
// g-part of H_k: sum_i g_i (|e><0|_i a + h.c.)
SparseOperator build_hk_coupling(const ModelParams& p, const SpacePtr& space);

struct PairShift {
  int i = 0;
  int j = 0;
  double u = 0.0;
};
using Vec3 = std::array<double, 3>;

std::vector<PairShift> rydberg_u_from_geometry(double d_coeff,
                                               const std::vector<Vec3>& positions,
                                               const Vec3& dipole_axis);

// GHZ+, GHZ-, product states like "+-+", D1..D5, E1..E4 (whichever the
// space supports). Cavity states are taken in vacuum except where noted.
std::map<std::string, StateVector> named_states(const SpacePtr& space);
StateVector named_state(const SpacePtr& space, const std::string& name);

// sum over the 8 qubit kets |ijk>|0_c> with weight 1/8
DensityMatrix fully_mixed_qubits(const SpacePtr& space);

}  // namespace ghzsim
