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

#include "ghzsim/model.hpp"

#include <cmath>

namespace ghzsim {

namespace {

constexpr Level k0 = Level::Zero;
constexpr Level k1 = Level::One;
constexpr Level kE = Level::Excited;
constexpr Level kR = Level::Rydberg;

void require_levels(const SpaceSpec& s, std::initializer_list<Level> ls,
                    const char* what) {
  require(s.is_tensor(), ErrorCode::InvalidArgument,
          std::string(what) + " needs a tensor-product space");
  for (Level l : ls)
    require(s.has_level(l), ErrorCode::MissingLevel,
            std::string(what) + ": space lacks level '" + level_char(l) + "'");
}

// U12, U13, U23 for a 3-atom register.
double pair_u(const ModelParams& p, int i, int j) {
  if (i == 0 && j == 1) return p.u[0];
  if (i == 0 && j == 2) return p.u[1];
  return p.u[2];
}

}  // namespace

const char* units_name(Units u) {
  return u == Units::GUnits ? "g" : "mhz";
}

void ModelParams::validate() const {
  require(gamma_e >= 0 && gamma_r >= 0 && kappa >= 0,
          ErrorCode::InvalidArgument, "decay rates must be non-negative");
  auto finite = [](double x) { return std::isfinite(x); };
  bool ok = finite(omega) && finite(omega_r) && finite(delta_cap) &&
            finite(gamma_e) && finite(gamma_r) && finite(kappa);
  for (int i = 0; i < 3; ++i) ok = ok && finite(g[i]) && finite(delta[i]) && finite(u[i]);
  require(ok, ErrorCode::InvalidArgument, "non-finite model parameter");
}

ModelParams ModelParams::to_g_units(double g_reference) const {
  require(units == Units::MHz2Pi, ErrorCode::InvalidArgument,
          "parameters are already in g-units");
  require(g_reference > 0, ErrorCode::InvalidArgument,
          "reference g must be positive");
  ModelParams q = *this;
  q.units = Units::GUnits;
  const double s = 1.0 / g_reference;
  for (int i = 0; i < 3; ++i) {
    q.g[i] *= s;
    q.delta[i] *= s;
    q.u[i] *= s;
  }
  q.omega *= s;
  q.omega_r *= s;
  q.delta_cap *= s;
  q.gamma_e *= s;
  q.gamma_r *= s;
  q.kappa *= s;
  return q;
}

void ModelParams::require_g_units(const char* where) const {
  require(units == Units::GUnits, ErrorCode::InvalidArgument,
          std::string(where) + ": parameters must be converted to g-units");
}

SparseOperator build_hk_coupling(const ModelParams& p, const SpacePtr& space) {
  p.require_g_units("build_hk_coupling");
  require_levels(*space, {k0, kE}, "build_hk_coupling");
  require(space->has_cavity(), ErrorCode::InvalidArgument,
          "build_hk_coupling: space has no cavity");
  require(space->n_atoms() <= 3, ErrorCode::InvalidArgument,
          "at most three atoms are parameterized");
  SparseOperator a = cavity_annihilation(space);
  SparseOperator h = SparseOperator::zero(space);
  for (int i = 0; i < space->n_atoms(); ++i) {
    SparseOperator t = p.g[i] * (atom_dyad(space, i, kE, k0) * a);
    h += t + t.adjoint();
  }
  return h.with_hint(true);
}

SparseOperator build_hk(const ModelParams& p, const SpacePtr& space) {
  p.require_g_units("build_hk");
  require_levels(*space, {k0, k1, kE}, "build_hk");
  SparseOperator h = build_hk_coupling(p, space);
  for (int i = 0; i < space->n_atoms(); ++i) {
    SparseOperator drive = p.omega * atom_dyad(space, i, kE, k1);
    h += drive + drive.adjoint();
    h += p.delta[i] * atom_dyad(space, i, k1, k1);
  }
  return h.with_hint(true);
}

SparseOperator build_hr(const ModelParams& p, const SpacePtr& space) {
  p.require_g_units("build_hr");
  require_levels(*space, {k0, k1, kR}, "build_hr");
  require(space->n_atoms() <= 3, ErrorCode::InvalidArgument,
          "at most three atoms are parameterized");
  SparseOperator h = SparseOperator::zero(space);
  const int n = space->n_atoms();
  for (int i = 0; i < n; ++i) {
    SparseOperator up = p.omega_r * (atom_dyad(space, i, kR, k0) +
                                     atom_dyad(space, i, kR, k1));
    h += up + up.adjoint();
    h -= p.delta_cap * atom_dyad(space, i, kR, kR);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      h += pair_u(p, i, j) *
           (atom_dyad(space, i, kR, kR) * atom_dyad(space, j, kR, kR));
  return h.with_hint(true);
}

SparseOperator build_stark_compensation(const ModelParams& p,
                                        const SpacePtr& space) {
  p.require_g_units("build_stark_compensation");
  require_levels(*space, {k0, k1, kR}, "build_stark_compensation");
  require(p.delta_cap != 0.0, ErrorCode::InvalidArgument,
          "Stark compensation needs a nonzero detuning");
  const double shift = 2.0 * p.omega_r * p.omega_r / p.delta_cap;
  SparseOperator h = SparseOperator::zero(space);
  for (int i = 0; i < space->n_atoms(); ++i) {
    SparseOperator plus = 0.5 * (atom_dyad(space, i, k0, k0) +
                                 atom_dyad(space, i, k1, k1) +
                                 atom_dyad(space, i, k0, k1) +
                                 atom_dyad(space, i, k1, k0));
    h -= shift * (plus + atom_dyad(space, i, kR, kR));
  }
  return h.with_hint(true);
}

std::vector<CollapseChannel> build_collapse_channels(const ModelParams& p,
                                                     const SpacePtr& space) {
  p.require_g_units("build_collapse_channels");
  p.validate();
  require(space->is_tensor(), ErrorCode::InvalidArgument,
          "collapse channels need a tensor-product space");
  std::vector<CollapseChannel> out;
  const bool has_e = space->has_level(kE), has_r = space->has_level(kR);
  for (int i = 0; i < space->n_atoms(); ++i) {
    const std::string atom = std::to_string(i + 1);
    if (has_e && p.gamma_e > 0) {
      out.push_back({p.gamma_e / 2, atom_dyad(space, i, k0, kE), "0e_" + atom});
      out.push_back({p.gamma_e / 2, atom_dyad(space, i, k1, kE), "1e_" + atom});
    }
    if (has_r && p.gamma_r > 0) {
      out.push_back({p.gamma_r / 2, atom_dyad(space, i, k0, kR), "0r_" + atom});
      out.push_back({p.gamma_r / 2, atom_dyad(space, i, k1, kR), "1r_" + atom});
    }
  }
  if (space->has_cavity() && p.kappa > 0)
    out.push_back({p.kappa, cavity_annihilation(space), "a"});
  return out;
}

SparseOperator excitation_number(const SpacePtr& space) {
  require_levels(*space, {kE}, "excitation_number");
  SparseOperator n = SparseOperator::zero(space);
  for (int i = 0; i < space->n_atoms(); ++i)
    n += atom_dyad(space, i, kE, kE);
  if (space->has_cavity()) {
    SparseOperator a = cavity_annihilation(space);
    n += a.adjoint() * a;
  }
  return n.with_hint(true);
}

SparseOperator drive_excitation_number(const SpacePtr& space) {
  require_levels(*space, {k1, kE}, "drive_excitation_number");
  SparseOperator n = excitation_number(space);
  for (int i = 0; i < space->n_atoms(); ++i)
    n += atom_dyad(space, i, k1, k1);
  return n.with_hint(true);
}

std::vector<PairShift> rydberg_u_from_geometry(double d_coeff,
                                               const std::vector<Vec3>& positions,
                                               const Vec3& dipole_axis) {
  double an = std::sqrt(dipole_axis[0] * dipole_axis[0] +
                        dipole_axis[1] * dipole_axis[1] +
                        dipole_axis[2] * dipole_axis[2]);
  require(an > 0, ErrorCode::InvalidArgument, "dipole axis has zero length");
  std::vector<PairShift> out;
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      Vec3 r{positions[j][0] - positions[i][0], positions[j][1] - positions[i][1],
             positions[j][2] - positions[i][2]};
      double rn = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
      require(rn > 0, ErrorCode::InvalidArgument, "coincident atom positions");
      double c = (r[0] * dipole_axis[0] + r[1] * dipole_axis[1] +
                  r[2] * dipole_axis[2]) / (rn * an);
      out.push_back({static_cast<int>(i), static_cast<int>(j),
                     d_coeff * (1.0 - 3.0 * c * c) / (rn * rn * rn)});
    }
  return out;
}

std::map<std::string, StateVector> named_states(const SpacePtr& space) {
  require(space->is_tensor(), ErrorCode::InvalidArgument,
          "named states need a tensor-product space");
  require_levels(*space, {k0, k1}, "named_states");
  require(space->n_atoms() == 3, ErrorCode::InvalidArgument,
          "named states are defined for three atoms");
  std::map<std::string, StateVector> m;
  auto k = [&](const char* s, int n = 0) { return ket_from_labels(space, s, n); };
  const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);

  m.emplace("GHZ+", (1 / r2) * (k("000") + k("111")));
  m.emplace("GHZ-", (1 / r2) * (k("000") - k("111")));

  // |+-+> etc.
  for (int mask = 0; mask < 8; ++mask) {
    std::string name;
    DenseVector v = DenseVector::Zero(space->dimension());
    for (int b = 0; b < 3; ++b) name += (mask >> (2 - b) & 1) ? '-' : '+';
    for (int q = 0; q < 8; ++q) {
      std::string lab;
      double sign = 1.0;
      for (int b = 0; b < 3; ++b) {
        bool one = q >> (2 - b) & 1;
        lab += one ? '1' : '0';
        if (one && name[static_cast<std::size_t>(b)] == '-') sign = -sign;
      }
      v(space->index_of(lab)) = sign / std::sqrt(8.0);
    }
    m.emplace(name, StateVector(space, std::move(v)));
  }

  if (space->has_level(kE)) {
    m.emplace("D1", (1 / r6) * (k("e00") + k("00e") - 2.0 * k("0e0")));
    m.emplace("D2", (1 / r2) * (k("e00") - k("00e")));
    m.emplace("D3", (1 / r2) * (k("1e0") - k("10e")));
    m.emplace("D4", (1 / r2) * (k("e10") - k("01e")));
    m.emplace("D5", (1 / r2) * (k("e01") - k("0e1")));
    if (space->has_cavity() && *space->cavity_cutoff() >= 1) {
      StateVector w = (1 / r6) * (k("e00") + k("0e0") + k("00e"));
      StateVector p = (1 / r2) * k("000", 1);
      m.emplace("E1", m.at("D1"));
      m.emplace("E2", m.at("D2"));
      m.emplace("E3", w + p);
      m.emplace("E4", w - p);
    }
  }
  return m;
}

StateVector named_state(const SpacePtr& space, const std::string& name) {
  auto all = named_states(space);
  auto it = all.find(name);
  require(it != all.end(), ErrorCode::InvalidArgument,
          "unknown or unsupported named state '" + name + "'");
  return it->second;
}

DensityMatrix fully_mixed_qubits(const SpacePtr& space) {
  require_levels(*space, {k0, k1}, "fully_mixed_qubits");
  require(space->n_atoms() == 3, ErrorCode::InvalidArgument,
          "fully mixed qubit state is defined for three atoms");
  DenseMatrix m = DenseMatrix::Zero(space->dimension(), space->dimension());
  for (int q = 0; q < 8; ++q) {
    std::string lab;
    for (int b = 0; b < 3; ++b) lab += (q >> (2 - b) & 1) ? '1' : '0';
    Index i = space->index_of(lab);
    m(i, i) = 1.0 / 8.0;
  }
  return DensityMatrix(space, std::move(m));
}

}  // namespace ghzsim
