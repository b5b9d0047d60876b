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

#include "ghzsim/effective.hpp"
#include "ghzsim/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

namespace ghzsim {

namespace {

const double kR2 = std::sqrt(2.0);
const double kR6 = std::sqrt(6.0);

std::string qubit_label(int q) {
  std::string s;
  for (int b = 0; b < 3; ++b) s += (q >> (2 - b) & 1) ? '1' : '0';
  return s;
}

// Couplings and phases of the effective Z-pump Hamiltonian:
// amplitude * exp(i * phase_units * delta * t) |qubit><D_k| + h.c.
struct PumpTerm {
  const char* qubit;
  int dark;
  double coeff;  // in units of Omega
  double phase;  // in units of delta
};

const PumpTerm kPumpTerms[] = {
    {"001", 1, 1 / kR6, -1}, {"001", 2, -1 / kR2, -1},
    {"100", 1, 1 / kR6, -1}, {"100", 2, 1 / kR2, -1},
    {"010", 1, -2 / kR6, 2},
    {"011", 4, -1 / kR2, -1}, {"011", 5, -1 / kR2, 2},
    {"101", 3, -1 / kR2, -1}, {"101", 5, 1 / kR2, -1},
    {"110", 3, 1 / kR2, 2}, {"110", 4, 1 / kR2, -1},
};

struct PumpChannel {
  const char* qubit;
  int dark;
  double rate;  // in units of gamma_e
};

const PumpChannel kPumpChannels[] = {
    {"001", 1, 1.0 / 12}, {"100", 1, 1.0 / 12}, {"010", 1, 1.0 / 3},
    {"000", 1, 1.0 / 2},  {"001", 2, 1.0 / 4},  {"100", 2, 1.0 / 4},
    {"000", 2, 1.0 / 2},  {"110", 3, 1.0 / 4},  {"101", 3, 1.0 / 4},
    {"100", 3, 1.0 / 2},  {"110", 4, 1.0 / 4},  {"011", 4, 1.0 / 4},
    {"010", 4, 1.0 / 2},  {"101", 5, 1.0 / 4},  {"011", 5, 1.0 / 4},
    {"001", 5, 1.0 / 2},
};

SparseOperator basis_dyad(const SpacePtr& s, const std::string& row,
                          const std::string& col) {
  SparseMatrix m(s->dimension(), s->dimension());
  m.insert(s->index_of_label(row), s->index_of_label(col)) = 1.0;
  return SparseOperator(s, std::move(m));
}

void check_delta_convention(const ModelParams& p) {
  const double d = p.delta[1] / 2;
  const double tol = 1e-12 * std::max(1.0, std::abs(p.delta[1]));
  require(std::abs(p.delta[0] + d) <= tol && std::abs(p.delta[2] + d) <= tol,
          ErrorCode::InvalidArgument,
          "effective Z-pump needs delta1 = delta3 = -delta2/2");
}

}  // namespace

// ---- Zeno decomposition ----

ZenoDecomposition zeno_decompose(const SparseOperator& hm,
                                 const std::vector<StateVector>& subspace,
                                 const SparseOperator* h0, double rel_tol) {
  require(hm.is_hermitian(1e-12), ErrorCode::InvalidArgument,
          "zeno_decompose: H_m is not Hermitian");
  if (h0) check_same_space(hm.space(), h0->space(), "zeno_decompose");
  DenseMatrix b = basis_matrix(subspace);
  check_same_space(hm.space(), subspace.front().space(), "zeno_decompose");
  DenseMatrix hb = hm.matrix() * b;
  DenseMatrix hs = b.adjoint() * hb;
  const double scale = std::max(hm.max_abs(), 1e-300);
  require((hb - b * hs).cwiseAbs().maxCoeff() <= 1e-10 * scale,
          ErrorCode::InvalidArgument,
          "zeno_decompose: subspace is not invariant under H_m");

  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(0.5 * (hs + hs.adjoint()));
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double norm = std::max(ev.cwiseAbs().maxCoeff(), 0.0);
  const double tol = rel_tol * std::max(norm, 1e-300);

  ZenoDecomposition z;
  Index start = 0;
  while (start < ev.size()) {
    Index end = start + 1;
    while (end < ev.size() && std::abs(ev(end) - ev(start)) < tol) ++end;
    DenseMatrix v = b * es.eigenvectors().middleCols(start, end - start);
    DenseMatrix proj = v * v.adjoint();
    proj = 0.5 * (proj + proj.adjoint()).eval();
    double eta = ev.segment(start, end - start).mean();
    z.eigenvalues.push_back(std::abs(eta) < tol ? 0.0 : eta);
    z.dimensions.push_back(static_cast<int>(end - start));
    SparseOperator p = SparseOperator::from_dense(hm.space_ptr(), proj, 1e-15);
    if (h0) z.projected_h0.push_back(p * (*h0) * p);
    z.projectors.push_back(std::move(p));
    start = end;
  }
  return z;
}

ZenoDecomposition zeno_decompose(const SparseOperator& hm,
                                 const SparseOperator* h0, double rel_tol) {
  std::vector<StateVector> all;
  for (Index i = 0; i < hm.dimension(); ++i)
    all.push_back(basis_ket(hm.space_ptr(), i));
  return zeno_decompose(hm, all, h0, rel_tol);
}

std::vector<StateVector> one_excitation_basis(const SpacePtr& space) {
  auto named = named_states(space);
  require(named.count("E4") > 0, ErrorCode::InvalidArgument,
          "one-excitation block needs levels {0,1,e} and a cavity");
  return {ket_from_labels(space, "001"), ket_from_labels(space, "010"),
          ket_from_labels(space, "100"), named.at("E1"), named.at("E2"),
          named.at("E3"),                named.at("E4")};
}

SparseOperator build_hg_ap(const ModelParams& p, const SpacePtr& space) {
  p.require_g_units("build_hg_ap");
  auto k = [&](const char* s, int n) { return ket_from_labels(space, s, n); };
  StateVector up = k("00e", 0) + k("0e0", 0) + k("e00", 0);
  SparseOperator h = p.g[0] * dyad(up, k("000", 1));
  return (h + h.adjoint()).with_hint(true);
}

std::vector<FrameTerm> one_excitation_frame_terms(const ModelParams& p) {
  p.require_g_units("one_excitation_frame_terms");
  require(p.g[0] == p.g[1] && p.g[1] == p.g[2], ErrorCode::InvalidArgument,
          "the appendix block assumes a uniform coupling g");
  SpacePtr space = build_space(3, parse_levels("01e"), 1);
  std::vector<StateVector> basis = one_excitation_basis(space);
  DenseMatrix w = basis_matrix(basis);
  const char* names[] = {"001", "010", "100", "E1", "E2", "E3", "E4"};

  // Frame: light shifts plus the cavity coupling; both are diagonal here.
  ModelParams frame = p;
  frame.omega = 0.0;
  DenseMatrix hf = w.adjoint() * (build_hk(frame, space).matrix() * w);
  DenseMatrix hk = w.adjoint() * (build_hk(p, space).matrix() * w);
  Eigen::VectorXd energy = hf.diagonal().real();
  DenseMatrix off = hf;
  off.diagonal().setZero();
  require(off.cwiseAbs().maxCoeff() < 1e-12, ErrorCode::Numerical,
          "E_k are not eigenvectors of the frame Hamiltonian");
  DenseMatrix coupling = hk - hf;

  std::vector<FrameTerm> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 7; ++b) {
      Complex c = coupling(a, b);
      if (std::abs(c) < 1e-14) continue;
      out.push_back({names[a], names[b], c, energy(a) - energy(b)});
    }
  return out;
}

std::vector<FrameTerm> drop_fast_terms(const std::vector<FrameTerm>& terms,
                                       double cutoff) {
  std::vector<FrameTerm> out;
  for (const auto& t : terms)
    if (std::abs(t.frequency) < cutoff * (1 - 1e-9)) out.push_back(t);
  return out;
}

// ---- effective Z pumping ----

EffectiveSpace effective_space(bool with_rydberg) {
  EffectiveSpace es;
  es.parent = build_space(3, parse_levels("01er"), std::nullopt);
  std::vector<std::string> labels;
  std::vector<StateVector> cols;
  const std::string alphabet = with_rydberg ? "01r" : "01";
  const auto na = alphabet.size();
  for (std::size_t q = 0; q < na * na * na; ++q) {
    std::string lab{alphabet[q / (na * na)], alphabet[(q / na) % na],
                    alphabet[q % na]};
    labels.push_back(lab);
    cols.push_back(ket_from_labels(es.parent, lab));
  }
  auto named = named_states(es.parent);
  for (int k = 1; k <= 5; ++k) {
    labels.push_back("D" + std::to_string(k));
    cols.push_back(named.at(labels.back()));
  }
  es.embedding = basis_matrix(cols);
  es.space = build_custom_space(std::move(labels));
  return es;
}

double effective_delta(const ModelParams& p) { return p.delta[1] / 2; }

std::vector<double> effective_frame_energies(const ModelParams& p,
                                             const EffectiveSpace& es) {
  SparseOperator e = SparseOperator::zero(es.parent);
  for (int i = 0; i < 3; ++i)
    e += p.delta[i] * atom_dyad(es.parent, i, Level::One, Level::One);
  DenseMatrix m = es.embedding.adjoint() * (e.matrix() * es.embedding);
  DenseMatrix off = m;
  off.diagonal().setZero();
  require(off.cwiseAbs().maxCoeff() < 1e-14, ErrorCode::Numerical,
          "reduced basis does not diagonalize the light shifts");
  std::vector<double> out;
  for (Index i = 0; i < m.rows(); ++i) out.push_back(m(i, i).real());
  return out;
}

EffectiveZPump build_effective_zpump(const ModelParams& p,
                                     const EffectiveSpace& es) {
  p.require_g_units("build_effective_zpump");
  check_delta_convention(p);
  const double d = effective_delta(p);
  TimeDependentHamiltonian h(SparseOperator::zero(es.space));
  for (const auto& t : kPumpTerms)
    h.add_term(basis_dyad(es.space, t.qubit, "D" + std::to_string(t.dark)),
               t.coeff * p.omega, t.phase * d);
  std::vector<CollapseChannel> ch;
  if (p.gamma_e > 0)
    for (const auto& c : kPumpChannels) {
      std::string dk = "D" + std::to_string(c.dark);
      ch.push_back({c.rate * p.gamma_e, basis_dyad(es.space, c.qubit, dk),
                    std::string(c.qubit) + "<" + dk});
    }
  return {std::move(h), std::move(ch)};
}

EffectiveZPump build_effective_zpump(const ModelParams& p) {
  return build_effective_zpump(p, effective_space(false));
}

namespace {

LindbladModel to_frame(EffectiveZPump z, const EffectiveSpace& es,
                       const ModelParams& p, EffectiveFrame frame) {
  if (frame == EffectiveFrame::Rotating)
    return LindbladModel(std::move(z.hamiltonian), std::move(z.channels));
  std::vector<double> e = effective_frame_energies(p, es);
  SparseOperator h = SparseOperator::zero(es.space);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0.0) {
      std::string l = es.space->label(static_cast<Index>(i));
      h += e[i] * basis_dyad(es.space, l, l);
    }
  for (const auto& t : z.hamiltonian.terms()) {
    SparseOperator x = t.amplitude * t.op;
    h += x + x.adjoint();
  }
  return LindbladModel(h.with_hint(true), std::move(z.channels));
}

}  // namespace

LindbladModel build_effective_zpump_model(const ModelParams& p,
                                          EffectiveFrame frame) {
  EffectiveSpace es = effective_space(false);
  return to_frame(build_effective_zpump(p, es), es, p, frame);
}

LindbladModel build_effective_full_model(const ModelParams& p,
                                         EffectiveFrame frame) {
  p.require_g_units("build_effective_full_model");
  EffectiveSpace es = effective_space(true);
  EffectiveZPump z = build_effective_zpump(p, es);
  const std::vector<double> energy = effective_frame_energies(p, es);
  const double oe = adiabatic_eliminate(p.omega_r, p.delta_cap).omega_eff;
  const Index rrr = es.space->index_of_label("rrr");
  for (int q = 0; q < 8; ++q) {
    std::string lab = qubit_label(q);
    Index i = es.space->index_of_label(lab);
    z.hamiltonian.add_term(basis_dyad(es.space, lab, "rrr"), oe / std::sqrt(8.0),
                           energy[static_cast<std::size_t>(i)] -
                               energy[static_cast<std::size_t>(rrr)]);
  }
  if (p.gamma_r > 0)
    for (int i = 0; i < 3; ++i)
      for (Level to : {Level::Zero, Level::One}) {
        SparseOperator c = atom_dyad(es.parent, i, to, Level::Rydberg);
        DenseMatrix m = es.embedding.adjoint() * (c.matrix() * es.embedding);
        z.channels.push_back({p.gamma_r / 2,
                              SparseOperator::from_dense(es.space, m, 1e-15),
                              std::string(1, level_char(to)) + "r_" +
                                  std::to_string(i + 1)});
      }
  return to_frame(std::move(z), es, p, frame);
}

// ---- symmetric Rydberg sector ----

double SymmetricAmplitudes::norm_squared() const {
  double s = 0.0;
  for (const auto& x : c) s += std::norm(x);
  return s;
}

Eigen::Matrix4cd symmetric_hr_4x4(double omega_r, double delta_cap, double u) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  const double a = kR6 * omega_r, b = 2 * kR2 * omega_r;
  h(0, 1) = h(1, 0) = a;
  h(1, 2) = h(2, 1) = b;
  h(2, 3) = h(3, 2) = a;
  h(1, 1) = -delta_cap;
  h(2, 2) = u - 2 * delta_cap;
  h(3, 3) = 3 * u - 3 * delta_cap;
  return h;
}

SymmetricAmplitudes amplitude_rhs(const SymmetricAmplitudes& s, double omega_r,
                                  double delta_cap) {
  Eigen::Vector4cd c(s.c[0], s.c[1], s.c[2], s.c[3]);
  Eigen::Vector4cd d =
      Complex(0.0, -1.0) * (symmetric_hr_4x4(omega_r, delta_cap, delta_cap) * c);
  return {{d(0), d(1), d(2), d(3)}};
}

std::array<StateVector, 4> symmetric_rydberg_kets(const SpacePtr& space) {
  require(space->is_tensor() && space->n_atoms() == 3 &&
              space->has_level(Level::Rydberg) && space->has_level(Level::Zero) &&
              space->has_level(Level::One),
          ErrorCode::MissingLevel,
          "symmetric Rydberg sector needs three atoms with levels {0,1,r}");
  // non-Rydberg atoms sit in |+>
  const Index n = space->dimension();
  std::array<DenseVector, 4> acc;
  for (auto& v : acc) v = DenseVector::Zero(n);
  for (int mask = 0; mask < 8; ++mask) {  // which atoms are in r
    const int m = std::popcount(static_cast<unsigned>(mask));
    for (int q = 0; q < 8; ++q) {
      std::string lab;
      double amp = 1.0;
      bool skip = false;
      for (int b = 0; b < 3; ++b) {
        bool ryd = mask >> (2 - b) & 1;
        bool one = q >> (2 - b) & 1;
        if (ryd) {
          if (one) skip = true;
          lab += 'r';
        } else {
          lab += one ? '1' : '0';
          amp /= kR2;
        }
      }
      if (skip) continue;
      acc[static_cast<std::size_t>(m)](space->index_of(lab)) += amp;
    }
  }
  std::array<StateVector, 4> out{
      StateVector(space, acc[0]), StateVector(space, acc[1]),
      StateVector(space, acc[2]), StateVector(space, acc[3])};
  for (auto& s : out) s = s.normalized();
  return out;
}

AdiabaticResult adiabatic_eliminate(double omega_r, double delta_cap) {
  require(delta_cap != 0.0, ErrorCode::InvalidArgument,
          "adiabatic elimination needs a nonzero detuning");
  AdiabaticResult r;
  r.omega_eff = 12 * kR2 * omega_r * omega_r * omega_r / (delta_cap * delta_cap);
  r.hamiltonian << 0.0, r.omega_eff, r.omega_eff, 0.0;
  r.ratio = std::abs(omega_r / delta_cap);
  r.weak_drive = r.ratio <= 0.1;
  return r;
}

RydbergPumpCheck rydberg_pump_check(double omega_r, double delta_cap,
                                    int n_points) {
  RydbergPumpCheck out;
  out.omega_eff = adiabatic_eliminate(omega_r, delta_cap).omega_eff;
  Eigen::Matrix4cd h = symmetric_hr_4x4(omega_r, delta_cap, delta_cap);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
  const Eigen::Vector4d w = es.eigenvalues();
  const Eigen::Matrix4cd v = es.eigenvectors();
  const Eigen::Vector4cd amp = v.row(0).adjoint();  // V^dagger e_0
  const double t_end = M_PI / out.omega_eff;
  out.times = linear_grid(0.0, t_end, n_points);
  for (double t : out.times) {
    Eigen::Vector4cd c = Eigen::Vector4cd::Zero();
    for (int k = 0; k < 4; ++k)
      c += v.col(k) * amp(k) * std::exp(Complex(0.0, -w(k) * t));
    double p3 = std::norm(c(3));
    double pe = std::pow(std::sin(out.omega_eff * t), 2);
    out.exact_c3.push_back(p3);
    out.effective_c3.push_back(pe);
    out.max_deviation = std::max(out.max_deviation, std::abs(p3 - pe));
    out.max_norm_error = std::max(out.max_norm_error, std::abs(c.norm() - 1.0));
  }
  // The |c3|^2 oscillation is the beat between the two eigenvectors that
  // carry both |r^0> and |r^3> weight.
  std::array<std::pair<double, int>, 4> weight;
  for (int k = 0; k < 4; ++k)
    weight[static_cast<std::size_t>(k)] = {std::norm(v(0, k)) * std::norm(v(3, k)), k};
  std::sort(weight.begin(), weight.end(), std::greater<>());
  out.frequency = std::abs(w(weight[0].second) - w(weight[1].second));
  return out;
}

}  // namespace ghzsim
