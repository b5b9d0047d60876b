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

#include "ghzsim/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ghzsim {

Level level_from_char(char c) {
  switch (c) {
    case '0': return Level::Zero;
    case '1': return Level::One;
    case 'e': return Level::Excited;
    case 'r': return Level::Rydberg;
    default:
      fail(ErrorCode::InvalidArgument,
           std::string("unknown atomic level '") + c + "'");
  }
}

char level_char(Level l) { return static_cast<char>(l); }

std::vector<Level> parse_levels(std::string_view s) {
  std::vector<Level> out;
  for (char c : s) out.push_back(level_from_char(c));
  return out;
}

SpaceSpec SpaceSpec::tensor(int n_atoms, std::vector<Level> levels,
                            std::optional<int> cavity_cutoff) {
  require(n_atoms >= 1, ErrorCode::InvalidArgument, "n_atoms must be >= 1");
  require(!levels.empty(), ErrorCode::InvalidArgument,
          "atom level list is empty");
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (std::size_t j = i + 1; j < levels.size(); ++j)
      require(levels[i] != levels[j], ErrorCode::InvalidArgument,
              "duplicate atom level");
  require(!cavity_cutoff || *cavity_cutoff >= 0, ErrorCode::InvalidArgument,
          "cavity cutoff must be >= 0");
  SpaceSpec s;
  s.n_atoms_ = n_atoms;
  s.levels_ = std::move(levels);
  s.cutoff_ = cavity_cutoff;
  Index d = 1;
  for (int i = 0; i < n_atoms; ++i) d *= static_cast<Index>(s.levels_.size());
  if (cavity_cutoff) d *= *cavity_cutoff + 1;
  s.dim_ = d;
  return s;
}

SpaceSpec SpaceSpec::custom(std::vector<std::string> basis_labels) {
  require(!basis_labels.empty(), ErrorCode::InvalidArgument,
          "custom space needs at least one basis label");
  std::vector<std::string> sorted = basis_labels;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          ErrorCode::InvalidArgument, "custom space labels must be unique");
  SpaceSpec s;
  s.custom_labels_ = std::move(basis_labels);
  s.dim_ = static_cast<Index>(s.custom_labels_.size());
  return s;
}

bool SpaceSpec::has_level(Level l) const { return level_index(l) >= 0; }

int SpaceSpec::level_index(Level l) const {
  auto it = std::find(levels_.begin(), levels_.end(), l);
  return it == levels_.end() ? -1 : static_cast<int>(it - levels_.begin());
}

int SpaceSpec::local_dim(int site) const {
  require(is_tensor(), ErrorCode::InvalidArgument,
          "custom space has no sites");
  require(site >= 0 && site < n_sites(), ErrorCode::InvalidArgument,
          "site index out of range");
  if (site < n_atoms_) return static_cast<int>(levels_.size());
  return *cutoff_ + 1;
}

Index SpaceSpec::index_of(std::string_view atom_labels, int photon) const {
  require(is_tensor(), ErrorCode::InvalidArgument,
          "index_of needs a tensor space");
  require(static_cast<int>(atom_labels.size()) == n_atoms_,
          ErrorCode::InvalidArgument,
          "expected " + std::to_string(n_atoms_) + " atom labels, got '" +
              std::string(atom_labels) + "'");
  Index idx = 0;
  const Index L = static_cast<Index>(levels_.size());
  for (char c : atom_labels) {
    int li = level_index(level_from_char(c));
    require(li >= 0, ErrorCode::MissingLevel,
            std::string("level '") + c + "' not in space");
    idx = idx * L + li;
  }
  if (cutoff_) {
    require(photon >= 0 && photon <= *cutoff_, ErrorCode::InvalidArgument,
            "photon number outside Fock cutoff");
    idx = idx * (*cutoff_ + 1) + photon;
  } else {
    require(photon == 0, ErrorCode::InvalidArgument,
            "photon number given for a space without cavity");
  }
  return idx;
}

Index SpaceSpec::index_of_label(std::string_view label) const {
  if (!is_tensor()) {
    auto it = std::find(custom_labels_.begin(), custom_labels_.end(), label);
    require(it != custom_labels_.end(), ErrorCode::InvalidArgument,
            "unknown basis label '" + std::string(label) + "'");
    return it - custom_labels_.begin();
  }
  auto bar = label.find('|');
  if (bar == std::string_view::npos) return index_of(label, 0);
  return index_of(label.substr(0, bar),
                  std::stoi(std::string(label.substr(bar + 1))));
}

std::string SpaceSpec::label(Index i) const {
  require(i >= 0 && i < dim_, ErrorCode::InvalidArgument,
          "basis index out of range");
  if (!is_tensor()) return custom_labels_[static_cast<std::size_t>(i)];
  std::string s(static_cast<std::size_t>(n_atoms_), '?');
  int photon = 0;
  if (cutoff_) {
    photon = static_cast<int>(i % (*cutoff_ + 1));
    i /= *cutoff_ + 1;
  }
  const Index L = static_cast<Index>(levels_.size());
  for (int a = n_atoms_ - 1; a >= 0; --a) {
    s[static_cast<std::size_t>(a)] = level_char(levels_[i % L]);
    i /= L;
  }
  if (cutoff_) s += "|" + std::to_string(photon);
  return s;
}

bool SpaceSpec::operator==(const SpaceSpec& o) const {
  return n_atoms_ == o.n_atoms_ && levels_ == o.levels_ &&
         cutoff_ == o.cutoff_ && custom_labels_ == o.custom_labels_;
}

SpacePtr build_space(int n_atoms, std::vector<Level> levels,
                     std::optional<int> cavity_cutoff) {
  return std::make_shared<const SpaceSpec>(
      SpaceSpec::tensor(n_atoms, std::move(levels), cavity_cutoff));
}

SpacePtr build_custom_space(std::vector<std::string> basis_labels) {
  return std::make_shared<const SpaceSpec>(
      SpaceSpec::custom(std::move(basis_labels)));
}

void check_same_space(const SpaceSpec& a, const SpaceSpec& b,
                      const char* where) {
  if (&a != &b && a != b)
    fail(ErrorCode::SpaceMismatch, std::string(where) + ": space mismatch");
}

// ---- SparseOperator ----

SparseOperator::SparseOperator(SpacePtr space, SparseMatrix m,
                               bool hermitian_hint)
    : space_(std::move(space)), m_(std::move(m)), hermitian_(hermitian_hint) {
  require(space_ != nullptr, ErrorCode::InvalidArgument, "null space");
  require(m_.rows() == space_->dimension() && m_.cols() == space_->dimension(),
          ErrorCode::DimensionMismatch,
          "operator shape does not match space dimension");
  m_.makeCompressed();
  if (hermitian_ && !is_hermitian(1e-12))
    fail(ErrorCode::InvalidArgument,
         "operator flagged Hermitian but A != A^dagger");
}

SparseOperator SparseOperator::zero(SpacePtr space) {
  Index n = space->dimension();
  return SparseOperator(std::move(space), SparseMatrix(n, n), true);
}

SparseOperator SparseOperator::identity(SpacePtr space) {
  Index n = space->dimension();
  SparseMatrix m(n, n);
  m.setIdentity();
  return SparseOperator(std::move(space), std::move(m), true);
}

SparseOperator SparseOperator::from_dense(SpacePtr space, const DenseMatrix& m,
                                          double drop_tol) {
  std::vector<Eigen::Triplet<Complex>> trips;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > drop_tol) trips.emplace_back(i, j, m(i, j));
  SparseMatrix s(m.rows(), m.cols());
  s.setFromTriplets(trips.begin(), trips.end());
  return SparseOperator(std::move(space), std::move(s));
}

SparseOperator SparseOperator::adjoint() const {
  SparseMatrix a = m_.adjoint();
  return SparseOperator(space_, std::move(a), hermitian_);
}

Complex SparseOperator::coeff(Index row, Index col) const {
  return m_.coeff(row, col);
}

double SparseOperator::max_abs() const {
  double mx = 0.0;
  for (Index k = 0; k < m_.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m_, k); it; ++it)
      mx = std::max(mx, std::abs(it.value()));
  return mx;
}

bool SparseOperator::is_hermitian(double tol) const {
  SparseMatrix d = m_ - SparseMatrix(m_.adjoint());
  for (Index k = 0; k < d.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(d, k); it; ++it)
      if (std::abs(it.value()) > tol) return false;
  return true;
}

SparseOperator SparseOperator::with_hint(bool hermitian) const {
  return SparseOperator(space_, m_, hermitian);
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  check_same_space(*space_, *o.space_, "operator+");
  m_ = m_ + o.m_;
  m_.prune(Complex(0.0), 0.0);
  hermitian_ = hermitian_ && o.hermitian_;
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& o) {
  check_same_space(*space_, *o.space_, "operator-");
  m_ = m_ - o.m_;
  m_.prune(Complex(0.0), 0.0);
  hermitian_ = hermitian_ && o.hermitian_;
  return *this;
}

SparseOperator& SparseOperator::operator*=(Complex s) {
  m_ *= s;
  if (s.imag() != 0.0) hermitian_ = false;
  return *this;
}

SparseOperator operator+(SparseOperator a, const SparseOperator& b) {
  a += b;
  return a;
}

SparseOperator operator-(SparseOperator a, const SparseOperator& b) {
  a -= b;
  return a;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  check_same_space(a.space(), b.space(), "operator*");
  SparseMatrix p = a.matrix() * b.matrix();
  p.prune(Complex(0.0), 0.0);
  return SparseOperator(a.space_ptr(), std::move(p));
}

SparseOperator operator*(Complex s, SparseOperator a) {
  a *= s;
  return a;
}

SparseOperator operator*(double s, SparseOperator a) {
  a *= Complex(s, 0.0);
  return a;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

// ---- states ----

StateVector::StateVector(SpacePtr space, DenseVector amplitudes)
    : space_(std::move(space)), v_(std::move(amplitudes)) {
  require(space_ != nullptr, ErrorCode::InvalidArgument, "null space");
  require(v_.size() == space_->dimension(), ErrorCode::DimensionMismatch,
          "state length does not match space dimension");
}

StateVector StateVector::normalized() const {
  double n = v_.norm();
  require(n > 0.0, ErrorCode::Numerical, "cannot normalize a zero vector");
  return StateVector(space_, v_ / n);
}

Complex StateVector::inner(const StateVector& o) const {
  check_same_space(*space_, *o.space_, "inner");
  return v_.dot(o.v_);
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  check_same_space(a.space(), b.space(), "state+");
  return StateVector(a.space_ptr(), a.amplitudes() + b.amplitudes());
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  check_same_space(a.space(), b.space(), "state-");
  return StateVector(a.space_ptr(), a.amplitudes() - b.amplitudes());
}

StateVector operator*(Complex s, const StateVector& a) {
  return StateVector(a.space_ptr(), s * a.amplitudes());
}

StateVector operator*(const SparseOperator& op, const StateVector& a) {
  check_same_space(op.space(), a.space(), "apply");
  return StateVector(a.space_ptr(), op.matrix() * a.amplitudes());
}

DensityMatrix::DensityMatrix(SpacePtr space, DenseMatrix m)
    : space_(std::move(space)), m_(std::move(m)) {
  require(space_ != nullptr, ErrorCode::InvalidArgument, "null space");
  require(m_.rows() == space_->dimension() && m_.cols() == space_->dimension(),
          ErrorCode::DimensionMismatch,
          "density matrix shape does not match space dimension");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.space_ptr(),
                       psi.amplitudes() * psi.amplitudes().adjoint());
}

double DensityMatrix::hermiticity_error() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

void DensityMatrix::symmetrize() {
  DenseMatrix h = 0.5 * (m_ + m_.adjoint());
  m_ = std::move(h);
}

void DensityMatrix::validate(double trace_tol, double herm_tol) const {
  require(std::abs(trace() - Complex(1.0)) <= trace_tol,
          ErrorCode::InvalidArgument, "density matrix trace is not 1");
  require(hermiticity_error() <= herm_tol, ErrorCode::InvalidArgument,
          "density matrix is not Hermitian");
}

// ---- construction helpers ----

SparseOperator embed_site_operator(const SpacePtr& space, int site,
                                   const DenseMatrix& local_op) {
  require(space->is_tensor(), ErrorCode::InvalidArgument,
          "embedding needs a tensor space");
  require(site >= 0 && site < space->n_sites(), ErrorCode::InvalidArgument,
          "site index out of range");
  const Index d = space->local_dim(site);
  require(local_op.rows() == d && local_op.cols() == d,
          ErrorCode::DimensionMismatch,
          "local operator dimension does not match site");
  Index left = 1, right = 1;
  for (int s = 0; s < site; ++s) left *= space->local_dim(s);
  for (int s = site + 1; s < space->n_sites(); ++s)
    right *= space->local_dim(s);

  std::vector<Eigen::Triplet<Complex>> trips;
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) {
      Complex v = local_op(i, j);
      if (v == Complex(0.0)) continue;
      for (Index l = 0; l < left; ++l)
        for (Index r = 0; r < right; ++r)
          trips.emplace_back((l * d + i) * right + r, (l * d + j) * right + r,
                             v);
    }
  SparseMatrix m(space->dimension(), space->dimension());
  m.setFromTriplets(trips.begin(), trips.end());
  return SparseOperator(space, std::move(m));
}

SparseOperator atom_dyad(const SpacePtr& space, int atom, Level to,
                         Level from) {
  require(atom >= 0 && atom < space->n_atoms(), ErrorCode::InvalidArgument,
          "atom index out of range");
  int ti = space->level_index(to), fi = space->level_index(from);
  require(ti >= 0 && fi >= 0, ErrorCode::MissingLevel,
          std::string("dyad |") + level_char(to) + "><" + level_char(from) +
              "| needs levels missing from the space");
  const Index d = static_cast<Index>(space->levels().size());
  DenseMatrix local = DenseMatrix::Zero(d, d);
  local(ti, fi) = 1.0;
  return embed_site_operator(space, atom, local);
}

SparseOperator cavity_annihilation(const SpacePtr& space) {
  require(space->is_tensor() && space->has_cavity(), ErrorCode::InvalidArgument,
          "space has no cavity");
  const int nc = *space->cavity_cutoff() + 1;
  DenseMatrix a = DenseMatrix::Zero(nc, nc);
  for (int n = 1; n < nc; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return embed_site_operator(space, space->n_atoms(), a);
}

StateVector ket_from_labels(const SpacePtr& space, std::string_view atom_labels,
                            int photon) {
  return basis_ket(space, space->index_of(atom_labels, photon));
}

StateVector basis_ket(const SpacePtr& space, Index i) {
  require(i >= 0 && i < space->dimension(), ErrorCode::InvalidArgument,
          "basis index out of range");
  DenseVector v = DenseVector::Zero(space->dimension());
  v(i) = 1.0;
  return StateVector(space, std::move(v));
}

SparseOperator dyad(const StateVector& ket, const StateVector& bra) {
  check_same_space(ket.space(), bra.space(), "dyad");
  const DenseVector& a = ket.amplitudes();
  const DenseVector& b = bra.amplitudes();
  std::vector<Eigen::Triplet<Complex>> trips;
  for (Index j = 0; j < b.size(); ++j) {
    if (b(j) == Complex(0.0)) continue;
    for (Index i = 0; i < a.size(); ++i)
      if (a(i) != Complex(0.0))
        trips.emplace_back(i, j, a(i) * std::conj(b(j)));
  }
  SparseMatrix m(a.size(), a.size());
  m.setFromTriplets(trips.begin(), trips.end());
  return SparseOperator(ket.space_ptr(), std::move(m));
}

SparseOperator projector(const StateVector& ket) {
  return dyad(ket, ket).with_hint(true);
}

Complex expectation(const SparseOperator& op, const StateVector& psi) {
  check_same_space(op.space(), psi.space(), "expectation");
  return psi.amplitudes().dot(op.matrix() * psi.amplitudes());
}

Complex expectation(const SparseOperator& op, const DensityMatrix& rho) {
  check_same_space(op.space(), rho.space(), "expectation");
  // Tr(A rho) = sum_ij A_ij rho_ji
  Complex acc = 0.0;
  const SparseMatrix& a = op.matrix();
  for (Index k = 0; k < a.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(a, k); it; ++it)
      acc += it.value() * rho.matrix()(it.col(), it.row());
  return acc;
}

DenseMatrix basis_matrix(const std::vector<StateVector>& states) {
  require(!states.empty(), ErrorCode::InvalidArgument, "empty subspace basis");
  DenseMatrix b(states.front().space().dimension(),
                static_cast<Index>(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) {
    check_same_space(states.front().space(), states[k].space(),
                     "basis_matrix");
    b.col(static_cast<Index>(k)) = states[k].amplitudes();
  }
  DenseMatrix gram = b.adjoint() * b;
  double err =
      (gram - DenseMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  require(err < 1e-10, ErrorCode::InvalidArgument,
          "subspace basis is not orthonormal");
  return b;
}

}  // namespace ghzsim
