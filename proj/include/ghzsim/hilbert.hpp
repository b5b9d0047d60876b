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

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "ghzsim/error.hpp"

namespace ghzsim {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

enum class Level : char { Zero = '0', One = '1', Excited = 'e', Rydberg = 'r' };

Level level_from_char(char c);
char level_char(Level l);

// Composite space: atom 1 (x) atom 2 (x) ... (x) cavity. Atom levels follow
// the declared order, Fock states ascend. A "custom" space carries only a
// labelled basis and no tensor structure (used for reduced models).
class SpaceSpec {
 public:
  static SpaceSpec tensor(int n_atoms, std::vector<Level> levels,
                          std::optional<int> cavity_cutoff);
  static SpaceSpec custom(std::vector<std::string> basis_labels);

  bool is_tensor() const { return custom_labels_.empty(); }
  int n_atoms() const { return n_atoms_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::optional<int> cavity_cutoff() const { return cutoff_; }
  bool has_cavity() const { return cutoff_.has_value(); }
  bool has_level(Level l) const;
  int level_index(Level l) const;  // -1 if absent

  // Sites are atoms 0..n_atoms-1 followed by the cavity (if any).
  int n_sites() const { return n_atoms_ + (has_cavity() ? 1 : 0); }
  int local_dim(int site) const;
  Index dimension() const { return dim_; }

  // atom_labels like "0e1"; photon must be 0 when there is no cavity.
  Index index_of(std::string_view atom_labels, int photon = 0) const;
  // Custom spaces: look up a label directly.
  Index index_of_label(std::string_view label) const;
  std::string label(Index i) const;

  bool operator==(const SpaceSpec& o) const;
  bool operator!=(const SpaceSpec& o) const { return !(*this == o); }

 private:
  int n_atoms_ = 0;
  std::vector<Level> levels_;
  std::optional<int> cutoff_;
  std::vector<std::string> custom_labels_;
  Index dim_ = 0;
};

using SpacePtr = std::shared_ptr<const SpaceSpec>;

SpacePtr build_space(int n_atoms, std::vector<Level> levels,
                     std::optional<int> cavity_cutoff);
SpacePtr build_custom_space(std::vector<std::string> basis_labels);
std::vector<Level> parse_levels(std::string_view s);  // "01er"

class SparseOperator {
 public:
  SparseOperator(SpacePtr space, SparseMatrix m, bool hermitian_hint = false);

  static SparseOperator zero(SpacePtr space);
  static SparseOperator identity(SpacePtr space);
  static SparseOperator from_dense(SpacePtr space, const DenseMatrix& m,
                                   double drop_tol = 0.0);

  const SpaceSpec& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const SparseMatrix& matrix() const { return m_; }
  bool hermitian_hint() const { return hermitian_; }
  Index dimension() const { return m_.rows(); }
  Index nnz() const { return m_.nonZeros(); }

  SparseOperator adjoint() const;
  DenseMatrix dense() const { return DenseMatrix(m_); }
  Complex coeff(Index row, Index col) const;
  double max_abs() const;
  bool is_hermitian(double tol = 1e-12) const;
  SparseOperator with_hint(bool hermitian) const;

  SparseOperator& operator+=(const SparseOperator& o);
  SparseOperator& operator-=(const SparseOperator& o);
  SparseOperator& operator*=(Complex s);

 private:
  SpacePtr space_;
  SparseMatrix m_;
  bool hermitian_ = false;
};

SparseOperator operator+(SparseOperator a, const SparseOperator& b);
SparseOperator operator-(SparseOperator a, const SparseOperator& b);
SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(Complex s, SparseOperator a);
SparseOperator operator*(double s, SparseOperator a);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

void check_same_space(const SpaceSpec& a, const SpaceSpec& b,
                      const char* where);

class StateVector {
 public:
  StateVector(SpacePtr space, DenseVector amplitudes);
  const SpaceSpec& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const DenseVector& amplitudes() const { return v_; }
  double norm() const { return v_.norm(); }
  StateVector normalized() const;
  Complex inner(const StateVector& o) const;  // <this|o>

 private:
  SpacePtr space_;
  DenseVector v_;
};

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(Complex s, const StateVector& a);
StateVector operator*(const SparseOperator& op, const StateVector& a);

class DensityMatrix {
 public:
  DensityMatrix(SpacePtr space, DenseMatrix m);
  static DensityMatrix pure(const StateVector& psi);

  const SpaceSpec& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const DenseMatrix& matrix() const { return m_; }
  DenseMatrix& matrix() { return m_; }
  Index dimension() const { return m_.rows(); }

  Complex trace() const { return m_.trace(); }
  double hermiticity_error() const;
  void symmetrize();
  // Throws unless trace is within tol of 1 and Hermitian within herm_tol.
  void validate(double trace_tol = 1e-10, double herm_tol = 1e-12) const;

 private:
  SpacePtr space_;
  DenseMatrix m_;
};

SparseOperator embed_site_operator(const SpacePtr& space, int site,
                                   const DenseMatrix& local_op);
// |to><from| on one atom.
SparseOperator atom_dyad(const SpacePtr& space, int atom, Level to, Level from);
SparseOperator cavity_annihilation(const SpacePtr& space);

StateVector ket_from_labels(const SpacePtr& space, std::string_view atom_labels,
                            int photon = 0);
StateVector basis_ket(const SpacePtr& space, Index i);
SparseOperator projector(const StateVector& ket);
SparseOperator dyad(const StateVector& ket, const StateVector& bra);

Complex expectation(const SparseOperator& op, const StateVector& psi);
Complex expectation(const SparseOperator& op, const DensityMatrix& rho);

// Orthonormal columns spanning a subspace, expressed in the parent basis.
DenseMatrix basis_matrix(const std::vector<StateVector>& states);

}  // namespace ghzsim
