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

namespace ghzsim {

double population(const DensityMatrix& rho, const StateVector& ket) {
  check_same_space(rho.space(), ket.space(), "population");
  const DenseVector& v = ket.amplitudes();
  return v.dot(rho.matrix() * v).real();
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix().array().abs2()).sum();
}

double trace_real(const DensityMatrix& rho) { return rho.trace().real(); }

double min_eigenvalue(const DensityMatrix& rho) {
  DenseMatrix h = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double fidelity(const StateVector& target, const DensityMatrix& rho) {
  require(std::abs(rho.trace() - Complex(1.0)) <= 1e-6,
          ErrorCode::InvalidArgument, "fidelity: trace of rho is not 1");
  require(std::abs(target.norm() - 1.0) <= 1e-10, ErrorCode::InvalidArgument,
          "fidelity: target state is not normalized");
  return std::sqrt(std::max(0.0, population(rho, target)));
}

double fidelity(const DensityMatrix& target, const DensityMatrix& rho) {
  check_same_space(target.space(), rho.space(), "fidelity");
  require(std::abs(rho.trace() - Complex(1.0)) <= 1e-6 &&
              std::abs(target.trace() - Complex(1.0)) <= 1e-6,
          ErrorCode::InvalidArgument, "fidelity: trace is not 1");
  DenseMatrix s = 0.5 * (target.matrix() + target.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(s);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  DenseMatrix sq = es.eigenvectors() * ev.asDiagonal() *
                   es.eigenvectors().adjoint();
  DenseMatrix m = sq * rho.matrix() * sq;
  m = 0.5 * (m + m.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> em(m, Eigen::EigenvaluesOnly);
  return em.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
}

SparseOperator parity_operator(const SpacePtr& space) {
  SparseOperator p = SparseOperator::identity(space);
  for (int i = 0; i < space->n_atoms(); ++i)
    p = p * (atom_dyad(space, i, Level::One, Level::Zero) +
             atom_dyad(space, i, Level::Zero, Level::One));
  return p.with_hint(true);
}

ParityFeedback parity_and_feedback(const DensityMatrix& rho) {
  const SpacePtr& space = rho.space_ptr();
  SparseOperator p = parity_operator(space);
  // qubit-subspace projector: P^2
  SparseOperator q = p * p;
  SparseOperator rest = SparseOperator::identity(space) - q;
  SparseOperator plus = 0.5 * (q + p);
  SparseOperator minus = 0.5 * (q - p);
  SparseOperator z1 = atom_dyad(space, 0, Level::Zero, Level::Zero) -
                      atom_dyad(space, 0, Level::One, Level::One);
  SparseOperator flip = z1 * plus;
  const DenseMatrix& m = rho.matrix();
  DenseMatrix out = minus.matrix() * m * minus.matrix() +
                    flip.matrix() * m * SparseMatrix(flip.matrix().adjoint()) +
                    rest.matrix() * m * rest.matrix();
  ParityFeedback r{expectation(p, rho).real(),
                   DensityMatrix(space, std::move(out))};
  return r;
}

}  // namespace ghzsim
