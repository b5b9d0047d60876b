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
#include "ghzsim/lindblad.hpp"
#include "generator.hpp"

#include <cmath>

namespace ghzsim {

TimeDependentHamiltonian::TimeDependentHamiltonian(SparseOperator static_part)
    : static_(std::move(static_part)) {
  require(static_.is_hermitian(1e-12), ErrorCode::InvalidArgument,
          "static Hamiltonian part is not Hermitian");
}

void TimeDependentHamiltonian::add_term(SparseOperator op, Complex amplitude,
                                        double frequency) {
  check_same_space(static_.space(), op.space(), "add_term");
  terms_.push_back({std::move(op), amplitude, frequency});
}

SparseOperator TimeDependentHamiltonian::at(double t) const {
  SparseOperator h = static_;
  for (const auto& term : terms_) {
    Complex c = term.amplitude * std::exp(Complex(0.0, term.frequency * t));
    SparseOperator x = c * term.op;
    h += x + x.adjoint();
  }
  return h;
}

LindbladModel::LindbladModel(TimeDependentHamiltonian h,
                             std::vector<CollapseChannel> c)
    : hamiltonian(std::move(h)), channels(std::move(c)) {
  for (const auto& ch : channels) {
    check_same_space(space(), ch.op.space(), "LindbladModel");
    require(ch.rate >= 0.0, ErrorCode::InvalidArgument,
            "collapse channel rate must be non-negative");
  }
}

LindbladModel::LindbladModel(SparseOperator h, std::vector<CollapseChannel> c)
    : LindbladModel(TimeDependentHamiltonian(std::move(h)), std::move(c)) {}

LindbladModel restrict_model(const LindbladModel& model,
                             const DenseMatrix& basis,
                             const SpacePtr& reduced_space) {
  require(basis.rows() == model.dimension() &&
              basis.cols() == reduced_space->dimension(),
          ErrorCode::DimensionMismatch, "restriction basis has wrong shape");
  auto project = [&](const SparseOperator& op, bool herm) {
    DenseMatrix m = basis.adjoint() * (op.matrix() * basis);
    if (herm) m = 0.5 * (m + m.adjoint()).eval();
    SparseOperator out = SparseOperator::from_dense(reduced_space, m, 1e-14);
    return herm ? out.with_hint(true) : out;
  };
  TimeDependentHamiltonian h(project(model.hamiltonian.static_part(), true));
  for (const auto& t : model.hamiltonian.terms())
    h.add_term(project(t.op, false), t.amplitude, t.frequency);
  std::vector<CollapseChannel> ch;
  for (const auto& c : model.channels)
    ch.push_back({c.rate, project(c.op, false), c.name});
  return LindbladModel(std::move(h), std::move(ch));
}

namespace detail {

Generator::Generator(const LindbladModel& model) : n_(model.dimension()) {
  const Complex mi(0.0, -1.0);
  k0_ = mi * model.hamiltonian.static_part().matrix();
  for (const auto& ch : model.channels) {
    if (ch.rate == 0.0) continue;
    SparseMatrix c = std::sqrt(ch.rate) * ch.op.matrix();
    SparseMatrix cd = c.adjoint();
    SparseMatrix cdc = cd * c;
    k0_ -= 0.5 * cdc;
    jumps_.push_back(std::move(c));
    jumps_adj_.push_back(std::move(cd));
  }
  k0_.prune(Complex(0.0), 0.0);
  k0_.makeCompressed();
  for (const auto& t : model.hamiltonian.terms()) {
    SparseMatrix op = mi * t.op.matrix();
    SparseMatrix opa = mi * SparseMatrix(t.op.matrix().adjoint());
    rotating_.push_back({std::move(op), std::move(opa), t.amplitude, t.frequency});
  }
}

void Generator::apply_jumps(const DenseMatrix& rho, DenseMatrix& out) const {
  out.setZero(n_, n_);
  for (std::size_t k = 0; k < jumps_.size(); ++k) {
    tmp2_.noalias() = jumps_[k] * rho;
    out.noalias() += tmp2_ * jumps_adj_[k];
  }
}

void Generator::apply(const DenseMatrix& rho, double t, DenseMatrix& out) const {
  tmp_.noalias() = k0_ * rho;
  for (const auto& r : rotating_) {
    Complex c = r.amplitude * std::exp(Complex(0.0, r.frequency * t));
    tmp_.noalias() += c * (r.op * rho);
    tmp_.noalias() += std::conj(c) * (r.op_adj * rho);
  }
  out = tmp_ + tmp_.adjoint();
  for (std::size_t k = 0; k < jumps_.size(); ++k) {
    tmp2_.noalias() = jumps_[k] * rho;
    out.noalias() += tmp2_ * jumps_adj_[k];
  }
}

void Generator::apply_general(const DenseMatrix& x, DenseMatrix& out) const {
  tmp_.noalias() = k0_ * x;
  tmp2_.noalias() = k0_ * x.adjoint();
  out = tmp_ + tmp2_.adjoint();
  for (std::size_t k = 0; k < jumps_.size(); ++k) {
    tmp2_.noalias() = jumps_[k] * x;
    out.noalias() += tmp2_ * jumps_adj_[k];
  }
}

}  // namespace detail

DensityMatrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho,
                           double t) {
  check_same_space(model.space(), rho.space(), "lindblad_rhs");
  detail::Generator gen(model);
  DenseMatrix out;
  gen.apply(rho.matrix(), t, out);
  return DensityMatrix(rho.space_ptr(), std::move(out));
}

double residual_norm(const LindbladModel& model, const DensityMatrix& rho,
                     double t) {
  return lindblad_rhs(model, rho, t).matrix().norm();
}

DenseMatrix dense_generator(const LindbladModel& model, double t) {
  const Index n = model.dimension();
  require(n <= 64, ErrorCode::InvalidArgument,
          "dense superoperators are limited to dimension <= 64");
  const Complex mi(0.0, -1.0);
  DenseMatrix k = mi * DenseMatrix(model.hamiltonian.at(t).matrix());
  const DenseMatrix id = DenseMatrix::Identity(n, n);
  DenseMatrix sup = DenseMatrix::Zero(n * n, n * n);
  std::vector<DenseMatrix> cs;
  for (const auto& ch : model.channels) {
    DenseMatrix c = std::sqrt(ch.rate) * DenseMatrix(ch.op.matrix());
    k -= 0.5 * c.adjoint() * c;
    cs.push_back(std::move(c));
  }
  // Column-major vec: vec(A X B) = (B^T kron A) vec(X).
  auto add_kron = [&](const DenseMatrix& a, const DenseMatrix& b) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        Complex aij = a(i, j);
        if (aij == Complex(0.0)) continue;
        sup.block(i * n, j * n, n, n) += aij * b;
      }
  };
  add_kron(id, k);
  add_kron(k.conjugate(), id);
  for (const auto& c : cs) add_kron(c.conjugate(), c);
  return sup;
}

}  // namespace ghzsim
