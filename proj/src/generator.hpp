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

// Internal: precomputed pieces of a Lindblad generator for fast repeated
// application. L(rho) = K rho + rho K^dagger + sum_k c_k rho c_k^dagger with
// K = -iH - 1/2 sum_k c_k^dagger c_k and rates folded into c_k.

#include <vector>

#include "ghzsim/lindblad.hpp"

namespace ghzsim::detail {

class Generator {
 public:
  explicit Generator(const LindbladModel& model);

  Index dimension() const { return n_; }
  bool is_static() const { return rotating_.empty(); }

  // out = L(t) rho for Hermitian rho. out must not alias rho.
  void apply(const DenseMatrix& rho, double t, DenseMatrix& out) const;
  // Static L on an arbitrary (non-Hermitian) matrix, e.g. Krylov vectors.
  void apply_general(const DenseMatrix& x, DenseMatrix& out) const;
  // out = sum_k c_k rho c_k^dagger
  void apply_jumps(const DenseMatrix& rho, DenseMatrix& out) const;

  // Dense K for the static part (time-independent models).
  DenseMatrix dense_k() const { return DenseMatrix(k0_); }

 private:
  struct Rotating {
    SparseMatrix op;      // -i * op
    SparseMatrix op_adj;  // -i * op^dagger
    Complex amplitude;
    double frequency;
  };
  Index n_ = 0;
  SparseMatrix k0_;
  std::vector<Rotating> rotating_;
  std::vector<SparseMatrix> jumps_;
  std::vector<SparseMatrix> jumps_adj_;
  mutable DenseMatrix tmp_;
  mutable DenseMatrix tmp2_;
};

}  // namespace ghzsim::detail
