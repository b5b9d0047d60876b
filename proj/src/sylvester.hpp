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

// Internal: Sylvester solves for X -> A X + X A^dagger - s X via a single
// complex Schur factorization of A, and a restarted GMRES on matrix-shaped
// unknowns (Frobenius inner product).

#include <functional>

#include "ghzsim/hilbert.hpp"

namespace ghzsim::detail {

class ShiftedLyapunov {
 public:
  explicit ShiftedLyapunov(const DenseMatrix& a);

  // Solve A X + X A^dagger - shift X = c.
  DenseMatrix solve(const DenseMatrix& c, Complex shift) const;
  // max_i Re(lambda_i(A)); the unshifted map is singular when this is ~0.
  double max_real_eigenvalue() const;
  double scale() const { return scale_; }

 private:
  DenseMatrix t_;
  DenseMatrix u_;
  double scale_ = 1.0;
  mutable DenseMatrix work_;
};

struct GmresResult {
  DenseMatrix x;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

using MatrixOperator = std::function<void(const DenseMatrix&, DenseMatrix&)>;

GmresResult gmres(const MatrixOperator& op, const DenseMatrix& b,
                  const DenseMatrix& x0, double tol, int max_iter,
                  int restart = 60);

}  // namespace ghzsim::detail
