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

#include "sylvester.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>

namespace ghzsim::detail {

ShiftedLyapunov::ShiftedLyapunov(const DenseMatrix& a) {
  Eigen::ComplexSchur<DenseMatrix> schur(a, true);
  require(schur.info() == Eigen::Success, ErrorCode::Numerical,
          "Schur factorization failed");
  t_ = schur.matrixT();
  u_ = schur.matrixU();
  scale_ = std::max(1e-300, a.cwiseAbs().maxCoeff());
}

double ShiftedLyapunov::max_real_eigenvalue() const {
  double mx = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < t_.rows(); ++i) mx = std::max(mx, t_(i, i).real());
  return mx;
}

// In the Schur basis: T Y + Y T^H - s Y = C with T upper triangular. Column j
// of Y T^H only involves columns k >= j of Y, so sweep j downwards.
DenseMatrix ShiftedLyapunov::solve(const DenseMatrix& c, Complex shift) const {
  const Index n = t_.rows();
  work_.noalias() = u_.adjoint() * c;
  DenseMatrix y;
  y.noalias() = work_ * u_;
  DenseVector rhs(n);
  for (Index j = n - 1; j >= 0; --j) {
    const Index m = n - 1 - j;
    rhs = y.col(j);
    if (m > 0)
      rhs.noalias() -= y.rightCols(m) * t_.row(j).tail(m).adjoint();
    const Complex diag_shift = std::conj(t_(j, j)) - shift;
    // back substitution with (T + diag_shift I)
    for (Index i = n - 1; i >= 0; --i) {
      Complex yi = rhs(i) / (t_(i, i) + diag_shift);
      rhs(i) = yi;
      if (i > 0) rhs.head(i).noalias() -= yi * t_.col(i).head(i);
    }
    y.col(j) = rhs;
  }
  work_.noalias() = u_ * y;
  DenseMatrix x;
  x.noalias() = work_ * u_.adjoint();
  return x;
}

namespace {

Complex inner(const DenseMatrix& a, const DenseMatrix& b) {
  return (a.array().conjugate() * b.array()).sum();
}

}  // namespace

GmresResult gmres(const MatrixOperator& op, const DenseMatrix& b,
                  const DenseMatrix& x0, double tol, int max_iter,
                  int restart) {
  GmresResult res;
  res.x = x0;
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    res.x.setZero(b.rows(), b.cols());
    res.converged = true;
    return res;
  }
  DenseMatrix r, w;
  std::vector<DenseMatrix> v;
  int total = 0;
  while (total < max_iter) {
    op(res.x, w);
    r = b - w;
    double beta = r.norm();
    res.relative_residual = beta / bnorm;
    if (res.relative_residual <= tol) {
      res.converged = true;
      break;
    }
    const int m = std::min(restart, max_iter - total);
    v.clear();
    v.push_back(r / beta);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m + 1, m);
    std::vector<Complex> cs(static_cast<std::size_t>(m)), sn(static_cast<std::size_t>(m));
    DenseVector g = DenseVector::Zero(m + 1);
    g(0) = beta;
    int k = 0;
    for (; k < m; ++k) {
      op(v[static_cast<std::size_t>(k)], w);
      ++total;
      // modified Gram-Schmidt, applied twice for stability
      for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i <= k; ++i) {
          Complex hik = inner(v[static_cast<std::size_t>(i)], w);
          h(i, k) += hik;
          w -= hik * v[static_cast<std::size_t>(i)];
        }
      double hn = w.norm();
      h(k + 1, k) = hn;
      for (int i = 0; i < k; ++i) {
        Complex a = h(i, k), bb = h(i + 1, k);
        h(i, k) = std::conj(cs[i]) * a + std::conj(sn[i]) * bb;
        h(i + 1, k) = -sn[i] * a + cs[i] * bb;
      }
      Complex a = h(k, k), bb = h(k + 1, k);
      double den = std::sqrt(std::norm(a) + std::norm(bb));
      if (den == 0.0) {
        cs[k] = 1.0;
        sn[k] = 0.0;
      } else {
        cs[k] = a / den;
        sn[k] = bb / den;
      }
      h(k, k) = std::conj(cs[k]) * a + std::conj(sn[k]) * bb;
      h(k + 1, k) = 0.0;
      g(k + 1) = -sn[k] * g(k);
      g(k) = std::conj(cs[k]) * g(k);
      res.relative_residual = std::abs(g(k + 1)) / bnorm;
      if (res.relative_residual <= tol || hn == 0.0) {
        ++k;
        break;
      }
      v.push_back(w / hn);
    }
    // back substitution for the k x k upper-triangular system
    DenseVector yv = DenseVector::Zero(k);
    for (int i = k - 1; i >= 0; --i) {
      Complex s = g(i);
      for (int j = i + 1; j < k; ++j) s -= h(i, j) * yv(j);
      yv(i) = s / h(i, i);
    }
    for (int i = 0; i < k; ++i) res.x += yv(i) * v[static_cast<std::size_t>(i)];
    res.iterations = total;
    if (res.relative_residual <= tol) {
      // confirm with the true residual
      op(res.x, w);
      res.relative_residual = (b - w).norm() / bnorm;
      if (res.relative_residual <= tol * 10) {
        res.converged = true;
        break;
      }
    }
  }
  res.iterations = total;
  return res;
}

}  // namespace ghzsim::detail
