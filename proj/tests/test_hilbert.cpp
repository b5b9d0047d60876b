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

#include "doctest.h"
#include "ghzsim/hilbert.hpp"

#include <unsupported/Eigen/KroneckerProduct>

using namespace ghzsim;

TEST_CASE("tensor space dimensions and index layout") {
  auto s = build_space(3, parse_levels("01er"), 2);
  CHECK(s->dimension() == 192);
  CHECK(s->n_sites() == 4);
  CHECK(s->local_dim(3) == 3);
  // ((a1*L + a2)*L + a3)*(nmax+1) + n
  CHECK(s->index_of("1e0", 2) == ((1 * 4 + 2) * 4 + 0) * 3 + 2);
  CHECK(s->label(s->index_of("r01", 1)) == "r01|1");
  CHECK(s->index_of_label("r01|1") == s->index_of("r01", 1));
  CHECK(s->index_of_label("r01") == s->index_of("r01", 0));
  auto q = build_space(3, parse_levels("01"), std::nullopt);
  CHECK(q->dimension() == 8);
  CHECK(q->label(5) == "101");
}

TEST_CASE("missing levels and malformed labels are rejected") {
  auto s = build_space(3, parse_levels("01e"), 1);
  CHECK_THROWS_AS(s->index_of("r00"), Error);
  try {
    atom_dyad(s, 0, Level::Rydberg, Level::Zero);
    FAIL("expected MissingLevel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingLevel);
  }
  CHECK_THROWS_AS(s->index_of("00"), Error);
  CHECK_THROWS_AS(parse_levels("01x"), Error);
}

TEST_CASE("site embedding matches an explicit Kronecker product") {
  auto s = build_space(2, parse_levels("01e"), 1);
  DenseMatrix m = DenseMatrix::Random(3, 3);
  SparseOperator op = embed_site_operator(s, 1, m);
  DenseMatrix id3 = DenseMatrix::Identity(3, 3), id2 = DenseMatrix::Identity(2, 2);
  DenseMatrix ref = Eigen::kroneckerProduct(id3, Eigen::kroneckerProduct(m, id2).eval()).eval();
  CHECK((op.dense() - ref).norm() < 1e-14);
}

TEST_CASE("cavity ladder operator obeys truncated commutator") {
  auto s = build_space(1, parse_levels("01"), 3);
  SparseOperator a = cavity_annihilation(s);
  DenseMatrix c = commutator(a, a.adjoint()).dense();
  for (Index i = 0; i < s->dimension(); ++i) {
    const int n = static_cast<int>(i % 4);
    CHECK(std::abs(c(i, i) - Complex(n == 3 ? -3.0 : 1.0)) < 1e-14);
  }
  CHECK(std::abs(a.coeff(s->index_of("0", 1), s->index_of("0", 2)) - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("operators on different spaces do not mix") {
  auto a = build_space(1, parse_levels("01"), 1);
  auto b = build_space(1, parse_levels("01"), 2);
  try {
    auto x = SparseOperator::identity(a) + SparseOperator::identity(b);
    (void)x;
    FAIL("expected SpaceMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpaceMismatch);
  }
  // equal specs built separately are compatible
  auto a2 = build_space(1, parse_levels("01"), 1);
  CHECK_NOTHROW(SparseOperator::identity(a) + SparseOperator::identity(a2));
}

TEST_CASE("hermitian hint is validated") {
  auto s = build_space(1, parse_levels("01"), std::nullopt);
  SparseOperator d = atom_dyad(s, 0, Level::One, Level::Zero);
  CHECK_THROWS_AS(d.with_hint(true), Error);
  CHECK((d + d.adjoint()).is_hermitian());
}

TEST_CASE("kets, dyads, expectation") {
  auto s = build_space(2, parse_levels("01"), std::nullopt);
  StateVector a = ket_from_labels(s, "01"), b = ket_from_labels(s, "10");
  StateVector plus = (1 / std::sqrt(2.0)) * (a + b);
  CHECK(plus.norm() == doctest::Approx(1.0));
  CHECK(std::abs(a.inner(b)) == 0.0);
  CHECK(expectation(projector(a), plus).real() == doctest::Approx(0.5));
  DensityMatrix rho = DensityMatrix::pure(plus);
  CHECK(expectation(dyad(a, b), rho).real() == doctest::Approx(0.5));
  CHECK(rho.hermiticity_error() < 1e-16);
  CHECK_NOTHROW(rho.validate());
}

TEST_CASE("basis_matrix requires orthonormal input") {
  auto s = build_space(1, parse_levels("01e"), std::nullopt);
  StateVector z = ket_from_labels(s, "0"), o = ket_from_labels(s, "1");
  DenseMatrix b = basis_matrix({z, o});
  CHECK(b.cols() == 2);
  CHECK_THROWS_AS(basis_matrix({z, (1 / std::sqrt(2.0)) * (z + o)}), Error);
}

TEST_CASE("custom spaces use their labels") {
  auto s = build_custom_space({"a", "b", "c"});
  CHECK(!s->is_tensor());
  CHECK(s->dimension() == 3);
  CHECK(s->index_of_label("c") == 2);
  CHECK(s->label(1) == "b");
  CHECK_THROWS_AS(s->index_of_label("z"), Error);
  CHECK_THROWS_AS(build_custom_space({"a", "a"}), Error);
}
