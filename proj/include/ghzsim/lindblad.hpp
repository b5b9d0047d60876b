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

#include <vector>

#include "ghzsim/hilbert.hpp"
#include "ghzsim/model.hpp"

namespace ghzsim {

// amplitude * exp(i*frequency*t) * op + h.c.
struct RotatingTerm {
  SparseOperator op;
  Complex amplitude;
  double frequency = 0.0;
};

class TimeDependentHamiltonian {
 public:
  explicit TimeDependentHamiltonian(SparseOperator static_part);

  void add_term(SparseOperator op, Complex amplitude, double frequency);

  const SparseOperator& static_part() const { return static_; }
  const std::vector<RotatingTerm>& terms() const { return terms_; }
  const SpacePtr& space_ptr() const { return static_.space_ptr(); }
  const SpaceSpec& space() const { return static_.space(); }
  bool is_static() const { return terms_.empty(); }

  SparseOperator at(double t) const;

 private:
  SparseOperator static_;
  std::vector<RotatingTerm> terms_;
};

struct LindbladModel {
  TimeDependentHamiltonian hamiltonian;
  std::vector<CollapseChannel> channels;

  LindbladModel(TimeDependentHamiltonian h, std::vector<CollapseChannel> c);
  LindbladModel(SparseOperator h, std::vector<CollapseChannel> c);

  const SpacePtr& space_ptr() const { return hamiltonian.space_ptr(); }
  const SpaceSpec& space() const { return hamiltonian.space(); }
  Index dimension() const { return space().dimension(); }
  bool is_time_independent() const { return hamiltonian.is_static(); }
};

// Project every operator onto span(basis) (orthonormal columns in the
// model's basis). The reduced model lives on `reduced_space`.
LindbladModel restrict_model(const LindbladModel& model,
                             const DenseMatrix& basis,
                             const SpacePtr& reduced_space);

}  // namespace ghzsim
