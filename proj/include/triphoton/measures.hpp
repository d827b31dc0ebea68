// Copyright 2026 The triphoton developers
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

#include "triphoton/qops.hpp"

namespace triphoton {

// Concurrence of a normalized pure state across the bipartition
// (first dim_first dimensions | rest):
//   sqrt(2 (1 - Tr rho_first²)).
// In [0, 1] for qubit-qubit cuts.
double concurrence_pure(const Vector& psi, int dim_first = 2);

// Two-qubit mixed-state concurrence, max(0, l1 - l2 - l3 - l4) with l_i the
// decreasing square roots of the eigenvalues of
//   rho (sy⊗sy) rho* (sy⊗sy),
// conjugation taken in the computational basis.
double concurrence_mixed(const Matrix& rho);

// tau = 4 det rho_pivot for a normalized 3-qubit pure state; in [0, 1].
double tangle(const Vector& psi, int pivot);

// One-against-two entanglement budget of the pivot photon. The residual
// gap tau - C(rho_pivot,j)² - C(rho_pivot,k)² is nonnegative and, for pure
// states, independent of the pivot.
struct MonogamyReport {
  int pivot = 0;
  double tangle = 0.0;
  double c_sq_1 = 0.0;  // squared concurrence with the lower-labeled partner
  double c_sq_2 = 0.0;
  double gap = 0.0;
};

MonogamyReport monogamy_gap(const Vector& psi, int pivot);

}  // namespace triphoton
