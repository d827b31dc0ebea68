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

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace triphoton {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Qubit ordering throughout: photon a is the most significant qubit, so the
// computational basis state |ijk> (i on a, j on b, k on c) sits at index
// 4i + 2j + k.
constexpr int kQubits = 3;
constexpr int kDim = 8;

// 2x2 Pauli matrices, indexable by label 'I', 'X', 'Y', 'Z'.
const Eigen::Matrix2cd& pauli_i();
const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();
const Eigen::Matrix2cd& pauli(char label);

// Kronecker product; dimensions multiply.
Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& a, const Vector& b);

// |psi><psi|
Matrix projector(const Vector& psi);

/// Reduced density matrix of a 3-qubit state on the kept photons
/// (0 = a, 1 = b, 2 = c). `keep` must be a nonempty proper subset of
/// {0,1,2}; kept photons appear in ascending order in the result.
/// Throws std::invalid_argument otherwise.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep);

// Euler angles of a 2x2 special unitary,
//   U = exp(i alpha sz/2) exp(i beta sy/2) exp(i gamma sz/2).
// Unrestricted reals; the map is onto SU(2).
struct SU2Parameters {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

Eigen::Matrix2cd su2(const SU2Parameters& p);

// One 2x2 unitary per photon, acting as a ⊗ b ⊗ c.
struct LocalUnitaryTriple {
  Eigen::Matrix2cd a;
  Eigen::Matrix2cd b;
  Eigen::Matrix2cd c;

  static LocalUnitaryTriple identity();
  static LocalUnitaryTriple from_params(const std::array<double, 9>& angles);
};

// 8x8 product a ⊗ b ⊗ c.
Matrix local_product(const LocalUnitaryTriple& u);

// (Ua ⊗ Ub ⊗ Uc) rho (Ua ⊗ Ub ⊗ Uc)†. Trace and spectrum are preserved.
Matrix conjugate_local(const Matrix& rho, const LocalUnitaryTriple& u);

// Tr(rho · P1 ⊗ P2 ⊗ P3) for Pauli labels from {I,X,Y,Z}; the imaginary
// residue of the trace is below 1e-10 for valid density matrices.
double pauli_expectation(const Matrix& rho, const std::array<char, 3>& labels);

// Tr(rho²), in [1/dim, 1].
double purity(const Matrix& rho);

/// Asserts the density-matrix contract: square with side 2, 4 or 8,
/// Hermitian within 1e-10 entrywise, unit trace within 1e-10, and minimum
/// eigenvalue >= -1e-9. Throws std::runtime_error naming the violation.
void validate_density_matrix(const Matrix& rho);

}  // namespace triphoton
