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

#include "triphoton/qops.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace triphoton {

namespace {

constexpr Complex kI(0.0, 1.0);

Eigen::Matrix2cd make_pauli(char label) {
  Eigen::Matrix2cd m;
  switch (label) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -kI, kI, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("unknown Pauli label");
  }
  return m;
}

}  // namespace

const Eigen::Matrix2cd& pauli_i() {
  static const Eigen::Matrix2cd m = make_pauli('I');
  return m;
}

const Eigen::Matrix2cd& pauli_x() {
  static const Eigen::Matrix2cd m = make_pauli('X');
  return m;
}

const Eigen::Matrix2cd& pauli_y() {
  static const Eigen::Matrix2cd m = make_pauli('Y');
  return m;
}

const Eigen::Matrix2cd& pauli_z() {
  static const Eigen::Matrix2cd m = make_pauli('Z');
  return m;
}

const Eigen::Matrix2cd& pauli(char label) {
  switch (label) {
    case 'I':
      return pauli_i();
    case 'X':
      return pauli_x();
    case 'Y':
      return pauli_y();
    case 'Z':
      return pauli_z();
    default:
      throw std::invalid_argument("unknown Pauli label");
  }
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector tensor(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix projector(const Vector& psi) { return psi * psi.adjoint(); }

Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep) {
  if (rho.rows() != kDim || rho.cols() != kDim)
    throw std::invalid_argument("partial_trace expects an 8x8 density matrix");
  if (keep.empty() || keep.size() >= static_cast<std::size_t>(kQubits))
    throw std::invalid_argument(
        "keep set must be a nonempty proper subset of the three photons");

  bool kept[kQubits] = {false, false, false};
  for (int q : keep) {
    if (q < 0 || q >= kQubits) throw std::invalid_argument("photon index out of range");
    if (kept[q]) throw std::invalid_argument("duplicate photon index");
    kept[q] = true;
  }

  // Kept photons in ascending order; photon q occupies bit (2 - q).
  std::vector<int> kept_bits, traced_bits;
  for (int q = 0; q < kQubits; ++q)
    (kept[q] ? kept_bits : traced_bits).push_back(2 - q);

  const int out_dim = 1 << static_cast<int>(kept_bits.size());
  const int env_dim = 1 << static_cast<int>(traced_bits.size());
  Matrix out = Matrix::Zero(out_dim, out_dim);

  for (int m = 0; m < out_dim; ++m) {
    for (int n = 0; n < out_dim; ++n) {
      int base_m = 0, base_n = 0;
      for (std::size_t q = 0; q < kept_bits.size(); ++q) {
        base_m |= ((m >> (kept_bits.size() - 1 - q)) & 1) << kept_bits[q];
        base_n |= ((n >> (kept_bits.size() - 1 - q)) & 1) << kept_bits[q];
      }
      Complex sum = 0.0;
      for (int e = 0; e < env_dim; ++e) {
        int env = 0;
        for (std::size_t q = 0; q < traced_bits.size(); ++q)
          env |= ((e >> (traced_bits.size() - 1 - q)) & 1) << traced_bits[q];
        sum += rho(base_m | env, base_n | env);
      }
      out(m, n) = sum;
    }
  }
  return out;
}

Eigen::Matrix2cd su2(const SU2Parameters& p) {
  const double c = std::cos(p.beta / 2.0);
  const double s = std::sin(p.beta / 2.0);
  const double sum = (p.alpha + p.gamma) / 2.0;
  const double diff = (p.alpha - p.gamma) / 2.0;
  Eigen::Matrix2cd u;
  u(0, 0) = c * std::exp(kI * sum);
  u(0, 1) = s * std::exp(kI * diff);
  u(1, 0) = -s * std::exp(-kI * diff);
  u(1, 1) = c * std::exp(-kI * sum);
  return u;
}

LocalUnitaryTriple LocalUnitaryTriple::identity() {
  return {Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity(),
          Eigen::Matrix2cd::Identity()};
}

LocalUnitaryTriple LocalUnitaryTriple::from_params(
    const std::array<double, 9>& angles) {
  return {su2({angles[0], angles[1], angles[2]}),
          su2({angles[3], angles[4], angles[5]}),
          su2({angles[6], angles[7], angles[8]})};
}

Matrix local_product(const LocalUnitaryTriple& u) {
  Matrix ab = tensor(Matrix(u.a), Matrix(u.b));
  return tensor(ab, Matrix(u.c));
}

Matrix conjugate_local(const Matrix& rho, const LocalUnitaryTriple& u) {
  const Matrix big = local_product(u);
  return big * rho * big.adjoint();
}

double pauli_expectation(const Matrix& rho,
                         const std::array<char, 3>& labels) {
  const Matrix op = tensor(tensor(Matrix(pauli(labels[0])), Matrix(pauli(labels[1]))),
                           Matrix(pauli(labels[2])));
  return (rho * op).trace().real();
}

double purity(const Matrix& rho) { return (rho * rho).trace().real(); }

void validate_density_matrix(const Matrix& rho) {
  const auto fail = [](const std::string& what) {
    throw std::runtime_error("density matrix violation: " + what);
  };

  if (rho.rows() != rho.cols()) fail("not square");
  const Eigen::Index n = rho.rows();
  if (n != 2 && n != 4 && n != 8) fail("side must be 2, 4 or 8");

  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) {
    std::ostringstream os;
    os << "not Hermitian (max residue " << herm << ")";
    fail(os.str());
  }

  const double tr = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr > 1e-10) {
    std::ostringstream os;
    os << "trace differs from 1 by " << tr;
    fail(os.str());
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      ((rho + rho.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-9) {
    std::ostringstream os;
    os << "negative eigenvalue " << min_eig;
    fail(os.str());
  }
}

}  // namespace triphoton
