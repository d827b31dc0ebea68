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

#include "triphoton/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triphoton {

namespace {

Matrix reduced_first_factor(const Vector& psi, int dim_first) {
  if (dim_first <= 0 || psi.size() % dim_first != 0)
    throw std::invalid_argument("bipartition does not divide the state");
  const Eigen::Index dim_rest = psi.size() / dim_first;
  Matrix rho = Matrix::Zero(dim_first, dim_first);
  for (Eigen::Index i = 0; i < dim_first; ++i)
    for (Eigen::Index j = 0; j < dim_first; ++j)
      for (Eigen::Index r = 0; r < dim_rest; ++r)
        rho(i, j) += psi(i * dim_rest + r) * std::conj(psi(j * dim_rest + r));
  return rho;
}

// Single-photon reduction of an 8-component pure state; avoids forming the
// 8x8 projector.
Eigen::Matrix2cd reduced_single(const Vector& psi, int pivot) {
  if (psi.size() != kDim) throw std::invalid_argument("expected a 3-qubit state");
  if (pivot < 0 || pivot > 2) throw std::invalid_argument("pivot must be 0, 1 or 2");
  const int bit = 2 - pivot;
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int n = 0; n < kDim; ++n) {
    for (int m = 0; m < kDim; ++m) {
      if ((n & ~(1 << bit)) != (m & ~(1 << bit))) continue;
      rho((n >> bit) & 1, (m >> bit) & 1) += psi(n) * std::conj(psi(m));
    }
  }
  return rho;
}

}  // namespace

double concurrence_pure(const Vector& psi, int dim_first) {
  const Matrix rho = reduced_first_factor(psi, dim_first);
  const double p = (rho * rho).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

double concurrence_mixed(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("expected a 2-qubit density matrix");

  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  // The lambdas are the square roots of the eigenvalues of
  // rho (sy⊗sy) rho* (sy⊗sy), equal to the singular values of the support
  // matrix M_ij = sqrt(mu_i mu_j) <v_i| sy⊗sy |v_j*> over the spectral
  // decomposition rho = sum mu_i |v_i><v_i|. Working on the support keeps
  // rank-deficient directions exactly zero instead of sqrt-amplifying
  // eigensolver noise.
  Eigen::SelfAdjointEigenSolver<Matrix> spectral(rho);
  std::vector<int> support;
  for (int i = 0; i < 4; ++i)
    if (spectral.eigenvalues()(i) > 1e-14) support.push_back(i);

  std::array<double, 4> lambdas{};
  if (!support.empty()) {
    const int r = static_cast<int>(support.size());
    Matrix m(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const auto vi = spectral.eigenvectors().col(support[i]);
        const auto vj = spectral.eigenvectors().col(support[j]);
        m(i, j) = std::sqrt(spectral.eigenvalues()(support[i]) *
                            spectral.eigenvalues()(support[j])) *
                  (vi.adjoint() * yy * vj.conjugate())(0, 0);
      }
    Eigen::JacobiSVD<Matrix> svd(m);
    for (int i = 0; i < r; ++i) lambdas[i] = svd.singularValues()(i);
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double tangle(const Vector& psi, int pivot) {
  const Eigen::Matrix2cd rho = reduced_single(psi, pivot);
  return 4.0 * rho.determinant().real();
}

MonogamyReport monogamy_gap(const Vector& psi, int pivot) {
  MonogamyReport report;
  report.pivot = pivot;
  report.tangle = tangle(psi, pivot);

  std::vector<int> partners;
  for (int q = 0; q < kQubits; ++q)
    if (q != pivot) partners.push_back(q);

  const Matrix rho3 = projector(psi);
  const auto pair_c_sq = [&](int partner) {
    std::vector<int> keep = {pivot, partner};
    std::sort(keep.begin(), keep.end());
    const double c = concurrence_mixed(partial_trace(rho3, keep));
    return c * c;
  };

  report.c_sq_1 = pair_c_sq(partners[0]);
  report.c_sq_2 = pair_c_sq(partners[1]);
  report.gap = report.tangle - report.c_sq_1 - report.c_sq_2;
  return report;
}

}  // namespace triphoton
