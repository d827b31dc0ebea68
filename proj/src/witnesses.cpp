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

#include "triphoton/witnesses.hpp"

#include <cmath>
#include <stdexcept>

namespace triphoton {

namespace {

// Diagonal entries may pick up -1e-15 noise from conjugation chains; clamp
// before roots.
double diag(const Eigen::Ref<const Matrix>& rho, int i) {
  return std::max(rho(i, i).real(), 0.0);
}

// Photon q occupies bit (2 - q) of a basis label.
int block_mask(const std::vector<int>& photons) {
  int mask = 0;
  for (int q : photons) mask |= 1 << (2 - q);
  return mask;
}

}  // namespace

const char* to_string(Witness w) {
  switch (w) {
    case Witness::Sep:
      return "qsep";
    case Witness::Ghz:
      return "qghz";
    default:
      return "qw";
  }
}

double q_generic(const Eigen::Ref<const Matrix>& rho, const SeedPair& seed,
                 int k) {
  if (k != 2 && k != 3) throw std::invalid_argument("k must be 2 or 3");
  if (seed.chi1 == seed.chi2)
    throw std::invalid_argument("seed labels must differ");
  if (seed.chi1 < 0 || seed.chi1 >= kDim || seed.chi2 < 0 || seed.chi2 >= kDim)
    throw std::invalid_argument("seed labels must be basis indices 0..7");

  static const std::vector<std::vector<std::vector<int>>> partitions_k2 = {
      {{0}, {1, 2}}, {{1}, {0, 2}}, {{2}, {0, 1}}};
  static const std::vector<std::vector<std::vector<int>>> partitions_k3 = {
      {{0}, {1}, {2}}};
  const auto& partitions = (k == 2) ? partitions_k2 : partitions_k3;

  const int x = seed.chi1;
  const int y = seed.chi2;
  const double off_diagonal = std::abs(rho(x, y));

  double penalty = 0.0;
  for (const auto& partition : partitions) {
    // Each block contributes the pair of diagonal entries obtained by
    // swapping that block's bits between the two seed labels.
    double product = 1.0;
    for (const auto& block : partition) {
      const int mask = block_mask(block);
      const int x_swapped = (x & ~mask) | (y & mask);
      const int y_swapped = (y & ~mask) | (x & mask);
      product *= diag(rho, x_swapped) * diag(rho, y_swapped);
    }
    penalty += std::pow(product, 1.0 / (2.0 * k));
  }
  return 2.0 * (off_diagonal - penalty);
}

double q_sep(const Eigen::Ref<const Matrix>& rho) {
  const double product = diag(rho, 1) * diag(rho, 2) * diag(rho, 3) *
                         diag(rho, 4) * diag(rho, 5) * diag(rho, 6);
  return 2.0 * std::abs(rho(0, 7)) - 2.0 * std::pow(product, 1.0 / 6.0);
}

double q_ghz(const Eigen::Ref<const Matrix>& rho) {
  return 2.0 * (std::abs(rho(0, 7)) - std::sqrt(diag(rho, 6) * diag(rho, 1)) -
                std::sqrt(diag(rho, 5) * diag(rho, 2)) -
                std::sqrt(diag(rho, 3) * diag(rho, 4)));
}

double q_w(const Eigen::Ref<const Matrix>& rho) {
  const double off = 2.0 * (std::abs(rho(1, 2)) + std::abs(rho(1, 4)) +
                            std::abs(rho(2, 4)));
  const double d0 = diag(rho, 0);
  const double penalty = diag(rho, 1) + diag(rho, 2) + diag(rho, 4) +
                         2.0 * std::sqrt(d0 * diag(rho, 3)) +
                         2.0 * std::sqrt(d0 * diag(rho, 5)) +
                         2.0 * std::sqrt(d0 * diag(rho, 6));
  return off - penalty;
}

double evaluate(Witness w, const Eigen::Ref<const Matrix>& rho) {
  switch (w) {
    case Witness::Sep:
      return q_sep(rho);
    case Witness::Ghz:
      return q_ghz(rho);
    default:
      return q_w(rho);
  }
}

Complex element_from_pauli(const std::map<std::string, double>& expectations) {
  const auto get = [&expectations](const char* key) {
    const auto it = expectations.find(key);
    if (it == expectations.end())
      throw std::invalid_argument(std::string("missing expectation ") + key);
    return it->second;
  };

  const double re = get("XXX") - get("XYY") - get("YXY") - get("YYX");
  const double im = -(get("XXY") + get("XYX") + get("YXX") - get("YYY"));
  return Complex(re, im) / 8.0;
}

}  // namespace triphoton
