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

#include "triphoton/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace triphoton {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Sines this far below zero still count as closure; region-II membership
// uses the same width.
constexpr double kBoundaryEps = 1e-9;

double wrap_two_pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y;
}

}  // namespace

double EnergyFractions::max() const { return std::max({wa, wb, wc}); }
double EnergyFractions::min() const { return std::min({wa, wb, wc}); }

const char* to_string(Region r) {
  switch (r) {
    case Region::I:
      return "I";
    case Region::II:
      return "II";
    default:
      return "III";
  }
}

std::optional<EnergyFractions> energy_fractions(const DecayAngles& angles) {
  const double t_ab = wrap_two_pi(angles.theta_ab);
  const double t_bc = wrap_two_pi(angles.theta_bc);
  const double t_ca = wrap_two_pi(kTwoPi - t_ab - t_bc);

  // The three wrapped angles sum to 0, 2*pi or 4*pi; only 2*pi closes the
  // momentum triangle (0 is the all-collinear direction, 4*pi needs a
  // reflex angle).
  const double angle_sum = t_ab + t_bc + t_ca;
  if (std::abs(angle_sum - kTwoPi) > 1e-6) return std::nullopt;

  // Sine rule: each fraction is proportional to the sine of the angle
  // subtended by the other two photons.
  double s_a = std::sin(t_bc);
  double s_b = std::sin(t_ca);
  double s_c = std::sin(t_ab);
  if (s_a < -kBoundaryEps || s_b < -kBoundaryEps || s_c < -kBoundaryEps)
    return std::nullopt;
  s_a = std::max(s_a, 0.0);
  s_b = std::max(s_b, 0.0);
  s_c = std::max(s_c, 0.0);

  const double total = s_a + s_b + s_c;
  if (total > kBoundaryEps)
    return EnergyFractions{s_a / total, s_b / total, s_c / total};

  // All sines vanish only for the {0, pi, pi} family: two photons exactly
  // back to back, the third collinear with one of them. The photon opposite
  // the zero angle carries E/2; the collinear pair's split is not fixed by
  // the angles, so report the symmetric limit.
  if (t_ab < kBoundaryEps) return EnergyFractions{0.25, 0.25, 0.5};
  if (t_bc < kBoundaryEps) return EnergyFractions{0.5, 0.25, 0.25};
  if (t_ca < kBoundaryEps) return EnergyFractions{0.25, 0.5, 0.25};
  return std::nullopt;
}

Region classify_region(const DecayAngles& angles) {
  const auto fractions = energy_fractions(angles);
  if (!fractions) return Region::III;
  if (fractions->max() >= 0.5 - kBoundaryEps ||
      fractions->min() <= kBoundaryEps)
    return Region::II;
  return Region::I;
}

std::optional<double> max_energy_fraction(const DecayAngles& angles) {
  const auto fractions = energy_fractions(angles);
  if (!fractions) return std::nullopt;
  return fractions->max();
}

std::optional<double> cos_angle_from_energies(double wa, double wb) {
  const double product = wa * wb;
  if (product < 1e-15) return std::nullopt;
  const double rhs = (0.5 - wa - wb + product) / product;
  if (rhs < -1.0 - 1e-12 || rhs > 1.0 + 1e-12) return std::nullopt;
  return std::clamp(rhs, -1.0, 1.0);
}

}  // namespace triphoton
