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

#include "triphoton/decay_states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace triphoton {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegenerateNorm = 1e-12;

double wrap_two_pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y;
}

Vector apply_pauli_cube(const Eigen::Matrix2cd& p, const Vector& v) {
  const Matrix op = tensor(tensor(Matrix(p), Matrix(p)), Matrix(p));
  return op * v;
}

}  // namespace

double DecayAngles::theta_ca() const {
  return wrap_two_pi(kTwoPi - theta_ab - theta_bc);
}

DegenerateKinematics::DegenerateKinematics(const DecayAngles& a)
    : std::runtime_error([&a] {
        std::ostringstream os;
        os << "degenerate kinematics: no polarization amplitude at angles ("
           << a.theta_ab << ", " << a.theta_bc << ")";
        return os.str();
      }()),
      angles(a) {}

Vector base_state() {
  Vector v = Vector::Zero(kDim);
  v(0b000) = 1.0;
  v(0b110) = -1.0;
  v(0b011) = -1.0;
  v(0b101) = -1.0;
  return v;
}

Matrix kinematic_operator(const DecayAngles& angles) {
  const double s_ab = std::pow(std::sin(angles.theta_ab / 2.0), 2);
  const double s_mid = std::pow(std::sin((angles.theta_ab + angles.theta_bc) / 2.0), 2);
  const double s_bc = std::pow(std::sin(angles.theta_bc / 2.0), 2);

  Matrix r = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const double entry = (k ? -s_ab : s_ab) + (j ? -s_mid : s_mid) +
                             (i ? -s_bc : s_bc);
        r(4 * i + 2 * j + k, 4 * i + 2 * j + k) = entry;
      }
  return r;
}

double normalization(const DecayAngles& angles) {
  const double tab = angles.theta_ab;
  const double tbc = angles.theta_bc;
  return 0.5 * (9.0 + std::cos(2.0 * tab) + std::cos(2.0 * tab + 2.0 * tbc) +
                std::cos(2.0 * tbc) -
                4.0 * (std::cos(tab) + std::cos(tab + tbc) + std::cos(tbc)));
}

Vector pure_state(const DecayAngles& angles, const SpinSetting& spin) {
  if (spin.s != -1 && spin.s != 0 && spin.s != 1)
    throw std::invalid_argument("spin projection must be -1, 0 or +1");

  const Vector weighted = kinematic_operator(angles) * base_state();
  Vector v = std::cos(spin.phi_plane) * weighted +
             std::sin(spin.phi_plane) * apply_pauli_cube(pauli_x(), weighted);

  const double norm = v.norm();
  if (norm < kDegenerateNorm) throw DegenerateKinematics(angles);
  v /= norm;

  if (spin.s == 1) v = apply_pauli_cube(pauli_x(), v);
  if (spin.s == -1) v = apply_pauli_cube(pauli_y(), v);
  return v;
}

Matrix mixed_state(const DecayAngles& angles, double phi_plane, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("mixing weight must lie in [0, 1]");

  const Vector s0 = pure_state(angles, {0, phi_plane});
  const Vector sp = pure_state(angles, {1, phi_plane});
  const Vector sm = pure_state(angles, {-1, phi_plane});
  return p * projector(s0) +
         0.5 * (1.0 - p) * (projector(sp) + projector(sm));
}

}  // namespace triphoton
