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

#include <stdexcept>

#include "triphoton/qops.hpp"

namespace triphoton {

// In-plane separation angles between the three photon momenta, radians.
// The third angle is theta_ca = 2*pi - theta_ab - theta_bc (mod 2*pi).
struct DecayAngles {
  double theta_ab = 0.0;
  double theta_bc = 0.0;

  double theta_ca() const;
};

// Spin projection s in {-1, 0, +1} along the quantization axis, and the
// angle phi_plane in [0, pi/2] between that axis and the decay plane.
struct SpinSetting {
  int s = 0;
  double phi_plane = 0.0;
};

// Raised when the requested decay configuration carries no polarization
// amplitude (final vector norm below 1e-12, e.g. both angles zero).
class DegenerateKinematics : public std::runtime_error {
 public:
  explicit DegenerateKinematics(const DecayAngles& angles);

  DecayAngles angles;
};

// The unnormalized symmetric three-photon seed
//   |000> - |110> - |011> - |101>,
// invariant under any permutation of the photons; squared norm 4.
Vector base_state();

// Diagonal operator imprinting the decay geometry on the polarization
// basis. Entry at |ijk> is
//   (-1)^k sin²(t_ab/2) + (-1)^j sin²((t_ab+t_bc)/2) + (-1)^i sin²(t_bc/2),
// so each photon's index pairs with the angle subtended by the other two.
Matrix kinematic_operator(const DecayAngles& angles);

// Closed form for the squared norm of kinematic_operator(angles) applied to
// base_state():
//   1/2 (9 + cos 2t_ab + cos(2t_ab + 2t_bc) + cos 2t_bc
//        - 4(cos t_ab + cos(t_ab + t_bc) + cos t_bc)).
double normalization(const DecayAngles& angles);

/// Normalized three-photon polarization state for the given decay geometry
/// and spin setting. The s=0 state is
///   (cos(phi) 1⊗1⊗1 + sin(phi) sx⊗sx⊗sx) · R(angles) · base_state(),
/// renormalized; s=+1 applies sx⊗sx⊗sx to it and s=-1 applies sy⊗sy⊗sy.
/// Throws DegenerateKinematics when the vector norm falls below 1e-12.
Vector pure_state(const DecayAngles& angles, const SpinSetting& spin);

/// Spin-mixed state
///   p |psi_0><psi_0| + (1-p)/2 |psi_+1><psi_+1| + (1-p)/2 |psi_-1><psi_-1|
/// for mixing weight p in [0, 1]. Throws DegenerateKinematics like
/// pure_state and std::invalid_argument for p outside [0, 1].
Matrix mixed_state(const DecayAngles& angles, double phi_plane, double p);

}  // namespace triphoton
