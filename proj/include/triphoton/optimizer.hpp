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
#include <cstdint>
#include <vector>

#include "triphoton/decay_states.hpp"
#include "triphoton/kinematics.hpp"
#include "triphoton/witnesses.hpp"

namespace triphoton {

struct OptimizerConfig {
  // Multi-start budget. Start 0 is always the identity frame; a few fixed
  // structured frames follow, then Haar-like random frames with per-restart
  // streams seeded as seed ^ restart index.
  int restarts = 200;
  // Cap on simplex iterations per start.
  int local_iterations = 500;
  // Stop a local search once the simplex value spread falls below this.
  double convergence_tol = 1e-7;
  std::uint64_t seed = 0;
};

struct WitnessReport {
  Witness witness = Witness::Sep;
  double raw_value = 0.0;        // at the identity frame, no optimization
  double optimized_value = 0.0;  // best over all restarts
  std::array<double, 9> best_params{};  // Euler angles (a, b, c)
  int restarts_used = 0;
  int best_restart = 0;  // ties broken by lowest restart index
  bool converged = false;
};

/// Maximizes witness(U rho U†) over local unitaries U = Ua ⊗ Ub ⊗ Uc with a
/// multi-start derivative-free simplex search over the nine Euler angles.
/// Deterministic for a fixed config; optimized_value never falls below the
/// identity-frame value.
WitnessReport optimize(const Matrix& rho, Witness witness,
                       const OptimizerConfig& config);

// Which family of decay states a sweep evaluates.
struct SweepStateSpec {
  bool mixed = false;
  int s = 0;              // pure states only
  double phi_plane = 0.0;
  double p = 1.0 / 3.0;   // mixed states only
};

struct SweepPoint {
  DecayAngles angles;
  Region region = Region::III;
  bool degenerate = false;  // no polarization amplitude at these angles
  WitnessReport report;     // meaningless when degenerate
};

// Row-major n x n grid over [0, 2*pi)^2: theta_ab outer, theta_bc inner,
// both at multiples of 2*pi/n.
std::vector<DecayAngles> angle_grid(int n);

/// Optimized witness value at every grid point, each annotated with its
/// kinematic region. Points whose state construction degenerates are
/// marked instead of valued. Grid points are independent and evaluated
/// concurrently when `threads` > 1 (0 picks the hardware count); the
/// result order and content do not depend on the schedule.
std::vector<SweepPoint> sweep(const std::vector<DecayAngles>& grid,
                              const SweepStateSpec& state, Witness witness,
                              const OptimizerConfig& config, int threads = 0);

}  // namespace triphoton
