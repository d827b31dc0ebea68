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

#include <optional>

#include "triphoton/decay_states.hpp"

namespace triphoton {

// Photon energies divided by the total energy. Feasible configurations have
// wa + wb + wc = 1 with each fraction in [0, 1/2].
struct EnergyFractions {
  double wa = 0.0;
  double wb = 0.0;
  double wc = 0.0;

  double max() const;
  double min() const;
};

// I:   interior of the physical triangle (no extremal energy),
// II:  boundary configurations where some photon reaches E/2 or 0,
// III: momentum closure impossible.
enum class Region { I, II, III };

const char* to_string(Region r);

/// Solves planar momentum closure for the energy fractions via the sine
/// rule: (wa, wb, wc) ∝ (sin t_bc, sin t_ca, sin t_ab), normalized to sum 1.
/// Angles are wrapped mod 2*pi first. Returns nullopt when closure fails
/// (some sine negative, or all photons collinear in one direction).
std::optional<EnergyFractions> energy_fractions(const DecayAngles& angles);

// Region III when infeasible; region II when the largest fraction reaches
// 1/2 or the smallest reaches 0, both within 1e-9; region I otherwise.
Region classify_region(const DecayAngles& angles);

// Largest single-photon energy fraction, when feasible.
std::optional<double> max_energy_fraction(const DecayAngles& angles);

/// Inverse relation: the cosine of the opening angle between photons a and b
/// from their energy fractions,
///   cos t_ab = (1/2 - wa - wb + wa·wb) / (wa·wb).
/// Returns nullopt when the right-hand side leaves [-1, 1] (no planar
/// solution) or when wa·wb < 1e-15.
std::optional<double> cos_angle_from_energies(double wa, double wb);

}  // namespace triphoton
