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

#include <map>
#include <string>

#include "triphoton/qops.hpp"

namespace triphoton {

enum class Witness { Sep, Ghz, W };

const char* to_string(Witness w);

// Pair of distinct computational-basis labels (0..7) seeding the two-copy
// criterion below.
struct SeedPair {
  int chi1 = 0;
  int chi2 = 7;
};

/// Two-copy k-inseparability criterion evaluated from single-copy matrix
/// elements. With seed labels x, y and a block partition {α} of the three
/// photons, block α_i contributes the diagonal product ρ(x',x')·ρ(y',y')
/// where x'/y' swap the α_i bits between x and y; the criterion is
///   2·( |ρ(x,y)| - Σ_{partitions} (Π_i ρ(x',x')ρ(y',y'))^(1/2k) ).
/// Positive values rule out k-separability: k=3 detects entanglement,
/// k=2 genuine multipartite entanglement. The sum runs over the three
/// 2-block partitions for k=2 and the single 3-block partition for k=3.
/// Throws std::invalid_argument for k outside {2,3} or equal seed labels.
double q_generic(const Eigen::Ref<const Matrix>& rho, const SeedPair& seed,
                 int k);

// Closed form of q_generic at seed (|000>,|111>), k=3:
//   2|ρ_07| - 2(ρ_11 ρ_22 ρ_33 ρ_44 ρ_55 ρ_66)^(1/6).
// Positive values certify entanglement.
double q_sep(const Eigen::Ref<const Matrix>& rho);

// Closed form of q_generic at seed (|000>,|111>), k=2:
//   2( |ρ_07| - sqrt(ρ_66 ρ_11) - sqrt(ρ_55 ρ_22) - sqrt(ρ_33 ρ_44) ).
// Positive values certify genuine multipartite entanglement; equals 1 on
// the GHZ state with no optimization.
double q_ghz(const Eigen::Ref<const Matrix>& rho);

// Symmetrized single-excitation criterion, maximal (=1) on the W state:
//   2(|ρ_12| + |ρ_14| + |ρ_24|)
//   - ( ρ_11 + ρ_22 + ρ_44
//       + 2 sqrt(ρ_00 ρ_33) + 2 sqrt(ρ_00 ρ_55) + 2 sqrt(ρ_00 ρ_66) ).
// Positive values certify genuine multipartite entanglement.
double q_w(const Eigen::Ref<const Matrix>& rho);

double evaluate(Witness w, const Eigen::Ref<const Matrix>& rho);

/// Reconstructs the corner element <000|rho|111> from the eight X/Y Pauli
/// expectation values (keys "XXX", "XYY", "YXY", "YYX", "XXY", "XYX",
/// "YXX", "YYY"):
///   (1/8)·[ (<XXX> - <XYY> - <YXY> - <YYX>)
///           - i (<XXY> + <XYX> + <YXX> - <YYY>) ].
/// Throws std::invalid_argument when an expectation is missing.
Complex element_from_pauli(const std::map<std::string, double>& expectations);

}  // namespace triphoton
