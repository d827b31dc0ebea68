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

#include <string>
#include <vector>

#include "triphoton/measures.hpp"
#include "triphoton/optimizer.hpp"

namespace triphoton {

// Decimal formatting used by every emitter: CSV carries 12 significant
// digits, JSON 17 (enough to round-trip a double).
std::string format_double(double x, int significant_digits);
std::string json_number(double x);
std::string json_complex(Complex z);

// CSV stream for a witness sweep. Header
//   theta_ab,theta_bc,region,witness,raw,optimized,degenerate
// then one row per grid point in grid order; degenerate rows leave the
// value columns empty. LF line endings, '.' decimal separator, no BOM.
std::string sweep_csv(const std::vector<SweepPoint>& points, Witness witness);

// Same records as a JSON array.
std::string sweep_json(const std::vector<SweepPoint>& points, Witness witness);

// Kinematics sweep: header theta_ab,theta_bc,region,quantity,value with an
// empty value on infeasible rows.
struct KinematicsPoint {
  DecayAngles angles;
  Region region = Region::III;
  bool feasible = false;
  double max_fraction = 0.0;
};

std::string kinematics_csv(const std::vector<KinematicsPoint>& points);

// JSON bodies for the CLI.
std::string pure_state_json(const DecayAngles& angles, const SpinSetting& spin,
                            const Vector& amplitudes);
std::string mixed_state_json(const DecayAngles& angles, double phi_plane,
                             double p, const Matrix& rho);
std::string witness_report_json(const WitnessReport& report);
std::string kinematics_json(const DecayAngles& angles);
std::string measures_json(const std::vector<MonogamyReport>& reports,
                          const std::vector<double>& pair_concurrences);

}  // namespace triphoton
