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

#include "triphoton/report_io.hpp"

#include <cstdio>

namespace triphoton {

namespace {

constexpr int kCsvDigits = 12;
constexpr int kJsonDigits = 17;

std::string csv_number(double x) { return format_double(x, kCsvDigits); }

}  // namespace

std::string format_double(double x, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, x);
  return buf;
}

std::string json_number(double x) { return format_double(x, kJsonDigits); }

std::string json_complex(Complex z) {
  return "{\"re\":" + json_number(z.real()) + ",\"im\":" +
         json_number(z.imag()) + "}";
}

std::string sweep_csv(const std::vector<SweepPoint>& points, Witness witness) {
  std::string out = "theta_ab,theta_bc,region,witness,raw,optimized,degenerate\n";
  for (const auto& point : points) {
    out += csv_number(point.angles.theta_ab);
    out += ',';
    out += csv_number(point.angles.theta_bc);
    out += ',';
    out += to_string(point.region);
    out += ',';
    out += to_string(witness);
    out += ',';
    if (!point.degenerate) {
      out += csv_number(point.report.raw_value);
      out += ',';
      out += csv_number(point.report.optimized_value);
      out += ",false\n";
    } else {
      out += ",,true\n";
    }
  }
  return out;
}

std::string sweep_json(const std::vector<SweepPoint>& points,
                       Witness witness) {
  std::string out = "[";
  bool first = true;
  for (const auto& point : points) {
    if (!first) out += ',';
    first = false;
    out += "{\"theta_ab\":" + json_number(point.angles.theta_ab) +
           ",\"theta_bc\":" + json_number(point.angles.theta_bc) +
           ",\"region\":\"" + to_string(point.region) + "\",\"witness\":\"" +
           to_string(witness) + "\",\"degenerate\":" +
           (point.degenerate ? "true" : "false");
    if (!point.degenerate) {
      out += ",\"raw\":" + json_number(point.report.raw_value) +
             ",\"optimized\":" + json_number(point.report.optimized_value);
    }
    out += '}';
  }
  out += "]";
  return out;
}

std::string kinematics_csv(const std::vector<KinematicsPoint>& points) {
  std::string out = "theta_ab,theta_bc,region,quantity,value\n";
  for (const auto& point : points) {
    out += csv_number(point.angles.theta_ab);
    out += ',';
    out += csv_number(point.angles.theta_bc);
    out += ',';
    out += to_string(point.region);
    out += ",max-energy,";
    if (point.feasible) out += csv_number(point.max_fraction);
    out += '\n';
  }
  return out;
}

std::string pure_state_json(const DecayAngles& angles, const SpinSetting& spin,
                            const Vector& amplitudes) {
  std::string out = "{\"type\":\"pure\",\"theta_ab\":" +
                    json_number(angles.theta_ab) + ",\"theta_bc\":" +
                    json_number(angles.theta_bc) + ",\"s\":" +
                    std::to_string(spin.s) + ",\"phi_plane\":" +
                    json_number(spin.phi_plane) + ",\"amplitudes\":[";
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    if (i > 0) out += ',';
    out += json_complex(amplitudes(i));
  }
  out += "]}";
  return out;
}

std::string mixed_state_json(const DecayAngles& angles, double phi_plane,
                             double p, const Matrix& rho) {
  std::string out = "{\"type\":\"mixed\",\"theta_ab\":" +
                    json_number(angles.theta_ab) + ",\"theta_bc\":" +
                    json_number(angles.theta_bc) + ",\"phi_plane\":" +
                    json_number(phi_plane) + ",\"p\":" + json_number(p) +
                    ",\"matrix\":[";
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      if (j > 0) out += ',';
      out += json_complex(rho(i, j));
    }
    out += ']';
  }
  out += "]}";
  return out;
}

std::string witness_report_json(const WitnessReport& report) {
  std::string out = "{\"witness\":\"";
  out += to_string(report.witness);
  out += "\",\"raw\":" + json_number(report.raw_value) +
         ",\"optimized\":" + json_number(report.optimized_value) +
         ",\"restarts\":" + std::to_string(report.restarts_used) +
         ",\"best_restart\":" + std::to_string(report.best_restart) +
         ",\"converged\":" + (report.converged ? "true" : "false") +
         ",\"best_params\":[";
  for (std::size_t i = 0; i < report.best_params.size(); ++i) {
    if (i > 0) out += ',';
    out += json_number(report.best_params[i]);
  }
  out += "]}";
  return out;
}

std::string kinematics_json(const DecayAngles& angles) {
  const Region region = classify_region(angles);
  const auto fractions = energy_fractions(angles);
  std::string out = "{\"theta_ab\":" + json_number(angles.theta_ab) +
                    ",\"theta_bc\":" + json_number(angles.theta_bc) +
                    ",\"theta_ca\":" + json_number(angles.theta_ca()) +
                    ",\"region\":\"" + to_string(region) + "\",\"feasible\":" +
                    (fractions ? "true" : "false");
  if (fractions) {
    out += ",\"fractions\":{\"wa\":" + json_number(fractions->wa) +
           ",\"wb\":" + json_number(fractions->wb) +
           ",\"wc\":" + json_number(fractions->wc) + "}";
    out += ",\"max_fraction\":" + json_number(fractions->max());
  }
  out += "}";
  return out;
}

std::string measures_json(const std::vector<MonogamyReport>& reports,
                          const std::vector<double>& pair_concurrences) {
  static const char* kPivotNames[] = {"a", "b", "c"};
  static const char* kPairNames[] = {"ab", "ac", "bc"};

  std::string out = "{\"monogamy\":[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (i > 0) out += ',';
    out += "{\"pivot\":\"";
    out += kPivotNames[r.pivot];
    out += "\",\"tangle\":" + json_number(r.tangle) +
           ",\"c_sq_1\":" + json_number(r.c_sq_1) +
           ",\"c_sq_2\":" + json_number(r.c_sq_2) +
           ",\"gap\":" + json_number(r.gap) + "}";
  }
  out += "],\"pair_concurrence\":{";
  for (std::size_t i = 0; i < pair_concurrences.size() && i < 3; ++i) {
    if (i > 0) out += ',';
    out += std::string("\"") + kPairNames[i] + "\":" +
           json_number(pair_concurrences[i]);
  }
  out += "}}";
  return out;
}

}  // namespace triphoton
