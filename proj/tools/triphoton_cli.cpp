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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triphoton/measures.hpp"
#include "triphoton/optimizer.hpp"
#include "triphoton/report_io.hpp"

namespace {

using namespace triphoton;

constexpr double kPi = std::numbers::pi;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct CommonArgs {
  double theta_ab = 0.0;
  int table_grid = 16;
  double theta_bc = 0.0;
  double phi = 0.0;
  int s = 0;
  bool mixed = false;
  double p = 1.0 / 3.0;
  bool degrees = false;
  std::string witness = "qsep";
  int grid = 50;
  int restarts = 200;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  std::string preset;
  std::string quantity;
};

double to_radians(double value, bool degrees) {
  return degrees ? value * kPi / 180.0 : value;
}

Witness parse_witness(const std::string& name) {
  if (name == "qsep") return Witness::Sep;
  if (name == "qghz") return Witness::Ghz;
  if (name == "qw") return Witness::W;
  throw CLI::ValidationError("--witness", "expected qsep, qghz or qw");
}

int emit(const CommonArgs& args, const std::string& body) {
  if (args.out.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open output file: " << args.out << "\n";
    return 1;
  }
  file << body;
  return 0;
}

Vector preset_state(const std::string& preset) {
  Vector v = Vector::Zero(8);
  if (preset == "ghz") {
    v(0) = 1.0 / std::sqrt(2.0);
    v(7) = 1.0 / std::sqrt(2.0);
  } else if (preset == "w") {
    v(1) = 1.0 / std::sqrt(3.0);
    v(2) = 1.0 / std::sqrt(3.0);
    v(4) = 1.0 / std::sqrt(3.0);
  } else {
    throw CLI::ValidationError("--preset", "expected ghz or w");
  }
  return v;
}

int run_state(const CommonArgs& args) {
  const DecayAngles angles{to_radians(args.theta_ab, args.degrees),
                           to_radians(args.theta_bc, args.degrees)};
  const double phi = to_radians(args.phi, args.degrees);

  if (args.mixed) {
    const Matrix rho = mixed_state(angles, phi, args.p);
    validate_density_matrix(rho);
    return emit(args, mixed_state_json(angles, phi, args.p, rho));
  }
  const SpinSetting spin{args.s, phi};
  const Vector psi = pure_state(angles, spin);
  validate_density_matrix(projector(psi));
  return emit(args, pure_state_json(angles, spin, psi));
}

int run_kinematics(const CommonArgs& args) {
  const DecayAngles angles{to_radians(args.theta_ab, args.degrees),
                           to_radians(args.theta_bc, args.degrees)};
  return emit(args, kinematics_json(angles));
}

Matrix state_for_analysis(const CommonArgs& args) {
  if (!args.preset.empty()) return projector(preset_state(args.preset));
  const DecayAngles angles{to_radians(args.theta_ab, args.degrees),
                           to_radians(args.theta_bc, args.degrees)};
  const double phi = to_radians(args.phi, args.degrees);
  if (args.mixed) return mixed_state(angles, phi, args.p);
  return projector(pure_state(angles, {args.s, phi}));
}

int run_witness(const CommonArgs& args) {
  const Matrix rho = state_for_analysis(args);
  validate_density_matrix(rho);
  OptimizerConfig config;
  config.restarts = args.restarts;
  config.seed = args.seed;
  const WitnessReport report = optimize(rho, parse_witness(args.witness), config);
  return emit(args, witness_report_json(report));
}

int run_measures(const CommonArgs& args) {
  Vector psi;
  if (!args.preset.empty()) {
    psi = preset_state(args.preset);
  } else {
    const DecayAngles angles{to_radians(args.theta_ab, args.degrees),
                             to_radians(args.theta_bc, args.degrees)};
    psi = pure_state(angles, {args.s, to_radians(args.phi, args.degrees)});
  }
  validate_density_matrix(projector(psi));

  std::vector<MonogamyReport> reports;
  for (int pivot : {0, 1, 2}) reports.push_back(monogamy_gap(psi, pivot));

  const Matrix rho = projector(psi);
  std::vector<double> pair_concurrences = {
      concurrence_mixed(partial_trace(rho, {0, 1})),
      concurrence_mixed(partial_trace(rho, {0, 2})),
      concurrence_mixed(partial_trace(rho, {1, 2}))};
  return emit(args, measures_json(reports, pair_concurrences));
}

int run_sweep(const CommonArgs& args) {
  if (args.grid < 2) {
    std::cerr << "--grid must be at least 2\n";
    return kExitUsage;
  }
  const auto grid = angle_grid(args.grid);

  if (args.quantity == "max-energy") {
    std::vector<KinematicsPoint> points;
    points.reserve(grid.size());
    for (const auto& angles : grid) {
      KinematicsPoint point;
      point.angles = angles;
      point.region = classify_region(angles);
      const auto fraction = max_energy_fraction(angles);
      point.feasible = fraction.has_value();
      if (fraction) point.max_fraction = *fraction;
      points.push_back(point);
    }
    return emit(args, kinematics_csv(points));
  }
  if (!args.quantity.empty()) {
    std::cerr << "unknown --quantity: " << args.quantity << "\n";
    return kExitUsage;
  }

  SweepStateSpec state;
  state.mixed = args.mixed;
  state.s = args.s;
  state.phi_plane = to_radians(args.phi, args.degrees);
  state.p = args.p;

  OptimizerConfig config;
  config.restarts = args.restarts;
  config.seed = args.seed;

  const Witness witness = parse_witness(args.witness);
  const auto points = sweep(grid, state, witness, config);
  return emit(args, args.format == "json" ? sweep_json(points, witness)
                                          : sweep_csv(points, witness));
}

struct TableRow {
  std::string label;
  double reference_ghz, reference_w, reference_sep;
  double computed_ghz = 0.0, computed_w = 0.0, computed_sep = 0.0;
};

int run_table(const CommonArgs& args) {
  OptimizerConfig config;
  config.restarts = args.restarts;
  config.seed = args.seed;

  const auto optimize_all = [&](const Matrix& rho, TableRow& row) {
    row.computed_ghz = optimize(rho, Witness::Ghz, config).optimized_value;
    row.computed_w = optimize(rho, Witness::W, config).optimized_value;
    row.computed_sep = optimize(rho, Witness::Sep, config).optimized_value;
  };

  std::vector<TableRow> rows;

  TableRow ghz_row{"|GHZ>", 1.0, 0.75, 1.0};
  optimize_all(projector(preset_state("ghz")), ghz_row);
  rows.push_back(ghz_row);

  TableRow w_row{"|W>", 0.628, 1.0, 2.0 / 3.0};
  optimize_all(projector(preset_state("w")), w_row);
  rows.push_back(w_row);

  // Maximum of each optimized criterion over an angle lattice extended by
  // the two reference extremal points.
  TableRow max_row{"max over angles", 0.76, 0.83, 0.89};
  {
    auto grid = angle_grid(std::max(2, args.table_grid));
    grid.push_back({15.0 * kPi / 8.0, kPi / 4.0});
    grid.push_back({kPi / 16.0, kPi / 16.0});
    for (Witness witness : {Witness::Ghz, Witness::W, Witness::Sep}) {
      double best = 0.0;
      for (const auto& point : sweep(grid, SweepStateSpec{}, witness, config))
        if (!point.degenerate)
          best = std::max(best, point.report.optimized_value);
      (witness == Witness::Ghz
           ? max_row.computed_ghz
           : witness == Witness::W ? max_row.computed_w : max_row.computed_sep) =
          best;
    }
  }
  rows.push_back(max_row);

  const DecayAngles symmetric{2.0 * kPi / 3.0, 2.0 * kPi / 3.0};
  TableRow pure_row{"pure(2pi/3, 2pi/3)", 0.58, 0.67, 0.67};
  optimize_all(projector(pure_state(symmetric, {0, 0.0})), pure_row);
  rows.push_back(pure_row);

  TableRow mixed_row{"mixed(p=1/3)(2pi/3, 2pi/3)", 0.0, 0.5, 0.17};
  optimize_all(mixed_state(symmetric, 0.0, 1.0 / 3.0), mixed_row);
  rows.push_back(mixed_row);

  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-28s %-6s %10s %10s %8s\n", "state",
                "crit", "computed", "reference", "|diff|");
  out += line;
  for (const auto& row : rows) {
    const struct {
      const char* name;
      double computed;
      double reference;
    } entries[] = {{"qghz", row.computed_ghz, row.reference_ghz},
                   {"qw", row.computed_w, row.reference_w},
                   {"qsep", row.computed_sep, row.reference_sep}};
    for (const auto& entry : entries) {
      std::snprintf(line, sizeof(line), "%-28s %-6s %10.4f %10.4f %8.4f\n",
                    row.label.c_str(), entry.name, entry.computed,
                    entry.reference, std::abs(entry.computed - entry.reference));
      out += line;
    }
  }
  return emit(args, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-photon polarization states, entanglement witnesses and "
               "decay kinematics"};
  app.require_subcommand(1);

  CommonArgs args;

  const auto add_angle_flags = [&args](CLI::App* cmd) {
    cmd->add_option("--theta-ab", args.theta_ab, "opening angle between photons a and b");
    cmd->add_option("--theta-bc", args.theta_bc, "opening angle between photons b and c");
    cmd->add_flag("--degrees", args.degrees, "interpret angles in degrees");
  };
  const auto add_state_flags = [&args](CLI::App* cmd) {
    cmd->add_option("--phi", args.phi, "angle between spin axis and decay plane");
    cmd->add_option("--s", args.s, "spin projection: -1, 0 or 1")
        ->check(CLI::IsMember({-1, 0, 1}));
    cmd->add_flag("--mixed", args.mixed, "use the spin-mixed state");
    cmd->add_option("--p", args.p, "mixing weight of the s=0 component");
  };
  const auto add_optimizer_flags = [&args](CLI::App* cmd) {
    cmd->add_option("--restarts", args.restarts, "multi-start budget");
    cmd->add_option("--seed", args.seed, "pseudo-random seed");
  };
  const auto add_output_flags = [&args](CLI::App* cmd) {
    cmd->add_option("--out", args.out, "write output to a file");
  };

  CLI::App* state = app.add_subcommand("state", "print a decay state");
  add_angle_flags(state);
  add_state_flags(state);
  add_output_flags(state);

  CLI::App* kinematics = app.add_subcommand("kinematics", "classify a decay configuration");
  add_angle_flags(kinematics);
  add_output_flags(kinematics);

  CLI::App* witness = app.add_subcommand("witness", "optimize one criterion on one state");
  add_angle_flags(witness);
  add_state_flags(witness);
  add_optimizer_flags(witness);
  add_output_flags(witness);
  witness->add_option("--witness", args.witness, "qsep, qghz or qw");
  witness->add_option("--preset", args.preset, "ghz or w instead of decay angles");

  CLI::App* measures = app.add_subcommand("measures", "tangle, concurrences and monogamy gaps");
  add_angle_flags(measures);
  add_state_flags(measures);
  add_output_flags(measures);
  measures->add_option("--preset", args.preset, "ghz or w instead of decay angles");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate a witness or kinematic quantity on a grid");
  add_state_flags(sweep_cmd);
  add_optimizer_flags(sweep_cmd);
  add_output_flags(sweep_cmd);
  std::string state_kind;
  sweep_cmd->add_option("--state", state_kind, "pure or mixed")
      ->check(CLI::IsMember({"pure", "mixed"}));
  sweep_cmd->add_option("--witness", args.witness, "qsep, qghz or qw");
  sweep_cmd->add_option("--quantity", args.quantity, "max-energy for the kinematics sweep");
  sweep_cmd->add_option("--grid", args.grid, "grid resolution per axis");
  sweep_cmd->add_option("--format", args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* table = app.add_subcommand("table", "optimized criteria for the reference states");
  add_optimizer_flags(table);
  add_output_flags(table);
  table->add_option("--grid", args.table_grid, "lattice resolution for the max row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (state_kind == "mixed") args.mixed = true;

  try {
    if (app.got_subcommand(state)) return run_state(args);
    if (app.got_subcommand(kinematics)) return run_kinematics(args);
    if (app.got_subcommand(witness)) return run_witness(args);
    if (app.got_subcommand(measures)) return run_measures(args);
    if (app.got_subcommand(sweep_cmd)) return run_sweep(args);
    if (app.got_subcommand(table)) return run_table(args);
  } catch (const DegenerateKinematics& e) {
    std::cerr << e.what() << "\n";
    return kExitDegenerate;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
