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

#include "triphoton/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "triphoton/rng.hpp"

namespace triphoton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kParams = 9;

using Params = std::array<double, kParams>;
using M8 = Eigen::Matrix<Complex, 8, 8>;
using M4 = Eigen::Matrix4cd;
using M2 = Eigen::Matrix2cd;

// Objective for one density matrix: witness value in the rotated frame.
// All workspace is fixed-size so an evaluation never allocates.
class FrameObjective {
 public:
  FrameObjective(const Matrix& rho, Witness witness)
      : rho_(rho), witness_(witness) {}

  double operator()(const Params& p) {
    const M2 ua = su2({p[0], p[1], p[2]});
    const M2 ub = su2({p[3], p[4], p[5]});
    const M2 uc = su2({p[6], p[7], p[8]});

    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        uab_.block<2, 2>(2 * i, 2 * j) = ua(i, j) * ub;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        u_.block<2, 2>(2 * i, 2 * j) = uab_(i, j) * uc;

    tmp_.noalias() = u_ * rho_;
    rotated_.noalias() = tmp_ * u_.adjoint();
    return evaluate(witness_, rotated_);
  }

 private:
  M8 rho_;
  Witness witness_;
  M4 uab_;
  M8 u_, tmp_, rotated_;
};

struct LocalResult {
  Params x{};
  double value = 0.0;
  bool converged = false;
};

// Nelder-Mead ascent on the nine Euler angles. The first simplex vertex is
// the start point itself, so a restart can only improve on its start value.
LocalResult nelder_mead_max(FrameObjective& objective, const Params& start,
                            int max_iterations, double tol) {
  constexpr int n = kParams;
  constexpr double kStep = 0.6;

  std::array<Params, n + 1> xs;
  std::array<double, n + 1> negf;
  xs[0] = start;
  negf[0] = -objective(xs[0]);
  for (int i = 1; i <= n; ++i) {
    xs[i] = start;
    xs[i][i - 1] += kStep;
    negf[i] = -objective(xs[i]);
  }

  std::array<int, n + 1> order;
  const auto sort_order = [&] {
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return negf[a] < negf[b]; });
  };

  bool converged = false;
  for (int iter = 0; iter < max_iterations; ++iter) {
    sort_order();
    const int best = order[0];
    const int second_worst = order[n - 1];
    const int worst = order[n];
    if (negf[worst] - negf[best] < tol) {
      converged = true;
      break;
    }

    Params centroid{};
    for (int i = 0; i < n; ++i)
      for (int d = 0; d < n; ++d) centroid[d] += xs[order[i]][d] / n;

    const auto blend = [&](double coeff) {
      Params p;
      for (int d = 0; d < n; ++d)
        p[d] = centroid[d] + coeff * (xs[worst][d] - centroid[d]);
      return p;
    };

    const Params reflected = blend(-1.0);
    const double f_reflected = -objective(reflected);

    if (f_reflected < negf[best]) {
      const Params expanded = blend(-2.0);
      const double f_expanded = -objective(expanded);
      if (f_expanded < f_reflected) {
        xs[worst] = expanded;
        negf[worst] = f_expanded;
      } else {
        xs[worst] = reflected;
        negf[worst] = f_reflected;
      }
    } else if (f_reflected < negf[second_worst]) {
      xs[worst] = reflected;
      negf[worst] = f_reflected;
    } else {
      const bool outside = f_reflected < negf[worst];
      const Params contracted = blend(outside ? -0.5 : 0.5);
      const double f_contracted = -objective(contracted);
      if (f_contracted < std::min(f_reflected, negf[worst])) {
        xs[worst] = contracted;
        negf[worst] = f_contracted;
      } else {
        // Shrink toward the best vertex.
        for (int i = 1; i <= n; ++i) {
          const int idx = order[i];
          for (int d = 0; d < n; ++d)
            xs[idx][d] = xs[best][d] + 0.5 * (xs[idx][d] - xs[best][d]);
          negf[idx] = -objective(xs[idx]);
        }
      }
    }
  }

  sort_order();
  return {xs[order[0]], -negf[order[0]], converged};
}

// Fixed frames worth probing from every configuration: the identity and the
// two bases reached by rotating each photon a quarter turn about y or onto
// the circular basis.
const Params kIdentityStart{};
const Params kCircularStart = {-kPi, kPi / 2, kPi / 2, -kPi, kPi / 2,
                               kPi / 2, -kPi, kPi / 2, kPi / 2};
const Params kHadamardLikeStart = {0, kPi / 2, 0, 0, kPi / 2,
                                   0, 0, kPi / 2, 0};

Params start_for_restart(int restart, std::uint64_t seed) {
  if (restart == 0) return kIdentityStart;
  if (restart == 1) return kCircularStart;
  if (restart == 2) return kHadamardLikeStart;

  // Haar-like: uniform outer angles, arcsine-corrected middle angle.
  Rng rng(seed ^ static_cast<std::uint64_t>(restart));
  Params p;
  for (int q = 0; q < 3; ++q) {
    p[3 * q + 0] = rng.uniform(-kPi, kPi);
    p[3 * q + 1] = std::acos(1.0 - 2.0 * rng.uniform());
    p[3 * q + 2] = rng.uniform(-kPi, kPi);
  }
  return p;
}

}  // namespace

WitnessReport optimize(const Matrix& rho, Witness witness,
                       const OptimizerConfig& config) {
  if (rho.rows() != kDim || rho.cols() != kDim)
    throw std::invalid_argument("optimize expects an 8x8 density matrix");
  if (config.restarts < 1)
    throw std::invalid_argument("at least one restart is required");

  FrameObjective objective(rho, witness);

  WitnessReport report;
  report.witness = witness;
  report.raw_value = evaluate(witness, rho);
  report.restarts_used = config.restarts;

  double best_value = -std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < config.restarts; ++restart) {
    const Params start = start_for_restart(restart, config.seed);
    const LocalResult local = nelder_mead_max(
        objective, start, config.local_iterations, config.convergence_tol);
    if (local.value > best_value) {
      best_value = local.value;
      report.optimized_value = local.value;
      report.best_params = local.x;
      report.best_restart = restart;
      report.converged = local.converged;
    }
  }
  return report;
}

std::vector<DecayAngles> angle_grid(int n) {
  if (n < 1) throw std::invalid_argument("grid must have at least one point");
  std::vector<DecayAngles> grid;
  grid.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grid.push_back({kTwoPi * i / n, kTwoPi * j / n});
  return grid;
}

std::vector<SweepPoint> sweep(const std::vector<DecayAngles>& grid,
                              const SweepStateSpec& state, Witness witness,
                              const OptimizerConfig& config, int threads) {
  std::vector<SweepPoint> points(grid.size());

  const auto evaluate_point = [&](std::size_t index) {
    SweepPoint& point = points[index];
    point.angles = grid[index];
    point.region = classify_region(point.angles);
    try {
      const Matrix rho =
          state.mixed
              ? mixed_state(point.angles, state.phi_plane, state.p)
              : projector(pure_state(point.angles, {state.s, state.phi_plane}));
      point.report = optimize(rho, witness, config);
    } catch (const DegenerateKinematics&) {
      point.degenerate = true;
    }
  };

  if (threads <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    threads = hc == 0 ? 1 : static_cast<int>(hc);
  }
  threads = std::min<std::size_t>(threads, grid.size());

  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate_point(i);
    return points;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < grid.size();
           i = next.fetch_add(1))
        evaluate_point(i);
    });
  }
  for (auto& worker : pool) worker.join();
  return points;
}

}  // namespace triphoton
