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
#include <map>

#include <doctest.h>

#include "test_support.hpp"
#include "triphoton/witnesses.hpp"

using namespace triphoton;
using namespace triphoton::testing;

TEST_CASE("closed forms on the canonical states") {
  const Matrix ghz = projector(ghz_state());
  const Matrix w = projector(w_state());
  Vector zero = Vector::Zero(8);
  zero(0) = 1.0;
  const Matrix product = projector(zero);

  CHECK(q_sep(ghz) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_ghz(ghz) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_w(ghz) == doctest::Approx(0.0).epsilon(1e-12));

  // W: three off-diagonal pairs at 1/3 give 2, the diagonal load gives 1.
  CHECK(q_w(w) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_sep(w) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q_ghz(w) <= 1e-12);

  CHECK(q_sep(product) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q_w(product) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("two-copy criterion on reference inputs") {
  const Matrix ghz = projector(ghz_state());
  CHECK(q_generic(ghz, {0, 7}, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_generic(ghz, {0, 7}, 3) == doctest::Approx(1.0).epsilon(1e-12));

  const Matrix mixed = Matrix::Identity(8, 8) / 8.0;
  for (int chi1 = 0; chi1 < 8; ++chi1)
    for (int chi2 = 0; chi2 < 8; ++chi2) {
      if (chi1 == chi2) continue;
      CHECK(q_generic(mixed, {chi1, chi2}, 2) <= 1e-12);
      CHECK(q_generic(mixed, {chi1, chi2}, 3) <= 1e-12);
    }
}

TEST_CASE("two-copy criterion rejects bad arguments") {
  const Matrix rho = Matrix::Identity(8, 8) / 8.0;
  CHECK_THROWS_AS(q_generic(rho, {0, 7}, 1), std::invalid_argument);
  CHECK_THROWS_AS(q_generic(rho, {0, 7}, 4), std::invalid_argument);
  CHECK_THROWS_AS(q_generic(rho, {3, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(q_generic(rho, {-1, 7}, 2), std::invalid_argument);
}

TEST_CASE("closed forms specialize the two-copy criterion") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix rho = random_density_matrix(rng, 8);
    CHECK(std::abs(q_sep(rho) - q_generic(rho, {0, 7}, 3)) < 1e-10);
    CHECK(std::abs(q_ghz(rho) - q_generic(rho, {0, 7}, 2)) < 1e-10);
  }
}

TEST_CASE("witnesses stay nonpositive on separable mixtures") {
  Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix rho = random_separable_mixture(rng);
    for (int rotation = 0; rotation < 50; ++rotation) {
      const Matrix rotated = conjugate_local(rho, random_local_triple(rng));
      CHECK(q_sep(rotated) <= 1e-9);
      CHECK(q_ghz(rotated) <= 1e-9);
      CHECK(q_w(rotated) <= 1e-9);
    }
  }
}

TEST_CASE("GME criteria stay nonpositive on biseparable mixtures") {
  Rng rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix rho = random_biseparable_mixture(rng);
    for (int rotation = 0; rotation < 50; ++rotation) {
      const Matrix rotated = conjugate_local(rho, random_local_triple(rng));
      CHECK(q_ghz(rotated) <= 1e-9);
      CHECK(q_w(rotated) <= 1e-9);
    }
  }
}

TEST_CASE("maximally mixed state is never flagged under rotations") {
  Rng rng(109);
  const Matrix mixed = Matrix::Identity(8, 8) / 8.0;
  for (int rotation = 0; rotation < 1000; ++rotation) {
    const Matrix rotated = conjugate_local(mixed, random_local_triple(rng));
    CHECK(q_ghz(rotated) < 0.0);
  }
}

TEST_CASE("corner element reconstruction from Pauli expectations") {
  const auto expectations_of = [](const Matrix& rho) {
    std::map<std::string, double> exp;
    for (const char* key :
         {"XXX", "XYY", "YXY", "YYX", "XXY", "XYX", "YXX", "YYY"})
      exp[key] = pauli_expectation(
          rho, {key[0], key[1], key[2]});
    return exp;
  };

  const Matrix ghz = projector(ghz_state());
  const Complex corner = element_from_pauli(expectations_of(ghz));
  CHECK(std::abs(corner - Complex(0.5, 0.0)) < 1e-12);

  const Matrix mixed = Matrix::Identity(8, 8) / 8.0;
  CHECK(std::abs(element_from_pauli(expectations_of(mixed))) < 1e-12);

  Rng rng(113);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix rho = random_density_matrix(rng, 8);
    const Complex reconstructed = element_from_pauli(expectations_of(rho));
    CHECK(std::abs(reconstructed - rho(0, 7)) < 1e-10);
  }
}

TEST_CASE("corner element reconstruction requires all eight expectations") {
  std::map<std::string, double> partial = {{"XXX", 1.0}, {"XYY", -1.0}};
  CHECK_THROWS_AS(element_from_pauli(partial), std::invalid_argument);
}
