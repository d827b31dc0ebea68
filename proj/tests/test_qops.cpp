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

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "test_support.hpp"
#include "triphoton/qops.hpp"

using namespace triphoton;
using namespace triphoton::testing;

TEST_CASE("tensor of identities is the identity") {
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix id4 = tensor(id2, id2);
  CHECK((id4 - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tensor of sx with sx has the antidiagonal corners") {
  const Matrix xx = tensor(Matrix(pauli_x()), Matrix(pauli_x()));
  CHECK(xx(0, 3) == Complex(1.0, 0.0));
  CHECK(xx(3, 0) == Complex(1.0, 0.0));
  for (int i = 0; i < 4; ++i) CHECK(xx(i, i) == Complex(0.0, 0.0));
}

TEST_CASE("sx tensor cube maps |000> to |111>") {
  const Matrix xxx =
      tensor(Matrix(pauli_x()), tensor(Matrix(pauli_x()), Matrix(pauli_x())));
  Vector e0 = Vector::Zero(8);
  e0(0) = 1.0;
  // Oracle: the same operator assembled by brute-force index products.
  const Matrix reference = kron_reference(
      Matrix(pauli_x()), kron_reference(Matrix(pauli_x()), Matrix(pauli_x())));
  CHECK((xxx - reference).cwiseAbs().maxCoeff() == 0.0);
  const Vector mapped = xxx * e0;
  for (int i = 0; i < 8; ++i)
    CHECK(mapped(i) == (i == 7 ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
}

TEST_CASE("tensor matches the brute-force Kronecker on random operators") {
  Rng rng(11);
  const Matrix a = random_density_matrix(rng, 2);
  const Matrix b = random_density_matrix(rng, 4);
  CHECK((tensor(a, b) - kron_reference(a, b)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tensor is associative on Pauli inputs, entry-exact") {
  const char labels[] = {'I', 'X', 'Y', 'Z'};
  for (char l1 : labels)
    for (char l2 : labels)
      for (char l3 : labels) {
        const Matrix left =
            tensor(tensor(Matrix(pauli(l1)), Matrix(pauli(l2))), Matrix(pauli(l3)));
        const Matrix right =
            tensor(Matrix(pauli(l1)), tensor(Matrix(pauli(l2)), Matrix(pauli(l3))));
        CHECK((left - right).cwiseAbs().maxCoeff() == 0.0);
      }
}

TEST_CASE("partial trace of a product projector returns the kept factor") {
  Vector e0 = Vector::Zero(2);
  e0(0) = 1.0;
  const Vector zero3 = tensor(tensor(e0, e0), e0);
  const Matrix reduced = partial_trace(projector(zero3), {0});
  CHECK(reduced.rows() == 2);
  CHECK(std::abs(reduced(0, 0) - Complex(1.0, 0.0)) == 0.0);
  CHECK(std::abs(reduced(1, 1)) == 0.0);

  Rng rng(7);
  const Matrix rho_a = random_density_matrix(rng, 2);
  const Matrix rho_bc = random_density_matrix(rng, 4);
  const Matrix product = tensor(rho_a, rho_bc);
  CHECK((partial_trace(product, {0}) - rho_a).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((partial_trace(product, {1, 2}) - rho_bc).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("partial trace of GHZ on a pair is the classical mixture") {
  const Matrix reduced = partial_trace(projector(ghz_state()), {0, 1});
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK((reduced - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace of W on one photon is diag(2/3, 1/3)") {
  const Matrix reduced = partial_trace(projector(w_state()), {0});
  CHECK(reduced(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(reduced(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(reduced(0, 1)) < 1e-12);
}

TEST_CASE("partial trace agrees with the index-contraction oracle") {
  Rng rng(23);
  const Matrix rho = random_density_matrix(rng, 8);
  for (const auto& keep :
       std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
    const Matrix got = partial_trace(rho, keep);
    const Matrix want = partial_trace_reference(rho, keep);
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(got.trace() - Complex(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("partial trace rejects empty and full keep sets") {
  const Matrix rho = Matrix::Identity(8, 8) / 8.0;
  CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("su2 at the origin is the identity") {
  const Eigen::Matrix2cd u = su2({0.0, 0.0, 0.0});
  CHECK((u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("su2 is unitary with unit determinant everywhere") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Matrix2cd u = su2({rng.uniform(-20.0, 20.0),
                                    rng.uniform(-20.0, 20.0),
                                    rng.uniform(-20.0, 20.0)});
    CHECK((u * u.adjoint() - Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK(std::abs(u.determinant() - Complex(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("su2 samples fill out the |U00| range") {
  // Monte-Carlo surjectivity probe: |U00| = |cos(beta/2)| should reach both
  // ends of [0, 1] under broad angle sampling.
  Rng rng(47);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Matrix2cd u = su2({rng.uniform(-3.2, 3.2),
                                    rng.uniform(0.0, 2.0 * 3.15),
                                    rng.uniform(-3.2, 3.2)});
    const double mag = std::abs(u(0, 0));
    lo = std::min(lo, mag);
    hi = std::max(hi, mag);
  }
  CHECK(lo < 0.05);
  CHECK(hi > 0.95);
}

TEST_CASE("conjugating by the identity triple is a no-op") {
  Rng rng(5);
  const Matrix rho = random_density_matrix(rng, 8);
  const Matrix same = conjugate_local(rho, LocalUnitaryTriple::identity());
  CHECK((same - rho).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("local conjugation preserves trace, Hermiticity and spectrum") {
  Rng rng(13);
  const Matrix rho = random_density_matrix(rng, 8);
  const Matrix rotated = conjugate_local(rho, random_local_triple(rng));

  CHECK(std::abs(rotated.trace() - Complex(1.0, 0.0)) < 1e-12);
  CHECK((rotated - rotated.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::SelfAdjointEigenSolver<Matrix> before(rho, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Matrix> after(rotated, Eigen::EigenvaluesOnly);
  CHECK((before.eigenvalues() - after.eigenvalues()).cwiseAbs().maxCoeff() <
        1e-10);
  CHECK_NOTHROW(validate_density_matrix(rotated));
}

TEST_CASE("pauli expectation basics") {
  Rng rng(17);
  const Matrix rho = random_density_matrix(rng, 8);
  CHECK(pauli_expectation(rho, {'I', 'I', 'I'}) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const Matrix ghz = projector(ghz_state());
  CHECK(pauli_expectation(ghz, {'X', 'X', 'X'}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pauli_expectation(ghz, {'X', 'Y', 'Y'}) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  // Oracle for the XYY value: explicit trace against the brute-force kron.
  const Matrix op = kron_reference(
      Matrix(pauli_x()), kron_reference(Matrix(pauli_y()), Matrix(pauli_y())));
  const Complex tr = (ghz * op).trace();
  CHECK(std::abs(tr.imag()) < 1e-12);
  CHECK(pauli_expectation(ghz, {'X', 'Y', 'Y'}) ==
        doctest::Approx(tr.real()).epsilon(1e-12));
}

TEST_CASE("purity spans pure to maximally mixed") {
  CHECK(purity(projector(ghz_state())) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(Matrix::Identity(8, 8) / 8.0) ==
        doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("density validation flags each contract violation") {
  Matrix rho = Matrix::Identity(8, 8) / 8.0;
  CHECK_NOTHROW(validate_density_matrix(rho));

  Matrix bad_trace = rho * 2.0;
  CHECK_THROWS_AS(validate_density_matrix(bad_trace), std::runtime_error);

  Matrix not_hermitian = rho;
  not_hermitian(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS(validate_density_matrix(not_hermitian), std::runtime_error);

  Matrix negative = rho;
  negative(0, 0) = -0.125;
  negative(1, 1) = 0.375;
  CHECK_THROWS_AS(validate_density_matrix(negative), std::runtime_error);
}
