// Copyright 2026 The kerrdimer Authors
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

#include <doctest.h>

#include <cmath>
#include <random>

#include "kerrdimer/error.hpp"
#include "kerrdimer/model.hpp"
#include "oracles.hpp"

using kerr::Complex;
using kerr::Exchange;
using kerr::ModelParams;
using kerr::OperatorMatrix;

namespace {

double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ModelParams params(Exchange e, double u, double j, double f, int dim) {
  ModelParams p;
  p.exchange = e;
  p.u_over_kappa = u;
  p.j_over_kappa = j;
  p.f_over_kappa = f;
  p.dim = dim;
  return p;
}

// Permutation |n1, n2> -> |n2, n1>.
OperatorMatrix swap_matrix(int d) {
  OperatorMatrix s = OperatorMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1.0;
  return s;
}

}  // namespace

TEST_CASE("exchange names round-trip") {
  CHECK(kerr::parse_exchange("single") == Exchange::single);
  CHECK(kerr::parse_exchange("two") == Exchange::two);
  CHECK(kerr::to_string(Exchange::two) == "two");
  CHECK_THROWS_AS(kerr::parse_exchange("double"), kerr::ConfigError);
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(params(Exchange::single, 1, 1, 1, 2).validate());
  CHECK_THROWS_AS(params(Exchange::single, -1, 1, 1, 4).validate(), kerr::ContractViolation);
  CHECK_THROWS_AS(params(Exchange::single, 1, -1, 1, 4).validate(), kerr::ContractViolation);
  CHECK_THROWS_AS(params(Exchange::single, 1, 1, -1, 4).validate(), kerr::ContractViolation);
  CHECK_THROWS_AS(params(Exchange::single, NAN, 1, 1, 4).validate(), kerr::ContractViolation);
  CHECK_THROWS_AS(params(Exchange::single, 1, 1, 1, 1).validate(), kerr::InvalidDimension);
  ModelParams p = params(Exchange::single, 1, 1, 1, 4);
  p.kappa_mhz_over_2pi = 0.0;
  CHECK_THROWS_AS(p.validate(), kerr::ContractViolation);
  CHECK_THROWS_AS(kerr::build_hamiltonian(params(Exchange::two, 1, 1, 1, 1)), kerr::InvalidDimension);
}

TEST_CASE("zero parameters give the zero Hamiltonian") {
  CHECK(max_abs(kerr::build_hamiltonian(params(Exchange::single, 0, 0, 0, 4))) == 0.0);
  CHECK(max_abs(kerr::build_hamiltonian(params(Exchange::two, 0, 0, 0, 3))) == 0.0);
}

TEST_CASE("single exchange at dim 2 is 2 Jx with spectrum {-1, 0, 0, 1}") {
  const OperatorMatrix h = kerr::build_hamiltonian(params(Exchange::single, 0, 1, 0, 2));
  const kerr::SpinOperators s = kerr::build_spin_operators(2);
  CHECK(max_abs(h - 2.0 * s.jx) < 1e-15);
  const Eigen::VectorXd ev = kerr::eigvalsh(h);
  CHECK(ev(0) == doctest::Approx(-1.0));
  CHECK(std::abs(ev(1)) < 1e-14);
  CHECK(std::abs(ev(2)) < 1e-14);
  CHECK(ev(3) == doctest::Approx(1.0));
}

TEST_CASE("two-photon matrix element <2,0|H|0,2> = 2J") {
  const double j = 0.7;
  const OperatorMatrix h = kerr::build_hamiltonian(params(Exchange::two, 0, j, 0, 4));
  const Complex elem = oracle::fock(2, 0, 4).dot(h * oracle::fock(0, 2, 4));
  CHECK(std::abs(elem - 2.0 * j) < 1e-14);
}

TEST_CASE("Hamiltonian matches the ladder-operator element oracle") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> par(0.0, 10.0);
  for (int trial = 0; trial < 24; ++trial) {
    const bool two = trial % 2 == 1;
    const int dim = 2 + trial % 7;
    const double u = par(rng), j = par(rng), f = par(rng) / 10.0;
    const OperatorMatrix h =
        kerr::build_hamiltonian(params(two ? Exchange::two : Exchange::single, u, j, f, dim));
    CHECK(max_abs(h - oracle::hamiltonian_by_elements(two, u, j, f, dim)) < 1e-12);
  }
}

TEST_CASE("property: Hamiltonian is Hermitian and swap-symmetric") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> par(0.0, 20.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + trial % 7;
    const Exchange e = trial % 2 ? Exchange::two : Exchange::single;
    const OperatorMatrix h = kerr::build_hamiltonian(params(e, par(rng), par(rng), par(rng), dim));
    CHECK(max_abs(h - h.adjoint()) < 1e-12);
    const OperatorMatrix s = swap_matrix(dim);
    CHECK(max_abs(s * h * s.adjoint() - h) < 1e-12);
  }
}

TEST_CASE("SU(2) algebra on the truncation-safe block") {
  for (int dim = 3; dim <= 6; ++dim) {
    const kerr::SpinOperators s = kerr::build_spin_operators(dim);
    const OperatorMatrix c = kerr::commutator(s.jx, s.jy) - Complex(0.0, 1.0) * s.jz;
    const OperatorMatrix c2 = kerr::commutator(s.jy, s.jz) - Complex(0.0, 1.0) * s.jx;
    const OperatorMatrix c3 = kerr::commutator(s.jz, s.jx) - Complex(0.0, 1.0) * s.jy;
    for (int a = 0; a < dim * dim; ++a)
      for (int b = 0; b < dim * dim; ++b) {
        const int occ_a = a / dim + a % dim;
        const int occ_b = b / dim + b % dim;
        if (occ_a > dim - 2 || occ_b > dim - 2) continue;
        CHECK(std::abs(c(a, b)) < 1e-12);
        CHECK(std::abs(c2(a, b)) < 1e-12);
        CHECK(std::abs(c3(a, b)) < 1e-12);
      }
  }
}

TEST_CASE("Jz eigenvalue on |1,0>") {
  const kerr::SpinOperators s = kerr::build_spin_operators(4);
  const oracle::Vector v = oracle::fock(1, 0, 4);
  CHECK((s.jz * v - 0.5 * v).norm() < 1e-15);
  CHECK((s.n_total * v - v).norm() < 1e-15);
}

TEST_CASE("operator identities: hopping, two-photon hopping, Kerr") {
  for (int dim = 2; dim <= 8; ++dim) {
    const kerr::TwoModeOperators ops(dim);
    const kerr::SpinOperators s = kerr::build_spin_operators(dim);
    CHECK(max_abs(kerr::single_photon_hopping(ops) - 2.0 * s.jx) < 1e-12);
    const OperatorMatrix jx2 = s.jx * s.jx;
    const OperatorMatrix jy2 = s.jy * s.jy;
    CHECK(max_abs(kerr::two_photon_hopping(ops) - 2.0 * (jx2 - jy2)) < 1e-12);
    const OperatorMatrix n = s.n_total;
    const OperatorMatrix kerr_rhs = 2.0 * s.jz * s.jz + 0.5 * n * n - n;
    CHECK(max_abs(kerr::kerr_term(ops) - kerr_rhs) < 1e-12);
  }
}

TEST_CASE("two-photon hopping equals b1^dag^2 b2^2 + h.c. expanded directly") {
  const int dim = 5;
  const kerr::TwoModeOperators ops(dim);
  const OperatorMatrix direct = ops.b1_dag * ops.b1_dag * ops.b2 * ops.b2 + ops.b2_dag * ops.b2_dag * ops.b1 * ops.b1;
  CHECK(max_abs(kerr::two_photon_hopping(ops) - direct) < 1e-12);
}
