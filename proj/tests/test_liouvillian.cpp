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

#include <Eigen/SVD>

#include "kerrdimer/error.hpp"
#include "kerrdimer/liouvillian.hpp"
#include "kerrdimer/model.hpp"
#include "oracles.hpp"

using kerr::Complex;
using kerr::ComplexVector;
using kerr::OperatorMatrix;

namespace {

double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

kerr::ModelParams params(kerr::Exchange e, double u, double j, double f, int dim) {
  kerr::ModelParams p;
  p.exchange = e;
  p.u_over_kappa = u;
  p.j_over_kappa = j;
  p.f_over_kappa = f;
  p.dim = dim;
  return p;
}

}  // namespace

TEST_CASE("vectorize stacks columns") {
  const OperatorMatrix half = 0.5 * OperatorMatrix::Identity(2, 2);
  const ComplexVector v = kerr::vectorize(half);
  REQUIRE(v.size() == 4);
  CHECK(v(0) == Complex(0.5));
  CHECK(v(1) == Complex(0.0));
  CHECK(v(2) == Complex(0.0));
  CHECK(v(3) == Complex(0.5));

  OperatorMatrix m(2, 2);
  m << 1, 2, 3, 4;
  const ComplexVector w = kerr::vectorize(m);
  CHECK(w(1) == Complex(3.0));  // (1, 0)
  CHECK(w(2) == Complex(2.0));  // (0, 1)

  std::mt19937 rng(1);
  const OperatorMatrix r = oracle::random_complex(5, 5, rng);
  CHECK(max_abs(kerr::unvectorize(kerr::vectorize(r)) - r) == 0.0);
  CHECK_THROWS_AS(kerr::unvectorize(ComplexVector::Zero(5)), kerr::InvalidDimension);
}

TEST_CASE("vec(A rho B) = (B^T kron A) vec(rho)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 5;
    const OperatorMatrix a = oracle::random_complex(n, n, rng);
    const OperatorMatrix b = oracle::random_complex(n, n, rng);
    const OperatorMatrix rho = oracle::random_complex(n, n, rng);
    const ComplexVector lhs = kerr::vectorize(a * rho * b);
    const ComplexVector rhs_dense = kerr::kron(b.transpose(), a) * kerr::vectorize(rho);
    const ComplexVector rhs_sparse = kerr::sparse_kron(b.transpose(), a) * kerr::vectorize(rho);
    CHECK((lhs - rhs_dense).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((lhs - rhs_sparse).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("pure decay of one photon") {
  const int d = 2;
  const kerr::SuperOperator l = kerr::build_liouvillian(OperatorMatrix::Zero(d * d, d * d), 1.0, d);
  CHECK(l.dim() == 16);
  CHECK(l.hilbert_dim() == 4);
  const OperatorMatrix one = oracle::fock(1, 0, d) * oracle::fock(1, 0, d).adjoint();
  const OperatorMatrix vac = oracle::fock(0, 0, d) * oracle::fock(0, 0, d).adjoint();
  const OperatorMatrix out = kerr::unvectorize(l.apply(kerr::vectorize(one)));
  CHECK(max_abs(out - (vac - one)) < 1e-15);
}

TEST_CASE("Liouvillian matches the matrix-form Lindblad oracle") {
  std::mt19937 rng(20);
  const int d = 4;
  for (kerr::Exchange e : {kerr::Exchange::single, kerr::Exchange::two}) {
    const OperatorMatrix h = kerr::build_hamiltonian(params(e, 1.3, 0.7, 0.4, d));
    const kerr::SuperOperator l = kerr::build_liouvillian(h, 1.0, d);
    const Eigen::MatrixXcd dense = l.to_dense();
    REQUIRE(dense.rows() == 256);
    for (int trial = 0; trial < 20; ++trial) {
      const OperatorMatrix rho = oracle::random_density(d * d, rng);
      const OperatorMatrix got = kerr::unvectorize(dense * kerr::vectorize(rho));
      CHECK(max_abs(got - oracle::lindblad_rhs(h, 1.0, d, rho)) < 1e-12);
    }
  }
  // A loss rate other than 1 scales only the dissipator.
  const OperatorMatrix h = kerr::build_hamiltonian(params(kerr::Exchange::single, 0.2, 2.0, 1.0, 3));
  const kerr::SuperOperator l = kerr::build_liouvillian(h, 2.5, 3);
  const OperatorMatrix rho = oracle::random_density(9, rng);
  CHECK(max_abs(kerr::unvectorize(l.apply(kerr::vectorize(rho))) - oracle::lindblad_rhs(h, 2.5, 3, rho)) <
        1e-12);
}

TEST_CASE("property: trace functional is a left null vector") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> par(0.0, 10.0);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 2 + trial % 5;
    const int hd = d * d;
    const kerr::Exchange e = trial % 2 ? kerr::Exchange::two : kerr::Exchange::single;
    const kerr::SuperOperator l =
        kerr::build_liouvillian(kerr::build_hamiltonian(params(e, par(rng), par(rng), par(rng), d)), 1.0, d);
    const ComplexVector id = kerr::vectorize(OperatorMatrix::Identity(hd, hd));
    const Eigen::RowVectorXcd left = id.transpose() * l.sparse();
    CHECK(left.cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("property: generator output is traceless and Hermitian") {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> par(0.0, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 4;
    const kerr::Exchange e = trial % 2 ? kerr::Exchange::two : kerr::Exchange::single;
    const kerr::SuperOperator l =
        kerr::build_liouvillian(kerr::build_hamiltonian(params(e, par(rng), par(rng), par(rng), d)), 1.0, d);
    const OperatorMatrix herm = oracle::random_hermitian(d * d, rng);
    const OperatorMatrix out = kerr::unvectorize(l.apply(kerr::vectorize(herm)));
    CHECK(std::abs(out.trace()) < 1e-10);
    CHECK(max_abs(out - out.adjoint()) < 1e-12);
  }
}

TEST_CASE("nullspace is one-dimensional with a wide singular-value gap") {
  const int d = 4;
  struct Point {
    kerr::Exchange e;
    double j, u, f;
  };
  const Point points[] = {
      {kerr::Exchange::single, 1.0, 1.0, 0.1},
      {kerr::Exchange::single, 0.1, 10.0, 1.0},
      {kerr::Exchange::two, 1.0, 1.0, 1.0},
      {kerr::Exchange::two, 10.0, 0.1, 0.1},
  };
  for (const Point& p : points) {
    const kerr::SuperOperator l =
        kerr::build_liouvillian(kerr::build_hamiltonian(params(p.e, p.u, p.j, p.f, d)), 1.0, d);
    const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXcd>(l.to_dense()).singularValues();
    const double smallest = sv(sv.size() - 1);
    const double second = sv(sv.size() - 2);
    CAPTURE(p.j);
    CAPTURE(p.u);
    CHECK(second >= 1e6 * smallest);
  }
}

TEST_CASE("build_liouvillian rejects bad input") {
  const OperatorMatrix h = OperatorMatrix::Zero(4, 4);
  CHECK_THROWS_AS(kerr::build_liouvillian(h, 0.0, 2), kerr::ContractViolation);
  CHECK_THROWS_AS(kerr::build_liouvillian(h, -1.0, 2), kerr::ContractViolation);
  CHECK_THROWS_AS(kerr::build_liouvillian(h, 1.0, 3), kerr::InvalidDimension);
  CHECK_THROWS_AS(kerr::build_liouvillian(h, 1.0, 1), kerr::InvalidDimension);
  OperatorMatrix bad = h;
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(kerr::build_liouvillian(bad, 1.0, 2), kerr::ContractViolation);
}
