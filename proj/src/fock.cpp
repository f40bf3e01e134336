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

#include "kerrdimer/fock.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "kerrdimer/error.hpp"

namespace kerr {

namespace {

void require_square(const OperatorMatrix& op, const char* who) {
  if (op.rows() != op.cols() || op.rows() == 0) {
    throw InvalidDimension(std::string(who) + ": operator must be square and non-empty");
  }
}

}  // namespace

DensityMatrix::DensityMatrix(OperatorMatrix op, int d1, int d2)
    : op_(std::move(op)), d1_(d1), d2_(d2) {
  if (d1 < 1 || d2 < 1) throw InvalidDimension("DensityMatrix: dimensions must be positive");
  if (op_.rows() != d1 * d2 || op_.cols() != d1 * d2) {
    throw InvalidDimension("DensityMatrix: operator is " + std::to_string(op_.rows()) + "x" +
                           std::to_string(op_.cols()) + ", expected " +
                           std::to_string(d1 * d2) + " square");
  }
  const double herm = hermitian_defect(op_);
  if (herm > kHermitianTol) {
    throw ContractViolation("DensityMatrix: not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const Complex tr = op_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw ContractViolation("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  }
  const double lo = eigvalsh(op_).minCoeff();
  if (lo < -kPositivityTol) {
    throw ContractViolation("DensityMatrix: negative eigenvalue " + std::to_string(lo));
  }
}

DensityMatrix DensityMatrix::hermitized(const OperatorMatrix& op, int d1, int d2) {
  OperatorMatrix h = 0.5 * (op + op.adjoint());
  const double tr = h.trace().real();
  if (!(std::abs(tr) > 0.0) || !std::isfinite(tr)) {
    throw ContractViolation("DensityMatrix::hermitized: trace is zero or not finite");
  }
  h /= tr;
  return DensityMatrix(std::move(h), d1, d2);
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi, int d1, int d2) {
  return DensityMatrix(psi * psi.adjoint(), d1, d2);
}

OperatorMatrix annihilation(int d) {
  if (d < 2) throw InvalidDimension("annihilation: d must be >= 2, got " + std::to_string(d));
  OperatorMatrix a = OperatorMatrix::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

OperatorMatrix creation(int d) { return annihilation(d).adjoint(); }

OperatorMatrix number(int d) {
  const OperatorMatrix a = annihilation(d);
  return a.adjoint() * a;
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

OperatorMatrix lift(const OperatorMatrix& op, Mode slot, int d1, int d2) {
  require_square(op, "lift");
  if (d1 < 1 || d2 < 1) throw InvalidDimension("lift: dimensions must be positive");
  const int want = slot == Mode::first ? d1 : d2;
  if (op.rows() != want) {
    throw InvalidDimension("lift: operator dimension " + std::to_string(op.rows()) +
                           " does not match slot dimension " + std::to_string(want));
  }
  if (slot == Mode::first) return kron(op, OperatorMatrix::Identity(d2, d2));
  return kron(OperatorMatrix::Identity(d1, d1), op);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Mode keep) {
  const int d1 = rho.d1();
  const int d2 = rho.d2();
  const OperatorMatrix& m = rho.op();
  if (keep == Mode::first) {
    OperatorMatrix r = OperatorMatrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j)
        for (int k = 0; k < d2; ++k) r(i, j) += m(i * d2 + k, j * d2 + k);
    return DensityMatrix::hermitized(r, d1, 1);
  }
  OperatorMatrix r = OperatorMatrix::Zero(d2, d2);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d1; ++k) r(i, j) += m(k * d2 + i, k * d2 + j);
  return DensityMatrix::hermitized(r, d2, 1);
}

OperatorMatrix partial_transpose(const OperatorMatrix& rho, int d1, int d2, Mode part) {
  if (rho.rows() != d1 * d2 || rho.cols() != d1 * d2) {
    throw InvalidDimension("partial_transpose: operator does not match d1*d2");
  }
  OperatorMatrix out(rho.rows(), rho.cols());
  for (int i1 = 0; i1 < d1; ++i1)
    for (int i2 = 0; i2 < d2; ++i2)
      for (int j1 = 0; j1 < d1; ++j1)
        for (int j2 = 0; j2 < d2; ++j2) {
          const int row = i1 * d2 + i2;
          const int col = j1 * d2 + j2;
          if (part == Mode::first) {
            out(row, col) = rho(j1 * d2 + i2, i1 * d2 + j2);
          } else {
            out(row, col) = rho(i1 * d2 + j2, j1 * d2 + i2);
          }
        }
  return out;
}

OperatorMatrix partial_transpose(const DensityMatrix& rho, Mode part) {
  return partial_transpose(rho.op(), rho.d1(), rho.d2(), part);
}

double hermitian_defect(const OperatorMatrix& op) {
  require_square(op, "hermitian_defect");
  return (op - op.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigenDecomposition eigh(const OperatorMatrix& op) {
  require_square(op, "eigh");
  const double defect = hermitian_defect(op);
  if (defect > kEighHermitianTol) {
    throw ContractViolation("eigh: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const OperatorMatrix sym = 0.5 * (op + op.adjoint());
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw ContractViolation("eigh: decomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd eigvalsh(const OperatorMatrix& op) {
  require_square(op, "eigvalsh");
  const double defect = hermitian_defect(op);
  if (defect > kEighHermitianTol) {
    throw ContractViolation("eigvalsh: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const OperatorMatrix sym = 0.5 * (op + op.adjoint());
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ContractViolation("eigvalsh: decomposition failed");
  return solver.eigenvalues();
}

double trace_distance(const OperatorMatrix& rho, const OperatorMatrix& sigma) {
  return 0.5 * eigvalsh(rho - sigma).cwiseAbs().sum();
}

}  // namespace kerr
