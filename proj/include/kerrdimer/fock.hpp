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

// Dense operators on a truncated two-mode bosonic Fock space.
//
// Tensor ordering is cavity-1-major throughout the library: the basis state
// |i1, i2> has flat index i1 * d2 + i2, so b1 = b (x) I and b2 = I (x) b.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace kerr {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Which cavity of the bipartite system an operation refers to.
enum class Mode { first = 1, second = 2 };

/// Validation thresholds for DensityMatrix.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-8;

/// Symmetrization threshold applied before every eigendecomposition.
inline constexpr double kEighHermitianTol = 1e-8;

/// Hermitian, unit-trace, positive-semidefinite operator tagged with its
/// bipartite dimensions. A single-mode state uses d2 == 1.
class DensityMatrix {
 public:
  /// Validates all invariants; throws ContractViolation or InvalidDimension.
  DensityMatrix(OperatorMatrix op, int d1, int d2);

  const OperatorMatrix& op() const noexcept { return op_; }
  int d1() const noexcept { return d1_; }
  int d2() const noexcept { return d2_; }
  int dim() const noexcept { return d1_ * d2_; }

  /// Dimension of the given cavity.
  int dim_of(Mode m) const noexcept { return m == Mode::first ? d1_ : d2_; }

  /// (A + A^dag)/2 rescaled to unit trace, then validated. Use for solver
  /// output whose anti-Hermitian part is numerical noise.
  static DensityMatrix hermitized(const OperatorMatrix& op, int d1, int d2);

  /// |psi><psi| for a normalized state vector.
  static DensityMatrix pure(const ComplexVector& psi, int d1, int d2);

 private:
  OperatorMatrix op_;
  int d1_;
  int d2_;
};

struct HermitianEigenDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  OperatorMatrix eigenvectors;  // columns
};

/// Truncated annihilation operator: sqrt(n) at (n-1, n).
OperatorMatrix annihilation(int d);
OperatorMatrix creation(int d);
OperatorMatrix number(int d);

/// Embeds a single-mode operator into the d1*d2 space at the given slot.
OperatorMatrix lift(const OperatorMatrix& op, Mode slot, int d1, int d2);

/// Reduced state of the kept cavity, returned as a single-mode DensityMatrix.
DensityMatrix partial_trace(const DensityMatrix& rho, Mode keep);

/// rho^{T_part}: transposes the indices of one cavity.
OperatorMatrix partial_transpose(const DensityMatrix& rho, Mode part);
OperatorMatrix partial_transpose(const OperatorMatrix& rho, int d1, int d2, Mode part);

/// Eigendecomposition of a Hermitian matrix (symmetrized first).
HermitianEigenDecomposition eigh(const OperatorMatrix& op);

/// Eigenvalues only.
Eigen::VectorXd eigvalsh(const OperatorMatrix& op);

/// max |A - A^dag| entrywise.
double hermitian_defect(const OperatorMatrix& op);

/// tr(A rho) without forming the product.
inline Complex expect(const OperatorMatrix& a, const OperatorMatrix& rho) {
  return (a.transpose().array() * rho.array()).sum();
}

/// [A, B] = AB - BA.
inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

/// Kronecker product A (x) B, with A the major index.
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

/// (1/2) * sum |eig(rho - sigma)|.
double trace_distance(const OperatorMatrix& rho, const OperatorMatrix& sigma);

}  // namespace kerr
