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

// Lindblad generator on column-stacked density matrices:
//   vec(rho)[j * D + i] = rho(i, j)
//   vec(A rho B) = (B^T (x) A) vec(rho)

#pragma once

#include <Eigen/Sparse>

#include "kerrdimer/fock.hpp"

namespace kerr {

using SparseOperator = Eigen::SparseMatrix<Complex, Eigen::ColMajor>;

class SuperOperator {
 public:
  SuperOperator(SparseOperator mat, int hilbert_dim);

  /// Side length, D^2 for Hilbert dimension D.
  int dim() const noexcept { return static_cast<int>(mat_.rows()); }
  int hilbert_dim() const noexcept { return hilbert_dim_; }

  const SparseOperator& sparse() const noexcept { return mat_; }
  Eigen::MatrixXcd to_dense() const { return Eigen::MatrixXcd(mat_); }

  ComplexVector apply(const ComplexVector& v) const { return mat_ * v; }

 private:
  SparseOperator mat_;
  int hilbert_dim_;
};

ComplexVector vectorize(const OperatorMatrix& rho);
ComplexVector vectorize(const DensityMatrix& rho);
OperatorMatrix unvectorize(const ComplexVector& v);

/// Sparse Kronecker product, A the major factor.
SparseOperator sparse_kron(const OperatorMatrix& a, const OperatorMatrix& b);

/// -i[H, .] + loss_rate * sum_i D[b_i] for two cavities of Fock dimension d.
/// `h` must be Hermitian with dimension d*d.
SuperOperator build_liouvillian(const OperatorMatrix& h, double loss_rate, int d);

}  // namespace kerr
