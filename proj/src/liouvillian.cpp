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

#include "kerrdimer/liouvillian.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "kerrdimer/error.hpp"
#include "kerrdimer/model.hpp"

namespace kerr {

namespace {

using Triplet = Eigen::Triplet<Complex>;

void append_kron(std::vector<Triplet>& out, const OperatorMatrix& a, const OperatorMatrix& b,
                 Complex scale) {
  const Eigen::Index nb_r = b.rows();
  const Eigen::Index nb_c = b.cols();
  for (Eigen::Index ja = 0; ja < a.cols(); ++ja)
    for (Eigen::Index ia = 0; ia < a.rows(); ++ia) {
      const Complex av = a(ia, ja);
      if (av == Complex(0.0)) continue;
      for (Eigen::Index jb = 0; jb < nb_c; ++jb)
        for (Eigen::Index ib = 0; ib < nb_r; ++ib) {
          const Complex bv = b(ib, jb);
          if (bv == Complex(0.0)) continue;
          out.emplace_back(static_cast<int>(ia * nb_r + ib), static_cast<int>(ja * nb_c + jb),
                           scale * av * bv);
        }
    }
}

}  // namespace

SuperOperator::SuperOperator(SparseOperator mat, int hilbert_dim)
    : mat_(std::move(mat)), hilbert_dim_(hilbert_dim) {
  if (mat_.rows() != mat_.cols() ||
      mat_.rows() != static_cast<Eigen::Index>(hilbert_dim) * hilbert_dim) {
    throw InvalidDimension("SuperOperator: matrix must be D^2 x D^2");
  }
  mat_.makeCompressed();
}

ComplexVector vectorize(const OperatorMatrix& rho) {
  // Eigen storage is column-major, which is exactly the column-stacking order.
  return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

ComplexVector vectorize(const DensityMatrix& rho) { return vectorize(rho.op()); }

OperatorMatrix unvectorize(const ComplexVector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size()) {
    throw InvalidDimension("unvectorize: length " + std::to_string(v.size()) + " is not a square");
  }
  return Eigen::Map<const OperatorMatrix>(v.data(), d, d);
}

SparseOperator sparse_kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  std::vector<Triplet> t;
  append_kron(t, a, b, 1.0);
  SparseOperator m(a.rows() * b.rows(), a.cols() * b.cols());
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SuperOperator build_liouvillian(const OperatorMatrix& h, double loss_rate, int d) {
  if (d < 2) throw InvalidDimension("build_liouvillian: d must be >= 2");
  const int hd = d * d;
  if (h.rows() != hd || h.cols() != hd) {
    throw InvalidDimension("build_liouvillian: Hamiltonian is not (d*d) square");
  }
  if (!(loss_rate > 0.0) || !std::isfinite(loss_rate)) {
    throw ContractViolation("build_liouvillian: loss_rate must be > 0");
  }
  if (hermitian_defect(h) > kHermitianTol) {
    throw ContractViolation("build_liouvillian: Hamiltonian is not Hermitian");
  }

  const OperatorMatrix id = OperatorMatrix::Identity(hd, hd);
  const Complex minus_i(0.0, -1.0);
  std::vector<Triplet> t;
  append_kron(t, id, h, minus_i);
  append_kron(t, h.transpose(), id, -minus_i);

  const TwoModeOperators ops(d);
  for (const OperatorMatrix* b : {&ops.b1, &ops.b2}) {
    const OperatorMatrix n = b->adjoint() * *b;
    append_kron(t, b->conjugate(), *b, loss_rate);
    append_kron(t, id, n, -0.5 * loss_rate);
    append_kron(t, n.transpose(), id, -0.5 * loss_rate);
  }

  SparseOperator l(static_cast<Eigen::Index>(hd) * hd, static_cast<Eigen::Index>(hd) * hd);
  l.setFromTriplets(t.begin(), t.end());
  l.prune(Complex(0.0), 0.0);
  return SuperOperator(std::move(l), hd);
}

}  // namespace kerr
