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

#include "kerrdimer/steady_state.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/LU>
#include <Eigen/SparseLU>
#ifdef KERRDIMER_HAVE_UMFPACK
#include <Eigen/UmfPackSupport>
#endif

#include "kerrdimer/error.hpp"

namespace kerr {

namespace {

constexpr double kDegenerateResidual = 1e-6;

void check_dims(const SuperOperator& l, int d1, int d2) {
  if (d1 < 1 || d2 < 1 || l.hilbert_dim() != d1 * d2) {
    throw InvalidDimension("steady state: d1*d2 does not match the generator");
  }
}

// Diagonal-index row (i, i) with the smallest infinity norm; the first one
// on ties. The trace functional, the left null vector of L, is supported on
// exactly these rows, so replacing any other row would keep the system
// singular.
template <typename Sparse>
int weakest_row(const Sparse& l, int hd) {
  std::vector<double> norm(static_cast<size_t>(l.rows()), 0.0);
  for (int k = 0; k < l.outerSize(); ++k)
    for (typename Sparse::InnerIterator it(l, k); it; ++it) {
      double& n = norm[static_cast<size_t>(it.row())];
      n = std::max(n, std::abs(it.value()));
    }
  int best = 0;
  for (int i = 1; i < hd; ++i) {
    const int r = i * hd + i;
    if (norm[static_cast<size_t>(r)] < norm[static_cast<size_t>(best)]) best = r;
  }
  return best;
}

ComplexVector solve_dense(const SuperOperator& l, int row) {
  const int hd = l.hilbert_dim();
  Eigen::MatrixXcd a = l.to_dense();
  a.row(row).setZero();
  for (int i = 0; i < hd; ++i) a(row, i * hd + i) = 1.0;
  ComplexVector rhs = ComplexVector::Zero(a.rows());
  rhs(row) = 1.0;
  return a.partialPivLu().solve(rhs);
}

// Hermitian parametrization of a D x D matrix by D^2 reals, laid out on
// the column-stacked grid: diagonal (i, i) holds rho_ii, the upper slot
// (i < j, index j * D + i) holds Re rho_ij and the lower slot (index
// i * D + j) holds Im rho_ij. L maps Hermitian matrices to Hermitian
// matrices, so in these coordinates it is a real matrix of the same size.
using RealSparse = Eigen::SparseMatrix<double, Eigen::ColMajor>;

RealSparse real_generator(const SuperOperator& l) {
  const int hd = l.hilbert_dim();
  const SparseOperator& src = l.sparse();
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<size_t>(2 * src.nonZeros()));
  for (int k = 0; k < src.outerSize(); ++k)
    for (SparseOperator::InnerIterator it(src, k); it; ++it) {
      const int out_i = static_cast<int>(it.row()) % hd;
      const int out_j = static_cast<int>(it.row()) / hd;
      if (out_i > out_j) continue;  // the lower triangle of L rho is redundant
      const int in_i = static_cast<int>(it.col()) % hd;
      const int in_j = static_cast<int>(it.col()) / hd;
      const double re = it.value().real();
      const double im = it.value().imag();

      // rho_{in_i, in_j} = x_re + sign * i * x_im
      int var_re = 0;
      int var_im = -1;
      double sign = 1.0;
      if (in_i == in_j) {
        var_re = in_i * hd + in_i;
      } else if (in_i < in_j) {
        var_re = in_j * hd + in_i;
        var_im = in_i * hd + in_j;
      } else {
        var_re = in_i * hd + in_j;
        var_im = in_j * hd + in_i;
        sign = -1.0;
      }

      const int eq_re = out_j * hd + out_i;
      t.emplace_back(eq_re, var_re, re);
      if (var_im >= 0) t.emplace_back(eq_re, var_im, -sign * im);
      if (out_i < out_j) {
        const int eq_im = out_i * hd + out_j;
        t.emplace_back(eq_im, var_re, im);
        if (var_im >= 0) t.emplace_back(eq_im, var_im, sign * re);
      }
    }
  RealSparse m(src.rows(), src.cols());
  m.setFromTriplets(t.begin(), t.end());
  m.prune(0.0, 0.0);
  return m;
}

ComplexVector complex_from_real(const Eigen::VectorXd& x, int hd) {
  OperatorMatrix rho(hd, hd);
  for (int j = 0; j < hd; ++j)
    for (int i = 0; i < hd; ++i) {
      if (i == j) {
        rho(i, i) = x(i * hd + i);
      } else if (i < j) {
        rho(i, j) = Complex(x(j * hd + i), x(i * hd + j));
      } else {
        rho(i, j) = Complex(x(i * hd + j), -x(j * hd + i));
      }
    }
  return vectorize(rho);
}

ComplexVector solve_sparse(const SuperOperator& l) {
  const int hd = l.hilbert_dim();
  const RealSparse m = real_generator(l);
  const int row = weakest_row(m, hd);

  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<size_t>(m.nonZeros() + hd));
  for (int k = 0; k < m.outerSize(); ++k)
    for (RealSparse::InnerIterator it(m, k); it; ++it)
      if (it.row() != row) t.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
  for (int i = 0; i < hd; ++i) t.emplace_back(row, i * hd + i, 1.0);
  RealSparse a(m.rows(), m.cols());
  a.setFromTriplets(t.begin(), t.end());
  a.makeCompressed();

#ifdef KERRDIMER_HAVE_UMFPACK
  Eigen::UmfPackLU<RealSparse> lu;
#else
  Eigen::SparseLU<RealSparse, Eigen::COLAMDOrdering<int>> lu;
#endif
  lu.compute(a);
  if (lu.info() != Eigen::Success) throw DegenerateSteadyState("solve_nullspace: sparse LU failed");
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(a.rows());
  rhs(row) = 1.0;
  const Eigen::VectorXd x = lu.solve(rhs);
  if (lu.info() != Eigen::Success) throw DegenerateSteadyState("solve_nullspace: sparse solve failed");
  return complex_from_real(x, hd);
}

double generator_residual(const SuperOperator& l, const DensityMatrix& rho) {
  return l.apply(vectorize(rho)).norm();
}

void hermitize_in_place(ComplexVector& x) {
  OperatorMatrix m = unvectorize(x);
  m = 0.5 * (m + m.adjoint()).eval();
  m /= m.trace().real();
  x = vectorize(m);
}

}  // namespace

std::string_view to_string(SolveMethod m) {
  return m == SolveMethod::nullspace ? "nullspace" : "evolve";
}

SteadyStateSolution solve_nullspace(const SuperOperator& l, int d1, int d2, LinearBackend backend) {
  check_dims(l, d1, d2);
  const bool dense = backend == LinearBackend::dense ||
                     (backend == LinearBackend::automatic && l.dim() <= kDenseBackendLimit);
  const ComplexVector x = dense ? solve_dense(l, weakest_row(l.sparse(), l.hilbert_dim())) : solve_sparse(l);
  if (!x.allFinite()) throw DegenerateSteadyState("solve_nullspace: singular trace-replaced system");

  try {
    DensityMatrix rho = DensityMatrix::hermitized(unvectorize(x), d1, d2);
    const double residual = generator_residual(l, rho);
    if (residual > kDegenerateResidual) {
      throw DegenerateSteadyState("solve_nullspace: residual " + std::to_string(residual) +
                                  " exceeds 1e-6");
    }
    return {std::move(rho), residual, SolveMethod::nullspace, 1.0};
  } catch (const ContractViolation& e) {
    throw DegenerateSteadyState(std::string("solve_nullspace: solution is not a state: ") + e.what());
  }
}

ComplexVector propagate(const SuperOperator& l, ComplexVector x, double t, double dt) {
  if (!(dt > 0.0)) throw ContractViolation("propagate: dt must be > 0");
  const auto steps = static_cast<long>(std::llround(t / dt));
  const SparseOperator& m = l.sparse();
  ComplexVector k1, k2, k3, k4;
  for (long s = 0; s < steps; ++s) {
    k1 = m * x;
    k2 = m * (x + 0.5 * dt * k1);
    k3 = m * (x + 0.5 * dt * k2);
    k4 = m * (x + dt * k3);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

SteadyStateSolution solve_evolve(const SuperOperator& l, int d1, int d2, const EvolveOptions& opts) {
  check_dims(l, d1, d2);
  if (!(opts.dt > 0.0) || opts.dt > 0.05) throw ContractViolation("solve_evolve: dt must be in (0, 0.05]");
  if (!(opts.t_max >= 50.0)) throw ContractViolation("solve_evolve: t_max must be >= 50");
  if (opts.renormalize_every < 1) throw ContractViolation("solve_evolve: renormalize_every must be >= 1");

  const SparseOperator& m = l.sparse();
  const double dt = opts.dt;
  const auto max_steps = static_cast<long>(std::ceil(opts.t_max / dt));

  ComplexVector x = ComplexVector::Zero(l.dim());
  x(0) = 1.0;  // |0,0><0,0|
  ComplexVector k1, k2, k3, k4;
  long step = 0;
  for (; step < max_steps; ++step) {
    k1 = m * x;
    if (k1.norm() < opts.tolerance) break;
    k2 = m * (x + 0.5 * dt * k1);
    k3 = m * (x + 0.5 * dt * k2);
    k4 = m * (x + dt * k3);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((step + 1) % opts.renormalize_every == 0) {
      if (!x.allFinite()) break;  // step size outside the stability region
      hermitize_in_place(x);
    }
  }

  const double t_final = static_cast<double>(step) * dt;
  if (!x.allFinite()) {
    throw ConvergenceError("solve_evolve: integration diverged before t = " + std::to_string(t_final),
                           std::numeric_limits<double>::infinity());
  }
  DensityMatrix rho = DensityMatrix::hermitized(unvectorize(x), d1, d2);
  const double residual = generator_residual(l, rho);
  if (residual > kDegenerateResidual) {
    throw ConvergenceError("solve_evolve: residual " + std::to_string(residual) +
                               " at t = " + std::to_string(t_final),
                           residual);
  }
  return {std::move(rho), residual, SolveMethod::evolve, t_final};
}

}  // namespace kerr
