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

#include "kerrdimer/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kerrdimer/error.hpp"

namespace kerr {

namespace {

void require_symmetric(const DensityMatrix& rho, const char* who) {
  if (rho.d1() != rho.d2() || rho.d1() < 2) {
    throw InvalidDimension(std::string(who) + ": expects a two-mode state with d1 == d2 >= 2");
  }
}

double re_expect(const OperatorMatrix& a, const OperatorMatrix& rho) { return expect(a, rho).real(); }

std::optional<double> g2_with(const OperatorMatrix& b, const OperatorMatrix& rho) {
  const OperatorMatrix bd = b.adjoint();
  const OperatorMatrix n = bd * b;
  const double mean_n = re_expect(n, rho);
  if (mean_n < kG2OccupationFloor) return std::nullopt;

  const double pair = re_expect(bd * bd * b * b, rho);
  const double ratio_form = pair / (mean_n * mean_n);

  const double var_n = re_expect(n * n, rho) - mean_n * mean_n;
  const double variance_form = 1.0 + (var_n - mean_n) / (mean_n * mean_n);

  // The variance form loses ~eps/<n>^2 to cancellation.
  const double tol = 1e-9 * std::max(1.0, std::abs(ratio_form)) + 1e-15 / (mean_n * mean_n);
  if (std::abs(ratio_form - variance_form) > tol) {
    throw ContractViolation("g2_zero: ratio and variance forms disagree (" +
                            std::to_string(ratio_form) + " vs " + std::to_string(variance_form) + ")");
  }
  return ratio_form;
}

double zeta_with(const SpinOperators& s, const OperatorMatrix& rho) {
  const double n = re_expect(s.n_total, rho);
  const double jy = re_expect(s.jy, rho);
  const double var_jy = re_expect(s.jy * s.jy, rho) - jy * jy;
  return re_expect(s.jx * s.jx, rho) + re_expect(s.jz * s.jz, rho) - 0.5 * n - (n - 1.0) * var_jy;
}

ModeEntanglement lambdas_with(const TwoModeOperators& o, const OperatorMatrix& rho) {
  const double hop = std::norm(expect(o.b1_dag * o.b2, rho));
  const double pair = std::norm(expect(o.b1 * o.b2, rho));
  const double n1n2 = re_expect(o.n1 * o.n2, rho);
  const double n1 = re_expect(o.n1, rho);
  const double n2 = re_expect(o.n2, rho);
  return {hop - n1n2, pair - n1 * n2};
}

double purity_of(const OperatorMatrix& m) {
  // tr(m^2) = sum |m_ij|^2 for Hermitian m
  return m.cwiseAbs2().sum();
}

double entropy_of(const DensityMatrix& reduced) {
  const Eigen::VectorXd p = eigvalsh(reduced.op());
  double s = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (p(k) > kEntropyClip) s -= p(k) * std::log(p(k));
  return std::max(0.0, s);
}

double log_negativity_of(const DensityMatrix& rho) {
  const double norm = eigvalsh(partial_transpose(rho, Mode::first)).cwiseAbs().sum();
  return std::max(0.0, std::log2(norm));
}

double concurrence_of(const DensityMatrix& reduced) {
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity_of(reduced.op()))));
}

}  // namespace

std::optional<double> g2_zero(const DensityMatrix& rho, Mode mode) {
  require_symmetric(rho, "g2_zero");
  const TwoModeOperators o(rho.d1());
  return g2_with(mode == Mode::first ? o.b1 : o.b2, rho.op());
}

double spin_squeezing_witness(const DensityMatrix& rho, const SpinOperators& spins) {
  if (spins.jx.rows() != rho.dim()) {
    throw InvalidDimension("spin_squeezing_witness: spin operators do not match the state");
  }
  return zeta_with(spins, rho.op());
}

double i_concurrence(const DensityMatrix& rho, Mode subsystem) {
  return concurrence_of(partial_trace(rho, subsystem));
}

ModeEntanglement mode_entanglement(const DensityMatrix& rho) {
  require_symmetric(rho, "mode_entanglement");
  return lambdas_with(TwoModeOperators(rho.d1()), rho.op());
}

double von_neumann_entropy(const DensityMatrix& rho, Mode subsystem) {
  return entropy_of(partial_trace(rho, subsystem));
}

double log_negativity(const DensityMatrix& rho) { return log_negativity_of(rho); }

double impurity(const DensityMatrix& rho) {
  return std::clamp(1.0 - purity_of(rho.op()), 0.0, 1.0);
}

ObservableEvaluator::ObservableEvaluator(int dim) : ops_(dim), spins_(build_spin_operators(dim)) {}

ObservableRecord ObservableEvaluator::evaluate(const DensityMatrix& rho, RecordMeta meta) const {
  if (rho.d1() != ops_.d || rho.d2() != ops_.d) {
    throw InvalidDimension("ObservableEvaluator: state dimension does not match evaluator");
  }
  const OperatorMatrix& m = rho.op();
  ObservableRecord r;
  r.g2 = g2_with(ops_.b1, m);
  r.zeta = zeta_with(spins_, m);
  const DensityMatrix reduced = partial_trace(rho, Mode::first);
  r.c_i = concurrence_of(reduced);
  const ModeEntanglement lam = lambdas_with(ops_, m);
  r.lambda1 = lam.lambda1;
  r.lambda2 = lam.lambda2;
  r.entropy = entropy_of(reduced);
  r.log_negativity = log_negativity_of(rho);
  r.impurity = impurity(rho);
  r.n1 = re_expect(ops_.n1, m);
  r.n2 = re_expect(ops_.n2, m);
  r.n_total = r.n1 + r.n2;
  meta.dim = ops_.d;
  r.meta = std::move(meta);
  return r;
}

}  // namespace kerr
