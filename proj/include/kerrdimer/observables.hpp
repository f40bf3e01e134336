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

// Scalar coherence, squeezing and entanglement measures of a two-mode state.
// All two-mode functions expect d1 == d2.

#pragma once

#include <optional>
#include <string>

#include "kerrdimer/fock.hpp"
#include "kerrdimer/model.hpp"

namespace kerr {

/// Occupations below this make g2 undefined.
inline constexpr double kG2OccupationFloor = 1e-12;
/// Reduced-state eigenvalues below this are dropped from the entropy sum.
inline constexpr double kEntropyClip = 1e-12;

struct RecordMeta {
  std::string solver = "nullspace";
  int dim = 0;
  double residual = 0.0;
};

struct ObservableRecord {
  std::optional<double> g2;  // empty when <n> is below kG2OccupationFloor
  double zeta = 0.0;
  double c_i = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double entropy = 0.0;
  double log_negativity = 0.0;
  double impurity = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double n_total = 0.0;
  RecordMeta meta;
};

struct ModeEntanglement {
  double lambda1;
  double lambda2;
};

/// tr(b^dag b^dag b b rho) / tr(b^dag b rho)^2. The variance form
/// 1 + (<dn^2> - <n>)/<n>^2 is evaluated alongside and must agree.
std::optional<double> g2_zero(const DensityMatrix& rho, Mode mode);

/// zeta = <Jx^2> + <Jz^2> - N/2 - (N - 1) Var(Jy) with N = <N_total>.
/// Positive values witness spin squeezing.
double spin_squeezing_witness(const DensityMatrix& rho, const SpinOperators& spins);

/// sqrt(2 (1 - tr rho_i^2)), radicand clamped at zero.
double i_concurrence(const DensityMatrix& rho, Mode subsystem);

ModeEntanglement mode_entanglement(const DensityMatrix& rho);

/// Natural-log entropy of the reduced state.
double von_neumann_entropy(const DensityMatrix& rho, Mode subsystem);

/// log2 of the trace norm of rho^{T_1}, clamped at zero.
double log_negativity(const DensityMatrix& rho);

/// 1 - tr(rho^2), clamped to [0, 1].
double impurity(const DensityMatrix& rho);

/// Evaluates every measure for one Fock dimension, reusing operators.
class ObservableEvaluator {
 public:
  explicit ObservableEvaluator(int dim);

  int dim() const noexcept { return ops_.d; }
  ObservableRecord evaluate(const DensityMatrix& rho, RecordMeta meta = {}) const;

 private:
  TwoModeOperators ops_;
  SpinOperators spins_;
};

}  // namespace kerr
