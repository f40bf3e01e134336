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

#pragma once

#include <string_view>

#include "kerrdimer/fock.hpp"
#include "kerrdimer/liouvillian.hpp"

namespace kerr {

enum class SolveMethod { nullspace, evolve };

std::string_view to_string(SolveMethod m);

struct SteadyStateSolution {
  DensityMatrix rho;
  double residual;  // ||L vec(rho)||_2 against the unmodified generator
  SolveMethod method;
  double iterations_or_time;  // 1 for a direct solve, final time for evolve
};

/// Linear-algebra backend for the trace-replaced system. `dense` runs complex
/// LU on L itself; `sparse` runs sparse LU on the equivalent real system in
/// Hermitian coordinates (half the work of a complex factorization).
enum class LinearBackend { automatic, dense, sparse };

/// Systems up to this many unknowns use dense LU under `automatic`.
inline constexpr int kDenseBackendLimit = 1024;

/// Direct solve of L vec(rho) = 0 with the trace row substituted for the
/// population row (i, i) of L with smallest infinity norm. Throws DegenerateSteadyState when
/// the residual exceeds 1e-6.
SteadyStateSolution solve_nullspace(const SuperOperator& l, int d1, int d2,
                                    LinearBackend backend = LinearBackend::automatic);

struct EvolveOptions {
  double t_max = 2000.0;
  double dt = 0.01;
  double tolerance = 1e-10;  // stop once ||L vec(rho)|| falls below this
  int renormalize_every = 100;
};

/// Fixed-step RK4 from the two-mode vacuum until the generator residual
/// drops below `tolerance` or t_max is reached. Throws ConvergenceError
/// when the final residual is above 1e-6.
SteadyStateSolution solve_evolve(const SuperOperator& l, int d1, int d2,
                                 const EvolveOptions& opts = {});

/// Plain RK4 propagation of a vectorized state for time t (no renormalization).
ComplexVector propagate(const SuperOperator& l, ComplexVector x, double t, double dt);

}  // namespace kerr
