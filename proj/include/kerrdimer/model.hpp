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

// Two driven Kerr cavities coupled by single- or two-photon exchange.
// All rates are in units of the cavity loss rate (kappa = 1).

#pragma once

#include <string>
#include <string_view>

#include "kerrdimer/fock.hpp"

namespace kerr {

enum class Exchange { single, two };

std::string_view to_string(Exchange e);
/// Accepts "single" or "two"; throws ConfigError otherwise.
Exchange parse_exchange(std::string_view s);

struct ModelParams {
  Exchange exchange = Exchange::single;
  double u_over_kappa = 0.0;
  double j_over_kappa = 0.0;
  double f_over_kappa = 0.0;  // real drive amplitude
  double kappa_mhz_over_2pi = 0.4;  // metadata only
  int dim = 4;  // per-cavity Fock dimension (occupations 0..dim-1)

  /// Throws ContractViolation / InvalidDimension.
  void validate() const;
};

/// Ladder and number operators of both cavities for one Fock dimension.
struct TwoModeOperators {
  int d = 0;
  OperatorMatrix b1, b2;
  OperatorMatrix b1_dag, b2_dag;
  OperatorMatrix n1, n2;

  explicit TwoModeOperators(int dim);
};

struct SpinOperators {
  OperatorMatrix jx, jy, jz;
  OperatorMatrix n_total;
};

/// H = U sum b^dag b^dag b b + F sum (b^dag + b) + exchange term, in the
/// frame rotating at the drive frequency.
OperatorMatrix build_hamiltonian(const ModelParams& p);

/// Schwinger pseudo-spin of the two modes plus the total number operator.
SpinOperators build_spin_operators(int dim);

/// Exchange-only pieces, used by the operator identity checks.
OperatorMatrix single_photon_hopping(const TwoModeOperators& ops);
OperatorMatrix two_photon_hopping(const TwoModeOperators& ops);
OperatorMatrix kerr_term(const TwoModeOperators& ops);

}  // namespace kerr
