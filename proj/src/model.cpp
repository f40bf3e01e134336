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

#include "kerrdimer/model.hpp"

#include <cmath>

#include "kerrdimer/error.hpp"

namespace kerr {

std::string_view to_string(Exchange e) { return e == Exchange::single ? "single" : "two"; }

Exchange parse_exchange(std::string_view s) {
  if (s == "single") return Exchange::single;
  if (s == "two") return Exchange::two;
  throw ConfigError("unknown exchange model '" + std::string(s) + "' (expected single|two)");
}

void ModelParams::validate() const {
  if (dim < 2) throw InvalidDimension("ModelParams: dim must be >= 2");
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ContractViolation(std::string("ModelParams: ") + name + " must be finite and >= 0");
    }
  };
  check(u_over_kappa, "u_over_kappa");
  check(j_over_kappa, "j_over_kappa");
  check(f_over_kappa, "f_over_kappa");
  if (!std::isfinite(kappa_mhz_over_2pi) || kappa_mhz_over_2pi <= 0.0) {
    throw ContractViolation("ModelParams: kappa_mhz_over_2pi must be > 0");
  }
}

TwoModeOperators::TwoModeOperators(int dim) : d(dim) {
  const OperatorMatrix a = annihilation(dim);
  b1 = lift(a, Mode::first, dim, dim);
  b2 = lift(a, Mode::second, dim, dim);
  b1_dag = b1.adjoint();
  b2_dag = b2.adjoint();
  n1 = b1_dag * b1;
  n2 = b2_dag * b2;
}

OperatorMatrix single_photon_hopping(const TwoModeOperators& o) {
  return o.b1_dag * o.b2 + o.b2_dag * o.b1;
}

OperatorMatrix two_photon_hopping(const TwoModeOperators& o) {
  return o.b1_dag * o.b1_dag * o.b2 * o.b2 + o.b2_dag * o.b2_dag * o.b1 * o.b1;
}

OperatorMatrix kerr_term(const TwoModeOperators& o) {
  return o.b1_dag * o.b1_dag * o.b1 * o.b1 + o.b2_dag * o.b2_dag * o.b2 * o.b2;
}

OperatorMatrix build_hamiltonian(const ModelParams& p) {
  p.validate();
  const TwoModeOperators o(p.dim);
  OperatorMatrix h = p.u_over_kappa * kerr_term(o);
  h += p.f_over_kappa * (o.b1_dag + o.b1 + o.b2_dag + o.b2);
  const OperatorMatrix hop =
      p.exchange == Exchange::single ? single_photon_hopping(o) : two_photon_hopping(o);
  h += p.j_over_kappa * hop;
  return h;
}

SpinOperators build_spin_operators(int dim) {
  const TwoModeOperators o(dim);
  const Complex minus_half_i(0.0, -0.5);
  SpinOperators s;
  s.jx = 0.5 * (o.b1_dag * o.b2 + o.b2_dag * o.b1);
  s.jy = minus_half_i * (o.b1_dag * o.b2 - o.b2_dag * o.b1);
  s.jz = 0.5 * (o.n1 - o.n2);
  s.n_total = o.n1 + o.n2;
  return s;
}

}  // namespace kerr
