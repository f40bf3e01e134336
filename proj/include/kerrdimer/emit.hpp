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

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "kerrdimer/sweep.hpp"

namespace kerr {

/// CSV header, in order.
inline constexpr std::array<std::string_view, 14> kCsvColumns = {
    "j_over_kappa", "u_over_kappa", "g2",       "zeta",     "c_i", "lambda1", "lambda2",
    "entropy",      "log_negativity", "impurity", "n1",     "n2",  "n_total", "residual"};

/// Significant digits of every emitted number.
inline constexpr int kEmitDigits = 9;

/// "%.9g"; non-finite values become an empty string.
std::string format_number(double v);

/// v rounded to kEmitDigits significant digits.
double round_emitted(double v);

struct EmitOptions {
  /// Written into the JSON metadata block only; omitted when empty.
  std::optional<std::string> timestamp;
};

void write_csv(const SweepResult& result, std::ostream& out);
void write_json(const SweepResult& result, std::ostream& out, const EmitOptions& opts = {});

/// Writes the result to `path`. Throws IoError when the file cannot be written.
void emit(const SweepResult& result, OutputFormat format, const std::string& path,
          const EmitOptions& opts = {});

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace kerr
