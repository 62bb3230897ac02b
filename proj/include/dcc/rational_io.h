// Copyright 2026 The dcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCC_RATIONAL_IO_H
#define DCC_RATIONAL_IO_H

#include <string>

#include <gmpxx.h>

namespace dcc {

/// "num/den" in lowest terms; integers print without a denominator.
std::string rational_str(const mpq_class &v);

/// Parses "3", "-7/12" or "0.25" (decimal literals are converted exactly).
mpq_class parse_rational(const std::string &text);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double v);

}  // namespace dcc

#endif
