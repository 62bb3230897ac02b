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

#ifndef DCC_VALIDATION_H
#define DCC_VALIDATION_H

#include <cstdint>
#include <string>
#include <vector>

#include "dcc/engine.h"

namespace dcc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Largest entrywise |fold_channel_doped - exact_group_channel| over random
/// dense operators, all listed k and angles.
double enumeration_deviation(int N, const std::vector<int> &ks, const std::vector<Angle> &thetas, int num_ops,
                             uint64_t seed);

struct SpectrumCheck {
    double eigen_dev = 0;      // sorted eigenvalues vs the predicted multiset
    double symmetry_dev = 0;   // max |Xi - Xi^T|
    int rank = 0;              // exact rank when rational, numerical otherwise
};
SpectrumCheck check_xi_spectrum(const Angle &theta, int N);

/// Ξ for every K position equals Ξ at position 0 (exact path).
bool kpos_invariant(const Angle &theta, int N);

/// Runs the invariant suite: "fast" (algebra + N = 1 oracle) or "full"
/// (adds the N = 2 oracle and short Monte-Carlo runs).
std::vector<CheckResult> run_validation(const std::string &level, uint64_t seed = 1);

}  // namespace dcc

#endif
