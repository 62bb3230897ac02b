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

#ifndef DCC_WEINGARTEN_H
#define DCC_WEINGARTEN_H

#include <stdexcept>
#include <utility>

#include "dcc/group_matrix.h"
#include "dcc/pauli.h"

namespace dcc {

/// Class-function values sum_l d_l^3 chi^l(c) / (576 D_l), skipping D_l = 0.
///
/// The cube of d_l appears because D_l here is the trace of the isotypic
/// projector, i.e. d_l times the dimension of the U(d) irrep.
template <class S>
std::array<S, kNumClasses> weingarten_class_values(const std::array<S, kNumIrreps> &D) {
    std::array<S, kNumClasses> w;
    for (int c = 0; c < kNumClasses; c++) {
        S acc = scalar_from<S>(0);
        for (int l = 0; l < kNumIrreps; l++) {
            if (is_zero(D[l]) || kCharacter[l][c] == 0) continue;
            int d3 = kIrrepDim[l] * kIrrepDim[l] * kIrrepDim[l];
            acc += scalar_from<S>(rational(d3 * kCharacter[l][c], 576)) / D[l];
        }
        w[c] = acc;
    }
    return w;
}

/// Unitary-group Weingarten matrix W(pi, sigma) = w(class(pi sigma)).
/// Requires every D_l nonzero, which for S4 means d >= 4.
template <class S>
GroupMatrix<S> unitary_weingarten(const S &d) {
    if constexpr (std::is_same_v<S, mpq_class>) {
        if (d < 4) throw std::domain_error("unitary_weingarten: d < 4 has a vanishing irrep");
    }
    auto D = d_pm_lambda(d);
    for (int l = 0; l < kNumIrreps; l++) {
        if (is_zero(D.total[l])) throw std::domain_error("unitary_weingarten: vanishing irrep");
    }
    return GroupMatrix<S>::class_function(weingarten_class_values(D.total));
}

/// Clifford generalized Weingarten matrices (W+, W-), restricted to irreps
/// with nonzero D^+ (resp. D^-) at the given d.
template <class S>
std::pair<GroupMatrix<S>, GroupMatrix<S>> clifford_weingarten_pm(const S &d) {
    auto D = d_pm_lambda(d);
    return {GroupMatrix<S>::class_function(weingarten_class_values(D.plus)),
            GroupMatrix<S>::class_function(weingarten_class_values(D.minus))};
}

/// Gram matrix G(pi, sigma) = d^{#cycles(pi sigma^-1)}.
template <class S>
GroupMatrix<S> gram_matrix(const S &d) {
    GroupMatrix<S> g;
    const auto &t = s4();
    for (int i = 0; i < 24; i++)
        for (int j = 0; j < 24; j++) g(i, j) = pow_s(d, t.cycles[t.mul[i][t.inv[j]]]);
    return g;
}

}  // namespace dcc

#endif
