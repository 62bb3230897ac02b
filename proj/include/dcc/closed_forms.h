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

#ifndef DCC_CLOSED_FORMS_H
#define DCC_CLOSED_FORMS_H

#include <string>
#include <vector>

#include <gmpxx.h>

namespace dcc {

/// Regime of a closed-form prediction.
enum class Regime { Clifford, Doped, Haar };

/// 8-point OTOC averages for four disjoint single-qubit Paulis, K = T gate.
///
/// These are the forms obtained from the channel engine (exact rational
/// interpolation in d, cross-checked by group enumeration). The `_printed`
/// variants reproduce the published expressions for comparison only.
mpq_class otoc8_doped(const mpq_class &d, long k);
mpq_class otoc8_clifford(const mpq_class &d);
mpq_class otoc8_haar(const mpq_class &d);
mpq_class otoc8_doped_printed(const mpq_class &d, long k);
mpq_class otoc8_clifford_printed(const mpq_class &d);
mpq_class otoc8_haar_printed(const mpq_class &d);
/// True when d < 16: four disjoint Paulis do not fit, the value is formal.
bool otoc8_is_formal(const mpq_class &d);
mpq_class delta_otoc(const mpq_class &d, long k);

mpq_class purity_average(const mpq_class &dA, const mpq_class &dB);

enum class StateClass { StabilizerZero, RandomProduct, Custom };
StateClass parse_state_class(const std::string &s);
const char *state_class_name(StateClass s);

/// tr(psi^4 Q) implied by a state class at d = 2^N (custom passes trQ through).
mpq_class state_trQ(StateClass s, const mpq_class &d, const mpq_class &custom = 0);

/// Variance of the half-system purity, d_A = d_B = sqrt(d), phase-gate doping
/// with the given cos(4 theta).
mpq_class purity_fluct(const mpq_class &d, long k, const mpq_class &cos4, StateClass state,
                       const mpq_class &custom_trQ = 0);
mpq_class purity_fluct_haar(const mpq_class &d);
/// Clifford (k = 0) value (d-1)(d(d+1)trQ - 2) / ((d+1)^2 (d+2)).
mpq_class purity_fluct_clifford(const mpq_class &d, const mpq_class &trQ);
/// <Pur^2> from (a_k, b_k) for an arbitrary bipartition d = dA dB.
mpq_class purity_second_moment_general(const mpq_class &dA, const mpq_class &dB, long k, const mpq_class &cos4,
                                       const mpq_class &trQ);
mpq_class purity_fluct_general(const mpq_class &dA, const mpq_class &dB, long k, const mpq_class &cos4,
                               const mpq_class &trQ);
/// Stabilizer input, symmetric cut.
mpq_class purity_second_moment(const mpq_class &d, long k, const mpq_class &cos4);
mpq_class purity_fluct_asymmetric(const mpq_class &d, const mpq_class &dA, long k, const mpq_class &cos4,
                                  const mpq_class &trQ);
/// k -> infinity limit of the above.
mpq_class purity_fluct_asymmetric_haar(const mpq_class &d, const mpq_class &dA);
/// The published random-product expression with x = d^{2 - log2 5}.
double purity_fluct_short_printed(double d, long k, double cos4);
mpq_class delta_purity(const mpq_class &d, long k, const mpq_class &cos4);

/// Integer square root of a perfect square rational; throws otherwise.
mpq_class exact_sqrt(const mpq_class &v);

enum class Probe { Otoc8, PurityFluct };

struct ThresholdQuery {
    mpq_class d;
    mpq_class ratio = 1;
    Probe probe = Probe::Otoc8;
    mpq_class cos4 = -1;  // T gate
    long k_max = 100000;
};

/// Smallest k with |value_k - Haar| <= ratio * |Haar|; -1 if none up to k_max.
long threshold_k(const ThresholdQuery &q);

struct AffineFit {
    double slope = 0, intercept = 0, max_residual = 0;
};
AffineFit fit_affine(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace dcc

#endif
