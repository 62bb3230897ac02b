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

#ifndef DCC_PAULI_H
#define DCC_PAULI_H

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "dcc/perm4.h"
#include "dcc/scalar.h"

namespace dcc {

/// Pauli string with an overall phase i^phase.
///
/// Qubit q is bit q of a computational-basis index. Letters are encoded in
/// symplectic form: X=(1,0), Y=(1,1), Z=(0,1), with Y the Hermitian Pauli.
struct PauliString {
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;
    uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(size_t n) : x(n, 0), z(n, 0) {}
    /// Parses "+XIZ", "-Y", "iZZ"; character k is qubit k.
    static PauliString from_str(const std::string &text);

    size_t size() const { return x.size(); }
    char letter(size_t q) const;
    bool is_identity() const;
    bool is_hermitian() const { return phase % 2 == 0; }
    std::string str() const;
    /// Support bitmask (qubits with a non-identity letter).
    uint64_t support() const;
    Eigen::MatrixXcd dense() const;
    PauliString operator*(const PauliString &o) const;
    bool operator==(const PauliString &o) const = default;
};

/// +1 when the two strings commute, -1 otherwise.
int pauli_commutation_sign(const PauliString &a, const PauliString &b);

/// Single-qubit Pauli (0=I,1=X,2=Y,3=Z) as a dense 2x2 matrix.
Eigen::Matrix2cd pauli_matrix(int label);

/// Q2 = (I^4 + X^4 + Y^4 + Z^4) / 4 on four copies of one qubit (16x16).
const Eigen::MatrixXcd &q2_dense();

/// Q = d^-2 sum_P P^{(x)4} on four copies of N qubits; dense, N <= 2.
Eigen::MatrixXcd q_dense(int N);

/// Per-qubit trace tr(Q2 T_sigma) by class: {4, 2, 4, 1, 2}.
constexpr std::array<int, kNumClasses> kQTable = {4, 2, 4, 1, 2};
/// kQTable[c] = 2^kQExponent[c], so tr(Q T_sigma) = d^kQExponent[c].
constexpr std::array<int, kNumClasses> kQExponent = {2, 1, 2, 0, 1};
constexpr std::array<int, kNumClasses> kClassCycles = {4, 3, 2, 2, 1};

/// tr(Q T_sigma) on N qubits, exact.
mpq_class trace_q_T(const Perm4 &sigma, int N);

/// tr(Q T_sigma) as a polynomial in d (valid at d = 2^N).
template <class S>
S q_poly(int cls, const S &d) {
    return pow_s(d, kQExponent[cls]);
}

template <class S>
S t_poly(int cls, const S &d) {
    return pow_s(d, kClassCycles[cls]);
}

template <class S>
struct IrrepTraces {
    std::array<S, kNumIrreps> plus;   // tr(Q Pi_l)
    std::array<S, kNumIrreps> minus;  // tr(Q^perp Pi_l)
    std::array<S, kNumIrreps> total;  // tr(Pi_l)
};

/// D^+_l, D^-_l and D_l as functions of d.
template <class S>
IrrepTraces<S> d_pm_lambda(const S &d) {
    IrrepTraces<S> r;
    for (int l = 0; l < kNumIrreps; l++) {
        S p = scalar_from<S>(0);
        S t = scalar_from<S>(0);
        for (int c = 0; c < kNumClasses; c++) {
            S w = scalar_from<S>(rational(kIrrepDim[l] * kClassSize[c] * kCharacter[l][c], 24));
            p += w * q_poly(c, d);
            t += w * t_poly(c, d);
        }
        r.plus[l] = p;
        r.total[l] = t;
        r.minus[l] = t - p;
    }
    return r;
}

inline mpq_class dimension_of(int N) {
    mpz_class d = 1;
    d <<= N;
    return mpq_class(d);
}

/// <psi|^4 Q |psi>^4 = prod_q (1 + x^4 + y^4 + z^4) / 4 for Bloch vectors.
double trace_psi4_Q_product(const std::vector<std::array<double, 3>> &bloch);

/// The all-zero computational state gives exactly 1/d.
mpq_class trace_psi4_Q_zero(int N);

/// Dense state vector on N <= 6 qubits: d^-2 sum_P <P>^4.
/// Throws std::invalid_argument if the norm deviates from 1 by more than 1e-10.
double trace_psi4_Q_dense(const Eigen::VectorXcd &psi);

/// Uniform Bloch vectors, one per qubit.
std::vector<std::array<double, 3>> random_product_bloch(int N, std::mt19937_64 &rng);

/// Dense product state from Bloch vectors (qubit q is bit q).
Eigen::VectorXcd product_state(const std::vector<std::array<double, 3>> &bloch);

}  // namespace dcc

#endif
