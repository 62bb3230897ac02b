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

#ifndef DCC_ENGINE_H
#define DCC_ENGINE_H

#include <complex>
#include <optional>
#include <string>

#include "dcc/group_matrix.h"
#include "dcc/pauli.h"
#include "dcc/weingarten.h"

namespace dcc {

/// Rotation angle of the phase gate P_theta = diag(1, e^{i theta}).
/// When cos(4 theta) is rational the exact value is kept alongside.
struct Angle {
    double radians = 0;
    std::optional<mpq_class> cos4;

    /// theta = pi * num / den; exact when 4 theta is a multiple of pi/3 or pi/2.
    static Angle pi_fraction(long num, long den);
    static Angle from_radians(double r);
    /// Accepts "pi/4", "3pi/8", "-pi/2", "0" or a decimal number of radians.
    static Angle parse(const std::string &text);
    bool exact() const { return cos4.has_value(); }
    std::string str() const;

   private:
    std::string label_;
};

/// Per-class single-qubit trace s(c) = tr(T_rho K^4 Q2 K^dag4 Q2) for
/// K = P_theta, derived exactly as a Laurent polynomial in e^{i theta}.
/// Only frequencies 0 and +-4 survive, giving s = s0 + s4 cos(4 theta).
std::array<mpq_class, kNumClasses> phase_gate_class_traces(const mpq_class &cos4);

/// The same trace for an arbitrary single-qubit unitary, by dense contraction.
std::array<double, kNumClasses> gate_class_traces(const Eigen::Matrix2cd &K);

/// tr(T_rho K^4 Q K^dag4 Q) on N qubits with K on qubit kpos, as the
/// product of per-qubit traces in qubit order.
mpq_class k_factorized_trace(int cls, int N, int kpos, const std::array<mpq_class, kNumClasses> &s1);

enum class XiMode {
    /// Analytic continuation in d at dimensions where some D^+-_l vanish.
    Continued,
    /// Literal restricted sums at every d.
    Restricted,
};

/// Transfer matrices for one doping layer, in the column-vector convention:
/// coefficient vectors are indexed by the output permutation and one layer
/// maps (alpha, beta) -> (Xi alpha, beta + Lambda alpha).
struct XiSystem {
    int N = 0;
    mpq_class d;
    Angle theta;
    XiMode mode = XiMode::Continued;
    int kpos = 0;
    bool exact = false;
    /// Some D^+-_l vanishes at this d without vanishing identically.
    bool degenerate = false;
    std::array<double, kNumClasses> s1{};
    std::optional<std::array<mpq_class, kNumClasses>> s1_exact;

    std::optional<GroupMatrix<mpq_class>> xi_q, lambda_q;
    Eigen::MatrixXd xi, lambda;
    /// Literal restricted Weingarten matrices at d (used for c and b).
    GroupMatrix<mpq_class> wp, wm;
    std::optional<GroupMatrix<mpq_class>> w;
};

/// Builds Xi and Lambda for K = P_theta on qubit kpos.
XiSystem build_xi_system(const Angle &theta, int N, XiMode mode = XiMode::Continued, int kpos = 0);

/// Builds Xi and Lambda for an arbitrary single-qubit gate (float path).
/// At degenerate d the restricted construction is used.
XiSystem build_xi_system(const Eigen::Matrix2cd &K, int N, int kpos = 0);

/// Generic builder shared by all scalar paths.
template <class S>
std::pair<GroupMatrix<S>, GroupMatrix<S>> xi_lambda_from(const std::array<S, kNumClasses> &w_plus,
                                                         const std::array<S, kNumClasses> &w_minus,
                                                         const std::array<S, kNumClasses> &q,
                                                         const std::array<S, kNumClasses> &sN) {
    // Xi(o, i) = sum_tau W+(o tau) S(tau i) - W-(o tau) (q - S)(tau i) depends
    // only on i^-1 o, so it is a group convolution with 24 distinct values.
    const auto &t = s4();
    std::array<S, 24> hx, hl;
    for (int y = 0; y < 24; y++) {
        S ax = scalar_from<S>(0), al = scalar_from<S>(0);
        for (int u = 0; u < 24; u++) {
            int cu = t.cls[u];
            int cy = t.cls[t.mul[y][u]];
            S leak = q[cu] - sN[cu];
            ax += w_plus[cy] * sN[cu] - w_minus[cy] * leak;
            al += w_minus[cy] * leak;
        }
        hx[y] = ax;
        hl[y] = al;
    }
    GroupMatrix<S> xi, la;
    for (int o = 0; o < 24; o++) {
        for (int i = 0; i < 24; i++) {
            int y = t.mul[t.inv[i]][o];
            xi(o, i) = hx[y];
            la(o, i) = hl[y];
        }
    }
    return {xi, la};
}

/// (f^+_theta, f^-_theta) = (7d^2 +- 3d + d(d -+ 3) cos4theta - 8) / (8(d^2 - 1)).
std::pair<mpq_class, mpq_class> f_pm_exact(const mpq_class &cos4, const mpq_class &d);
std::pair<double, double> f_pm_theta(const Angle &theta, double d);

/// Traces of an operator on the 4-copy space: q[s] = tr(O Q T_s), t[s] = tr(O T_s).
template <class V>
struct TraceVector {
    GroupVector<V> q, t;
};

/// Phi(O) = sum_s alpha[s] Q T_s + beta[s] T_s.
template <class V>
struct ChannelCoeffs {
    GroupVector<V> alpha, beta;
    int k = 0;
};

using cd = std::complex<double>;

TraceVector<cd> trace_vector(const Eigen::MatrixXcd &O, int N);
Eigen::MatrixXcd reconstruct_dense(const ChannelCoeffs<cd> &c, int N);
/// Traces of a 4-copy operator that is a tensor product over qubits of
/// 16x16 blocks (qubit q's four copies, copy 0 most significant).
TraceVector<cd> factorized_trace_vector(const std::vector<Eigen::MatrixXcd> &blocks);
/// tr(X Phi) from the coefficients of Phi and the traces of X.
cd pair_with(const ChannelCoeffs<cd> &c, const TraceVector<cd> &x);

/// Full fold: k doping layers on top of the Clifford twirl.
ChannelCoeffs<mpq_class> fold_channel_doped(const XiSystem &sys, const TraceVector<mpq_class> &tv, int k);
ChannelCoeffs<cd> fold_channel_doped(const XiSystem &sys, const TraceVector<cd> &tv, int k);
/// Applies k more doping layers to coefficients already produced by a fold.
ChannelCoeffs<mpq_class> advance(const XiSystem &sys, ChannelCoeffs<mpq_class> c, int k);
ChannelCoeffs<cd> advance(const XiSystem &sys, ChannelCoeffs<cd> c, int k);

/// Haar twirl: beta = W t, alpha = 0.
ChannelCoeffs<mpq_class> fold_channel_haar(const mpq_class &d, const TraceVector<mpq_class> &tv);
ChannelCoeffs<cd> fold_channel_haar(const mpq_class &d, const TraceVector<cd> &tv);

/// Traces tr(Phi Q T_p) and tr(Phi T_p) of a folded channel output.
TraceVector<mpq_class> output_traces(const ChannelCoeffs<mpq_class> &c, const mpq_class &d);

/// Averaged 8-point OTOC from the channel:
/// d^-1 tr(T_(1432) (A C A C) Phi_k(B D D B)) for (A, B, C, D).
cd otoc8_from_channel(const XiSystem &sys, int k, const std::array<PauliString, 4> &abcd);
/// The same quantity after the Haar twirl.
cd otoc8_from_haar(int N, const std::array<PauliString, 4> &abcd);

/// Gamma^(k) = Lambda sum_{i<k} Xi^i.
GroupMatrix<mpq_class> gamma_k_exact(const XiSystem &sys, int k);
Eigen::MatrixXd gamma_k(const XiSystem &sys, int k);
/// Lambda (1 - Xi)^-1; throws when theta is a Clifford angle.
Eigen::MatrixXd gamma_limit(const XiSystem &sys);

/// c_Q = tr(K^4 Q K^dag4 Q Pi_sym), c_QQperp = tr(K^4 Q K^dag4 Q^perp Pi_sym).
std::pair<mpq_class, mpq_class> c_q_coefficients(const mpq_class &cos4, const mpq_class &d);
/// Same quantities from the factorized single-qubit traces of a built system.
std::pair<mpq_class, mpq_class> c_q_from_traces(const XiSystem &sys);

/// Pure-state channel Phi(psi^4) = a_k Q Pi_sym + b_k Pi_sym.
std::pair<mpq_class, mpq_class> state_channel(const mpq_class &trQ, const mpq_class &d, const mpq_class &cos4, int k);
/// Limit k -> infinity: (0, 1/D_sym).
std::pair<mpq_class, mpq_class> state_channel_limit(const mpq_class &d);
/// (a_k, b_k) read off the engine output for psi^4 with the given tr(psi^4 Q).
std::pair<mpq_class, mpq_class> state_channel_engine(const XiSystem &sys, const mpq_class &trQ, int k);

/// The six permutation groups on which tr(O Q T_s) is constant for any O.
const std::array<std::array<int, 4>, 6> &pauli_kernel_groups();

struct ConvergenceReport {
    bool identity_exact = false;           // W- - Lambda(1-Xi)^-1 W- = W
    bool identity_literal = false;         // same with literal restricted matrices
    bool literal_gap_is_sign_irrep = false;  // only meaningful when degenerate
    bool kernel_vectors_annihilated = false;
    double random_q_residual = 0;          // max |zeta q| over random operators
    double k_deviation = 0;                // max |Phi_k - Phi_Haar| on random operators
    double k_bound = 0;                    // (f+)^k * deviation at k = 0
    int k = 0;
    bool degenerate = false;
    bool ok() const;
};

/// Checks the k -> infinity structure. Exact identities run in the
/// rational path (as Laurent series at degenerate d). The random-operator
/// checks use dense operators at N <= 2 and trace vectors otherwise.
ConvergenceReport verify_convergence_structure(const Angle &theta, int N, int k = 60, int num_random = 20, uint64_t seed = 7);

/// Sorted real eigenvalues of Xi (Xi is symmetric for diagonal K).
std::vector<double> xi_spectrum(const XiSystem &sys);
int xi_rank(const XiSystem &sys);

}  // namespace dcc

#endif
