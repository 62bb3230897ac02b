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

#include "dcc/engine.h"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace dcc {

namespace {

const std::array<int, kNumClasses> &class_representatives() {
    static const std::array<int, kNumClasses> reps = [] {
        std::array<int, kNumClasses> r{};
        for (int c = 0; c < kNumClasses; c++) {
            static const char *cyc[] = {"e", "(12)", "(12)(34)", "(123)", "(1234)"};
            r[c] = Perm4::from_cycles(cyc[c]).index();
        }
        return r;
    }();
    return reps;
}

// 4 * Q2 has integer entries.
const std::vector<std::vector<long>> &q2_times4() {
    static const std::vector<std::vector<long>> m = [] {
        const auto &q = q2_dense();
        std::vector<std::vector<long>> r(16, std::vector<long>(16));
        for (int i = 0; i < 16; i++)
            for (int j = 0; j < 16; j++) r[i][j] = std::lround(4 * q(i, j).real());
        return r;
    }();
    return m;
}

mpq_class power_of_two(int e) {
    mpz_class v = 1;
    v <<= e;
    return mpq_class(v);
}

template <class S>
std::array<S, kNumClasses> q_values(const S &d) {
    std::array<S, kNumClasses> q;
    for (int c = 0; c < kNumClasses; c++) q[c] = q_poly(c, d);
    return q;
}

// Ξ, Λ at d0 as limits of the generic rational functions of d.
std::pair<GroupMatrix<mpq_class>, GroupMatrix<mpq_class>> continued_xi_lambda(const mpq_class &d0,
                                                                            const std::array<mpq_class, kNumClasses> &s1) {
    Series d = Series(d0) + Series::epsilon();
    auto D = d_pm_lambda(d);
    auto wp = weingarten_class_values(D.plus);
    auto wm = weingarten_class_values(D.minus);
    auto q = q_values(d);
    std::array<Series, kNumClasses> sN;
    for (int c = 0; c < kNumClasses; c++) sN[c] = Series(s1[c] / kQTable[c]) * q[c];
    auto [xi, la] = xi_lambda_from(wp, wm, q, sN);
    return {to_rational_matrix(xi), to_rational_matrix(la)};
}

bool is_degenerate(const mpq_class &d) {
    auto D = d_pm_lambda(d);
    auto Ds = d_pm_lambda(Series(d) + Series::epsilon());
    for (int l = 0; l < kNumIrreps; l++) {
        if (is_zero(D.plus[l]) && !is_zero(Ds.plus[l])) return true;
        if (is_zero(D.minus[l]) && !is_zero(Ds.minus[l])) return true;
    }
    return false;
}

template <class V>
ChannelCoeffs<V> initial_coeffs(const XiSystem &sys, const TraceVector<V> &tv);

template <>
ChannelCoeffs<mpq_class> initial_coeffs(const XiSystem &sys, const TraceVector<mpq_class> &tv) {
    ChannelCoeffs<mpq_class> r;
    r.alpha = (sys.wp + sys.wm) * tv.q - sys.wm * tv.t;
    r.beta = sys.wm * (tv.t - tv.q);
    return r;
}

Eigen::VectorXcd to_eigen(const GroupVector<cd> &v) {
    Eigen::VectorXcd r(24);
    for (int i = 0; i < 24; i++) r[i] = v[i];
    return r;
}

GroupVector<cd> from_eigen(const Eigen::VectorXcd &v) {
    GroupVector<cd> r;
    for (int i = 0; i < 24; i++) r[i] = v[i];
    return r;
}

template <>
ChannelCoeffs<cd> initial_coeffs(const XiSystem &sys, const TraceVector<cd> &tv) {
    Eigen::MatrixXd wp = to_eigen(sys.wp), wm = to_eigen(sys.wm);
    Eigen::VectorXcd q = to_eigen(tv.q), t = to_eigen(tv.t);
    ChannelCoeffs<cd> r;
    r.alpha = from_eigen((wp + wm).cast<cd>() * q - wm.cast<cd>() * t);
    r.beta = from_eigen(wm.cast<cd>() * (t - q));
    return r;
}

}  // namespace

int exact_rank(GroupMatrix<mpq_class> m) {
    int rank = 0;
    for (int col = 0; col < 24 && rank < 24; col++) {
        int piv = -1;
        for (int i = rank; i < 24; i++) {
            if (sgn(m(i, col)) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        for (int j = 0; j < 24; j++) std::swap(m(piv, j), m(rank, j));
        for (int i = rank + 1; i < 24; i++) {
            if (sgn(m(i, col)) == 0) continue;
            mpq_class f = m(i, col) / m(rank, col);
            for (int j = col; j < 24; j++) m(i, j) -= f * m(rank, j);
        }
        rank++;
    }
    return rank;
}

Angle Angle::pi_fraction(long num, long den) {
    if (den == 0) throw std::invalid_argument("Angle: zero denominator");
    Angle a;
    a.radians = M_PI * (double)num / (double)den;
    // 4 theta / pi reduced mod 2; Niven's theorem limits rational cosines.
    mpq_class r(4 * num, den);
    r.canonicalize();
    mpz_class fl;
    mpq_class half = r / 2;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
    r -= 2 * mpq_class(fl);
    static const std::pair<mpq_class, mpq_class> table[] = {
        {mpq_class(0), mpq_class(1)},     {mpq_class(1, 3), mpq_class(1, 2)},
        {mpq_class(1, 2), mpq_class(0)},  {mpq_class(2, 3), mpq_class(-1, 2)},
        {mpq_class(1), mpq_class(-1)},    {mpq_class(4, 3), mpq_class(-1, 2)},
        {mpq_class(3, 2), mpq_class(0)},  {mpq_class(5, 3), mpq_class(1, 2)},
    };
    for (const auto &[frac, c] : table) {
        if (r == frac) a.cos4 = c;
    }
    std::ostringstream os;
    if (num == 0) {
        os << "0";
    } else {
        if (num == -1) os << "-";
        else if (num != 1) os << num;
        os << "pi";
        if (den != 1) os << "/" << den;
    }
    a.label_ = os.str();
    return a;
}

Angle Angle::from_radians(double r) {
    Angle a;
    a.radians = r;
    std::ostringstream os;
    os.precision(17);
    os << r;
    a.label_ = os.str();
    return a;
}

Angle Angle::parse(const std::string &text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '*') s += c;
    auto p = s.find("pi");
    if (p == std::string::npos) {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad angle: " + text);
        if (v == 0) return pi_fraction(0, 1);
        return from_radians(v);
    }
    std::string head = s.substr(0, p);
    std::string tail = s.substr(p + 2);
    long num = 1;
    if (head == "-") num = -1;
    else if (!head.empty() && head != "+") num = std::stol(head);
    long den = 1;
    if (!tail.empty()) {
        if (tail[0] != '/') throw std::invalid_argument("bad angle: " + text);
        den = std::stol(tail.substr(1));
    }
    return pi_fraction(num, den);
}

std::string Angle::str() const { return label_.empty() ? std::to_string(radians) : label_; }

std::array<mpq_class, kNumClasses> phase_gate_class_traces(const mpq_class &cos4) {
    const auto &q = q2_times4();
    std::array<mpq_class, kNumClasses> out;
    for (int c = 0; c < kNumClasses; c++) {
        Perm4 rho = Perm4::from_index(class_representatives()[c]);
        Perm4 rinv = rho.inverse();
        // Coefficients of zeta^m, m in [-4, 4], of tr(T_rho K^4 Q2 K^dag4 Q2).
        std::array<long, 9> coef{};
        for (int x = 0; x < 16; x++) {
            int u = permute_index(rinv, x, 2);
            int wx = __builtin_popcount(x);
            for (int v = 0; v < 16; v++) {
                long term = q[u][v] * q[v][x];
                if (term) coef[4 + wx - __builtin_popcount(v)] += term;
            }
        }
        for (int m = -4; m <= 4; m++) {
            if (m != 0 && m != 4 && m != -4 && coef[4 + m] != 0) {
                throw std::logic_error("phase_gate_class_traces: unexpected frequency");
            }
        }
        if (coef[0] != coef[8]) throw std::logic_error("phase_gate_class_traces: asymmetric frequencies");
        out[c] = rational(coef[4], 16) + rational(2 * coef[8], 16) * cos4;
    }
    return out;
}

std::array<double, kNumClasses> gate_class_traces(const Eigen::Matrix2cd &K) {
    Eigen::MatrixXcd K2(4, 4), K4(16, 16);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) K2.block(2 * i, 2 * j, 2, 2) = K(i, j) * K;
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) K4.block(4 * i, 4 * j, 4, 4) = K2(i, j) * K2;
    Eigen::MatrixXcd X = K4 * q2_dense() * K4.adjoint() * q2_dense();
    std::array<double, kNumClasses> out;
    for (int c = 0; c < kNumClasses; c++) {
        Perm4 rho = Perm4::from_index(class_representatives()[c]);
        out[c] = (perm_operator(rho, 2) * X).trace().real();
    }
    return out;
}

mpq_class k_factorized_trace(int cls, int N, int kpos, const std::array<mpq_class, kNumClasses> &s1) {
    if (kpos < 0 || kpos >= N) throw std::out_of_range("K position outside the register");
    mpq_class r = 1;
    for (int qb = 0; qb < N; qb++) r *= qb == kpos ? s1[cls] : mpq_class(kQTable[cls]);
    return r;
}

namespace {

void fill_common(XiSystem &sys, int N) {
    sys.N = N;
    sys.d = power_of_two(N);
    sys.degenerate = is_degenerate(sys.d);
    auto [wp, wm] = clifford_weingarten_pm(sys.d);
    sys.wp = wp;
    sys.wm = wm;
    if (sys.d >= 4) sys.w = unitary_weingarten(sys.d);
}

}  // namespace

XiSystem build_xi_system(const Angle &theta, int N, XiMode mode, int kpos) {
    if (N < 1) throw std::invalid_argument("build_xi_system: N must be positive");
    if (kpos < 0 || kpos >= N) throw std::out_of_range("K position outside the register");
    XiSystem sys;
    fill_common(sys, N);
    sys.theta = theta;
    sys.mode = mode;
    sys.kpos = kpos;
    const mpq_class &d = sys.d;
    bool continued = sys.degenerate && mode == XiMode::Continued;

    auto exact_pair = [&](const std::array<mpq_class, kNumClasses> &s1) {
        if (continued) return continued_xi_lambda(d, s1);
        auto D = d_pm_lambda(d);
        auto wp = weingarten_class_values(D.plus);
        auto wm = weingarten_class_values(D.minus);
        auto q = q_values(d);
        std::array<mpq_class, kNumClasses> sN;
        for (int c = 0; c < kNumClasses; c++) sN[c] = k_factorized_trace(c, N, kpos, s1);
        return xi_lambda_from(wp, wm, q, sN);
    };

    if (theta.exact()) {
        auto s1 = phase_gate_class_traces(*theta.cos4);
        sys.s1_exact = s1;
        for (int c = 0; c < kNumClasses; c++) sys.s1[c] = s1[c].get_d();
        auto [xi, la] = exact_pair(s1);
        sys.exact = true;
        sys.xi_q = xi;
        sys.lambda_q = la;
        sys.xi = to_eigen(xi);
        sys.lambda = to_eigen(la);
        return sys;
    }

    // Xi and Lambda are affine in cos(4 theta); interpolate between exact
    // builds at cos4 = 0 and cos4 = 1.
    double c4 = std::cos(4 * theta.radians);
    auto s0 = phase_gate_class_traces(0);
    auto s1v = phase_gate_class_traces(1);
    for (int c = 0; c < kNumClasses; c++) sys.s1[c] = s0[c].get_d() + c4 * mpq_class(s1v[c] - s0[c]).get_d();
    auto [x0, l0] = exact_pair(s0);
    auto [x1, l1] = exact_pair(s1v);
    Eigen::MatrixXd X0 = to_eigen(x0), X1 = to_eigen(x1), L0 = to_eigen(l0), L1 = to_eigen(l1);
    sys.xi = X0 + c4 * (X1 - X0);
    sys.lambda = L0 + c4 * (L1 - L0);
    return sys;
}

XiSystem build_xi_system(const Eigen::Matrix2cd &K, int N, int kpos) {
    if (N < 1) throw std::invalid_argument("build_xi_system: N must be positive");
    if (kpos < 0 || kpos >= N) throw std::out_of_range("K position outside the register");
    if ((K.adjoint() * K - Eigen::Matrix2cd::Identity()).norm() > 1e-10) {
        throw std::invalid_argument("build_xi_system: K is not unitary");
    }
    XiSystem sys;
    fill_common(sys, N);
    sys.theta = Angle::from_radians(std::nan(""));
    sys.mode = XiMode::Restricted;
    sys.kpos = kpos;
    sys.s1 = gate_class_traces(K);
    auto D = d_pm_lambda(sys.d);
    auto wpq = weingarten_class_values(D.plus);
    auto wmq = weingarten_class_values(D.minus);
    std::array<double, kNumClasses> wp, wm, q, sN;
    for (int c = 0; c < kNumClasses; c++) {
        wp[c] = wpq[c].get_d();
        wm[c] = wmq[c].get_d();
        q[c] = q_poly(c, sys.d).get_d();
        double prod = 1;
        for (int qb = 0; qb < N; qb++) prod *= qb == kpos ? sys.s1[c] : kQTable[c];
        sN[c] = prod;
    }
    auto [xi, la] = xi_lambda_from(wp, wm, q, sN);
    sys.xi = to_eigen(xi);
    sys.lambda = to_eigen(la);
    return sys;
}

std::pair<mpq_class, mpq_class> f_pm_exact(const mpq_class &cos4, const mpq_class &d) {
    mpq_class den = 8 * (d * d - 1);
    mpq_class fp = (7 * d * d + 3 * d + d * (d - 3) * cos4 - 8) / den;
    mpq_class fm = (7 * d * d - 3 * d + d * (d + 3) * cos4 - 8) / den;
    return {fp, fm};
}

std::pair<double, double> f_pm_theta(const Angle &theta, double d) {
    double c = theta.exact() ? theta.cos4->get_d() : std::cos(4 * theta.radians);
    double den = 8 * (d * d - 1);
    return {(7 * d * d + 3 * d + d * (d - 3) * c - 8) / den, (7 * d * d - 3 * d + d * (d + 3) * c - 8) / den};
}

TraceVector<cd> trace_vector(const Eigen::MatrixXcd &O, int N) {
    if (N < 1 || N > 2) throw std::length_error("trace_vector: dense operators need N <= 2");
    int d = 1 << N;
    int D = d * d * d * d;
    if (O.rows() != D || O.cols() != D) throw std::invalid_argument("trace_vector: operator size does not match N");
    Eigen::MatrixXcd OQ = O * q_dense(N);
    TraceVector<cd> tv;
    for (int s = 0; s < 24; s++) {
        Perm4 p = Perm4::from_index(s);
        cd a = 0, b = 0;
        for (int x = 0; x < D; x++) {
            int y = permute_index(p, x, d);
            a += OQ(x, y);
            b += O(x, y);
        }
        tv.q[s] = a;
        tv.t[s] = b;
    }
    return tv;
}

Eigen::MatrixXcd reconstruct_dense(const ChannelCoeffs<cd> &c, int N) {
    if (N < 1 || N > 2) throw std::length_error("reconstruct_dense: N <= 2");
    int d = 1 << N;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(d * d * d * d, d * d * d * d);
    Eigen::MatrixXcd B = A;
    for (int s = 0; s < 24; s++) {
        Eigen::MatrixXcd T = perm_operator(Perm4::from_index(s), d);
        A += c.alpha[s] * T;
        B += c.beta[s] * T;
    }
    return q_dense(N) * A + B;
}

TraceVector<cd> factorized_trace_vector(const std::vector<Eigen::MatrixXcd> &blocks) {
    TraceVector<cd> tv;
    tv.q.fill(1);
    tv.t.fill(1);
    for (const auto &o : blocks) {
        if (o.rows() != 16 || o.cols() != 16) throw std::invalid_argument("factorized_trace_vector: blocks must be 16x16");
        Eigen::MatrixXcd oq = o * q2_dense();
        for (int s = 0; s < 24; s++) {
            Perm4 p = Perm4::from_index(s);
            cd a = 0, b = 0;
            for (int x = 0; x < 16; x++) {
                int y = permute_index(p, x, 2);
                a += oq(x, y);
                b += o(x, y);
            }
            tv.q[s] *= a;
            tv.t[s] *= b;
        }
    }
    return tv;
}

cd pair_with(const ChannelCoeffs<cd> &c, const TraceVector<cd> &x) {
    cd r = 0;
    for (int s = 0; s < 24; s++) r += c.alpha[s] * x.q[s] + c.beta[s] * x.t[s];
    return r;
}

namespace {

Eigen::MatrixXcd kron4(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b, const Eigen::Matrix2cd &c,
                       const Eigen::Matrix2cd &d) {
    Eigen::MatrixXcd r(16, 16);
    for (int i = 0; i < 16; i++)
        for (int j = 0; j < 16; j++)
            r(i, j) = a(i >> 3 & 1, j >> 3 & 1) * b(i >> 2 & 1, j >> 2 & 1) * c(i >> 1 & 1, j >> 1 & 1) *
                      d(i & 1, j & 1);
    return r;
}

Eigen::Matrix2cd letter_matrix(const PauliString &p, size_t q) {
    static const int label[] = {0, 1, 3, 2};  // x + 2z -> I, X, Z, Y
    Eigen::Matrix2cd m = pauli_matrix(label[p.x[q] + 2 * p.z[q]]);
    return m;
}

std::pair<TraceVector<cd>, TraceVector<cd>> otoc8_traces(int N, const std::array<PauliString, 4> &abcd) {
    for (const auto &p : abcd) {
        if ((int)p.size() != N || !p.is_hermitian()) throw std::invalid_argument("otoc8: Paulis must be Hermitian on N qubits");
    }
    Eigen::MatrixXcd t1432 = perm_operator(Perm4::from_cycles("(1432)"), 2);
    std::vector<Eigen::MatrixXcd> in, out;
    for (int q = 0; q < N; q++) {
        auto a = letter_matrix(abcd[0], q), b = letter_matrix(abcd[1], q);
        auto c = letter_matrix(abcd[2], q), d = letter_matrix(abcd[3], q);
        in.push_back(kron4(b, d, d, b));
        out.push_back(t1432 * kron4(a, c, a, c));
    }
    // Signs of negative Paulis cancel: each appears an even number of times.
    return {factorized_trace_vector(in), factorized_trace_vector(out)};
}

}  // namespace

cd otoc8_from_channel(const XiSystem &sys, int k, const std::array<PauliString, 4> &abcd) {
    auto [in, out] = otoc8_traces(sys.N, abcd);
    return pair_with(fold_channel_doped(sys, in, k), out) / sys.d.get_d();
}

cd otoc8_from_haar(int N, const std::array<PauliString, 4> &abcd) {
    auto [in, out] = otoc8_traces(N, abcd);
    mpq_class d = dimension_of(N);
    return pair_with(fold_channel_haar(d, in), out) / d.get_d();
}

ChannelCoeffs<mpq_class> advance(const XiSystem &sys, ChannelCoeffs<mpq_class> c, int k) {
    if (!sys.exact) throw std::logic_error("advance: exact path needs a rational cos(4 theta)");
    for (int i = 0; i < k; i++) {
        c.beta = c.beta + (*sys.lambda_q) * c.alpha;
        c.alpha = (*sys.xi_q) * c.alpha;
    }
    c.k += k;
    return c;
}

ChannelCoeffs<cd> advance(const XiSystem &sys, ChannelCoeffs<cd> c, int k) {
    Eigen::VectorXcd a = to_eigen(c.alpha), b = to_eigen(c.beta);
    Eigen::MatrixXcd X = sys.xi.cast<cd>(), L = sys.lambda.cast<cd>();
    for (int i = 0; i < k; i++) {
        b += L * a;
        a = X * a;
    }
    c.alpha = from_eigen(a);
    c.beta = from_eigen(b);
    c.k += k;
    return c;
}

ChannelCoeffs<mpq_class> fold_channel_doped(const XiSystem &sys, const TraceVector<mpq_class> &tv, int k) {
    if (k < 0) throw std::invalid_argument("fold_channel_doped: k must be non-negative");
    return advance(sys, initial_coeffs(sys, tv), k);
}

ChannelCoeffs<cd> fold_channel_doped(const XiSystem &sys, const TraceVector<cd> &tv, int k) {
    if (k < 0) throw std::invalid_argument("fold_channel_doped: k must be non-negative");
    return advance(sys, initial_coeffs(sys, tv), k);
}

ChannelCoeffs<mpq_class> fold_channel_haar(const mpq_class &d, const TraceVector<mpq_class> &tv) {
    ChannelCoeffs<mpq_class> c;
    c.alpha = zero_vector<mpq_class>();
    c.beta = unitary_weingarten(d) * tv.t;
    return c;
}

ChannelCoeffs<cd> fold_channel_haar(const mpq_class &d, const TraceVector<cd> &tv) {
    Eigen::MatrixXd W = to_eigen(unitary_weingarten(d));
    ChannelCoeffs<cd> c;
    c.alpha.fill(0);
    c.beta = from_eigen(W.cast<cd>() * to_eigen(tv.t));
    return c;
}

TraceVector<mpq_class> output_traces(const ChannelCoeffs<mpq_class> &c, const mpq_class &d) {
    const auto &t = s4();
    auto q = q_values(d);
    TraceVector<mpq_class> out;
    for (int p = 0; p < 24; p++) {
        mpq_class a = 0, b = 0;
        for (int s = 0; s < 24; s++) {
            int sp = t.mul[s][p];
            const mpq_class &qv = q[t.cls[sp]];
            a += (c.alpha[s] + c.beta[s]) * qv;
            b += c.alpha[s] * qv + c.beta[s] * pow_s(d, t.cycles[sp]);
        }
        out.q[p] = a;
        out.t[p] = b;
    }
    return out;
}

GroupMatrix<mpq_class> gamma_k_exact(const XiSystem &sys, int k) {
    if (!sys.exact) throw std::logic_error("gamma_k_exact: exact path needs a rational cos(4 theta)");
    GroupMatrix<mpq_class> acc, P = GroupMatrix<mpq_class>::identity();
    for (int i = 0; i < k; i++) {
        acc = acc + P;
        P = (*sys.xi_q) * P;
    }
    return (*sys.lambda_q) * acc;
}

Eigen::MatrixXd gamma_k(const XiSystem &sys, int k) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(24, 24), P = Eigen::MatrixXd::Identity(24, 24);
    for (int i = 0; i < k; i++) {
        acc += P;
        P = sys.xi * P;
    }
    return sys.lambda * acc;
}

Eigen::MatrixXd gamma_limit(const XiSystem &sys) {
    auto ev = xi_spectrum(sys);
    if (ev.back() > 1 - 1e-12) throw std::domain_error("gamma_limit: Xi has a unit eigenvalue (Clifford angle)");
    return sys.lambda * (Eigen::MatrixXd::Identity(24, 24) - sys.xi).inverse();
}

std::pair<mpq_class, mpq_class> c_q_coefficients(const mpq_class &cos4, const mpq_class &d) {
    mpq_class cq = (d + 2) * (4 + 7 * d + (4 + d) * cos4) / 48;
    mpq_class sin2sq = (1 - cos4) / 2;
    mpq_class cqp = (d + 2) * (d + 4) * sin2sq / 24;
    return {cq, cqp};
}

std::pair<mpq_class, mpq_class> c_q_from_traces(const XiSystem &sys) {
    if (!sys.s1_exact) throw std::logic_error("c_q_from_traces: exact angle required");
    mpq_class cq = 0, cqp = 0;
    for (int s = 0; s < 24; s++) {
        int c = (int)Perm4::from_index(s).cycle_class();
        mpq_class sN = k_factorized_trace(c, sys.N, sys.kpos, *sys.s1_exact);
        cq += sN;
        cqp += q_poly(c, sys.d) - sN;
    }
    return {cq / 24, cqp / 24};
}

std::pair<mpq_class, mpq_class> state_channel(const mpq_class &trQ, const mpq_class &d, const mpq_class &cos4, int k) {
    if (k < 0) throw std::invalid_argument("state_channel: k must be non-negative");
    auto [fp, fm] = f_pm_exact(cos4, d);
    mpq_class fk = pow_q(fm, k);
    mpq_class pref = 24 / ((d * d - 1) * (d + 2) * (d + 4));
    mpq_class dsym = d * (d + 1) * (d + 2) * (d + 3) / 24;
    mpq_class a = pref * (d * (d + 3) * trQ / 4 - 1) * fk;
    mpq_class b = 1 / dsym + pref * (4 / (d * (d + 3)) - trQ) * fk;
    return {a, b};
}

std::pair<mpq_class, mpq_class> state_channel_limit(const mpq_class &d) {
    return {0, 24 / (d * (d + 1) * (d + 2) * (d + 3))};
}

std::pair<mpq_class, mpq_class> state_channel_engine(const XiSystem &sys, const mpq_class &trQ, int k) {
    TraceVector<mpq_class> tv;
    tv.q.fill(trQ);
    tv.t.fill(1);
    auto out = output_traces(fold_channel_doped(sys, tv, k), sys.d);
    auto D = d_pm_lambda(sys.d);
    const mpq_class &dp = D.plus[0], &ds = D.total[0];
    int e = s4().identity;
    mpq_class b = (out.t[e] - out.q[e]) / (ds - dp);
    mpq_class a = out.q[e] / dp - b;
    return {a, b};
}

const std::array<std::array<int, 4>, 6> &pauli_kernel_groups() {
    static const std::array<std::array<int, 4>, 6> groups = [] {
        const char *lists[6][4] = {
            {"e", "(12)(34)", "(13)(24)", "(14)(23)"},
            {"(13)", "(24)", "(1432)", "(1234)"},
            {"(14)", "(23)", "(1342)", "(1243)"},
            {"(12)", "(34)", "(1324)", "(1423)"},
            {"(132)", "(124)", "(143)", "(234)"},
            {"(123)", "(142)", "(134)", "(243)"},
        };
        std::array<std::array<int, 4>, 6> g{};
        for (int a = 0; a < 6; a++)
            for (int b = 0; b < 4; b++) g[a][b] = Perm4::from_cycles(lists[a][b]).index();
        return g;
    }();
    return groups;
}

std::vector<double> xi_spectrum(const XiSystem &sys) {
    std::vector<double> ev;
    if ((sys.xi - sys.xi.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, sys.xi.cwiseAbs().maxCoeff())) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.xi);
        for (int i = 0; i < 24; i++) ev.push_back(es.eigenvalues()[i]);
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> es(sys.xi);
        for (int i = 0; i < 24; i++) ev.push_back(es.eigenvalues()[i].real());
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

int xi_rank(const XiSystem &sys) {
    if (sys.xi_q) return exact_rank(*sys.xi_q);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys.xi);
    lu.setThreshold(1e-10);
    return (int)lu.rank();
}

}  // namespace dcc
