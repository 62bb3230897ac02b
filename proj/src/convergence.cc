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

#include <cmath>
#include <optional>
#include <random>

#include "dcc/engine.h"

namespace dcc {

namespace {

struct TraceMaps {
    Eigen::MatrixXd ma, mb;  // 48 x 24: coefficients -> (tr(Phi Q T_p), tr(Phi T_p))
};

TraceMaps trace_maps(double d) {
    const auto &t = s4();
    TraceMaps m{Eigen::MatrixXd::Zero(48, 24), Eigen::MatrixXd::Zero(48, 24)};
    for (int p = 0; p < 24; p++) {
        for (int s = 0; s < 24; s++) {
            int sp = t.mul[s][p];
            double qv = std::pow(d, kQExponent[t.cls[sp]]);
            m.ma(p, s) = qv;
            m.mb(p, s) = qv;
            m.ma(24 + p, s) = qv;
            m.mb(24 + p, s) = std::pow(d, t.cycles[sp]);
        }
    }
    return m;
}

Eigen::VectorXcd stack(const ChannelCoeffs<cd> &c, const TraceMaps &m) {
    Eigen::VectorXcd a(24), b(24);
    for (int i = 0; i < 24; i++) {
        a[i] = c.alpha[i];
        b[i] = c.beta[i];
    }
    return m.ma.cast<cd>() * a + m.mb.cast<cd>() * b;
}

// Random operator on the 4-copy space as a tensor product over qubits of
// 16x16 blocks; its traces factorize qubit by qubit.
TraceVector<cd> random_factorized_traces(int N, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0, 1);
    std::vector<Eigen::MatrixXcd> blocks;
    for (int qb = 0; qb < N; qb++) {
        Eigen::MatrixXcd o(16, 16);
        for (int i = 0; i < 16; i++)
            for (int j = 0; j < 16; j++) o(i, j) = cd(g(rng), g(rng));
        blocks.push_back(o / o.norm());
    }
    return factorized_trace_vector(blocks);
}

template <class S>
struct ExactPieces {
    GroupMatrix<S> wp, wm, w, xi, la;
};

template <class S>
ExactPieces<S> exact_pieces(const S &d, const std::array<mpq_class, kNumClasses> &s1) {
    auto D = d_pm_lambda(d);
    ExactPieces<S> p;
    auto wpv = weingarten_class_values(D.plus);
    auto wmv = weingarten_class_values(D.minus);
    p.wp = GroupMatrix<S>::class_function(wpv);
    p.wm = GroupMatrix<S>::class_function(wmv);
    p.w = GroupMatrix<S>::class_function(weingarten_class_values(D.total));
    std::array<S, kNumClasses> q, sN;
    for (int c = 0; c < kNumClasses; c++) {
        q[c] = q_poly(c, d);
        sN[c] = scalar_from<S>(s1[c] / kQTable[c]) * q[c];
    }
    auto [xi, la] = xi_lambda_from(wpv, wmv, q, sN);
    p.xi = xi;
    p.la = la;
    return p;
}

template <class S>
bool all_zero(const GroupMatrix<S> &m) {
    for (const auto &v : m.a) {
        if (!is_zero(v)) return false;
        if constexpr (std::is_same_v<S, Series>) {
            if (v.precision() <= 0) return false;
        }
    }
    return true;
}

template <class S>
bool all_zero(const GroupVector<S> &m) {
    for (const auto &v : m) {
        if (!is_zero(v)) return false;
        if constexpr (std::is_same_v<S, Series>) {
            if (v.precision() <= 0) return false;
        }
    }
    return true;
}

// Expansion coefficients of a series-valued matrix, one double matrix per order.
std::vector<Eigen::MatrixXd> coefficient_matrices(const GroupMatrix<Series> &m) {
    int lo = 1 << 20, hi = -(1 << 20);
    for (const auto &v : m.a) {
        lo = std::min(lo, v.lo());
        hi = std::max(hi, v.precision());
    }
    std::vector<Eigen::MatrixXd> out;
    for (int o = lo; o < hi; o++) {
        Eigen::MatrixXd c(24, 24);
        for (int i = 0; i < 24; i++)
            for (int j = 0; j < 24; j++) {
                const Series &v = m(i, j);
                c(i, j) = o < v.precision() ? v.coef(o).get_d() : 0.0;
            }
        out.push_back(c);
    }
    return out;
}

template <class S>
void exact_checks(const S &d, const std::array<mpq_class, kNumClasses> &s1, ConvergenceReport &rep,
                  std::vector<Eigen::MatrixXd> &zeta_out, std::optional<GroupMatrix<mpq_class>> &lr_out) {
    auto p = exact_pieces(d, s1);
    auto one = GroupMatrix<S>::identity();
    auto inv = inverse(one - p.xi);
    auto lr = p.la * inv;
    rep.identity_exact = all_zero(p.wm - lr * p.wm - p.w);
    auto zeta = lr * (p.wp + p.wm) - p.wm;
    bool ok = true;
    for (const auto &g : pauli_kernel_groups()) {
        GroupVector<S> e = zero_vector<S>();
        for (int s : g) e[s] = scalar_from<S>(1);
        ok = ok && all_zero(zeta * e);
    }
    rep.kernel_vectors_annihilated = ok;
    if constexpr (std::is_same_v<S, Series>) {
        zeta_out = coefficient_matrices(zeta);
        try {
            GroupMatrix<mpq_class> v;
            for (size_t i = 0; i < v.a.size(); i++) v.a[i] = to_rational(lr.a[i]);
            lr_out = v;
        } catch (const std::domain_error &) {
            lr_out.reset();
        }
    } else {
        zeta_out = {to_eigen(zeta)};
        lr_out = lr;
    }
}

}  // namespace

bool ConvergenceReport::ok() const {
    bool literal_ok = degenerate ? literal_gap_is_sign_irrep : identity_literal;
    return identity_exact && literal_ok && kernel_vectors_annihilated && random_q_residual <= 1e-10 &&
           k_deviation <= k_bound;
}

ConvergenceReport verify_convergence_structure(const Angle &theta, int N, int k, int num_random, uint64_t seed) {
    if (!theta.exact()) throw std::invalid_argument("verify_convergence_structure: needs a rational cos(4 theta)");
    if (*theta.cos4 == 1) throw std::domain_error("verify_convergence_structure: Clifford angle never converges");
    if (N < 2) throw std::domain_error("verify_convergence_structure: needs d >= 4");
    ConvergenceReport rep;
    rep.k = k;
    auto s1 = phase_gate_class_traces(*theta.cos4);
    XiSystem sys = build_xi_system(theta, N, XiMode::Continued);
    rep.degenerate = sys.degenerate;
    std::vector<Eigen::MatrixXd> zeta;
    std::optional<GroupMatrix<mpq_class>> lr;
    if (sys.degenerate) {
        exact_checks(Series(sys.d) + Series::epsilon(), s1, rep, zeta, lr);
    } else {
        exact_checks(sys.d, s1, rep, zeta, lr);
    }

    // Literal restricted W- and W at d. The restricted Xi has a spurious
    // unit eigenvalue at degenerate d, so Lambda (1 - Xi)^-1 is taken from
    // the continued system at epsilon = 0.
    XiSystem lit = build_xi_system(theta, N, XiMode::Restricted);
    if (lr && lit.w) {
        auto gap = lit.wm - (*lr) * lit.wm - *lit.w;
        rep.identity_literal = all_zero(gap);
        if (sys.degenerate) {
            std::array<mpq_class, kNumClasses> sign;
            for (int c = 0; c < kNumClasses; c++) sign[c] = mpq_class(kCharacter[(int)Irrep::Sign][c], 576);
            auto sg = GroupMatrix<mpq_class>::class_function(sign);
            rep.literal_gap_is_sign_irrep = all_zero(gap - sg) || all_zero(gap + sg);
        }
    }

    std::mt19937_64 rng(seed);
    double fmax = 0;
    for (double v : xi_spectrum(sys)) fmax = std::max(fmax, std::abs(v));
    TraceMaps maps = trace_maps(sys.d.get_d());
    Eigen::MatrixXd la = sys.lambda;
    Eigen::JacobiSVD<Eigen::MatrixXd> sva(maps.ma), svb(maps.mb), svl(la);
    double na = sva.singularValues()[0], nb = svb.singularValues()[0], nl = svl.singularValues()[0];
    for (int r = 0; r < num_random; r++) {
        TraceVector<cd> tv = random_factorized_traces(N, rng);
        Eigen::VectorXcd q(24);
        for (int i = 0; i < 24; i++) q[i] = tv.q[i];
        for (const auto &z : zeta) {
            double scale = z.cwiseAbs().maxCoeff() * q.cwiseAbs().sum();
            if (scale == 0) continue;
            rep.random_q_residual = std::max(rep.random_q_residual, (z.cast<cd>() * q).cwiseAbs().maxCoeff() / scale);
        }
        auto c0 = fold_channel_doped(sys, tv, 0);
        auto ck = advance(sys, c0, k);
        Eigen::VectorXcd haar = stack(fold_channel_haar(sys.d, tv), maps);
        double scale = haar.cwiseAbs().maxCoeff();
        double dev = (stack(ck, maps) - haar).cwiseAbs().maxCoeff() / scale;
        double cnorm = 0;
        for (auto v : c0.alpha) cnorm += std::norm(v);
        cnorm = std::sqrt(cnorm);
        double bound = std::pow(fmax, k) * cnorm * (na + nb * nl / (1 - fmax)) / scale;
        rep.k_deviation = std::max(rep.k_deviation, dev);
        rep.k_bound = std::max(rep.k_bound, bound);
    }
    return rep;
}

}  // namespace dcc
