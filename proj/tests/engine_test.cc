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

#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "doctest.h"
#include "dcc/engine.h"
#include "dcc/enumeration.h"
#include "dcc/validation.h"

using namespace dcc;

namespace {

Eigen::MatrixXcd random_dense(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; i++)
        for (int j = 0; j < dim; j++) m(i, j) = {g(rng), g(rng)};
    return m;
}

TraceVector<mpq_class> uniform_traces(const mpq_class &q, const mpq_class &t) {
    TraceVector<mpq_class> tv;
    tv.q.fill(q);
    tv.t.fill(t);
    return tv;
}

Eigen::MatrixXcd psi4(const Eigen::VectorXcd &psi) {
    Eigen::VectorXcd v = Eigen::kroneckerProduct(psi, Eigen::kroneckerProduct(psi, Eigen::kroneckerProduct(psi, psi)).eval()).eval();
    return v * v.adjoint();
}

}  // namespace

TEST_CASE("f_pm") {
    auto [fp, fm] = f_pm_exact(-1, 4);
    CHECK(fp == mpq_class(14, 15));
    CHECK(fm == mpq_class(8, 15));
    for (int d : {2, 4, 64}) {
        auto [a, b] = f_pm_exact(1, d);
        CHECK(a == 1);
        CHECK(b == 1);
    }
    auto [lp, lm] = f_pm_theta(Angle::pi_fraction(1, 4), 1e9);
    CHECK(lp == doctest::Approx(0.75));
    CHECK(lm == doctest::Approx(0.75));
    for (int d : {4, 8, 16, 1024}) {
        mpq_class dq(d);
        auto [p, m] = f_pm_exact(-1, dq);
        CHECK(p == (3 * dq * dq + 3 * dq - 4) / (4 * (dq * dq - 1)));
        CHECK(m == (3 * dq * dq - 3 * dq - 4) / (4 * (dq * dq - 1)));
    }
}

TEST_CASE("angle parsing") {
    CHECK(Angle::parse("pi/4").cos4.value() == -1);
    CHECK(Angle::parse("pi/2").cos4.value() == 1);
    CHECK(Angle::parse("pi/12").cos4.value() == mpq_class(1, 2));
    CHECK(Angle::parse("0").cos4.value() == 1);
    CHECK(Angle::parse("3pi/8").cos4.value() == 0);
    CHECK_FALSE(Angle::parse("0.3").exact());
    CHECK(Angle::parse("0.3").radians == doctest::Approx(0.3));
    CHECK_THROWS(Angle::parse("pie"));
}

TEST_CASE("xi spectrum") {
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), 2);
    auto ev = xi_spectrum(s);
    std::vector<double> nz;
    for (double e : ev)
        if (std::abs(e) > 1e-12) nz.push_back(e);
    REQUIRE(nz.size() == 6);
    CHECK(nz[0] == doctest::Approx(8.0 / 15));
    for (int i = 1; i < 5; i++) CHECK(nz[i] == doctest::Approx(11.0 / 15));
    CHECK(nz[5] == doctest::Approx(14.0 / 15));

    // Clifford angle: doping is inert.
    XiSystem c = build_xi_system(Angle::pi_fraction(1, 2), 3);
    auto evc = xi_spectrum(c);
    CHECK(evc.back() == doctest::Approx(1.0));

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.05, 1.5);
    for (int t = 0; t < 10; t++) {
        Angle th = Angle::from_radians(u(rng));
        int N = 2 + t % 5;
        auto chk = check_xi_spectrum(th, N);
        CHECK(chk.eigen_dev < 1e-10);
        CHECK(chk.symmetry_dev < 1e-12);
        CHECK(chk.rank == 6);
    }
    auto r8 = check_xi_spectrum(Angle::pi_fraction(1, 4), 3);
    CHECK(r8.rank == 6);
    CHECK(r8.symmetry_dev == 0);
}

TEST_CASE("K position independence") {
    for (int N : {2, 3, 4}) CHECK(kpos_invariant(Angle::pi_fraction(1, 4), N));
    CHECK(kpos_invariant(Angle::pi_fraction(1, 12), 3));
}

TEST_CASE("gamma_k") {
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), 2);
    auto g0 = gamma_k_exact(s, 0);
    for (const auto &v : g0.a) CHECK(v == 0);
    auto g1 = gamma_k_exact(s, 1);
    CHECK(g1.a == s.lambda_q->a);
    auto g3 = gamma_k_exact(s, 3), g4 = gamma_k_exact(s, 4);
    auto xi3 = (*s.xi_q) * (*s.xi_q) * (*s.xi_q);
    CHECK((g4 - g3).a == ((*s.lambda_q) * xi3).a);

    // Gamma^(k) - Gamma^inf = -Lambda Xi^k (1 - Xi)^-1, bounded by the slow mode.
    auto [fp, fm] = f_pm_exact(-1, 4);
    Eigen::MatrixXd lim = gamma_limit(s);
    Eigen::MatrixXd L = s.lambda;
    Eigen::MatrixXd inv = (Eigen::MatrixXd::Identity(24, 24) - s.xi).inverse();
    for (int k : {10, 50, 120}) {
        double dev = (gamma_k(s, k) - lim).cwiseAbs().maxCoeff();
        double bound = L.norm() * inv.norm() * std::pow(fp.get_d(), k);
        CHECK(dev <= bound);
    }
    CHECK((gamma_k(s, 400) - lim).cwiseAbs().maxCoeff() < 1e-8);
    XiSystem s8 = build_xi_system(Angle::pi_fraction(1, 4), 3);
    CHECK((gamma_k(s8, 50) - gamma_limit(s8)).cwiseAbs().maxCoeff() < 1e-5);
    CHECK_THROWS(gamma_limit(build_xi_system(Angle::pi_fraction(1, 2), 2)));
}

TEST_CASE("c_Q coefficients") {
    auto [cq, cqq] = c_q_coefficients(-1, 4);
    CHECK(cq == 3);
    CHECK(cqq == 2);
    CHECK(c_q_coefficients(1, 4).second == 0);
    auto D = d_pm_lambda(mpq_class(16));
    CHECK(c_q_coefficients(1, 16).first == D.plus[0]);
    for (const char *th : {"pi/4", "pi/12", "0", "pi/2", "3pi/8"}) {
        for (int N : {1, 2, 3, 5}) {
            Angle a = Angle::parse(th);
            XiSystem s = build_xi_system(a, N);
            CHECK(c_q_from_traces(s) == c_q_coefficients(*a.cos4, dimension_of(N)));
        }
    }
    // Dense at N = 2.
    Eigen::Matrix2cd K = phase_gate(M_PI / 4);
    Eigen::Matrix4cd K2 = Eigen::kroneckerProduct(Eigen::Matrix2cd::Identity(), K);
    Eigen::MatrixXcd K4 = Eigen::kroneckerProduct(K2, Eigen::kroneckerProduct(K2, Eigen::kroneckerProduct(K2, K2).eval()).eval());
    Eigen::MatrixXcd Q = q_dense(2), P = irrep_projector(Irrep::Sym, 4);
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(256, 256);
    CHECK((K4 * Q * K4.adjoint() * Q * P).trace().real() == doctest::Approx(3));
    CHECK((K4 * Q * K4.adjoint() * (I - Q) * P).trace().real() == doctest::Approx(2));
}

TEST_CASE("state channel") {
    auto [a0, b0] = state_channel(mpq_class(1, 4), 4, -1, 0);
    CHECK(a0 == mpq_class(1, 40));
    CHECK(b0 == mpq_class(1, 40));
    auto [a1, b1] = state_channel(mpq_class(1, 4), 4, -1, 1);
    CHECK(a1 == mpq_class(1, 75));
    CHECK(b1 == mpq_class(2, 75));
    auto [al, bl] = state_channel_limit(4);
    CHECK(al == 0);
    CHECK(bl == mpq_class(1, 35));
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), 2);
    for (int k = 0; k < 6; k++) {
        auto [a, b] = state_channel(mpq_class(1, 4), 4, -1, k);
        CHECK(a * 5 + b * 35 == 1);
        auto [ae, be] = state_channel_engine(s, mpq_class(1, 4), k);
        CHECK(ae == a);
        CHECK(be == b);
    }
    XiSystem s5 = build_xi_system(Angle::pi_fraction(1, 12), 5);
    mpq_class d = 32, trq = mpq_class(1, 7);
    for (int k : {0, 1, 4}) {
        auto ref = state_channel(trq, d, mpq_class(1, 2), k);
        CHECK(state_channel_engine(s5, trq, k) == ref);
    }
}

TEST_CASE("fold fixes the symmetric projector") {
    for (int N : {2, 3, 6}) {
        mpq_class d = dimension_of(N);
        auto D = d_pm_lambda(d);
        auto tv = uniform_traces(D.plus[0], D.total[0]);
        XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), N);
        for (int k : {0, 1, 3}) {
            auto out = output_traces(fold_channel_doped(s, tv, k), d);
            for (int p = 0; p < 24; p++) {
                CHECK(out.q[p] == D.plus[0]);
                CHECK(out.t[p] == D.total[0]);
            }
        }
        auto h = output_traces(fold_channel_haar(d, tv), d);
        for (int p = 0; p < 24; p++) CHECK(h.t[p] == D.total[0]);
    }
    // Dense reconstruction at N = 2.
    Eigen::MatrixXcd P = irrep_projector(Irrep::Sym, 4);
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), 2);
    auto c = fold_channel_doped(s, trace_vector(P, 2), 2);
    CHECK((reconstruct_dense(c, 2) - P).norm() < 1e-10);
}

TEST_CASE("fold at k = 0 matches the Clifford twirl of psi^4") {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(4);
    z(0) = 1;
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), 2);
    Eigen::MatrixXcd out = reconstruct_dense(fold_channel_doped(s, trace_vector(psi4(z), 2), 0), 2);
    Eigen::MatrixXcd P = irrep_projector(Irrep::Sym, 4);
    Eigen::MatrixXcd ref = (q_dense(2) * P + P) / 40.0;
    CHECK((out - ref).norm() < 1e-12);
    Eigen::MatrixXcd h = reconstruct_dense(fold_channel_haar(4, trace_vector(psi4(z), 2)), 2);
    CHECK((h - P / 35.0).norm() < 1e-12);
}

TEST_CASE("haar twirl is idempotent") {
    for (int p = 0; p < 24; p += 5) {
        Eigen::MatrixXcd T = perm_operator(Perm4::from_index(p), 4);
        auto c1 = fold_channel_haar(4, trace_vector(T, 2));
        Eigen::MatrixXcd once = reconstruct_dense(c1, 2);
        CHECK((once - T).norm() < 1e-10);
        Eigen::MatrixXcd twice = reconstruct_dense(fold_channel_haar(4, trace_vector(once, 2)), 2);
        CHECK((twice - once).norm() < 1e-10);
    }
}

TEST_CASE("fold matches group enumeration at N = 1") {
    CliffordEnumerator g(1);
    CHECK(g.group_size() == 24);
    std::mt19937_64 rng(23);
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), 1);
    for (int t = 0; t < 5; t++) {
        Eigen::MatrixXcd O = random_dense(16, rng);
        for (int k : {0, 1, 2, 3}) {
            Eigen::MatrixXcd eng = reconstruct_dense(fold_channel_doped(s, trace_vector(O, 1), k), 1);
            Eigen::MatrixXcd ref = exact_group_channel(g, k, phase_gate(M_PI / 4), O);
            CHECK((eng - ref).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
    // A non-diagonal gate through the float path.
    Eigen::Matrix2cd K;
    double a = 0.3;
    K << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    XiSystem sk = build_xi_system(K, 1);
    Eigen::MatrixXcd O = random_dense(16, rng);
    Eigen::MatrixXcd eng = reconstruct_dense(fold_channel_doped(sk, trace_vector(O, 1), 2), 1);
    CHECK((eng - exact_group_channel(g, 2, K, O)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("semigroup and trace preservation") {
    std::mt19937_64 rng(29);
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), 2);
    Eigen::MatrixXcd O = random_dense(256, rng);
    O /= O.trace();
    auto tv = trace_vector(O, 2);
    for (int k1 : {0, 1, 2}) {
        for (int k2 : {1, 3}) {
            auto a = fold_channel_doped(s, tv, k1 + k2);
            auto b = advance(s, fold_channel_doped(s, tv, k1), k2);
            for (int p = 0; p < 24; p++) {
                CHECK(std::abs(a.alpha[p] - b.alpha[p]) < 1e-12);
                CHECK(std::abs(a.beta[p] - b.beta[p]) < 1e-12);
            }
        }
    }
    for (int k = 0; k <= 5; k++) {
        Eigen::MatrixXcd out = reconstruct_dense(fold_channel_doped(s, tv, k), 2);
        CHECK(std::abs(out.trace() - 1.0) < 1e-10);
    }
}

TEST_CASE("factorized traces agree with dense traces") {
    std::mt19937_64 rng(31);
    Eigen::MatrixXcd a = random_dense(16, rng), b = random_dense(16, rng);
    // Copy j of the 2-qubit operator carries qubit 0 (bit 0) and qubit 1.
    // Interleave per-qubit blocks into the copy-major layout by hand.
    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(256, 256);
    for (int r = 0; r < 256; r++)
        for (int c = 0; c < 256; c++) {
            int ra = 0, rb = 0, ca = 0, cb = 0;
            for (int j = 0; j < 4; j++) {
                int rs = r >> (2 * (3 - j)) & 3, cs = c >> (2 * (3 - j)) & 3;
                ra |= (rs & 1) << (3 - j);
                rb |= (rs >> 1) << (3 - j);
                ca |= (cs & 1) << (3 - j);
                cb |= (cs >> 1) << (3 - j);
            }
            dense(r, c) = a(ra, ca) * b(rb, cb);
        }
    auto f = factorized_trace_vector({a, b});
    auto ref = trace_vector(dense, 2);
    for (int p = 0; p < 24; p++) {
        CHECK(std::abs(f.q[p] - ref.q[p]) < 1e-9);
        CHECK(std::abs(f.t[p] - ref.t[p]) < 1e-9);
    }
}

TEST_CASE("convergence structure") {
    for (int N : {2, 3}) {
        ConvergenceReport r = verify_convergence_structure(Angle::pi_fraction(1, 4), N);
        CHECK(r.identity_exact);
        CHECK(r.kernel_vectors_annihilated);
        CHECK(r.random_q_residual < 1e-9);
        CHECK(r.k_deviation <= r.k_bound);
        CHECK(r.ok());
        // At d = 4 the 14/15 mode of the continued Xi never reaches a physical
        // operator; the channel decays at 11/15 per layer, so k = 60 is within 1e-8.
        if (N == 2) CHECK(r.k_deviation < 1e-8);
    }
    const auto &groups = pauli_kernel_groups();
    int covered = 0;
    for (const auto &g : groups) covered += (int)g.size();
    CHECK(covered == 24);
}
