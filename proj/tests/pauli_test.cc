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

#include "doctest.h"
#include "dcc/pauli.h"

using namespace dcc;

namespace {
Eigen::MatrixXcd random_dense(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; i++)
        for (int j = 0; j < dim; j++) m(i, j) = {g(rng), g(rng)};
    return m;
}

std::complex<double> tr_prod(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return a.transpose().cwiseProduct(b).sum();
}
}  // namespace

TEST_CASE("commutation sign") {
    using P = PauliString;
    CHECK(pauli_commutation_sign(P::from_str("X"), P::from_str("Z")) == -1);
    CHECK(pauli_commutation_sign(P::from_str("X"), P::from_str("X")) == 1);
    CHECK(pauli_commutation_sign(P::from_str("XZ"), P::from_str("ZX")) == 1);
    CHECK_THROWS(pauli_commutation_sign(P::from_str("X"), P::from_str("XX")));
    // K(P1,P2) K(P1,P3) = K(P1, P2 P3).
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> u(0, 3);
    const char *L = "IXYZ";
    for (int t = 0; t < 100; t++) {
        std::string s[3];
        for (auto &x : s)
            for (int q = 0; q < 3; q++) x += L[u(rng)];
        P a = P::from_str(s[0]), b = P::from_str(s[1]), c = P::from_str(s[2]);
        CHECK(pauli_commutation_sign(a, b) * pauli_commutation_sign(a, c) == pauli_commutation_sign(a, b * c));
        Eigen::MatrixXcd ab = a.dense() * b.dense(), ba = b.dense() * a.dense();
        CHECK((ab - double(pauli_commutation_sign(a, b)) * ba).norm() < 1e-12);
        CHECK(((a * b).dense() - ab).norm() < 1e-12);
    }
}

TEST_CASE("pauli strings") {
    PauliString p = PauliString::from_str("-XIY");
    CHECK(p.size() == 3);
    CHECK(p.support() == 0b101);
    CHECK(p.str() == "-XIY");
    CHECK_FALSE(p.is_identity());
    CHECK(PauliString::from_str("II").is_identity());
    // Qubit q is bit q: X on qubit 0 flips the lowest bit.
    Eigen::MatrixXcd x0 = PauliString::from_str("XI").dense();
    CHECK(x0(1, 0) == std::complex<double>(1));
    CHECK((pauli_matrix(1) * pauli_matrix(3) - std::complex<double>(0, -1) * pauli_matrix(2)).norm() < 1e-15);
}

TEST_CASE("trace_q_T") {
    CHECK(trace_q_T(Perm4::identity(), 2) == 16);
    CHECK(trace_q_T(Perm4::from_cycles("(123)"), 5) == 1);
    CHECK(trace_q_T(Perm4::from_cycles("(12)(34)"), 2) == 16);
    for (int N : {1, 2}) {
        Eigen::MatrixXcd Q = q_dense(N);
        for (int s = 0; s < 24; s++) {
            Perm4 p = Perm4::from_index(s);
            double dense = (Q * perm_operator(p, 1 << N)).trace().real();
            CHECK(dense == doctest::Approx(trace_q_T(p, N).get_d()));
        }
    }
}

TEST_CASE("Q is a projector commuting with permutations") {
    for (int N : {1, 2}) {
        Eigen::MatrixXcd Q = q_dense(N);
        CHECK((Q * Q - Q).norm() < 1e-12);
        for (int s = 0; s < 24; s++) {
            Eigen::MatrixXcd T = perm_operator(Perm4::from_index(s), 1 << N);
            CHECK((Q * T - T * Q).norm() < 1e-12);
        }
    }
}

TEST_CASE("pauli class trace relations") {
    // Each group shares tr(O Q T_sigma) for arbitrary O.
    const char *groups[6][4] = {
        {"e", "(12)(34)", "(13)(24)", "(14)(23)"},
        {"(12)", "(34)", "(1324)", "(1423)"},
        {"(13)", "(24)", "(1234)", "(1432)"},
        {"(14)", "(23)", "(1243)", "(1342)"},
        {"(123)", "(134)", "(142)", "(243)"},
        {"(132)", "(143)", "(124)", "(234)"},
    };
    std::mt19937_64 rng(11);
    for (int N : {1, 2}) {
        int m = 1 << N;
        Eigen::MatrixXcd Q = q_dense(N);
        std::vector<Eigen::MatrixXcd> QT(24);
        for (int s = 0; s < 24; s++) QT[s] = Q * perm_operator(Perm4::from_index(s), m);
        const int reps = 200;
        double worst = 0;
        for (int t = 0; t < reps; t++) {
            Eigen::MatrixXcd O = random_dense(m * m * m * m, rng);
            for (auto &g : groups) {
                std::complex<double> ref = tr_prod(O, QT[Perm4::from_cycles(g[0]).index()]);
                for (int j = 1; j < 4; j++) {
                    std::complex<double> v = tr_prod(O, QT[Perm4::from_cycles(g[j]).index()]);
                    worst = std::max(worst, std::abs(v - ref));
                }
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("d_pm_lambda") {
    auto D = d_pm_lambda(mpq_class(4));
    CHECK(D.plus[0] == 5);
    CHECK(D.minus[0] == 30);
    CHECK(D.total[0] == 35);
    auto D1 = d_pm_lambda(mpq_class(2));
    CHECK(D1.total[(int)Irrep::Sign] == 0);
    CHECK(D1.plus[(int)Irrep::Sign] == 0);
    CHECK(D1.minus[(int)Irrep::Sign] == 0);
    // Dense cross-check at N = 2.
    Eigen::MatrixXcd Q = q_dense(2);
    for (int l = 0; l < kNumIrreps; l++)
        CHECK((Q * irrep_projector((Irrep)l, 4)).trace().real() == doctest::Approx(D.plus[l].get_d()));
}

TEST_CASE("trace_psi4_Q") {
    CHECK(trace_psi4_Q_zero(3) == mpq_class(1, 8));
    Eigen::VectorXcd plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    CHECK(trace_psi4_Q_dense(plus) == doctest::Approx(0.5));
    CHECK(trace_psi4_Q_product({{1.0, 0.0, 0.0}}) == doctest::Approx(0.5));
    Eigen::VectorXcd bad = 2.0 * plus;
    CHECK_THROWS_AS(trace_psi4_Q_dense(bad), std::invalid_argument);
    // Dense Q contraction for a zero state.
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(4);
    z(0) = 1;
    CHECK(trace_psi4_Q_dense(z) == doctest::Approx(0.25));

    std::mt19937_64 rng(5);
    double acc = 0;
    const int n = 20000;
    for (int t = 0; t < n; t++) {
        auto b = random_product_bloch(2, rng);
        double v = trace_psi4_Q_product(b);
        if (t < 20) CHECK(trace_psi4_Q_dense(product_state(b)) == doctest::Approx(v).epsilon(1e-10));
        acc += v;
    }
    CHECK(acc / n == doctest::Approx(4.0 / 25).epsilon(0.01));
}
