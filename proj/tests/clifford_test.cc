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

#include <map>
#include <random>

#include "doctest.h"
#include "dcc/clifford.h"

using namespace dcc;

namespace {
using P = PauliString;

P conj(const char *s, const Gate &g) {
    P p = P::from_str(s);
    conjugate(p, g);
    return p;
}

Circuit random_circuit(int N, int len, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> t(0, 7), q(0, N - 1);
    Circuit c;
    for (int i = 0; i < len; i++) {
        Gate g{(GateType)t(rng), q(rng)};
        if (g.type == GateType::CX || g.type == GateType::SWAP) {
            g.q1 = q(rng);
            if (g.q1 == g.q0) g.q1 = (g.q0 + 1) % N;
        }
        c.push_back(g);
    }
    return c;
}
}  // namespace

TEST_CASE("conjugation rules") {
    CHECK(conj("X", {GateType::H, 0}) == P::from_str("Z"));
    CHECK(conj("Y", {GateType::H, 0}) == P::from_str("-Y"));
    CHECK(conj("X", {GateType::S, 0}) == P::from_str("Y"));
    CHECK(conj("X", {GateType::Sdg, 0}) == P::from_str("-Y"));
    CHECK(conj("Z", {GateType::X, 0}) == P::from_str("-Z"));
    CHECK(conj("XI", {GateType::CX, 0, 1}) == P::from_str("XX"));
    CHECK(conj("IZ", {GateType::CX, 0, 1}) == P::from_str("ZZ"));
    CHECK(conj("XZ", {GateType::SWAP, 0, 1}) == P::from_str("ZX"));
    CHECK_THROWS(conj("X", {GateType::Phase, 0, -1, 0.3}));
}

TEST_CASE("tableau matches dense conjugation") {
    std::mt19937_64 rng(41);
    const char *L = "IXYZ";
    std::uniform_int_distribution<int> u(0, 3);
    for (int t = 0; t < 20; t++) {
        Circuit c = random_circuit(3, 25, rng);
        Tableau tab = Tableau::from_circuit(3, c);
        CHECK(tab.is_symplectic());
        Eigen::MatrixXcd U = dense_unitary(c, 3);
        for (int r = 0; r < 5; r++) {
            std::string s;
            for (int q = 0; q < 3; q++) s += L[u(rng)];
            P p = P::from_str(s);
            Eigen::MatrixXcd lhs = U * p.dense() * U.adjoint();
            CHECK((lhs - tab(p).dense()).norm() < 1e-12);
        }
    }
    Tableau id(2);
    CHECK(id(P::from_str("XY")) == P::from_str("XY"));
    CHECK((dense_unitary({}, 2) - Eigen::MatrixXcd::Identity(4, 4)).norm() == 0);
}

TEST_CASE("state and unitary simulation") {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2);
    psi(0) = 1;
    apply_to_state({{GateType::H, 0}}, psi);
    CHECK(std::abs(psi(0) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(psi(1) - 1 / std::sqrt(2.0)) < 1e-15);

    std::mt19937_64 rng(43);
    Circuit c = random_circuit(3, 40, rng);
    c.push_back({GateType::Phase, 1, -1, 0.37});
    Eigen::MatrixXcd U = dense_unitary(c, 3);
    CHECK((U.adjoint() * U - Eigen::MatrixXcd::Identity(8, 8)).norm() < 1e-12);
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(8).normalized();
    Eigen::VectorXcd w = v;
    apply_to_state(c, w);
    CHECK((w - U * v).norm() < 1e-12);
    CHECK(std::abs(w.norm() - 1) < 1e-10);
    CHECK_THROWS_AS(dense_unitary(c, 7), std::length_error);
    Eigen::MatrixXcd H = haar_unitary(6, rng);
    CHECK((H.adjoint() * H - Eigen::MatrixXcd::Identity(6, 6)).norm() < 1e-12);
}

TEST_CASE("sample_clifford is uniform at N = 1") {
    // The 24 elements of C(2)/U(1) are labelled by the signed images of X and Z.
    std::mt19937_64 rng(47);
    std::map<std::string, int> counts;
    const int n = 24000;
    for (int s = 0; s < n; s++) {
        Tableau t = Tableau::from_circuit(1, sample_clifford(1, rng));
        counts[t.x_image(0).str() + t.z_image(0).str()]++;
    }
    CHECK(counts.size() == 24);
    double p = 1.0 / 24, mean = n * p, sd = std::sqrt(n * p * (1 - p));
    double chi2 = 0;
    for (auto &[k, c] : counts) {
        CHECK(std::abs(c - mean) <= 5 * sd);
        chi2 += (c - mean) * (c - mean) / mean;
    }
    // 23 degrees of freedom; the 0.9999 quantile is about 59.
    CHECK(chi2 < 59);
}

TEST_CASE("sample_clifford at N = 2") {
    std::mt19937_64 rng(53);
    std::map<std::string, int> xs;
    const int n = 30000;
    double second = 0;
    for (int s = 0; s < n; s++) {
        Circuit c = sample_clifford(2, rng);
        Tableau t = Tableau::from_circuit(2, c);
        CHECK(t.is_symplectic());
        xs[t.x_image(0).str()]++;
        // 2-design: E <0|U^dag P U|0>^2 = 1/(d+1) for a non-identity Pauli.
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
        psi(0) = 1;
        apply_to_state(c, psi);
        double e = (psi.adjoint() * P::from_str("XZ").dense() * psi)(0).real();
        second += e * e;
    }
    CHECK(xs.size() == 30);  // 15 non-identity Paulis, two signs each
    for (auto &[k, c] : xs) CHECK(std::abs(c - n / 30.0) <= 5 * std::sqrt(n / 30.0));
    // Each term is 0 or 1, so the standard error is sqrt(p(1-p)/n).
    double m = second / n, se = std::sqrt(0.2 * 0.8 / n);
    CHECK(std::abs(m - 0.2) <= 4 * se);
}

TEST_CASE("doped circuit layout") {
    std::mt19937_64 rng(59);
    DopedCircuitSpec s;
    s.N = 3;
    s.k = 0;
    Circuit c0 = build_doped_circuit(s, rng);
    for (const auto &g : c0) CHECK(g.type != GateType::Phase);
    s.k = 4;
    s.placement = Placement::Fixed;
    s.fixed_qubit = 2;
    int phases = 0;
    for (const auto &g : build_doped_circuit(s, rng)) {
        if (g.type == GateType::Phase) {
            phases++;
            CHECK(g.q0 == 2);
            CHECK(g.theta == doctest::Approx(M_PI / 4));
        }
    }
    CHECK(phases == 4);
    s.fixed_qubit = 3;
    CHECK_THROWS(build_doped_circuit(s, rng));
    s.k = -1;
    s.fixed_qubit = 0;
    CHECK_THROWS(build_doped_circuit(s, rng));
}
