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
#include "dcc/engine.h"
#include "dcc/enumeration.h"

using namespace dcc;

namespace {
Eigen::MatrixXcd random_dense(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; i++)
        for (int j = 0; j < dim; j++) m(i, j) = {g(rng), g(rng)};
    return m;
}
}  // namespace

TEST_CASE("pauli basis round trip") {
    std::mt19937_64 rng(61);
    Eigen::MatrixXcd O = random_dense(8, rng);
    PauliVector c = to_pauli_basis(O);
    CHECK(c.size() == 64);
    CHECK((from_pauli_basis(c) - O).norm() < 1e-12);
    // X on qubit 0 has x bit 0 set and no z bits.
    PauliVector x = to_pauli_basis(PauliString::from_str("XI").dense());
    CHECK(std::abs(x[1] - 1.0) < 1e-15);
    PauliVector y = to_pauli_basis(PauliString::from_str("Y").dense());
    CHECK(std::abs(y[1 | 2] - 1.0) < 1e-15);
    CHECK_THROWS(to_pauli_basis(Eigen::MatrixXcd::Identity(3, 3)));
}

TEST_CASE("enumerated group orders") {
    CliffordEnumerator g1(1), g2(2);
    CHECK(g1.symplectic_count() == 6);
    CHECK(g1.group_size() == 24);
    CHECK(g2.symplectic_count() == 720);
    CHECK(g2.group_size() == 11520);
    CHECK_THROWS(CliffordEnumerator(3));
    // Every table is a signed permutation of the non-identity Paulis.
    for (size_t r = 0; r < g2.symplectic_count(); r += 37) {
        std::vector<int> seen(16, 0);
        for (const auto &im : g2.table(r)) seen[im.index]++;
        for (int v : seen) CHECK(v == 1);
        CHECK(g2.table(r)[0].index == 0);
    }
}

TEST_CASE("twirl is a projection") {
    std::mt19937_64 rng(67);
    CliffordEnumerator g(1);
    PauliVector c = to_pauli_basis(random_dense(16, rng));
    PauliVector a = g.twirl4(c), b = g.twirl4(a);
    double diff = 0;
    for (size_t i = 0; i < a.size(); i++) diff = std::max(diff, std::abs(a[i] - b[i]));
    CHECK(diff < 1e-12);
}

TEST_CASE("enumeration at N = 2") {
    CliffordEnumerator g(2);
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(256);
    z(0) = 1;
    Eigen::MatrixXcd O = z * z.adjoint();  // |0000><0000| on 4 copies of 2 qubits
    Eigen::MatrixXcd out = exact_group_channel(g, 0, phase_gate(M_PI / 4), O);
    Eigen::MatrixXcd Psym = irrep_projector(Irrep::Sym, 4);
    CHECK((out - (q_dense(2) * Psym + Psym) / 40.0).cwiseAbs().maxCoeff() < 1e-12);

    std::mt19937_64 rng(71);
    Eigen::MatrixXcd R = random_dense(256, rng);
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 4), 2);
    Eigen::MatrixXcd eng = reconstruct_dense(fold_channel_doped(s, trace_vector(R, 2), 2), 2);
    CHECK((eng - exact_group_channel(g, 2, phase_gate(M_PI / 4), R)).cwiseAbs().maxCoeff() < 1e-9);
    // K on the second qubit gives the same channel.
    Eigen::MatrixXcd alt = exact_group_channel(g, 1, phase_gate(M_PI / 4), R, 1);
    Eigen::MatrixXcd ref = exact_group_channel(g, 1, phase_gate(M_PI / 4), R, 0);
    CHECK((alt - ref).cwiseAbs().maxCoeff() < 1e-10);
    CHECK_THROWS(exact_group_channel(3, 0, phase_gate(0), R));
}

TEST_CASE("N = 1 enumeration equals the Clifford twirl") {
    std::mt19937_64 rng(73);
    XiSystem s = build_xi_system(Angle::pi_fraction(1, 3), 1);
    for (int t = 0; t < 5; t++) {
        Eigen::MatrixXcd O = random_dense(16, rng);
        Eigen::MatrixXcd eng = reconstruct_dense(fold_channel_doped(s, trace_vector(O, 1), 0), 1);
        CHECK((eng - exact_group_channel(1, 0, phase_gate(M_PI / 3), O)).cwiseAbs().maxCoeff() < 1e-12);
    }
}
