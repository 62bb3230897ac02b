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

#include <set>

#include "doctest.h"
#include "dcc/perm4.h"

using namespace dcc;

TEST_CASE("perm4 basics") {
    Perm4 t12 = Perm4::from_cycles("(12)");
    CHECK(t12 * t12 == Perm4::identity());
    CHECK(Perm4::from_cycles("(123)").inverse() == Perm4::from_cycles("(132)"));
    Perm4 c4 = Perm4::from_cycles("(1234)");
    CHECK(c4.cycle_class() == CycleClass::T4);
    CHECK(kClassSize[(int)c4.cycle_class()] == 6);
    CHECK(Perm4::from_cycles("e") == Perm4::identity());
    CHECK_THROWS(Perm4::from_cycles("(15)"));
}

TEST_CASE("perm4 canonical order and composition") {
    std::set<std::array<uint8_t, 4>> seen;
    for (int k = 0; k < 24; k++) {
        Perm4 p = Perm4::from_index(k);
        CHECK(p.index() == k);
        seen.insert(p.images);
        if (k > 0) CHECK(Perm4::from_index(k - 1).images < p.images);
    }
    CHECK(seen.size() == 24);
    CHECK(Perm4::from_index(0) == Perm4::identity());
    // (a*b)(i) = a(b(i)).
    Perm4 a = Perm4::from_cycles("(12)"), b = Perm4::from_cycles("(23)");
    Perm4 ab = a * b;
    for (int i = 0; i < 4; i++) CHECK(ab.images[i] == a.images[b.images[i]]);
    const auto &t = s4();
    for (int x = 0; x < 24; x++) {
        CHECK(t.mul[x][t.inv[x]] == t.identity);
        for (int g = 0; g < 24; g++) {
            int conj = t.mul[t.mul[g][x]][t.inv[g]];
            CHECK(t.cls[conj] == t.cls[x]);
        }
    }
    int total = 0;
    for (int c : kClassSize) total += c;
    CHECK(total == 24);
}

TEST_CASE("character table") {
    CHECK_NOTHROW(check_character_table());
    int sq = 0;
    for (int d : kIrrepDim) sq += d * d;
    CHECK(sq == 24);
}

TEST_CASE("permutation operators") {
    CHECK(perm_operator(Perm4::identity(), 4).trace().real() == doctest::Approx(256));
    CHECK(perm_operator(Perm4::from_cycles("(1234)"), 4).trace().real() == doctest::Approx(4));
    // T_(12)|abcd> = |bacd>.
    Eigen::MatrixXcd sw = perm_operator(Perm4::from_cycles("(12)"), 2);
    for (int x = 0; x < 16; x++) {
        int a = x >> 3 & 1, b = x >> 2 & 1, rest = x & 3;
        int y = b << 3 | a << 2 | rest;
        CHECK(sw(y, x) == std::complex<double>(1));
    }
    const auto &t = s4();
    for (int m : {2, 3}) {
        for (int a = 0; a < 24; a++) {
            Eigen::MatrixXcd ta = perm_operator(Perm4::from_index(a), m);
            for (int b = 0; b < 24; b++) {
                Eigen::MatrixXcd lhs = ta * perm_operator(Perm4::from_index(b), m);
                CHECK((lhs - perm_operator(Perm4::from_index(t.mul[a][b]), m)).norm() < 1e-12);
            }
        }
    }
    for (int m : {2, 3, 4})
        for (int a = 0; a < 24; a++)
            CHECK(perm_operator(Perm4::from_index(a), m).trace().real() == doctest::Approx(std::pow(m, t.cycles[a])));
    CHECK_THROWS_AS(perm_operator(Perm4::identity(), 9), std::length_error);
    CHECK_THROWS(perm_operator(Perm4::identity(), 1));
}

TEST_CASE("irrep projectors") {
    for (int m : {2, 3}) {
        int D = m * m * m * m;
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(D, D);
        std::vector<Eigen::MatrixXcd> P;
        for (int l = 0; l < kNumIrreps; l++) {
            P.push_back(irrep_projector((Irrep)l, m));
            sum += P.back();
        }
        CHECK((sum - Eigen::MatrixXcd::Identity(D, D)).norm() < 1e-12);
        for (int l = 0; l < kNumIrreps; l++) {
            CHECK((P[l] * P[l] - P[l]).norm() < 1e-12);
            for (int u = 0; u < kNumIrreps; u++)
                if (u != l) CHECK((P[l] * P[u]).norm() < 1e-12);
        }
    }
    CHECK(irrep_projector(Irrep::Sym, 4).trace().real() == doctest::Approx(35));
    CHECK(irrep_projector(Irrep::Sign, 2).norm() < 1e-12);
}
