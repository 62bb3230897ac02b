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

#include "dcc/perm4.h"

#include <algorithm>
#include <stdexcept>

namespace dcc {

namespace {

std::array<Perm4, 24> build_all() {
    std::array<Perm4, 24> out;
    std::array<uint8_t, 4> p{0, 1, 2, 3};
    int k = 0;
    do {
        out[k++].images = p;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

const std::array<Perm4, 24> &all_perms() {
    static const std::array<Perm4, 24> perms = build_all();
    return perms;
}

}  // namespace

const char *irrep_name(Irrep l) {
    static const char *names[] = {"[4]", "[31]", "[22]", "[211]", "[1111]"};
    return names[(int)l];
}

const char *class_name(CycleClass c) {
    static const char *names[] = {"e", "(12)", "(12)(34)", "(123)", "(1234)"};
    return names[(int)c];
}

Perm4 Perm4::from_index(int k) {
    if (k < 0 || k >= 24) {
        throw std::out_of_range("Perm4 index out of range");
    }
    return all_perms()[k];
}

Perm4 Perm4::from_cycles(const std::string &text) {
    Perm4 r;
    if (text == "e" || text.empty()) {
        return r;
    }
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') {
            throw std::invalid_argument("bad cycle notation: " + text);
        }
        size_t j = text.find(')', i);
        if (j == std::string::npos) {
            throw std::invalid_argument("bad cycle notation: " + text);
        }
        std::string body = text.substr(i + 1, j - i - 1);
        for (size_t a = 0; a < body.size(); a++) {
            int from = body[a] - '1';
            int to = body[(a + 1) % body.size()] - '1';
            if (from < 0 || from > 3 || to < 0 || to > 3) {
                throw std::invalid_argument("bad cycle notation: " + text);
            }
            r.images[from] = (uint8_t)to;
        }
        i = j + 1;
    }
    std::array<bool, 4> seen{};
    for (auto v : r.images) {
        if (seen[v]) {
            throw std::invalid_argument("cycles overlap: " + text);
        }
        seen[v] = true;
    }
    return r;
}

int Perm4::index() const {
    // Lehmer code gives the lexicographic rank directly.
    static const int fact[4] = {6, 2, 1, 1};
    int rank = 0;
    for (int i = 0; i < 4; i++) {
        int smaller = 0;
        for (int j = i + 1; j < 4; j++) {
            smaller += images[j] < images[i];
        }
        rank += smaller * fact[i];
    }
    return rank;
}

Perm4 Perm4::operator*(const Perm4 &other) const {
    Perm4 r;
    for (int i = 0; i < 4; i++) {
        r.images[i] = images[other.images[i]];
    }
    return r;
}

Perm4 Perm4::inverse() const {
    Perm4 r;
    for (int i = 0; i < 4; i++) {
        r.images[images[i]] = (uint8_t)i;
    }
    return r;
}

int Perm4::num_cycles() const {
    std::array<bool, 4> seen{};
    int n = 0;
    for (int i = 0; i < 4; i++) {
        if (seen[i]) continue;
        n++;
        for (int j = i; !seen[j]; j = images[j]) seen[j] = true;
    }
    return n;
}

CycleClass Perm4::cycle_class() const {
    std::array<bool, 4> seen{};
    int longest = 0;
    int n = 0;
    for (int i = 0; i < 4; i++) {
        if (seen[i]) continue;
        n++;
        int len = 0;
        for (int j = i; !seen[j]; j = images[j]) {
            seen[j] = true;
            len++;
        }
        longest = std::max(longest, len);
    }
    switch (longest) {
        case 1: return CycleClass::E;
        case 2: return n == 3 ? CycleClass::T2 : CycleClass::T22;
        case 3: return CycleClass::T3;
        default: return CycleClass::T4;
    }
}

std::string Perm4::str() const {
    std::string out;
    std::array<bool, 4> seen{};
    for (int i = 0; i < 4; i++) {
        if (seen[i] || images[i] == i) {
            seen[i] = true;
            continue;
        }
        out += '(';
        for (int j = i; !seen[j]; j = images[j]) {
            seen[j] = true;
            out += (char)('1' + j);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

const S4Tables &s4() {
    static const S4Tables tables = [] {
        S4Tables t{};
        const auto &p = all_perms();
        for (int a = 0; a < 24; a++) {
            for (int b = 0; b < 24; b++) {
                t.mul[a][b] = (uint8_t)(p[a] * p[b]).index();
            }
            t.inv[a] = (uint8_t)p[a].inverse().index();
            t.cls[a] = (uint8_t)p[a].cycle_class();
            t.cycles[a] = (uint8_t)p[a].num_cycles();
        }
        t.identity = Perm4::identity().index();
        return t;
    }();
    return tables;
}

void check_character_table() {
    int squares = 0;
    for (int l = 0; l < kNumIrreps; l++) {
        squares += kIrrepDim[l] * kIrrepDim[l];
        if (kCharacter[l][0] != kIrrepDim[l]) {
            throw std::logic_error("character at identity must equal the irrep dimension");
        }
        for (int m = 0; m < kNumIrreps; m++) {
            int s = 0;
            for (int c = 0; c < kNumClasses; c++) {
                s += kClassSize[c] * kCharacter[l][c] * kCharacter[m][c];
            }
            if (s != (l == m ? 24 : 0)) {
                throw std::logic_error("character orthogonality violated");
            }
        }
    }
    if (squares != 24) {
        throw std::logic_error("irrep dimensions do not square-sum to 24");
    }
}

int permute_index(const Perm4 &sigma, int x, int m) {
    int digit[4];
    for (int j = 3; j >= 0; j--) {
        digit[j] = x % m;
        x /= m;
    }
    int out[4];
    for (int j = 0; j < 4; j++) {
        out[sigma.images[j]] = digit[j];
    }
    int y = 0;
    for (int j = 0; j < 4; j++) {
        y = y * m + out[j];
    }
    return y;
}

Eigen::MatrixXcd perm_operator(const Perm4 &sigma, int m) {
    if (m < 2) throw std::invalid_argument("perm_operator: local dimension must be at least 2");
    if (m > 8) throw std::length_error("perm_operator: local dimension above the dense budget of 8");
    int D = m * m * m * m;
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(D, D);
    for (int x = 0; x < D; x++) {
        T(permute_index(sigma, x, m), x) = 1.0;
    }
    return T;
}

Eigen::MatrixXcd irrep_projector(Irrep l, int m) {
    if (m < 2) throw std::invalid_argument("irrep_projector: local dimension must be at least 2");
    if (m > 8) throw std::length_error("irrep_projector: local dimension above the dense budget of 8");
    int D = m * m * m * m;
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(D, D);
    double w = kIrrepDim[(int)l] / 24.0;
    for (int k = 0; k < 24; k++) {
        Perm4 s = Perm4::from_index(k);
        double chi = kCharacter[(int)l][(int)s.cycle_class()];
        if (chi == 0) continue;
        for (int x = 0; x < D; x++) {
            P(permute_index(s, x, m), x) += w * chi;
        }
    }
    return P;
}

}  // namespace dcc
