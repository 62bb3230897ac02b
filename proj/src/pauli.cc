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

#include "dcc/pauli.h"

#include <cmath>
#include <stdexcept>

namespace dcc {

namespace {

using cd = std::complex<double>;

// Phase exponent of a*b for single-qubit letters (index x + 2z).
int letter_product_phase(int ax, int az, int bx, int bz) {
    // XY = iZ, YZ = iX, ZX = iY and the reverses give -i.
    int a = ax && az ? 2 : ax ? 1 : az ? 3 : 0;
    int b = bx && bz ? 2 : bx ? 1 : bz ? 3 : 0;
    if (a == 0 || b == 0 || a == b) return 0;
    return ((b - a + 3) % 3 == 1) ? 1 : 3;
}

}  // namespace

PauliString PauliString::from_str(const std::string &text) {
    PauliString p;
    size_t i = 0;
    if (i < text.size() && text[i] == '+') i++;
    else if (i < text.size() && text[i] == '-') {
        p.phase = 2;
        i++;
    }
    if (i < text.size() && text[i] == 'i') {
        p.phase = (uint8_t)((p.phase + 1) % 4);
        i++;
    }
    for (; i < text.size(); i++) {
        char c = text[i];
        uint8_t xb = c == 'X' || c == 'Y';
        uint8_t zb = c == 'Z' || c == 'Y';
        if (c != 'I' && c != '_' && !xb && !zb) {
            throw std::invalid_argument("bad Pauli letter in: " + text);
        }
        p.x.push_back(xb);
        p.z.push_back(zb);
    }
    return p;
}

char PauliString::letter(size_t q) const {
    static const char t[] = {'I', 'X', 'Z', 'Y'};
    return t[x[q] + 2 * z[q]];
}

bool PauliString::is_identity() const {
    for (size_t q = 0; q < size(); q++)
        if (x[q] || z[q]) return false;
    return true;
}

uint64_t PauliString::support() const {
    uint64_t m = 0;
    for (size_t q = 0; q < size(); q++)
        if (x[q] || z[q]) m |= uint64_t{1} << q;
    return m;
}

std::string PauliString::str() const {
    static const char *ph[] = {"+", "+i", "-", "-i"};
    std::string s = ph[phase];
    for (size_t q = 0; q < size(); q++) s += letter(q);
    return s;
}

PauliString PauliString::operator*(const PauliString &o) const {
    if (o.size() != size()) throw std::invalid_argument("Pauli length mismatch");
    PauliString r(size());
    int ph = phase + o.phase;
    for (size_t q = 0; q < size(); q++) {
        ph += letter_product_phase(x[q], z[q], o.x[q], o.z[q]);
        r.x[q] = x[q] ^ o.x[q];
        r.z[q] = z[q] ^ o.z[q];
    }
    r.phase = (uint8_t)(ph % 4);
    return r;
}

int pauli_commutation_sign(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) throw std::invalid_argument("Pauli length mismatch");
    int s = 0;
    for (size_t q = 0; q < a.size(); q++) s ^= (a.x[q] & b.z[q]) ^ (a.z[q] & b.x[q]);
    return s ? -1 : 1;
}

Eigen::Matrix2cd pauli_matrix(int label) {
    Eigen::Matrix2cd m;
    switch (label) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, cd(0, -1), cd(0, 1), 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("Pauli label must be 0..3");
    }
    return m;
}

Eigen::MatrixXcd PauliString::dense() const {
    size_t n = size();
    size_t d = size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    static const cd iph[] = {1, cd(0, 1), -1, cd(0, -1)};
    for (size_t col = 0; col < d; col++) {
        size_t row = col;
        cd amp = iph[phase];
        for (size_t q = 0; q < n; q++) {
            int bit = (col >> q) & 1;
            if (x[q]) row ^= size_t{1} << q;
            if (x[q] && z[q]) amp *= bit ? cd(0, -1) : cd(0, 1);
            else if (z[q] && bit) amp = -amp;
        }
        m(row, col) = amp;
    }
    return m;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

Eigen::MatrixXcd fourth_power(const Eigen::MatrixXcd &p) {
    Eigen::MatrixXcd p2 = kron(p, p);
    return kron(p2, p2);
}

}  // namespace

const Eigen::MatrixXcd &q2_dense() {
    static const Eigen::MatrixXcd q = [] {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(16, 16);
        for (int l = 0; l < 4; l++) acc += fourth_power(pauli_matrix(l));
        return Eigen::MatrixXcd(acc / 4.0);
    }();
    return q;
}

Eigen::MatrixXcd q_dense(int N) {
    if (N < 1 || N > 2) throw std::length_error("q_dense: N must be 1 or 2");
    int d = 1 << N;
    int D = d * d * d * d;
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(D, D);
    for (int code = 0; code < (1 << (2 * N)); code++) {
        PauliString p(N);
        for (int q = 0; q < N; q++) {
            int l = (code >> (2 * q)) & 3;
            p.x[q] = l == 1 || l == 2;
            p.z[q] = l == 2 || l == 3;
        }
        acc += fourth_power(p.dense());
    }
    return acc / double(d * d);
}

mpq_class trace_q_T(const Perm4 &sigma, int N) {
    if (N < 1) throw std::invalid_argument("trace_q_T: N must be positive");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), kQTable[(int)sigma.cycle_class()], N);
    return mpq_class(r);
}

double trace_psi4_Q_product(const std::vector<std::array<double, 3>> &bloch) {
    double r = 1;
    for (const auto &b : bloch) {
        r *= (1 + std::pow(b[0], 4) + std::pow(b[1], 4) + std::pow(b[2], 4)) / 4;
    }
    return r;
}

mpq_class trace_psi4_Q_zero(int N) { return 1 / dimension_of(N); }

double trace_psi4_Q_dense(const Eigen::VectorXcd &psi) {
    int d = (int)psi.size();
    int N = 0;
    while ((1 << N) < d) N++;
    if ((1 << N) != d || N > 6 || N < 1) throw std::length_error("trace_psi4_Q_dense: need 2^N amplitudes, N <= 6");
    if (std::abs(psi.norm() - 1) > 1e-10) throw std::invalid_argument("trace_psi4_Q_dense: state is not normalized");
    double acc = 0;
    for (int code = 0; code < (1 << (2 * N)); code++) {
        // <P> for P with x-mask xm and z-mask zm, Y letters included.
        int xm = 0, zm = 0, ny = 0;
        for (int q = 0; q < N; q++) {
            int l = (code >> (2 * q)) & 3;
            if (l == 1 || l == 2) xm |= 1 << q;
            if (l == 2 || l == 3) zm |= 1 << q;
            ny += l == 2;
        }
        cd e = 0;
        for (int col = 0; col < d; col++) {
            int row = col ^ xm;
            // P|col> = i^ny (-1)^{popcount(col & zm)} |row>, using Y = iXZ.
            double s = (__builtin_popcount(col & zm) & 1) ? -1 : 1;
            e += std::conj(psi[row]) * s * psi[col];
        }
        static const cd iph[] = {1, cd(0, 1), -1, cd(0, -1)};
        e *= iph[ny % 4];
        acc += std::pow(e.real(), 4);
    }
    return acc / double(d) / double(d);
}

std::vector<std::array<double, 3>> random_product_bloch(int N, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0, 1);
    std::vector<std::array<double, 3>> out(N);
    for (auto &b : out) {
        double n = 0;
        do {
            b = {g(rng), g(rng), g(rng)};
            n = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
        } while (n < 1e-12);
        for (auto &v : b) v /= n;
    }
    return out;
}

Eigen::VectorXcd product_state(const std::vector<std::array<double, 3>> &bloch) {
    Eigen::VectorXcd psi(1);
    psi[0] = 1;
    for (size_t q = 0; q < bloch.size(); q++) {
        const auto &b = bloch[q];
        double theta = std::acos(std::max(-1.0, std::min(1.0, b[2])));
        double phi = std::atan2(b[1], b[0]);
        cd a0 = std::cos(theta / 2);
        cd a1 = std::polar(std::sin(theta / 2), phi);
        Eigen::VectorXcd next(psi.size() * 2);
        // Qubit q is bit q, so the new qubit is the most significant so far.
        next.head(psi.size()) = a0 * psi;
        next.tail(psi.size()) = a1 * psi;
        psi = next;
    }
    return psi;
}

}  // namespace dcc
