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

#include "dcc/enumeration.h"

#include <map>
#include <queue>
#include <stdexcept>

#include "dcc/clifford.h"

namespace dcc {

namespace {

using cd = std::complex<double>;

int qubits_of(size_t len) {
    int n = 0;
    while ((size_t{1} << (2 * n)) < len) n++;
    if ((size_t{1} << (2 * n)) != len) throw std::invalid_argument("Pauli vector length must be 4^n");
    return n;
}

std::vector<uint8_t> tableau_key(const Tableau &t) {
    std::vector<uint8_t> key;
    for (int q = 0; q < t.num_qubits(); q++) {
        for (const PauliString *p : {&t.x_image(q), &t.z_image(q)}) {
            key.insert(key.end(), p->x.begin(), p->x.end());
            key.insert(key.end(), p->z.begin(), p->z.end());
        }
    }
    return key;
}

}  // namespace

PauliVector to_pauli_basis(const Eigen::MatrixXcd &O) {
    size_t dim = (size_t)O.rows();
    if (O.cols() != O.rows() || dim == 0 || (dim & (dim - 1))) throw std::invalid_argument("operator must be 2^n square");
    int n = 0;
    while ((size_t{1} << n) < dim) n++;
    PauliVector t(dim * dim);
    for (size_t r = 0; r < dim; r++)
        for (size_t c = 0; c < dim; c++) t[r | (c << n)] = O(r, c);
    // Row bit g holds the x label and column bit g the z label afterwards.
    for (int g = 0; g < n; g++) {
        size_t rb = size_t{1} << g, cb = size_t{1} << (g + n);
        for (size_t i = 0; i < t.size(); i++) {
            if (i & (rb | cb)) continue;
            cd b00 = t[i], b01 = t[i | cb], b10 = t[i | rb], b11 = t[i | rb | cb];
            t[i] = (b00 + b11) * 0.5;
            t[i | rb] = (b01 + b10) * 0.5;
            t[i | rb | cb] = cd(0, 0.5) * (b01 - b10);
            t[i | cb] = (b00 - b11) * 0.5;
        }
    }
    return t;
}

Eigen::MatrixXcd from_pauli_basis(const PauliVector &c) {
    int n = qubits_of(c.size());
    PauliVector t = c;
    for (int g = 0; g < n; g++) {
        size_t rb = size_t{1} << g, cb = size_t{1} << (g + n);
        for (size_t i = 0; i < t.size(); i++) {
            if (i & (rb | cb)) continue;
            cd ci = t[i], cx = t[i | rb], cy = t[i | rb | cb], cz = t[i | cb];
            t[i] = ci + cz;
            t[i | rb | cb] = ci - cz;
            t[i | cb] = cx - cd(0, 1) * cy;
            t[i | rb] = cx + cd(0, 1) * cy;
        }
    }
    size_t dim = size_t{1} << n;
    Eigen::MatrixXcd O(dim, dim);
    for (size_t r = 0; r < dim; r++)
        for (size_t col = 0; col < dim; col++) O(r, col) = t[r | (col << n)];
    return O;
}

CliffordEnumerator::CliffordEnumerator(int N) : n_(N) {
    if (N < 1 || N > 2) throw std::invalid_argument("CliffordEnumerator: N must be 1 or 2");
    // Breadth-first closure of the generators; one tableau per symplectic
    // matrix (signs are absorbed by the Pauli translations).
    std::vector<Gate> gens;
    for (int q = 0; q < N; q++) {
        gens.push_back({GateType::H, q});
        gens.push_back({GateType::S, q});
        for (int t = 0; t < N; t++)
            if (t != q) gens.push_back({GateType::CX, q, t});
    }
    std::map<std::vector<uint8_t>, bool> seen;
    std::queue<Tableau> todo;
    Tableau id(N);
    seen[tableau_key(id)] = true;
    todo.push(id);
    std::vector<Tableau> reps;
    while (!todo.empty()) {
        Tableau t = todo.front();
        todo.pop();
        reps.push_back(t);
        for (const auto &g : gens) {
            Tableau u = t;
            u.apply(g);
            auto key = tableau_key(u);
            if (seen.emplace(key, true).second) todo.push(u);
        }
    }
    size_t np = size_t{1} << (2 * N);
    for (const auto &t : reps) {
        std::vector<Image> tab(np);
        for (size_t idx = 0; idx < np; idx++) {
            PauliString p(N);
            for (int q = 0; q < N; q++) {
                p.x[q] = (idx >> q) & 1;
                p.z[q] = (idx >> (q + N)) & 1;
            }
            PauliString im = t(p);
            if (!im.is_hermitian()) throw std::logic_error("Clifford image of a Hermitian Pauli is not Hermitian");
            uint32_t out = 0;
            for (int q = 0; q < N; q++) out |= (uint32_t)im.x[q] << q | (uint32_t)im.z[q] << (q + N);
            tab[idx] = {out, (int8_t)(im.phase == 0 ? 1 : -1)};
        }
        tables_.push_back(std::move(tab));
    }
}

PauliVector CliffordEnumerator::twirl4(const PauliVector &c) const {
    const int n = 4 * n_;
    if (c.size() != (size_t{1} << (2 * n))) throw std::invalid_argument("twirl4: size mismatch");
    const uint32_t mask = (1u << n_) - 1;
    PauliVector out(c.size(), 0);
    for (size_t idx = 0; idx < c.size(); idx++) {
        if (c[idx] == cd(0)) continue;
        uint32_t xs = idx & ((1u << n) - 1), zs = (uint32_t)(idx >> n);
        // Pauli translations keep only P1 P2 P3 P4 proportional to identity.
        uint32_t xr = 0, zr = 0;
        std::array<uint32_t, 4> slot;
        for (int j = 0; j < 4; j++) {
            int sh = (3 - j) * n_;
            uint32_t x = (xs >> sh) & mask, z = (zs >> sh) & mask;
            xr ^= x;
            zr ^= z;
            slot[j] = x | (z << n_);
        }
        if (xr || zr) continue;
        for (const auto &tab : tables_) {
            uint32_t ox = 0, oz = 0;
            int sign = 1;
            for (int j = 0; j < 4; j++) {
                const Image &im = tab[slot[j]];
                int sh = (3 - j) * n_;
                ox |= (im.index & mask) << sh;
                oz |= (im.index >> n_) << sh;
                sign *= im.sign;
            }
            out[ox | ((size_t)oz << n)] += (double)sign * c[idx];
        }
    }
    double inv = 1.0 / (double)tables_.size();
    for (auto &v : out) v *= inv;
    return out;
}

PauliVector apply_gate4(const PauliVector &c, const Eigen::Matrix2cd &K, int N, int kpos) {
    const int n = 4 * N;
    if (c.size() != (size_t{1} << (2 * n))) throw std::invalid_argument("apply_gate4: size mismatch");
    if (kpos < 0 || kpos >= N) throw std::out_of_range("apply_gate4: kpos out of range");
    // Labels I, X, Y, Z; M(p', p) = tr(P' K P K^dag) / 2.
    std::array<Eigen::Matrix2cd, 4> P = {Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Zero(),
                                         Eigen::Matrix2cd::Zero(), Eigen::Matrix2cd::Zero()};
    P[1] << 0, 1, 1, 0;
    P[2] << 0, cd(0, -1), cd(0, 1), 0;
    P[3] << 1, 0, 0, -1;
    Eigen::Matrix4cd M;
    for (int a = 0; a < 4; a++)
        for (int b = 0; b < 4; b++) M(a, b) = (P[a] * K * P[b] * K.adjoint()).trace() * 0.5;
    PauliVector out = c;
    for (int j = 0; j < 4; j++) {
        int g = (3 - j) * N + kpos;
        size_t xb = size_t{1} << g, zb = size_t{1} << (g + n);
        std::array<size_t, 4> off = {0, xb, xb | zb, zb};
        for (size_t i = 0; i < out.size(); i++) {
            if (i & (xb | zb)) continue;
            Eigen::Vector4cd v;
            for (int a = 0; a < 4; a++) v[a] = out[i | off[a]];
            Eigen::Vector4cd w = M * v;
            for (int a = 0; a < 4; a++) out[i | off[a]] = w[a];
        }
    }
    return out;
}

Eigen::MatrixXcd exact_group_channel(const CliffordEnumerator &group, int k, const Eigen::Matrix2cd &K,
                                     const Eigen::MatrixXcd &O, int kpos) {
    int N = group.num_qubits();
    if (k < 0) throw std::invalid_argument("exact_group_channel: k must be >= 0");
    if (O.rows() != (Eigen::Index)(size_t{1} << (4 * N))) throw std::invalid_argument("exact_group_channel: operator size");
    PauliVector c = group.twirl4(to_pauli_basis(O));
    for (int i = 0; i < k; i++) c = group.twirl4(apply_gate4(c, K, N, kpos));
    return from_pauli_basis(c);
}

Eigen::MatrixXcd exact_group_channel(int N, int k, const Eigen::Matrix2cd &K, const Eigen::MatrixXcd &O, int kpos) {
    if (N < 1 || N > 2) throw std::invalid_argument("exact_group_channel: N must be 1 or 2");
    return exact_group_channel(CliffordEnumerator(N), k, K, O, kpos);
}

Eigen::Matrix2cd phase_gate(double theta) {
    Eigen::Matrix2cd k = Eigen::Matrix2cd::Identity();
    k(1, 1) = std::polar(1.0, theta);
    return k;
}

}  // namespace dcc
