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

#include "dcc/clifford.h"

#include <cmath>
#include <stdexcept>

namespace dcc {

namespace {

using cd = std::complex<double>;

void flip_sign(PauliString &p, bool f) {
    if (f) p.phase ^= 2;
}

void check_qubit(const PauliString &p, int q) {
    if (q < 0 || (size_t)q >= p.size()) throw std::out_of_range("gate qubit out of range");
}

Gate inverse_gate(const Gate &g) {
    Gate r = g;
    if (g.type == GateType::S) r.type = GateType::Sdg;
    else if (g.type == GateType::Sdg) r.type = GateType::S;
    else if (g.type == GateType::Phase) r.theta = -g.theta;
    return r;
}

PauliString random_pauli(int n, int lo, std::mt19937_64 &rng) {
    PauliString p(n);
    for (int q = lo; q < n; q++) {
        uint64_t v = rng();
        p.x[q] = v & 1;
        p.z[q] = (v >> 1) & 1;
    }
    return p;
}

}  // namespace

void conjugate(PauliString &p, const Gate &g) {
    int a = g.q0, b = g.q1;
    check_qubit(p, a);
    switch (g.type) {
        case GateType::H:
            flip_sign(p, p.x[a] & p.z[a]);
            std::swap(p.x[a], p.z[a]);
            return;
        case GateType::S:
            flip_sign(p, p.x[a] & p.z[a]);
            p.z[a] ^= p.x[a];
            return;
        case GateType::Sdg:
            // S^dag X S = -Y, S^dag Y S = X.
            flip_sign(p, p.x[a] & !p.z[a]);
            p.z[a] ^= p.x[a];
            return;
        case GateType::CX: {
            check_qubit(p, b);
            flip_sign(p, p.x[a] & p.z[b] & (p.x[b] ^ p.z[a] ^ 1));
            p.x[b] ^= p.x[a];
            p.z[a] ^= p.z[b];
            return;
        }
        case GateType::SWAP:
            check_qubit(p, b);
            std::swap(p.x[a], p.x[b]);
            std::swap(p.z[a], p.z[b]);
            return;
        case GateType::X: flip_sign(p, p.z[a]); return;
        case GateType::Z: flip_sign(p, p.x[a]); return;
        case GateType::Y: flip_sign(p, p.x[a] ^ p.z[a]); return;
        case GateType::Phase: break;
    }
    throw std::invalid_argument("conjugate: non-Clifford gate");
}

Tableau::Tableau(int n) : n_(n) {
    for (int q = 0; q < n; q++) {
        PauliString x(n), z(n);
        x.x[q] = 1;
        z.z[q] = 1;
        xs_.push_back(x);
        zs_.push_back(z);
    }
}

Tableau Tableau::from_circuit(int n, const Circuit &c) {
    Tableau t(n);
    for (const auto &g : c) t.apply(g);
    return t;
}

void Tableau::apply(const Gate &g) {
    for (auto &p : xs_) conjugate(p, g);
    for (auto &p : zs_) conjugate(p, g);
}

PauliString Tableau::operator()(const PauliString &p) const {
    if ((int)p.size() != n_) throw std::invalid_argument("tableau size mismatch");
    // P = i^{phase + |x&z|} prod X^x prod Z^z.
    PauliString r(n_);
    int extra = p.phase;
    for (int q = 0; q < n_; q++) {
        if (p.x[q] && p.z[q]) extra++;
        if (p.x[q]) r = r * xs_[q];
    }
    for (int q = 0; q < n_; q++)
        if (p.z[q]) r = r * zs_[q];
    r.phase = (uint8_t)((r.phase + extra) % 4);
    return r;
}

bool Tableau::is_symplectic() const {
    for (int a = 0; a < n_; a++) {
        if (!xs_[a].is_hermitian() || !zs_[a].is_hermitian()) return false;
        for (int b = 0; b < n_; b++) {
            int want = a == b ? -1 : 1;
            if (pauli_commutation_sign(xs_[a], zs_[b]) != want) return false;
            if (pauli_commutation_sign(xs_[a], xs_[b]) != 1) return false;
            if (pauli_commutation_sign(zs_[a], zs_[b]) != 1) return false;
        }
    }
    return true;
}

Circuit sample_clifford(int N, std::mt19937_64 &rng) {
    if (N < 1) throw std::invalid_argument("sample_clifford: N must be >= 1");
    // Stage i draws the images of X_i and Z_i on qubits i..N-1: a uniform
    // non-identity P and a uniform Q anticommuting with it, each with a
    // random sign. A reduction V with V P V^dag = X_i, V Q V^dag = Z_i is
    // built gate by gate, and V^dag realizes the stage.
    std::vector<Circuit> stages(N);
    for (int i = 0; i < N; i++) {
        PauliString p(N), q(N);
        do p = random_pauli(N, i, rng);
        while (p.is_identity());
        do q = random_pauli(N, i, rng);
        while (pauli_commutation_sign(p, q) != -1);
        p.phase = (rng() & 1) ? 2 : 0;
        q.phase = (rng() & 1) ? 2 : 0;

        Circuit v;
        auto push = [&](Gate g) {
            conjugate(p, g);
            conjugate(q, g);
            v.push_back(g);
        };
        for (int j = i; j < N; j++) {
            if (p.x[j] && p.z[j]) push({GateType::S, j});
            else if (p.z[j]) push({GateType::H, j});
        }
        int pivot = -1;
        for (int j = i; j < N; j++) {
            if (!p.x[j]) continue;
            if (pivot < 0) pivot = j;
            else push({GateType::CX, pivot, j});
        }
        if (pivot != i) push({GateType::SWAP, pivot, i});

        push({GateType::H, i});
        for (int j = i + 1; j < N; j++) {
            if (q.x[j] && q.z[j]) push({GateType::S, j});
            else if (q.z[j]) push({GateType::H, j});
        }
        for (int j = i + 1; j < N; j++)
            if (q.x[j]) push({GateType::CX, i, j});
        if (q.z[i]) push({GateType::S, i});
        push({GateType::H, i});
        if (p.phase == 2) push({GateType::Z, i});
        if (q.phase == 2) push({GateType::X, i});

        Circuit &r = stages[i];
        for (auto it = v.rbegin(); it != v.rend(); ++it) r.push_back(inverse_gate(*it));
    }
    // C = R_0 R_1 ... R_{N-1}: R_{N-1} acts first in time.
    Circuit out;
    for (int i = N - 1; i >= 0; i--) out.insert(out.end(), stages[i].begin(), stages[i].end());
    return out;
}

Circuit build_doped_circuit(const DopedCircuitSpec &spec, std::mt19937_64 &rng) {
    if (spec.k < 0) throw std::invalid_argument("doped circuit: k must be >= 0");
    if (spec.placement == Placement::Fixed && (spec.fixed_qubit < 0 || spec.fixed_qubit >= spec.N)) {
        throw std::invalid_argument("doped circuit: fixed qubit out of range");
    }
    Circuit c = sample_clifford(spec.N, rng);
    std::uniform_int_distribution<int> pick(0, spec.N - 1);
    for (int j = 0; j < spec.k; j++) {
        int q = spec.placement == Placement::Fixed ? spec.fixed_qubit : pick(rng);
        c.push_back({GateType::Phase, q, -1, spec.theta});
        Circuit layer = sample_clifford(spec.N, rng);
        c.insert(c.end(), layer.begin(), layer.end());
    }
    return c;
}

void apply_gate(const Gate &g, cd *amp, size_t dim) {
    const size_t ma = size_t{1} << g.q0;
    static const double r = 1 / std::sqrt(2.0);
    switch (g.type) {
        case GateType::H:
            for (size_t i = 0; i < dim; i++) {
                if (i & ma) continue;
                cd a = amp[i], b = amp[i | ma];
                amp[i] = (a + b) * r;
                amp[i | ma] = (a - b) * r;
            }
            return;
        case GateType::S:
        case GateType::Sdg:
        case GateType::Z:
        case GateType::Phase: {
            cd f = g.type == GateType::S ? cd(0, 1)
                   : g.type == GateType::Sdg ? cd(0, -1)
                   : g.type == GateType::Z ? cd(-1, 0)
                                           : std::polar(1.0, g.theta);
            for (size_t i = 0; i < dim; i++)
                if (i & ma) amp[i] *= f;
            return;
        }
        case GateType::X:
        case GateType::Y:
            for (size_t i = 0; i < dim; i++) {
                if (i & ma) continue;
                cd a = amp[i], b = amp[i | ma];
                if (g.type == GateType::X) {
                    amp[i] = b;
                    amp[i | ma] = a;
                } else {
                    amp[i] = cd(0, -1) * b;
                    amp[i | ma] = cd(0, 1) * a;
                }
            }
            return;
        case GateType::CX: {
            const size_t mb = size_t{1} << g.q1;
            for (size_t i = 0; i < dim; i++)
                if ((i & ma) && !(i & mb)) std::swap(amp[i], amp[i | mb]);
            return;
        }
        case GateType::SWAP: {
            const size_t mb = size_t{1} << g.q1;
            for (size_t i = 0; i < dim; i++)
                if ((i & ma) && !(i & mb)) std::swap(amp[i], amp[(i ^ ma) | mb]);
            return;
        }
    }
}

void apply_to_state(const Circuit &c, Eigen::VectorXcd &psi) {
    size_t dim = (size_t)psi.size();
    if (dim == 0 || (dim & (dim - 1)) != 0 || dim > (size_t{1} << 24)) {
        throw std::length_error("apply_to_state: state size must be 2^N with N <= 24");
    }
    for (const auto &g : c) {
        if ((size_t{1} << g.q0) >= dim || (g.q1 >= 0 && (size_t{1} << g.q1) >= dim)) {
            throw std::out_of_range("apply_to_state: gate qubit out of range");
        }
        apply_gate(g, psi.data(), dim);
    }
}

Eigen::MatrixXcd dense_unitary(const Circuit &c, int N) {
    if (N < 1 || N > 6) throw std::length_error("dense_unitary: N must be in [1, 6]");
    size_t dim = size_t{1} << N;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &g : c) {
        if (g.q0 >= N || g.q1 >= N) throw std::out_of_range("dense_unitary: gate qubit out of range");
        for (size_t col = 0; col < dim; col++) apply_gate(g, u.col(col).data(), dim);
    }
    return u;
}

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0, 1);
    Eigen::MatrixXcd z(dim, dim);
    for (int i = 0; i < dim; i++)
        for (int j = 0; j < dim; j++) z(i, j) = cd(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; j++) {
        cd d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace dcc
