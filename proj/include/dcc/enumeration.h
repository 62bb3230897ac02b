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

#ifndef DCC_ENUMERATION_H
#define DCC_ENUMERATION_H

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace dcc {

/// Operators on n qubits in the Hermitian Pauli basis: O = sum_P c[P] P,
/// index = x | (z << n) with Y = (1, 1).
using PauliVector = std::vector<std::complex<double>>;

PauliVector to_pauli_basis(const Eigen::MatrixXcd &O);
Eigen::MatrixXcd from_pauli_basis(const PauliVector &c);

/// Exhaustive description of the N-qubit Clifford group modulo phase as
/// symplectic representatives times Pauli translations.
class CliffordEnumerator {
   public:
    struct Image {
        uint32_t index;
        int8_t sign;
    };

    explicit CliffordEnumerator(int N);

    int num_qubits() const { return n_; }
    size_t symplectic_count() const { return tables_.size(); }
    size_t group_size() const { return tables_.size() << (2 * n_); }
    /// Conjugation image of the N-qubit Pauli with the given index.
    const std::vector<Image> &table(size_t rep) const { return tables_[rep]; }

    /// Exact average of C^{(x)4} O C^dag{(x)4} over the group, on the
    /// Pauli coefficients of a 4-copy operator (4N qubits, copy j on
    /// qubits (3 - j) N ... (3 - j) N + N - 1).
    PauliVector twirl4(const PauliVector &c) const;

   private:
    int n_;
    std::vector<std::vector<Image>> tables_;
};

/// K^{(x)4} (.) K^dag{(x)4} with K on qubit kpos of every copy.
PauliVector apply_gate4(const PauliVector &c, const Eigen::Matrix2cd &K, int N, int kpos);

/// The k-doped fourth-moment channel by literal group averaging:
/// twirl, then k times (K conjugation, twirl). N <= 2.
Eigen::MatrixXcd exact_group_channel(int N, int k, const Eigen::Matrix2cd &K, const Eigen::MatrixXcd &O, int kpos = 0);
Eigen::MatrixXcd exact_group_channel(const CliffordEnumerator &group, int k, const Eigen::Matrix2cd &K,
                                     const Eigen::MatrixXcd &O, int kpos = 0);

/// diag(1, e^{i theta}).
Eigen::Matrix2cd phase_gate(double theta);

}  // namespace dcc

#endif
