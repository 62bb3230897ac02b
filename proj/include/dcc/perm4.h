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

#ifndef DCC_PERM4_H
#define DCC_PERM4_H

#include <array>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace dcc {

/// Conjugacy classes of S4, in the fixed order used by every table here:
/// identity, transposition, double transposition, 3-cycle, 4-cycle.
enum class CycleClass : uint8_t { E = 0, T2 = 1, T22 = 2, T3 = 3, T4 = 4 };
constexpr int kNumClasses = 5;
constexpr int kNumIrreps = 5;
constexpr std::array<int, kNumClasses> kClassSize = {1, 6, 3, 8, 6};

/// Irreps labelled by partitions [4], [31], [22], [211], [1111].
enum class Irrep : uint8_t { Sym = 0, P31 = 1, P22 = 2, P211 = 3, Sign = 4 };
constexpr std::array<int, kNumIrreps> kIrrepDim = {1, 3, 2, 3, 1};
/// kCharacter[irrep][class].
constexpr std::array<std::array<int, kNumClasses>, kNumIrreps> kCharacter = {{
    {1, 1, 1, 1, 1},
    {3, 1, -1, 0, -1},
    {2, 0, 2, -1, 0},
    {3, -1, -1, 0, 1},
    {1, -1, 1, 1, -1},
}};
const char *irrep_name(Irrep l);
const char *class_name(CycleClass c);

/// A permutation of four tensor slots, stored as 0-based images i -> images[i].
///
/// The 24 elements are numbered by the lexicographic order of their image
/// arrays; index() and from_index() are the single source of that order.
/// Composition follows (a*b)(i) = a(b(i)).
struct Perm4 {
    std::array<uint8_t, 4> images{0, 1, 2, 3};

    static Perm4 identity() { return Perm4{}; }
    static Perm4 from_index(int k);
    /// Parses 1-based cycle notation such as "(12)(34)" or "e".
    static Perm4 from_cycles(const std::string &text);

    int index() const;
    Perm4 operator*(const Perm4 &other) const;
    Perm4 inverse() const;
    CycleClass cycle_class() const;
    int num_cycles() const;
    bool operator==(const Perm4 &other) const = default;
    std::string str() const;
};

/// Precomputed group tables over the canonical indices 0..23.
struct S4Tables {
    std::array<std::array<uint8_t, 24>, 24> mul;
    std::array<uint8_t, 24> inv;
    std::array<uint8_t, 24> cls;
    std::array<uint8_t, 24> cycles;
    int identity;
};
const S4Tables &s4();

/// Verifies character orthogonality and the sum-of-squares rule.
/// Throws std::logic_error on a transcription error.
void check_character_table();

/// Dense permutation operator on four copies of an m-dimensional space.
/// Basis index: slot 0 is the most significant base-m digit. The content of
/// slot j is moved to slot sigma(j), so T_a T_b = T_{a*b}.
Eigen::MatrixXcd perm_operator(const Perm4 &sigma, int m);

/// (d_l / 24) sum_tau chi^l(tau) T_tau.
Eigen::MatrixXcd irrep_projector(Irrep l, int m);

/// Maps a basis index of the m^4 space through the slot permutation.
int permute_index(const Perm4 &sigma, int x, int m);

}  // namespace dcc

#endif
