// Copyright 2026 The equivar Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exact statevector simulation on up to eight qubits.
 *
 * Basis ordering: qubit 0 is the most significant bit of the basis index,
 * so `X ⊗ I ⊗ I` acts on qubit 0. Gate target lists follow the same rule:
 * the first target is the most significant bit of the gate's local index.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equivar/tensor.hpp"

namespace equivar {

inline constexpr std::size_t kMaxQubits = 8;

class StateVector {
  public:
    /// |0…0⟩ on n qubits; throws for n outside [1, 8].
    explicit StateVector(std::size_t num_qubits);

    /// Takes ownership of amplitudes; length must be 2^n and the vector
    /// must be normalised to within 1e-10.
    static StateVector from_amplitudes(ComplexVector amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const noexcept {
        return amps_[i];
    }

    [[nodiscard]] double norm_squared() const noexcept;

    /// In-place application of u on the ordered targets.
    void apply(const ComplexMatrix &u, std::span<const std::size_t> targets);
    void apply(const ComplexMatrix &u, std::initializer_list<std::size_t> t) {
        apply(u, std::span<const std::size_t>(t.begin(), t.size()));
    }
    /// Full-register operator (dimension 2^n).
    void apply_full(const ComplexMatrix &u);

  private:
    StateVector() = default;
    std::size_t n_{0};
    ComplexVector amps_;
};

StateVector init_state(std::size_t n);

/// Value-returning form of StateVector::apply.
StateVector apply_unitary(StateVector state, const ComplexMatrix &u,
                          std::span<const std::size_t> targets);

struct PauliTerm {
    double coefficient{1.0};
    std::string word; ///< letters from {I, X, Y, Z}; position k acts on qubit k
};

/**
 * Real linear combination of Pauli strings, Hermitian by construction.
 * All terms share one length.
 */
class PauliObservable {
  public:
    PauliObservable() = default;
    explicit PauliObservable(std::vector<PauliTerm> terms);
    /// Single term with unit coefficient.
    explicit PauliObservable(std::string_view word);

    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
    [[nodiscard]] double coefficient_l1() const noexcept;
    [[nodiscard]] ComplexMatrix matrix() const;

  private:
    std::vector<PauliTerm> terms_;
    std::size_t n_{0};
};

/// ⟨ψ|O|ψ⟩ evaluated term by term with bit masks.
double expectation(const StateVector &state, const PauliObservable &obs);

/// coefficient · P_0 ⊗ P_1 ⊗ …; throws on letters outside {I, X, Y, Z}.
ComplexMatrix pauli_matrix(std::string_view word, double coefficient = 1.0);

/// True iff every letter is one of I, X, Y, Z and the word is non-empty.
bool is_pauli_word(std::string_view word) noexcept;

/**
 * Expansion of a Hermitian matrix in Pauli strings, M = Σ c_P P with
 * c_P = tr(P M) / 2ⁿ. Terms with |c_P| ≤ tol are dropped; words are listed
 * in I < X < Y < Z lexicographic order.
 */
std::vector<PauliTerm> pauli_decompose(const ComplexMatrix &m, double tol = 1e-12);

namespace gates {

ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
ComplexMatrix H();
ComplexMatrix SWAP();

/// exp(−iθX/2)
ComplexMatrix RX(double theta);
/// exp(−iθY/2)
ComplexMatrix RY(double theta);
/// exp(−iθZ/2)
ComplexMatrix RZ(double theta);
/// |0⟩⟨0| ⊗ I + |1⟩⟨1| ⊗ u, control is the first target.
ComplexMatrix controlled(const ComplexMatrix &u);

/// u applied to every one of n qubits: u^{⊗n}.
ComplexMatrix tensor_power(const ComplexMatrix &u, std::size_t n);

} // namespace gates

} // namespace equivar
