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
 * Circuit description and evaluation: data embedding, an optional
 * parameterised gate sequence, a fixed invariant unitary and a Pauli
 * observable. The estimate is the exact expectation value
 *
 *     h(θ, x) = ⟨ψ(θ, x)| O |ψ(θ, x)⟩,
 *     ψ(θ, x) = U_inv · U_gates(θ) · E_θ(x) |0…0⟩.
 *
 * Rotation convention: RY(θ) = exp(−iθY/2), RZ(θ) = exp(−iθZ/2),
 * RX(θ) = exp(−iθX/2), CRY(θ) = controlled RY(θ). Generator gates use
 * exp(+iφH).
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "equivar/data.hpp"
#include "equivar/groups.hpp"
#include "equivar/simulator.hpp"
#include "equivar/tensor.hpp"

namespace equivar {

enum class EmbeddingKind {
    ProductRY,            ///< ⊗_i RY(θ_i + x_i)
    RzRy2Feature,         ///< RZ(θ_{i+n} + x_{(i+1) mod 2}) RY(θ_i + x_{i mod 2}) on qubit i
    GraphCRY,             ///< CRY(θ_i) i→j per edge, RY(θ_i) per self-loop
    Amplitude,            ///< x/‖x‖ on the data qubits, remaining qubits |0⟩
    AmplitudeThenUnitary, ///< Amplitude followed by a layered ansatz U_θ
};

const char *to_string(EmbeddingKind kind) noexcept;

struct EmbeddingArch {
    EmbeddingKind variant{EmbeddingKind::ProductRY};
    std::size_t num_qubits{0};
    std::size_t num_params{0};
    std::size_t data_qubits{0}; ///< amplitude variants only
    std::size_t layers{0};      ///< AmplitudeThenUnitary only

    static EmbeddingArch product_ry(std::size_t n);
    static EmbeddingArch rzry_2feature(std::size_t n);
    static EmbeddingArch graph_cry(std::size_t nodes);
    static EmbeddingArch amplitude(std::size_t data_qubits, std::size_t num_qubits);
    static EmbeddingArch amplitude_then_unitary(std::size_t num_qubits,
                                                std::size_t layers);
};

/// Parameter count of the layered ansatz used by AmplitudeThenUnitary.
std::size_t layered_ansatz_params(std::size_t num_qubits, std::size_t layers);

/**
 * One gate of the post-embedding sequence. Angles are θ[param_slot] plus
 * x[data_slot] when a data slot is set; a gate without a parameter slot is
 * fixed.
 */
struct GateSpec {
    enum class Kind { Fixed, Rotation, ControlledRotation, GeneratorExp };

    Kind kind{Kind::Fixed};
    std::vector<std::size_t> targets;
    char axis{'Y'};
    std::optional<std::size_t> param_slot;
    std::optional<std::size_t> data_slot;
    double offset{0.0};             ///< added to the angle
    ComplexMatrix matrix;           ///< Fixed: the unitary; GeneratorExp: H
    std::shared_ptr<const EigenDecomposition> eigen; ///< GeneratorExp cache
    bool must_be_invariant{false};  ///< checked by make_circuit

    static GateSpec fixed(ComplexMatrix u, std::vector<std::size_t> targets,
                          bool must_be_invariant = false);
    static GateSpec rotation(char axis, std::size_t target,
                             std::optional<std::size_t> param_slot,
                             double offset = 0.0, bool must_be_invariant = false);
    static GateSpec controlled_rotation(char axis, std::size_t control,
                                        std::size_t target, std::size_t param_slot);
    /// exp(i·θ[slot]·H); H must be Hermitian.
    static GateSpec generator_exp(ComplexMatrix h, std::vector<std::size_t> targets,
                                  std::size_t param_slot,
                                  bool must_be_invariant = true);

    [[nodiscard]] ComplexMatrix unitary(std::span<const double> theta,
                                        std::span<const double> x = {}) const;
};

/// Lifts an operator on `targets` to the full n-qubit register.
ComplexMatrix lift_operator(const ComplexMatrix &op,
                            std::span<const std::size_t> targets,
                            std::size_t num_qubits);

/**
 * Full circuit. Parameter layout: embedding parameters first, then the
 * slots referenced by `gates`. Build through make_circuit so the
 * invariance preconditions are enforced.
 */
struct CircuitSpec {
    std::size_t num_qubits{0};
    EmbeddingArch embedding;
    std::vector<GateSpec> gates;
    std::optional<ComplexMatrix> invariant_unitary;
    PauliObservable observable;
    std::size_t num_params{0};
};

/**
 * Validates shapes and checks that the invariant unitary, the observable
 * and every gate marked must_be_invariant commute with each generator of
 * `w` to within `tol`. Throws std::invalid_argument otherwise.
 */
CircuitSpec make_circuit(std::size_t num_qubits, EmbeddingArch embedding,
                         std::vector<GateSpec> gates,
                         std::optional<ComplexMatrix> invariant_unitary,
                         PauliObservable observable, const Representation &w,
                         double tol = tol::kDedup);

/// E_θ(x)|0…0⟩ for the given architecture.
StateVector embed(const EmbeddingArch &arch, std::span<const double> theta,
                  const DataPoint &x);

/// x as raw (unnormalised) amplitudes; linear in x, zero maps to zero.
ComplexVector unnormalized_embed_vector(std::span<const double> x);

/// Final state U_inv · U_gates · E_θ(x)|0…0⟩.
StateVector prepare_state(const CircuitSpec &spec, std::span<const double> theta,
                          const DataPoint &x);

/// h(θ, x); deterministic.
double estimate(const CircuitSpec &spec, std::span<const double> theta,
                const DataPoint &x);

/// Representation of C2 × C2 on the three-qubit line-classifier register:
/// "rot" ↦ X⊗X⊗I, "flip" ↦ I⊗X⊗I.
Representation line_classifier_rep();

enum class LineLayout {
    SharedPhi,       ///< exp(iφH₁) exp(iφH₂), one parameter
    ReadoutRotation, ///< RX(ψ) on the readout, then exp(iφH₁) exp(−iφH₂)
};

/**
 * Three-qubit line classifier: amplitude embedding on qubits 0–1, readout
 * qubit 2, generators H₁ = IIZ + IXX and H₂ = IIZ + XIX sharing φ, Z
 * measured on the readout. ReadoutRotation prepends RX(ψ) on qubit 2,
 * applies the second exponential with angle −φ and orders the parameters
 * (ψ, φ).
 */
CircuitSpec line_classifier_circuit(LineLayout layout = LineLayout::ReadoutRotation);

} // namespace equivar
