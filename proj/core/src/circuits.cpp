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

#include "equivar/circuits.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace equivar {

namespace {

ComplexMatrix axis_rotation(char axis, double angle) {
    switch (axis) {
    case 'X':
        return gates::RX(angle);
    case 'Y':
        return gates::RY(angle);
    case 'Z':
        return gates::RZ(angle);
    default:
        throw std::invalid_argument(std::string("unknown rotation axis '") +
                                    axis + "'");
    }
}

void check_theta(std::span<const double> theta, std::size_t expected,
                 const char *what) {
    if (theta.size() != expected) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(expected) +
                                    " parameters, got " +
                                    std::to_string(theta.size()));
    }
}

StateVector amplitude_state(std::span<const double> x, std::size_t data_qubits,
                            std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << data_qubits;
    if (x.size() != dim) {
        throw std::invalid_argument("amplitude embedding: data has length " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(dim));
    }
    double norm2 = 0.0;
    for (double v : x) {
        norm2 += v * v;
    }
    if (!(norm2 > 0.0)) {
        throw std::invalid_argument("amplitude embedding: zero vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    ComplexVector amps(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    const std::size_t shift = num_qubits - data_qubits;
    for (std::size_t k = 0; k < dim; ++k) {
        amps[k << shift] = x[k] * inv;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

void apply_layered_ansatz(StateVector &state, std::span<const double> theta,
                          std::size_t layers) {
    const std::size_t n = state.num_qubits();
    std::size_t slot = 0;
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t q = 0; q < n; ++q) {
            state.apply(gates::RY(theta[slot++]), {q});
        }
        for (std::size_t q = 0; q < n; ++q) {
            state.apply(gates::RZ(theta[slot++]), {q});
        }
        if (n >= 2) {
            for (std::size_t q = 0; q < n; ++q) {
                state.apply(gates::controlled(gates::RY(theta[slot++])),
                            {q, (q + 1) % n});
            }
        }
    }
}

} // namespace

const char *to_string(EmbeddingKind kind) noexcept {
    switch (kind) {
    case EmbeddingKind::ProductRY:
        return "PRODUCT_RY";
    case EmbeddingKind::RzRy2Feature:
        return "RZRY_2FEATURE";
    case EmbeddingKind::GraphCRY:
        return "GRAPH_CRY";
    case EmbeddingKind::Amplitude:
        return "AMPLITUDE";
    case EmbeddingKind::AmplitudeThenUnitary:
        return "AMPLITUDE_THEN_UNITARY";
    }
    return "?";
}

EmbeddingArch EmbeddingArch::product_ry(std::size_t n) {
    return {EmbeddingKind::ProductRY, n, n, 0, 0};
}

EmbeddingArch EmbeddingArch::rzry_2feature(std::size_t n) {
    return {EmbeddingKind::RzRy2Feature, n, 2 * n, 0, 0};
}

EmbeddingArch EmbeddingArch::graph_cry(std::size_t nodes) {
    return {EmbeddingKind::GraphCRY, nodes, nodes, 0, 0};
}

EmbeddingArch EmbeddingArch::amplitude(std::size_t data_qubits,
                                       std::size_t num_qubits) {
    if (data_qubits == 0 || data_qubits > num_qubits) {
        throw std::invalid_argument("amplitude embedding: bad data qubit count");
    }
    return {EmbeddingKind::Amplitude, num_qubits, 0, data_qubits, 0};
}

EmbeddingArch EmbeddingArch::amplitude_then_unitary(std::size_t num_qubits,
                                                    std::size_t layers) {
    return {EmbeddingKind::AmplitudeThenUnitary, num_qubits,
            layered_ansatz_params(num_qubits, layers), num_qubits, layers};
}

std::size_t layered_ansatz_params(std::size_t num_qubits, std::size_t layers) {
    const std::size_t entanglers = num_qubits >= 2 ? num_qubits : 0;
    return layers * (2 * num_qubits + entanglers);
}

GateSpec GateSpec::fixed(ComplexMatrix u, std::vector<std::size_t> targets,
                         bool must_be_invariant) {
    if (u.rows() != (std::size_t{1} << targets.size()) || !unitarity_check(u)) {
        throw std::invalid_argument("GateSpec::fixed: not a unitary on " +
                                    std::to_string(targets.size()) + " qubits");
    }
    GateSpec g;
    g.kind = Kind::Fixed;
    g.targets = std::move(targets);
    g.matrix = std::move(u);
    g.must_be_invariant = must_be_invariant;
    return g;
}

GateSpec GateSpec::rotation(char axis, std::size_t target,
                            std::optional<std::size_t> param_slot, double offset,
                            bool must_be_invariant) {
    axis_rotation(axis, 0.0);
    GateSpec g;
    g.kind = Kind::Rotation;
    g.targets = {target};
    g.axis = axis;
    g.param_slot = param_slot;
    g.offset = offset;
    g.must_be_invariant = must_be_invariant;
    return g;
}

GateSpec GateSpec::controlled_rotation(char axis, std::size_t control,
                                       std::size_t target, std::size_t param_slot) {
    axis_rotation(axis, 0.0);
    GateSpec g;
    g.kind = Kind::ControlledRotation;
    g.targets = {control, target};
    g.axis = axis;
    g.param_slot = param_slot;
    return g;
}

GateSpec GateSpec::generator_exp(ComplexMatrix h, std::vector<std::size_t> targets,
                                 std::size_t param_slot, bool must_be_invariant) {
    if (h.rows() != (std::size_t{1} << targets.size()) ||
        !is_hermitian(h, tol::kComposed)) {
        throw std::invalid_argument(
            "GateSpec::generator_exp: generator must be Hermitian on " +
            std::to_string(targets.size()) + " qubits");
    }
    GateSpec g;
    g.kind = Kind::GeneratorExp;
    g.targets = std::move(targets);
    g.param_slot = param_slot;
    g.eigen = std::make_shared<const EigenDecomposition>(hermitian_eigen(h));
    g.matrix = std::move(h);
    g.must_be_invariant = must_be_invariant;
    return g;
}

ComplexMatrix GateSpec::unitary(std::span<const double> theta,
                                std::span<const double> x) const {
    double angle = offset;
    if (param_slot) {
        angle += theta[*param_slot];
    }
    if (data_slot) {
        angle += x[*data_slot];
    }
    switch (kind) {
    case Kind::Fixed:
        return matrix;
    case Kind::Rotation:
        return axis_rotation(axis, angle);
    case Kind::ControlledRotation:
        return gates::controlled(axis_rotation(axis, angle));
    case Kind::GeneratorExp:
        return expm_from_eigen(*eigen, angle);
    }
    throw std::logic_error("GateSpec::unitary: unhandled kind");
}

ComplexMatrix lift_operator(const ComplexMatrix &op,
                            std::span<const std::size_t> targets,
                            std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    ComplexMatrix out(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        ComplexVector basis(dim, Complex{0.0, 0.0});
        basis[b] = 1.0;
        StateVector column = StateVector::from_amplitudes(std::move(basis));
        column.apply(op, targets);
        for (std::size_t r = 0; r < dim; ++r) {
            out(r, b) = column[r];
        }
    }
    return out;
}

CircuitSpec make_circuit(std::size_t num_qubits, EmbeddingArch embedding,
                         std::vector<GateSpec> gate_list,
                         std::optional<ComplexMatrix> invariant_unitary,
                         PauliObservable observable, const Representation &w,
                         double tol) {
    if (embedding.num_qubits != num_qubits) {
        throw std::invalid_argument("make_circuit: embedding acts on " +
                                    std::to_string(embedding.num_qubits) +
                                    " qubits, circuit has " +
                                    std::to_string(num_qubits));
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (w.dim() != dim) {
        throw std::invalid_argument(
            "make_circuit: representation dimension does not match register");
    }
    if (observable.num_qubits() != num_qubits) {
        throw std::invalid_argument("make_circuit: observable length mismatch");
    }
    CircuitSpec spec;
    spec.num_qubits = num_qubits;
    spec.num_params = embedding.num_params;
    for (const auto &g : gate_list) {
        for (auto t : g.targets) {
            if (t >= num_qubits) {
                throw std::invalid_argument("make_circuit: gate target out of range");
            }
        }
        if (g.param_slot) {
            if (*g.param_slot < embedding.num_params) {
                throw std::invalid_argument(
                    "make_circuit: gate parameter slot overlaps the embedding");
            }
            spec.num_params = std::max(spec.num_params, *g.param_slot + 1);
        }
        if (g.data_slot) {
            throw std::invalid_argument(
                "make_circuit: data slots belong to the embedding");
        }
    }
    for (std::size_t i = 0; i < gate_list.size(); ++i) {
        const auto &g = gate_list[i];
        if (!g.must_be_invariant) {
            continue;
        }
        const ComplexMatrix probe = g.kind == GateSpec::Kind::Fixed ||
                                            g.kind == GateSpec::Kind::GeneratorExp
                                        ? g.matrix
                                        : pauli_matrix(std::string(1, g.axis));
        const auto report = is_invariant(w, lift_operator(probe, g.targets, num_qubits), tol);
        if (!report.invariant) {
            throw std::invalid_argument("make_circuit: gate " + std::to_string(i) +
                                        " is not G-invariant (max commutator " +
                                        std::to_string(report.max_norm) + ")");
        }
    }
    if (invariant_unitary) {
        if (invariant_unitary->rows() != dim || !unitarity_check(*invariant_unitary)) {
            throw std::invalid_argument(
                "make_circuit: invariant unitary has wrong size or is not unitary");
        }
        const auto report = is_invariant(w, *invariant_unitary, tol);
        if (!report.invariant) {
            throw std::invalid_argument(
                "make_circuit: invariant unitary fails the commutant check (" +
                std::to_string(report.max_norm) + ")");
        }
    }
    const auto obs_report = is_invariant(w, observable.matrix(), tol);
    if (!obs_report.invariant) {
        throw std::invalid_argument(
            "make_circuit: observable fails the commutant check (" +
            std::to_string(obs_report.max_norm) + ")");
    }
    spec.embedding = embedding;
    spec.gates = std::move(gate_list);
    spec.invariant_unitary = std::move(invariant_unitary);
    spec.observable = std::move(observable);
    return spec;
}

StateVector embed(const EmbeddingArch &arch, std::span<const double> theta,
                  const DataPoint &x) {
    check_theta(theta, arch.num_params, "embed");
    const std::size_t n = arch.num_qubits;
    switch (arch.variant) {
    case EmbeddingKind::ProductRY: {
        const auto &v = features(x);
        if (v.size() != n) {
            throw std::invalid_argument("PRODUCT_RY: data length " +
                                        std::to_string(v.size()) + ", expected " +
                                        std::to_string(n));
        }
        StateVector s(n);
        for (std::size_t q = 0; q < n; ++q) {
            s.apply(gates::RY(theta[q] + v[q]), {q});
        }
        return s;
    }
    case EmbeddingKind::RzRy2Feature: {
        const auto &v = features(x);
        if (v.size() != 2) {
            throw std::invalid_argument("RZRY_2FEATURE: data must be 2-dimensional");
        }
        StateVector s(n);
        for (std::size_t q = 0; q < n; ++q) {
            s.apply(gates::RY(theta[q] + v[q % 2]), {q});
            s.apply(gates::RZ(theta[q + n] + v[(q + 1) % 2]), {q});
        }
        return s;
    }
    case EmbeddingKind::GraphCRY: {
        const auto &g = graph(x);
        if (g.num_nodes() != n) {
            throw std::invalid_argument("GRAPH_CRY: graph has " +
                                        std::to_string(g.num_nodes()) +
                                        " nodes, expected " + std::to_string(n));
        }
        StateVector s(n);
        for (const auto &[i, j] : g.edges()) {
            if (i == j) {
                s.apply(gates::RY(theta[i]), {i});
            } else {
                s.apply(gates::controlled(gates::RY(theta[i])), {i, j});
            }
        }
        return s;
    }
    case EmbeddingKind::Amplitude:
        return amplitude_state(features(x), arch.data_qubits, n);
    case EmbeddingKind::AmplitudeThenUnitary: {
        StateVector s = amplitude_state(features(x), arch.data_qubits, n);
        apply_layered_ansatz(s, theta, arch.layers);
        return s;
    }
    }
    throw std::logic_error("embed: unhandled embedding kind");
}

ComplexVector unnormalized_embed_vector(std::span<const double> x) {
    ComplexVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i];
    }
    return out;
}

StateVector prepare_state(const CircuitSpec &spec, std::span<const double> theta,
                          const DataPoint &x) {
    check_theta(theta, spec.num_params, "estimate");
    StateVector s = embed(spec.embedding, theta.first(spec.embedding.num_params), x);
    for (const auto &g : spec.gates) {
        s.apply(g.unitary(theta), g.targets);
    }
    if (spec.invariant_unitary) {
        s.apply_full(*spec.invariant_unitary);
    }
    return s;
}

double estimate(const CircuitSpec &spec, std::span<const double> theta,
                const DataPoint &x) {
    return expectation(prepare_state(spec, theta, x), spec.observable);
}

Representation line_classifier_rep() {
    return Representation::from_unitaries(
        GroupPresentation{"line2x2", {"rot", "flip"}, 4},
        {{"rot", pauli_matrix("XXI")}, {"flip", pauli_matrix("IXI")}});
}

CircuitSpec line_classifier_circuit(LineLayout layout) {
    const std::vector<std::size_t> all{0, 1, 2};
    const ComplexMatrix h1 = pauli_matrix("IIZ") + pauli_matrix("IXX");
    const ComplexMatrix h2 = pauli_matrix("IIZ") + pauli_matrix("XIX");
    std::vector<GateSpec> gate_list;
    std::size_t phi_slot = 0;
    if (layout == LineLayout::ReadoutRotation) {
        gate_list.push_back(GateSpec::rotation('X', 2, 0, 0.0, true));
        phi_slot = 1;
    }
    gate_list.push_back(GateSpec::generator_exp(h1, all, phi_slot));
    // The readout layout runs the second exponential backwards, exp(−iφH₂);
    // with both angles equal the two label classes are not separable.
    gate_list.push_back(GateSpec::generator_exp(
        layout == LineLayout::ReadoutRotation ? -1.0 * h2 : h2, all, phi_slot));
    return make_circuit(3, EmbeddingArch::amplitude(2, 3), std::move(gate_list),
                        std::nullopt, PauliObservable("IIZ"), line_classifier_rep());
}

} // namespace equivar
