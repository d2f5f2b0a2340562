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

#include "equivar/simulator.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace equivar {

namespace {

void check_qubit_count(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) +
                                    " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

} // namespace

StateVector::StateVector(std::size_t num_qubits) : n_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << n_, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(ComplexVector amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("from_amplitudes: length " +
                                    std::to_string(dim) +
                                    " is not a power of two >= 2");
    }
    StateVector s;
    s.n_ = static_cast<std::size_t>(std::countr_zero(dim));
    check_qubit_count(s.n_);
    s.amps_ = std::move(amplitudes);
    if (std::abs(s.norm_squared() - 1.0) > tol::kComposed) {
        throw std::invalid_argument("from_amplitudes: vector is not normalised");
    }
    return s;
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::apply(const ComplexMatrix &u,
                        std::span<const std::size_t> targets) {
    const std::size_t k = targets.size();
    if (k == 0 || k > n_) {
        throw std::invalid_argument("apply: target count " + std::to_string(k) +
                                    " invalid for " + std::to_string(n_) +
                                    " qubits");
    }
    const std::size_t local = std::size_t{1} << k;
    if (u.rows() != local || u.cols() != local) {
        throw std::invalid_argument("apply: gate dimension " +
                                    std::to_string(u.rows()) + " does not match " +
                                    std::to_string(k) + " targets");
    }
    std::size_t target_mask = 0;
    std::vector<std::size_t> bit(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (targets[j] >= n_) {
            throw std::invalid_argument("apply: target qubit " +
                                        std::to_string(targets[j]) +
                                        " out of range");
        }
        bit[j] = std::size_t{1} << (n_ - 1 - targets[j]);
        if (target_mask & bit[j]) {
            throw std::invalid_argument("apply: repeated target qubit " +
                                        std::to_string(targets[j]));
        }
        target_mask |= bit[j];
    }
    // offsets[l] is the basis offset of local index l; local bit (k-1-j)
    // corresponds to targets[j].
    std::vector<std::size_t> offsets(local, 0);
    for (std::size_t l = 0; l < local; ++l) {
        for (std::size_t j = 0; j < k; ++j) {
            if (l & (std::size_t{1} << (k - 1 - j))) {
                offsets[l] |= bit[j];
            }
        }
    }
    ComplexVector in(local);
    const auto m = u.data();
    for (std::size_t base = 0; base < amps_.size(); ++base) {
        if (base & target_mask) {
            continue;
        }
        for (std::size_t l = 0; l < local; ++l) {
            in[l] = amps_[base | offsets[l]];
        }
        for (std::size_t r = 0; r < local; ++r) {
            Complex acc{0.0, 0.0};
            const Complex *row = &m[r * local];
            for (std::size_t c = 0; c < local; ++c) {
                acc += row[c] * in[c];
            }
            amps_[base | offsets[r]] = acc;
        }
    }
}

void StateVector::apply_full(const ComplexMatrix &u) {
    if (u.rows() != amps_.size() || u.cols() != amps_.size()) {
        throw std::invalid_argument("apply_full: operator dimension " +
                                    std::to_string(u.rows()) +
                                    " does not match state dimension " +
                                    std::to_string(amps_.size()));
    }
    amps_ = u.apply(amps_);
}

StateVector init_state(std::size_t n) { return StateVector(n); }

StateVector apply_unitary(StateVector state, const ComplexMatrix &u,
                          std::span<const std::size_t> targets) {
    state.apply(u, targets);
    return state;
}

bool is_pauli_word(std::string_view word) noexcept {
    if (word.empty()) {
        return false;
    }
    for (char c : word) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            return false;
        }
    }
    return true;
}

PauliObservable::PauliObservable(std::vector<PauliTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("PauliObservable: no terms");
    }
    n_ = terms_.front().word.size();
    for (const auto &t : terms_) {
        if (!is_pauli_word(t.word)) {
            throw std::invalid_argument("PauliObservable: invalid word '" +
                                        t.word + "'");
        }
        if (t.word.size() != n_) {
            throw std::invalid_argument(
                "PauliObservable: terms have different lengths");
        }
    }
}

PauliObservable::PauliObservable(std::string_view word)
    : PauliObservable(std::vector<PauliTerm>{{1.0, std::string(word)}}) {}

double PauliObservable::coefficient_l1() const noexcept {
    double s = 0.0;
    for (const auto &t : terms_) {
        s += std::abs(t.coefficient);
    }
    return s;
}

ComplexMatrix PauliObservable::matrix() const {
    ComplexMatrix out(std::size_t{1} << n_, std::size_t{1} << n_);
    for (const auto &t : terms_) {
        out += pauli_matrix(t.word, t.coefficient);
    }
    return out;
}

double expectation(const StateVector &state, const PauliObservable &obs) {
    const std::size_t n = state.num_qubits();
    if (obs.num_qubits() != n) {
        throw std::invalid_argument("expectation: observable acts on " +
                                    std::to_string(obs.num_qubits()) +
                                    " qubits, state has " + std::to_string(n));
    }
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (const auto &term : obs.terms()) {
        std::size_t xmask = 0;
        std::size_t zmask = 0;
        int num_y = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t b = std::size_t{1} << (n - 1 - q);
            switch (term.word[q]) {
            case 'X':
                xmask |= b;
                break;
            case 'Y':
                xmask |= b;
                zmask |= b;
                ++num_y;
                break;
            case 'Z':
                zmask |= b;
                break;
            default:
                break;
            }
        }
        // P|b⟩ = i^{#Y} (−1)^{|b ∧ zmask|} |b ⊕ xmask⟩
        static constexpr Complex kIPow[4] = {
            {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        const Complex global = kIPow[num_y % 4];
        Complex acc{0.0, 0.0};
        for (std::size_t b = 0; b < amps.size(); ++b) {
            const Complex v = amps[b];
            const double sign = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
            acc += std::conj(amps[b ^ xmask]) * v * sign;
        }
        total += term.coefficient * (global * acc).real();
    }
    return total;
}

ComplexMatrix pauli_matrix(std::string_view word, double coefficient) {
    if (!is_pauli_word(word)) {
        throw std::invalid_argument("pauli_matrix: invalid Pauli word '" +
                                    std::string(word) + "'");
    }
    ComplexMatrix out{{coefficient}};
    for (char c : word) {
        switch (c) {
        case 'I':
            out = kron(out, gates::I());
            break;
        case 'X':
            out = kron(out, gates::X());
            break;
        case 'Y':
            out = kron(out, gates::Y());
            break;
        default:
            out = kron(out, gates::Z());
            break;
        }
    }
    return out;
}

namespace gates {

ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return {{0, 1}, {1, 0}}; }
ComplexMatrix Y() { return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}}; }
ComplexMatrix Z() { return {{1, 0}, {0, -1}}; }
ComplexMatrix H() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, s}, {s, -s}};
}
ComplexMatrix SWAP() {
    return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

ComplexMatrix RX(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{c, Complex{0, -s}}, {Complex{0, -s}, c}};
}

ComplexMatrix RY(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{c, -s}, {s, c}};
}

ComplexMatrix RZ(double theta) {
    return {{std::polar(1.0, -theta / 2.0), 0},
            {0, std::polar(1.0, theta / 2.0)}};
}

ComplexMatrix controlled(const ComplexMatrix &u) {
    const std::size_t d = u.rows();
    ComplexMatrix out = ComplexMatrix::identity(2 * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            out(d + r, d + c) = u(r, c);
        }
    }
    return out;
}

ComplexMatrix tensor_power(const ComplexMatrix &u, std::size_t n) {
    ComplexMatrix out{{1.0}};
    for (std::size_t i = 0; i < n; ++i) {
        out = kron(out, u);
    }
    return out;
}

} // namespace gates

std::vector<PauliTerm> pauli_decompose(const ComplexMatrix &m, double tol) {
    const std::size_t dim = m.rows();
    if (dim == 0 || !m.is_square() || (dim & (dim - 1)) != 0 ||
        dim > (std::size_t{1} << kMaxQubits)) {
        throw std::invalid_argument("pauli_decompose: expected a square 2^n matrix");
    }
    if (!is_hermitian(m, tol::kComposed)) {
        throw std::invalid_argument("pauli_decompose: matrix is not Hermitian");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    static constexpr Complex kIPow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    std::vector<PauliTerm> out;
    std::string word(n, 'I');
    const std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t code = 0; code < count; ++code) {
        std::size_t xmask = 0;
        std::size_t zmask = 0;
        int num_y = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t letter = (code >> (2 * (n - 1 - q))) & 3;
            word[q] = kLetters[letter];
            const std::size_t b = std::size_t{1} << (n - 1 - q);
            if (letter == 1 || letter == 2) {
                xmask |= b;
            }
            if (letter == 2 || letter == 3) {
                zmask |= b;
            }
            num_y += letter == 2 ? 1 : 0;
        }
        // tr(P M) = Σ_d phase(d) M[d, d ⊕ x] with P|d⟩ = phase(d) |d ⊕ x⟩.
        Complex acc{0.0, 0.0};
        for (std::size_t d = 0; d < dim; ++d) {
            const double sign = (std::popcount(d & zmask) & 1) ? -1.0 : 1.0;
            acc += sign * m(d, d ^ xmask);
        }
        const double c = (kIPow[num_y % 4] * acc).real() / static_cast<double>(dim);
        if (std::abs(c) > tol) {
            out.push_back({c, word});
        }
    }
    return out;
}

} // namespace equivar
