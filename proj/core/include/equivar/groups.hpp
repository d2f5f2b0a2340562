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
 * Finite groups given by generators, their unitary representations on
 * qubit registers, closure enumeration, twirling and commutant checks.
 *
 * Qubit-permutation convention: the operator P_σ attached to a permutation
 * σ of {0, …, n−1} satisfies
 *
 *     P_σ |b_0 b_1 … b_{n−1}⟩ = |b_{σ(0)} b_{σ(1)} … b_{σ(n−1)}⟩,
 *
 * i.e. output qubit j carries the state of input qubit σ(j). Under this
 * convention the 6-cycle (0 1 2 3 4 5) compiles to SWAP(0,1), SWAP(1,2),
 * …, SWAP(4,5) applied in that order.
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equivar/tensor.hpp"

namespace equivar {

/// A bijection of {0, …, n−1}; `images()[i]` is σ(i).
class Permutation {
  public:
    Permutation() = default;
    /// Throws std::invalid_argument if `images` is not a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3}}.
    static Permutation from_cycles(std::size_t n,
                                   const std::vector<std::vector<std::size_t>> &cycles);

    [[nodiscard]] std::size_t size() const noexcept { return images_.size(); }
    [[nodiscard]] std::size_t operator()(std::size_t i) const {
        return images_.at(i);
    }
    [[nodiscard]] const std::vector<std::size_t> &images() const noexcept {
        return images_;
    }
    [[nodiscard]] bool is_identity() const noexcept;
    [[nodiscard]] Permutation inverse() const;
    /// Cycles of length ≥ 2, each starting at its smallest element.
    [[nodiscard]] std::vector<std::vector<std::size_t>> cycles() const;

    /// Function composition: (a.then(b))(i) = b(a(i)).
    [[nodiscard]] Permutation then(const Permutation &b) const;

    friend auto operator<=>(const Permutation &, const Permutation &) = default;

  private:
    std::vector<std::size_t> images_;
};

struct SwapGate {
    std::size_t a;
    std::size_t b;
    friend bool operator==(const SwapGate &, const SwapGate &) = default;
};

/**
 * SWAP placements, in application order, realising P_σ. Each cycle
 * (c0 c1 … c_{m−1}) becomes SWAP(c0,c1), SWAP(c1,c2), …, SWAP(c_{m−2},c_{m−1}).
 */
std::vector<SwapGate> perm_to_swap_network(const Permutation &perm);

/// Multiplies out a SWAP network (first gate applied first) on n qubits.
ComplexMatrix swap_network_matrix(const std::vector<SwapGate> &network,
                                  std::size_t num_qubits);

/// P_σ as a dense 2^n × 2^n matrix.
ComplexMatrix permutation_operator(const Permutation &perm);

struct GroupPresentation {
    std::string name;
    std::vector<std::string> generators;
    std::optional<std::size_t> known_order;
};

/// A word in the generators; the empty word is the identity.
struct GroupElement {
    std::vector<std::string> word;
    friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

/**
 * Unitary representation W: G → U(2^n) fixed by its generator images.
 * Qubit-permutation representations keep the integer permutations so that
 * closure and twirling stay exact.
 */
class Representation {
  public:
    /// Dense generator images; each must pass unitarity_check at 1e-10.
    static Representation from_unitaries(
        GroupPresentation group, const std::map<std::string, ComplexMatrix> &images);
    /// Generators act by permuting qubits.
    static Representation from_qubit_permutations(
        GroupPresentation group, std::size_t num_qubits,
        const std::map<std::string, Permutation> &images);

    [[nodiscard]] const GroupPresentation &group() const noexcept { return group_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t num_generators() const noexcept {
        return group_.generators.size();
    }
    [[nodiscard]] bool is_permutation() const noexcept { return !perms_.empty(); }
    /// Index of a generator label; throws std::invalid_argument if unknown.
    [[nodiscard]] std::size_t generator_index(const std::string &label) const;
    [[nodiscard]] const ComplexMatrix &generator_image(std::size_t i) const {
        return images_.at(i);
    }
    [[nodiscard]] const ComplexMatrix &generator_image(const std::string &label) const {
        return images_.at(generator_index(label));
    }
    /// Only meaningful when is_permutation().
    [[nodiscard]] const Permutation &generator_permutation(std::size_t i) const {
        return perms_.at(i);
    }

  private:
    Representation() = default;
    void validate_closure() const;

    GroupPresentation group_;
    std::size_t dim_{0};
    std::vector<ComplexMatrix> images_;
    std::vector<Permutation> perms_;
};

/// Ordered product W(g_1) W(g_2) … W(g_k) of the word's generator images.
ComplexMatrix rep_matrix(const Representation &rep, const GroupElement &element);

struct GroupMember {
    GroupElement element;
    ComplexMatrix matrix;
    std::optional<Permutation> qubit_permutation;
};

/**
 * Breadth-first closure of the generators, identity first. Dense reps are
 * deduplicated by entrywise |Δ| < 1e-9, permutation reps exactly. Throws
 * std::runtime_error once more than `max_order` distinct elements appear.
 */
std::vector<GroupMember> enumerate_group(const Representation &rep,
                                         std::size_t max_order,
                                         bool materialize = true);

/// (1/|G|) Σ_g W(g) X W(g)†, summed in enumeration order.
ComplexMatrix twirl(const Representation &rep, const ComplexMatrix &x,
                    std::size_t max_order = 100000);

struct InvarianceReport {
    bool invariant{false};
    double max_norm{0.0};
    std::vector<double> per_generator;
};

/// Commutator norms of `a` against every generator image.
InvarianceReport is_invariant(const Representation &rep, const ComplexMatrix &a,
                              double tol = tol::kDedup);

} // namespace equivar
