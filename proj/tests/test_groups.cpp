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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "equivar/groups.hpp"
#include "equivar/simulator.hpp"
#include "oracles.hpp"

using namespace equivar;
using Cycles = std::vector<std::vector<std::size_t>>;

namespace {

ComplexMatrix swap_on(std::size_t a, std::size_t b, std::size_t n) {
    return oracle::lift(gates::SWAP(), {a, b}, n);
}

Representation s6_rep() {
    return Representation::from_qubit_permutations(
        GroupPresentation{"s6", {"t", "c"}, 720}, 6,
        {{"t", Permutation::from_cycles(6, Cycles{{0, 1}})},
         {"c", Permutation::from_cycles(6, Cycles{{0, 1, 2, 3, 4, 5}})}});
}

Representation d4_rep() {
    return Representation::from_qubit_permutations(
        GroupPresentation{"d4", {"r", "F"}, 8}, 4,
        {{"r", Permutation::from_cycles(4, Cycles{{0, 1, 2, 3}})},
         {"F", Permutation::from_cycles(4, Cycles{{0, 1}, {2, 3}})}});
}

Representation c2_rep() {
    return Representation::from_qubit_permutations(
        GroupPresentation{"c2", {"Fv"}, 2}, 4,
        {{"Fv", Permutation::from_cycles(4, Cycles{{0, 1}, {2, 3}})}});
}

Representation c2c2_rep() {
    return Representation::from_qubit_permutations(
        GroupPresentation{"c2c2", {"Fv", "Fh"}, 4}, 4,
        {{"Fv", Permutation::from_cycles(4, Cycles{{0, 1}, {2, 3}})},
         {"Fh", Permutation::from_cycles(4, Cycles{{0, 2}, {1, 3}})}});
}

// Brute-force twirl for representations by basis permutations: the group is
// closed over the column maps read off the dense generator images.
ComplexMatrix brute_twirl(const Representation &rep, const ComplexMatrix &x) {
    const std::size_t d = rep.dim();
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t g = 0; g < rep.num_generators(); ++g) {
        const auto &m = rep.generator_image(g);
        std::vector<std::size_t> map(d);
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t r = 0; r < d; ++r) {
                if (std::abs(m(r, c)) > 0.5) {
                    map[c] = r;
                }
            }
        }
        gens.push_back(map);
    }
    std::vector<std::size_t> id(d);
    for (std::size_t i = 0; i < d; ++i) {
        id[i] = i;
    }
    std::set<std::vector<std::size_t>> seen{id};
    std::vector<std::vector<std::size_t>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto &e : frontier) {
            for (const auto &g : gens) {
                std::vector<std::size_t> comp(d);
                for (std::size_t i = 0; i < d; ++i) {
                    comp[i] = g[e[i]];
                }
                if (seen.insert(comp).second) {
                    next.push_back(comp);
                }
            }
        }
        frontier = std::move(next);
    }
    ComplexMatrix acc(d, d);
    for (const auto &map : seen) {
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                acc(map[a], map[b]) += x(a, b);
            }
        }
    }
    return acc * Complex{1.0 / static_cast<double>(seen.size()), 0.0};
}

} // namespace

TEST_CASE("permutation basics") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
    const auto c = Permutation::from_cycles(4, Cycles{{0, 1, 2, 3}});
    CHECK(c(0) == 1);
    CHECK(c(3) == 0);
    CHECK(c.then(c.inverse()).is_identity());
    CHECK(c.cycles() == Cycles{{0, 1, 2, 3}});
    CHECK(Permutation::identity(3).cycles().empty());
    CHECK_THROWS_AS(Permutation::from_cycles(3, Cycles{{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("permutation operators compose like the permutations") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> ia{0, 1, 2, 3, 4};
        std::vector<std::size_t> ib{0, 1, 2, 3, 4};
        std::shuffle(ia.begin(), ia.end(), rng);
        std::shuffle(ib.begin(), ib.end(), rng);
        const Permutation a(ia);
        const Permutation b(ib);
        const auto lhs = permutation_operator(a) * permutation_operator(b);
        CHECK(oracle::max_abs(lhs, permutation_operator(a.then(b))) == 0.0);
        CHECK(oracle::max_abs(swap_network_matrix(perm_to_swap_network(a), 5),
                              permutation_operator(a)) == 0.0);
    }
}

TEST_CASE("swap networks of the experiment generators") {
    const auto six = Permutation::from_cycles(6, Cycles{{0, 1, 2, 3, 4, 5}});
    CHECK(perm_to_swap_network(six) ==
          std::vector<SwapGate>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(perm_to_swap_network(Permutation::from_cycles(6, Cycles{{0, 1}})) ==
          std::vector<SwapGate>{{0, 1}});
    // SWAP01 acts first, so the operator is SWAP45 SWAP34 SWAP23 SWAP12 SWAP01.
    auto chain = swap_on(0, 1, 6);
    for (std::size_t q = 1; q < 5; ++q) {
        chain = oracle::matmul(swap_on(q, q + 1, 6), chain);
    }
    CHECK(oracle::max_abs(permutation_operator(six), chain) == 0.0);
    // D4 rotation: SWAP23 SWAP12 SWAP01; flip: SWAP01 SWAP23.
    const auto r = oracle::matmul(oracle::matmul(swap_on(2, 3, 4), swap_on(1, 2, 4)),
                                  swap_on(0, 1, 4));
    CHECK(oracle::max_abs(d4_rep().generator_image("r"), r) == 0.0);
    CHECK(oracle::max_abs(d4_rep().generator_image("F"),
                          oracle::matmul(swap_on(0, 1, 4), swap_on(2, 3, 4))) == 0.0);
    CHECK(oracle::max_abs(c2c2_rep().generator_image("Fh"),
                          oracle::matmul(swap_on(0, 2, 4), swap_on(1, 3, 4))) == 0.0);
}

TEST_CASE("group orders") {
    CHECK(enumerate_group(c2_rep(), 100).size() == 2);
    CHECK(enumerate_group(c2c2_rep(), 100).size() == 4);
    const auto d4 = enumerate_group(d4_rep(), 100);
    CHECK(d4.size() == 8);
    CHECK(d4.front().element.word.empty());
    CHECK(enumerate_group(s6_rep(), 1000, false).size() == 720);
    CHECK_THROWS_AS(enumerate_group(s6_rep(), 100, false), std::runtime_error);
    for (const auto &m : d4) {
        CHECK(oracle::max_abs(rep_matrix(d4_rep(), m.element), m.matrix) == 0.0);
    }
}

TEST_CASE("dense representations are validated") {
    const GroupPresentation c2{"c2", {"g"}, 2};
    CHECK_NOTHROW(Representation::from_unitaries(c2, {{"g", pauli_matrix("XI")}}));
    CHECK_THROWS_AS(Representation::from_unitaries(c2, {{"g", ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}}}),
                    std::invalid_argument);
    // S has order 4, not 2.
    const ComplexMatrix s{{1.0, 0.0}, {0.0, Complex{0.0, 1.0}}};
    CHECK_THROWS(Representation::from_unitaries(c2, {{"g", s}}));
    const auto rep = Representation::from_unitaries(c2, {{"g", pauli_matrix("XI")}});
    CHECK_THROWS_AS((void)rep.generator_index("h"), std::invalid_argument);
    CHECK(enumerate_group(rep, 10).size() == 2);
}

TEST_CASE("twirl of ZIII over C2 is the two-term average") {
    const auto t = twirl(c2_rep(), pauli_matrix("ZIII"));
    const auto expected = (oracle::pauli_string("ZIII") + oracle::pauli_string("IZII")) *
                          Complex{0.5, 0.0};
    CHECK(oracle::max_abs(t, expected) < 1e-15);
    CHECK(oracle::max_abs(twirl(c2_rep(), pauli_matrix("IIII")), ComplexMatrix::identity(16)) == 0.0);
    CHECK(oracle::max_abs(twirl(d4_rep(), pauli_matrix("ZZZZ")), pauli_matrix("ZZZZ")) < 1e-15);
    CHECK_THROWS_AS(twirl(c2_rep(), ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("twirl is a projection onto the commutant") {
    std::mt19937_64 rng(17);
    const std::vector<Representation> reps{c2_rep(), c2c2_rep(), d4_rep(), s6_rep()};
    for (const auto &rep : reps) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto x = oracle::random_hermitian(rep.dim(), rng);
            const auto t = twirl(rep, x);
            CHECK(oracle::max_abs(t, brute_twirl(rep, x)) < 1e-12);
            CHECK((t - t.adjoint()).frobenius_norm() < 1e-10);
            CHECK(is_invariant(rep, t).invariant);
            CHECK((twirl(rep, t) - t).frobenius_norm() < 1e-9);
        }
    }
}

TEST_CASE("dense twirl matches an explicit sum") {
    std::mt19937_64 rng(23);
    const auto rep = Representation::from_unitaries(
        GroupPresentation{"v4", {"a", "b"}, 4}, {{"a", pauli_matrix("XXI")}, {"b", pauli_matrix("IXI")}});
    const auto x = oracle::random_hermitian(8, rng);
    ComplexMatrix expected(8, 8);
    for (const auto *w : {"III", "XXI", "IXI", "XII"}) {
        const auto p = oracle::pauli_string(w);
        expected += oracle::matmul(oracle::matmul(p, x), p);
    }
    expected = expected * Complex{0.25, 0.0};
    CHECK(oracle::max_abs(twirl(rep, x), expected) < 1e-12);
}

TEST_CASE("invariance checks") {
    CHECK(is_invariant(s6_rep(), gates::tensor_power(gates::Y(), 6)).invariant);
    CHECK(is_invariant(c2_rep(), pauli_matrix("XXZZ")).invariant);
    const auto report = is_invariant(c2_rep(), pauli_matrix("XIII"));
    CHECK_FALSE(report.invariant);
    CHECK(report.per_generator.size() == 1);
    CHECK(report.max_norm > 1.0);
}
