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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "equivar/simulator.hpp"
#include "equivar/tensor.hpp"
#include "oracles.hpp"

using namespace equivar;

TEST_CASE("matrix basics") {
    const ComplexMatrix a{{1.0, Complex{0.0, 2.0}}, {3.0, 4.0}};
    CHECK(a.rows() == 2);
    CHECK(a(0, 1) == Complex{0.0, 2.0});
    CHECK(a.trace() == Complex{5.0, 0.0});
    CHECK(a.adjoint()(1, 0) == Complex{0.0, -2.0});
    CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(30.0)));
    CHECK(ComplexMatrix::identity(3).trace() == Complex{3.0, 0.0});
    CHECK(a * ComplexMatrix::identity(2) == a);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), std::invalid_argument);
}

TEST_CASE("kron matches the explicit block formula") {
    std::mt19937_64 rng(11);
    const auto a = oracle::random_hermitian(2, rng);
    const auto b = oracle::random_hermitian(4, rng);
    CHECK(oracle::max_abs(kron(a, b), oracle::kron2(a, b)) == 0.0);
    CHECK(kron(oracle::pauli('X'), oracle::pauli('Z')) == oracle::pauli_string("XZ"));
}

TEST_CASE("commutator norm and predicates") {
    // [X, Z] = −2iY, Frobenius norm 2√2.
    CHECK(commutator_norm(oracle::pauli('X'), oracle::pauli('Z')) ==
          doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(commutator_norm(oracle::pauli('X'), oracle::pauli('X')) == 0.0);
    CHECK(unitarity_check(gates::H()));
    CHECK_FALSE(unitarity_check(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}));
    CHECK(is_hermitian(oracle::pauli('Y')));
    CHECK_FALSE(is_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}));
}

TEST_CASE("hermitian_eigen reconstructs random matrices") {
    std::mt19937_64 rng(5);
    for (std::size_t dim : {1u, 2u, 3u, 8u, 16u}) {
        const auto h = oracle::random_hermitian(dim, rng);
        const auto eig = hermitian_eigen(h);
        REQUIRE(eig.values.size() == dim);
        for (std::size_t i = 1; i < dim; ++i) {
            CHECK(eig.values[i - 1] <= eig.values[i]);
        }
        CHECK(unitarity_check(eig.vectors, 1e-10));
        ComplexMatrix d(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            d(i, i) = eig.values[i];
        }
        const auto rebuilt =
            oracle::matmul(oracle::matmul(eig.vectors, d), eig.vectors.adjoint());
        CHECK(oracle::max_abs(rebuilt, h) < 1e-10);
    }
    const auto px = hermitian_eigen(oracle::pauli('X'));
    CHECK(px.values[0] == doctest::Approx(-1.0));
    CHECK(px.values[1] == doctest::Approx(1.0));
}

TEST_CASE("herm_expm against closed form and power series") {
    // H = IIZ + IXX squares to 2I, so exp(iφH) = cos(√2φ) I + i sin(√2φ)/√2 H.
    const auto h = oracle::pauli_string("IIZ") + oracle::pauli_string("IXX");
    for (double phi : {0.0, 0.3, -1.1, 2.5}) {
        const double r = std::sqrt(2.0);
        ComplexMatrix closed = ComplexMatrix::identity(8) * Complex{std::cos(r * phi), 0.0};
        closed += h * Complex{0.0, std::sin(r * phi) / r};
        CHECK(oracle::max_abs(herm_expm(h, phi), closed) < 1e-12);
    }
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = oracle::random_hermitian(4, rng);
        const auto u = herm_expm(g, 0.7);
        CHECK(oracle::max_abs(u, oracle::taylor_expm(g, 0.7)) < 1e-10);
        CHECK(unitarity_check(u));
    }
    CHECK(herm_expm(h, 0.0) == ComplexMatrix::identity(8));
    CHECK_THROWS_AS(herm_expm(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, 0.1),
                    std::invalid_argument);
}

TEST_CASE("expm_from_eigen reuses one decomposition") {
    std::mt19937_64 rng(3);
    const auto h = oracle::random_hermitian(8, rng);
    const auto eig = hermitian_eigen(h);
    for (double phi : {-0.4, 0.9}) {
        CHECK(oracle::max_abs(expm_from_eigen(eig, phi), herm_expm(h, phi)) < 1e-12);
    }
}
