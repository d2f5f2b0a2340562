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
 * Dense complex matrices and the handful of linear-algebra kernels the
 * rest of the library is built on. Everything here is small (at most
 * 256 x 256), row-major and value-semantic.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace equivar {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Tolerance ladder shared across modules.
namespace tol {
inline constexpr double kExact = 1e-12;    // algebraic identities on exact inputs
inline constexpr double kComposed = 1e-10; // composed numerics
inline constexpr double kDedup = 1e-9;     // matrix equality during closure
} // namespace tol

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);
    /// Row-by-row literal, e.g. `{{0, 1}, {1, 0}}`.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
        return {rows, cols};
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) noexcept {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const Complex> data() const noexcept {
        return data_;
    }
    [[nodiscard]] std::span<Complex> data() noexcept { return data_; }

    /// Conjugate transpose.
    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double frobenius_norm() const;
    /// Matrix-vector product.
    [[nodiscard]] ComplexVector apply(std::span<const Complex> v) const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);

    friend bool operator==(const ComplexMatrix &,
                           const ComplexMatrix &) = default;

  private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    ComplexVector data_;
};

/// Largest entrywise |a - b|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// ‖ab − ba‖_F for square matrices of equal size.
double commutator_norm(const ComplexMatrix &a, const ComplexMatrix &b);

/// ‖U†U − I‖_F < tol.
bool unitarity_check(const ComplexMatrix &u, double tol = tol::kComposed);

/// ‖H − H†‖_F < tol.
bool is_hermitian(const ComplexMatrix &h, double tol = tol::kExact);

struct EigenDecomposition {
    std::vector<double> values; ///< ascending
    ComplexMatrix vectors;      ///< columns are the eigenvectors
};

/**
 * Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
 * rotations. The input is symmetrised as (H + H†)/2 first, so it must
 * already be Hermitian to within the caller's tolerance.
 */
EigenDecomposition hermitian_eigen(const ComplexMatrix &h);

/**
 * exp(i·phi·h) for Hermitian h, assembled as V diag(e^{i·phi·λ}) V†.
 * Throws std::invalid_argument when ‖h − h†‖_F ≥ 1e-10.
 */
ComplexMatrix herm_expm(const ComplexMatrix &h, double phi);

/// exp(i·phi·H) from a precomputed decomposition of H.
ComplexMatrix expm_from_eigen(const EigenDecomposition &eig, double phi);

} // namespace equivar
