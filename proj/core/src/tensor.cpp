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

#include "equivar/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace equivar {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                        const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                    std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             ComplexVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entry count " +
                                    std::to_string(data_.size()) +
                                    " does not match " + std::to_string(rows_) +
                                    "x" + std::to_string(cols_));
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("ComplexMatrix::apply: vector length " +
                                    std::to_string(v.size()) +
                                    " does not match " + std::to_string(cols_) +
                                    " columns");
    }
    ComplexVector out(rows_, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex acc{0.0, 0.0};
        const Complex *row = &data_[r * cols_];
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: inner dimensions differ (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("kron: empty operand");
    }
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            if (s == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

double commutator_norm(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw std::invalid_argument(
            "commutator_norm: operands must be square of equal size");
    }
    return (a * b - b * a).frobenius_norm();
}

bool unitarity_check(const ComplexMatrix &u, double tol) {
    if (!u.is_square()) {
        return false;
    }
    return (u.adjoint() * u - ComplexMatrix::identity(u.rows()))
               .frobenius_norm() < tol;
}

bool is_hermitian(const ComplexMatrix &h, double tol) {
    return h.is_square() && (h - h.adjoint()).frobenius_norm() < tol;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix &h) {
    if (!h.is_square() || h.empty()) {
        throw std::invalid_argument("hermitian_eigen: matrix must be square");
    }
    const std::size_t n = h.rows();
    ComplexMatrix a = (h + h.adjoint()) * Complex{0.5, 0.0};
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (std::sqrt(off) <= 1e-15 * scale) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) {
                    continue;
                }
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex ce = std::conj(phase);

                // a <- a J, v <- v J with J = diag-phase * Givens(c, s)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * ce * akq;
                    a(k, q) = s * akp + c * ce * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * ce * vkq;
                    v(k, q) = s * vkp + c * ce * vkq;
                }
                // a <- J† a
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
        return a(i, i).real() < a(j, j).real();
    });
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, col) = v(r, order[col]);
        }
    }
    return out;
}

ComplexMatrix herm_expm(const ComplexMatrix &h, double phi) {
    if (!h.is_square() || h.empty()) {
        throw std::invalid_argument("herm_expm: generator must be square");
    }
    const double asym = (h - h.adjoint()).frobenius_norm();
    if (!(asym < tol::kComposed)) {
        throw std::invalid_argument(
            "herm_expm: generator is not Hermitian (‖H − H†‖_F = " +
            std::to_string(asym) + ")");
    }
    const std::size_t n = h.rows();
    if (phi == 0.0) {
        return ComplexMatrix::identity(n);
    }
    return expm_from_eigen(hermitian_eigen(h), phi);
}

ComplexMatrix expm_from_eigen(const EigenDecomposition &eig, double phi) {
    const std::size_t n = eig.values.size();
    ComplexMatrix out(n, n);
    std::vector<Complex> phases(n);
    for (std::size_t k = 0; k < n; ++k) {
        phases[k] = std::polar(1.0, phi * eig.values[k]);
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                acc += eig.vectors(r, k) * phases[k] *
                       std::conj(eig.vectors(c, k));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

} // namespace equivar
