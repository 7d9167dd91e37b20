/*
   Copyright 2026 The expm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXPM_MATRIX_HPP
#define EXPM_MATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "expm/error.hpp"

namespace expm {

using Complex = std::complex<double>;

inline bool is_finite(double x) noexcept { return std::isfinite(x); }
inline bool is_finite(const Complex& z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/**
 * Dense square matrix with row-major storage.
 *
 * Instantiated for double (RealMatrix) and std::complex<double> (ComplexMatrix).
 * Constructors that take user data reject non-finite entries with InputError;
 * arithmetic results are not re-validated.
 */
template <class T>
class SquareMatrix {
   public:
    using value_type = T;

    explicit SquareMatrix(std::size_t order) : order_(order), data_(order * order, T{}) {
        if (order == 0) throw std::invalid_argument("matrix order must be at least 1");
    }

    SquareMatrix(std::size_t order, std::vector<T> entries) : order_(order), data_(std::move(entries)) {
        if (order == 0) throw InputError("matrix order must be at least 1");
        if (data_.size() != order * order) throw InputError("matrix not square");
        for (const auto& x : data_)
            if (!is_finite(x)) throw InputError("non-finite matrix entry");
    }

    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : order_(rows.size()) {
        if (order_ == 0) throw std::invalid_argument("matrix order must be at least 1");
        data_.reserve(order_ * order_);
        for (const auto& row : rows) {
            if (row.size() != order_) throw InputError("matrix not square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
        for (const auto& x : data_)
            if (!is_finite(x)) throw InputError("non-finite matrix entry");
    }

    static SquareMatrix identity(std::size_t order) {
        SquareMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) m(i, i) = T{1};
        return m;
    }

    static SquareMatrix zeros(std::size_t order) { return SquareMatrix(order); }

    std::size_t order() const noexcept { return order_; }

    T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * order_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }

    std::span<const T> entries() const noexcept { return data_; }
    std::span<T> entries() noexcept { return data_; }

    SquareMatrix& operator+=(const SquareMatrix& rhs) {
        check_same_order(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }

    SquareMatrix& operator-=(const SquareMatrix& rhs) {
        check_same_order(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }

    SquareMatrix& operator*=(const T& s) noexcept {
        for (auto& x : data_) x *= s;
        return *this;
    }

    /// Adds s to every diagonal entry, i.e. *this += s I.
    SquareMatrix& add_diagonal(const T& s) noexcept {
        for (std::size_t i = 0; i < order_; ++i) (*this)(i, i) += s;
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
    friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }
    friend SquareMatrix operator*(SquareMatrix lhs, const T& s) { return lhs *= s; }
    friend SquareMatrix operator*(const T& s, SquareMatrix rhs) { return rhs *= s; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

   private:
    void check_same_order(const SquareMatrix& rhs) const {
        if (rhs.order_ != order_) throw std::invalid_argument("matrix order mismatch");
    }

    std::size_t order_;
    std::vector<T> data_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<Complex>;

// Products. Order mismatch is a caller bug and throws std::invalid_argument.
ComplexMatrix mat_mul(const ComplexMatrix& x, const ComplexMatrix& y);
RealMatrix mat_mul(const RealMatrix& x, const RealMatrix& y);

inline ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) { return mat_mul(x, y); }
inline RealMatrix operator*(const RealMatrix& x, const RealMatrix& y) { return mat_mul(x, y); }

std::vector<double> mat_vec(const RealMatrix& a, std::span<const double> x);

/// Maximum absolute row sum.
double norm_inf(const ComplexMatrix& x);
double norm_inf(const RealMatrix& x);

double norm_frobenius(const ComplexMatrix& x);
double norm_frobenius(const RealMatrix& x);

Complex trace(const ComplexMatrix& x);
double trace(const RealMatrix& x);

ComplexMatrix to_complex(const RealMatrix& x);
RealMatrix real_part(const ComplexMatrix& x);
RealMatrix imag_part(const ComplexMatrix& x);
ComplexMatrix conj(const ComplexMatrix& x);

bool all_finite(const ComplexMatrix& x) noexcept;
bool all_finite(const RealMatrix& x) noexcept;

}  // namespace expm

#endif
