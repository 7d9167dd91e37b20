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

#include "expm/matrix.hpp"

#include <algorithm>

namespace expm {

namespace {

template <class T>
SquareMatrix<T> multiply(const SquareMatrix<T>& x, const SquareMatrix<T>& y) {
    if (x.order() != y.order()) throw std::invalid_argument("mat_mul: matrix order mismatch");
    const std::size_t n = x.order();
    SquareMatrix<T> out(n);
    // i-k-j loop order keeps the inner loop contiguous in both y and out.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const T xik = x(i, k);
            if (xik == T{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
        }
    return out;
}

template <class T>
double row_sum_max(const SquareMatrix<T>& x) {
    const std::size_t n = x.order();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(x(i, j));
        best = std::max(best, row);
    }
    return best;
}

template <class T>
double frobenius(const SquareMatrix<T>& x) {
    double sum = 0.0;
    for (const auto& v : x.entries()) sum += std::norm(v);
    return std::sqrt(sum);
}

template <class T>
bool finite_entries(const SquareMatrix<T>& x) noexcept {
    return std::all_of(x.entries().begin(), x.entries().end(), [](const T& v) { return is_finite(v); });
}

}  // namespace

ComplexMatrix mat_mul(const ComplexMatrix& x, const ComplexMatrix& y) { return multiply(x, y); }
RealMatrix mat_mul(const RealMatrix& x, const RealMatrix& y) { return multiply(x, y); }

std::vector<double> mat_vec(const RealMatrix& a, std::span<const double> x) {
    const std::size_t n = a.order();
    if (x.size() != n) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += a(i, j) * x[j];
    return out;
}

double norm_inf(const ComplexMatrix& x) { return row_sum_max(x); }
double norm_inf(const RealMatrix& x) { return row_sum_max(x); }

double norm_frobenius(const ComplexMatrix& x) { return frobenius(x); }
double norm_frobenius(const RealMatrix& x) { return frobenius(x); }

Complex trace(const ComplexMatrix& x) {
    Complex sum{};
    for (std::size_t i = 0; i < x.order(); ++i) sum += x(i, i);
    return sum;
}

double trace(const RealMatrix& x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.order(); ++i) sum += x(i, i);
    return sum;
}

ComplexMatrix to_complex(const RealMatrix& x) {
    ComplexMatrix out(x.order());
    std::copy(x.entries().begin(), x.entries().end(), out.entries().begin());
    return out;
}

RealMatrix real_part(const ComplexMatrix& x) {
    RealMatrix out(x.order());
    std::transform(x.entries().begin(), x.entries().end(), out.entries().begin(),
                   [](const Complex& z) { return z.real(); });
    return out;
}

RealMatrix imag_part(const ComplexMatrix& x) {
    RealMatrix out(x.order());
    std::transform(x.entries().begin(), x.entries().end(), out.entries().begin(),
                   [](const Complex& z) { return z.imag(); });
    return out;
}

ComplexMatrix conj(const ComplexMatrix& x) {
    ComplexMatrix out(x.order());
    std::transform(x.entries().begin(), x.entries().end(), out.entries().begin(),
                   [](const Complex& z) { return std::conj(z); });
    return out;
}

bool all_finite(const ComplexMatrix& x) noexcept { return finite_entries(x); }
bool all_finite(const RealMatrix& x) noexcept { return finite_entries(x); }

}  // namespace expm
