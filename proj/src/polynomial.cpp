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

#include "expm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace expm {

Polynomial::Polynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    for (const auto& c : coeffs_)
        if (!is_finite(c)) throw NumericalError("non-finite polynomial coefficient");
}

Polynomial Polynomial::from_real(std::span<const double> ascending) {
    return Polynomial(std::vector<Complex>(ascending.begin(), ascending.end()));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex{1.0}};
    for (const auto& r : roots) {
        c.push_back(Complex{});
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

int Polynomial::degree() const noexcept {
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        if (coeffs_[k] != Complex{}) return static_cast<int>(k);
    return -1;
}

Complex Polynomial::leading() const noexcept {
    const int d = degree();
    return d < 0 ? Complex{} : coeffs_[static_cast<std::size_t>(d)];
}

double Polynomial::max_abs_coefficient() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex Polynomial::operator()(Complex z) const noexcept {
    Complex acc{};
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> c(a.size() + b.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> c(std::max(a.size(), b.size()), Complex{});
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> c(std::max(a.size(), b.size()), Complex{});
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return Polynomial(std::move(c));
}

Deflation deflate(const Polynomial& p, Complex root) {
    const auto c = p.coefficients();
    if (c.size() == 1) return {Polynomial{}, c[0]};
    std::vector<Complex> q(c.size() - 1);
    Complex acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        q[k] = acc;
        acc = acc * root + c[k];
    }
    return {Polynomial(std::move(q)), acc};
}

ComplexMatrix matrix_poly_eval(const Polynomial& p, const ComplexMatrix& a) {
    const int d = p.degree();
    const std::size_t n = a.order();
    if (d <= 0) return ComplexMatrix::identity(n) * p[0];
    ComplexMatrix acc = ComplexMatrix::identity(n) * p[static_cast<std::size_t>(d)];
    for (int k = d - 1; k >= 0; --k) {
        acc = mat_mul(acc, a);
        acc.add_diagonal(p[static_cast<std::size_t>(k)]);
    }
    return acc;
}

}  // namespace expm
