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

#ifndef EXPM_POLYNOMIAL_HPP
#define EXPM_POLYNOMIAL_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "expm/matrix.hpp"

namespace expm {

/**
 * Polynomial with complex coefficients stored in ascending order:
 * coefficients()[k] is the coefficient of z^k.
 *
 * The coefficient sequence is never empty. Trailing zeros are kept as given;
 * degree() reports the highest index holding a nonzero coefficient and -1
 * for the zero polynomial.
 */
class Polynomial {
   public:
    Polynomial() : coeffs_{Complex{}} {}
    explicit Polynomial(std::vector<Complex> ascending);
    Polynomial(std::initializer_list<Complex> ascending) : Polynomial(std::vector<Complex>(ascending)) {}

    static Polynomial from_real(std::span<const double> ascending);

    /// Monic polynomial prod_i (z - roots[i]).
    static Polynomial from_roots(std::span<const Complex> roots);

    std::span<const Complex> coefficients() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Complex operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }

    int degree() const noexcept;
    Complex leading() const noexcept;
    bool is_monic() const noexcept { return degree() >= 0 && leading() == Complex{1.0, 0.0}; }
    double max_abs_coefficient() const noexcept;

    Complex operator()(Complex z) const noexcept;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

   private:
    std::vector<Complex> coeffs_;
};

struct Deflation {
    Polynomial quotient;
    Complex remainder;
};

/// Synthetic division by (z - root): p(z) = (z - root) q(z) + remainder.
Deflation deflate(const Polynomial& p, Complex root);

/**
 * p(A) = c_d A^d + ... + c_1 A + c_0 I by Horner's scheme, highest
 * coefficient first; performs exactly deg(p) matrix multiplications.
 */
ComplexMatrix matrix_poly_eval(const Polynomial& p, const ComplexMatrix& a);

}  // namespace expm

#endif
