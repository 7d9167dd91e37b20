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

#ifndef EXPM_JETS_HPP
#define EXPM_JETS_HPP

#include <span>
#include <vector>

#include "expm/polynomial.hpp"

namespace expm {

/**
 * Truncated Taylor expansion at a complex center: coefficient r holds
 * f^{(r)}(center) / r!. order() == coefficients().size() - 1.
 */
class TaylorJet {
   public:
    TaylorJet(Complex center, std::vector<Complex> coefficients);

    /// Jet of the linear factor (z - root) at center, truncated at order.
    static TaylorJet linear_factor(Complex center, Complex root, std::size_t order);
    static TaylorJet constant(Complex center, Complex value, std::size_t order);

    Complex center() const noexcept { return center_; }
    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coefficients() const noexcept { return coeffs_; }
    Complex operator[](std::size_t r) const noexcept { return coeffs_[r]; }

    /// Sum_r c_r w^r, i.e. the truncated series at z = center + w.
    Complex evaluate_offset(Complex w) const noexcept;

   private:
    Complex center_;
    std::vector<Complex> coeffs_;
};

/// Taylor coefficients of p at center by a cascade of synthetic divisions.
TaylorJet polynomial_to_jet(const Polynomial& p, Complex center, std::size_t order);

/// Truncated Cauchy product; the result has order min(a.order(), b.order()).
/// Centers must match exactly (std::invalid_argument otherwise).
TaylorJet jet_mul(const TaylorJet& a, const TaylorJet& b);

/// Series reciprocal. Throws NumericalError("reciprocal at a zero") when |c_0| < 1e-300.
TaylorJet jet_reciprocal(const TaylorJet& a);

}  // namespace expm

#endif
