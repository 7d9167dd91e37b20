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

#ifndef EXPM_PARTIALFRAC_HPP
#define EXPM_PARTIALFRAC_HPP

#include <map>
#include <utility>
#include <vector>

#include "expm/jets.hpp"
#include "expm/polynomial.hpp"
#include "expm/rootfind.hpp"

namespace expm {

// Throughout, j indexes Spectrum items (0-based) and k runs over 1..m_j.

/// p_A(z) / (z - lambda_j)^k, of degree n - k.
struct BasisPolynomial {
    std::size_t j;
    std::size_t k;
    Polynomial poly;
};

/// C_jk(t) = e^{lambda t} * sum_i t_poly[i] t^i, with t_poly.size() == m_j - k + 1.
struct ExpCoefficient {
    std::size_t j;
    std::size_t k;
    Complex lambda;
    std::vector<Complex> t_poly;

    Complex operator()(double t) const;
};

using PartialFractionCoefficients = std::map<std::pair<std::size_t, std::size_t>, Complex>;

/// Deflates p_A k times at each lambda_j; ordered by (j, k) ascending.
/// Throws NumericalError("spectrum inconsistent with polynomial") when a
/// deflation remainder exceeds 1e-6 max|coeff|.
std::vector<BasisPolynomial> basis_polynomials(const Polynomial& p_a, const Spectrum& spectrum);

/// Taylor jet at lambda_j of h_j(z) = 1 / prod_{l != j} (z - lambda_l)^{m_l}.
TaylorJet cofactor_reciprocal_jet(const Spectrum& spectrum, std::size_t j, std::size_t order);

/**
 * Constants of r(z)/p_A(z) = sum_{j,k} C_jk / (z - lambda_j)^k, taken as
 * coefficient m_j - k of the jet of g_j = r h_j at lambda_j.
 * Requires degree(r) < degree(p_A).
 */
PartialFractionCoefficients pf_rational(const Polynomial& r, const Polynomial& p_a, const Spectrum& spectrum);

/**
 * The same constants for the numerator e^{tz}, symbolic in t. With
 * s = m_j - k, the Leibniz rule on e^{tz} h_j(z) gives d_i = h_j^{[s-i]} / i!.
 */
std::vector<ExpCoefficient> exp_coefficients(const Polynomial& p_a, const Spectrum& spectrum, std::size_t j);

}  // namespace expm

#endif
