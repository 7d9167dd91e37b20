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

#include "expm/partialfrac.hpp"

#include <stdexcept>

namespace expm {

namespace {

void check_consistent(const Polynomial& p_a, const Spectrum& spectrum) {
    if (p_a.degree() != static_cast<int>(spectrum.source_degree()))
        throw std::invalid_argument("spectrum does not match polynomial degree");
}

TaylorJet reciprocal_or_inconsistent(const TaylorJet& jet) {
    try {
        return jet_reciprocal(jet);
    } catch (const NumericalError&) {
        throw NumericalError("spectrum inconsistent with polynomial");
    }
}

}  // namespace

Complex ExpCoefficient::operator()(double t) const {
    Complex poly{};
    for (std::size_t i = t_poly.size(); i-- > 0;) poly = poly * t + t_poly[i];
    return std::exp(lambda * t) * poly;
}

std::vector<BasisPolynomial> basis_polynomials(const Polynomial& p_a, const Spectrum& spectrum) {
    check_consistent(p_a, spectrum);
    std::vector<BasisPolynomial> out;
    out.reserve(spectrum.source_degree());
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        const auto& [lambda, m] = spectrum[j];
        Polynomial q = p_a;
        for (std::size_t k = 1; k <= m; ++k) {
            auto [quotient, remainder] = deflate(q, lambda);
            if (std::abs(remainder) > 1e-6 * q.max_abs_coefficient())
                throw NumericalError("spectrum inconsistent with polynomial");
            out.push_back({j, k, quotient});
            q = std::move(quotient);
        }
    }
    return out;
}

TaylorJet cofactor_reciprocal_jet(const Spectrum& spectrum, std::size_t j, std::size_t order) {
    const Complex center = spectrum[j].value;
    TaylorJet cofactor = TaylorJet::constant(center, 1.0, order);
    for (std::size_t l = 0; l < spectrum.size(); ++l) {
        if (l == j) continue;
        const auto factor = TaylorJet::linear_factor(center, spectrum[l].value, order);
        for (std::size_t e = 0; e < spectrum[l].multiplicity; ++e) cofactor = jet_mul(cofactor, factor);
    }
    return reciprocal_or_inconsistent(cofactor);
}

PartialFractionCoefficients pf_rational(const Polynomial& r, const Polynomial& p_a, const Spectrum& spectrum) {
    check_consistent(p_a, spectrum);
    if (r.degree() >= p_a.degree()) throw std::invalid_argument("pf_rational: degree(r) must be below degree(p)");
    PartialFractionCoefficients out;
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        const auto& [lambda, m] = spectrum[j];
        const auto g = jet_mul(polynomial_to_jet(r, lambda, m - 1), cofactor_reciprocal_jet(spectrum, j, m - 1));
        for (std::size_t k = 1; k <= m; ++k) out[{j, k}] = g[m - k];
    }
    return out;
}

std::vector<ExpCoefficient> exp_coefficients(const Polynomial& p_a, const Spectrum& spectrum, std::size_t j) {
    check_consistent(p_a, spectrum);
    if (j >= spectrum.size()) throw std::out_of_range("exp_coefficients: eigenvalue index");
    const auto& [lambda, m] = spectrum[j];
    // Order m carries one guard coefficient beyond the m - 1 actually used.
    const auto h = cofactor_reciprocal_jet(spectrum, j, m);

    std::vector<ExpCoefficient> out;
    out.reserve(m);
    for (std::size_t k = 1; k <= m; ++k) {
        const std::size_t s = m - k;
        std::vector<Complex> d(s + 1);
        double factorial = 1.0;
        for (std::size_t i = 0; i <= s; ++i) {
            if (i > 0) factorial *= static_cast<double>(i);
            d[i] = h[s - i] / factorial;
        }
        out.push_back({j, k, lambda, std::move(d)});
    }
    return out;
}

}  // namespace expm
