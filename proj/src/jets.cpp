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

#include "expm/jets.hpp"

#include <algorithm>
#include <stdexcept>

namespace expm {

TaylorJet::TaylorJet(Complex center, std::vector<Complex> coefficients)
    : center_(center), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("jet needs at least one coefficient");
    if (!is_finite(center_)) throw NumericalError("non-finite jet center");
    for (const auto& c : coeffs_)
        if (!is_finite(c)) throw NumericalError("non-finite jet coefficient");
}

TaylorJet TaylorJet::linear_factor(Complex center, Complex root, std::size_t order) {
    std::vector<Complex> c(order + 1, Complex{});
    c[0] = center - root;
    if (order >= 1) c[1] = 1.0;
    return TaylorJet(center, std::move(c));
}

TaylorJet TaylorJet::constant(Complex center, Complex value, std::size_t order) {
    std::vector<Complex> c(order + 1, Complex{});
    c[0] = value;
    return TaylorJet(center, std::move(c));
}

Complex TaylorJet::evaluate_offset(Complex w) const noexcept {
    Complex acc{};
    for (std::size_t r = coeffs_.size(); r-- > 0;) acc = acc * w + coeffs_[r];
    return acc;
}

TaylorJet polynomial_to_jet(const Polynomial& p, Complex center, std::size_t order) {
    std::vector<Complex> c(order + 1, Complex{});
    Polynomial q = p;
    for (std::size_t r = 0; r <= order; ++r) {
        auto [quotient, remainder] = deflate(q, center);
        c[r] = remainder;
        if (q.size() == 1) break;
        q = std::move(quotient);
    }
    return TaylorJet(center, std::move(c));
}

TaylorJet jet_mul(const TaylorJet& a, const TaylorJet& b) {
    if (a.center() != b.center()) throw std::invalid_argument("jet_mul: center mismatch");
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Complex> c(order + 1, Complex{});
    for (std::size_t k = 0; k <= order; ++k)
        for (std::size_t i = 0; i <= k; ++i) c[k] += a[i] * b[k - i];
    return TaylorJet(a.center(), std::move(c));
}

TaylorJet jet_reciprocal(const TaylorJet& a) {
    const Complex c0 = a[0];
    if (std::abs(c0) < 1e-300) throw NumericalError("reciprocal at a zero");
    std::vector<Complex> d(a.order() + 1, Complex{});
    d[0] = 1.0 / c0;
    for (std::size_t k = 1; k <= a.order(); ++k) {
        Complex sum{};
        for (std::size_t i = 1; i <= k; ++i) sum += a[i] * d[k - i];
        d[k] = -sum / c0;
    }
    return TaylorJet(a.center(), std::move(d));
}

}  // namespace expm
