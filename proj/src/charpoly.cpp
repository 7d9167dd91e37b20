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

#include "expm/charpoly.hpp"

namespace expm {

Polynomial characteristic_polynomial(const RealMatrix& a) {
    const std::size_t n = a.order();
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;

    // M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    RealMatrix m = RealMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RealMatrix am = mat_mul(a, m);
        const double coeff = -trace(am) / static_cast<double>(k);
        if (!std::isfinite(coeff) || !all_finite(am))
            throw NumericalError("characteristic polynomial overflow");
        c[n - k] = coeff;
        if (k < n) {
            am.add_diagonal(coeff);
            m = std::move(am);
        }
    }
    return Polynomial::from_real(c);
}

bool within_accuracy_envelope(const RealMatrix& a) {
    return a.order() <= kEnvelopeMaxOrder && norm_inf(a) <= kEnvelopeMaxNorm;
}

}  // namespace expm
