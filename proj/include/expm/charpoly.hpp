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

#ifndef EXPM_CHARPOLY_HPP
#define EXPM_CHARPOLY_HPP

#include "expm/matrix.hpp"
#include "expm/polynomial.hpp"

namespace expm {

/// Largest order and infinity norm for which characteristic-polynomial
/// coefficients are considered reliable in double precision.
inline constexpr std::size_t kEnvelopeMaxOrder = 32;
inline constexpr double kEnvelopeMaxNorm = 1e3;

/**
 * Monic characteristic polynomial det(zI - A) via the Faddeev-LeVerrier
 * trace recursion. The result has degree n, purely real coefficients,
 * c[n-1] = -trace(A) and c[0] = (-1)^n det(A).
 *
 * Throws NumericalError("characteristic polynomial overflow") when a
 * coefficient leaves the finite range; rescaling A is the usual remedy.
 */
Polynomial characteristic_polynomial(const RealMatrix& a);

bool within_accuracy_envelope(const RealMatrix& a);

}  // namespace expm

#endif
