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

#ifndef EXPM_ENGINE_HPP
#define EXPM_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expm/matrix.hpp"
#include "expm/polynomial.hpp"
#include "expm/rootfind.hpp"

namespace expm {

/// Eigenvalue separation below which a conditioning warning is attached.
inline constexpr double kConditioningSeparation = 1e-3;

struct BuildOptions {
    std::optional<double> tolerance;  // cluster tolerance; default_cluster_tolerance when absent
    std::uint64_t seed = kDefaultRootSeed;
};

/// One summand e^{lambda t} t^power M.
struct ExponentialTerm {
    Complex lambda;
    std::size_t power;
    ComplexMatrix matrix;
};

/**
 * e^{tA} = sum_j e^{lambda_j t} sum_i t^i M_{j,i}, with every M precomputed.
 *
 * Terms are grouped by eigenvalue in spectrum order, powers ascending. Terms
 * of a conjugate eigenvalue pair carry entrywise conjugate matrices, and
 * terms of a real eigenvalue carry real matrices.
 */
class SymbolicExponential {
   public:
    SymbolicExponential(std::size_t order, std::vector<ExponentialTerm> terms, Spectrum spectrum,
                        Polynomial characteristic, double cluster_tolerance, std::vector<std::string> warnings)
        : order_(order),
          terms_(std::move(terms)),
          spectrum_(std::move(spectrum)),
          characteristic_(std::move(characteristic)),
          cluster_tolerance_(cluster_tolerance),
          warnings_(std::move(warnings)) {}

    std::size_t order() const noexcept { return order_; }
    std::span<const ExponentialTerm> terms() const noexcept { return terms_; }
    const Spectrum& spectrum() const noexcept { return spectrum_; }
    const Polynomial& characteristic_polynomial() const noexcept { return characteristic_; }
    double cluster_tolerance() const noexcept { return cluster_tolerance_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    bool ill_conditioned() const noexcept { return spectrum_.min_separation() < kConditioningSeparation; }

   private:
    std::size_t order_;
    std::vector<ExponentialTerm> terms_;
    Spectrum spectrum_;
    Polynomial characteristic_;
    double cluster_tolerance_;
    std::vector<std::string> warnings_;
};

/**
 * characteristic_polynomial -> find_roots -> cluster_spectrum ->
 * basis_polynomials -> exp_coefficients, then the matrix factors
 * p_jk(A) = prod_{l != j}(A - lambda_l I)^{m_l} (A - lambda_j I)^{m_j - k}
 * regrouped by power of t.
 *
 * Root and clustering failures propagate. A warning is attached when the
 * minimum eigenvalue separation is below kConditioningSeparation or when A
 * lies outside the accuracy envelope.
 */
SymbolicExponential build_symbolic_exponential(const RealMatrix& a, const BuildOptions& options = {});

/// Unrealified sum at t.
ComplexMatrix evaluate_complex(const SymbolicExponential& s, double t);

/**
 * Real part of the sum at t. Throws NumericalError("exponential overflow")
 * when a term overflows and NumericalError("realification failed") when the
 * imaginary residue exceeds 1e-8 (1 + |real part|).
 */
RealMatrix evaluate(const SymbolicExponential& s, double t);

/// Scaling and squaring with a degree-20 Taylor sum; independent of the
/// spectral pipeline.
RealMatrix expm_oracle(const RealMatrix& a, double t);

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
};

Trajectory solve_ivp(const RealMatrix& a, std::span<const double> x0, std::span<const double> times,
                     const BuildOptions& options = {});
Trajectory solve_ivp(const SymbolicExponential& s, std::span<const double> x0, std::span<const double> times);

/**
 * Certificate for |e^{tA}|_inf <= C e^{alpha t}, t >= 0.
 *
 * alpha and c are present only for stable matrices, with alpha half the
 * spectral abscissa and c = 1.1 max(1, sampled |e^{tA}|_inf e^{-alpha t}).
 * bound_held records that the bound was met on every sampled time.
 */
struct StabilityReport {
    double spectral_abscissa = 0.0;
    std::optional<double> alpha;
    std::optional<double> c;
    bool is_asymptotically_stable = false;
    std::size_t samples_checked = 0;
    bool bound_held = false;
    double horizon = 0.0;
};

/// The log-spaced grid on [horizon * 1e-4, horizon] used by stability_report.
std::vector<double> stability_sample_times(double horizon, std::size_t samples);

StabilityReport stability_report(const RealMatrix& a, double horizon, std::size_t samples,
                                 const BuildOptions& options = {});
StabilityReport stability_report(const SymbolicExponential& s, double horizon, std::size_t samples);

}  // namespace expm

#endif
