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

#include "expm/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "expm/charpoly.hpp"
#include "expm/partialfrac.hpp"

namespace expm {

namespace {

// exp(x) overflows a double beyond this.
constexpr double kMaxExponent = 709.78;

ComplexMatrix shifted(const ComplexMatrix& a, Complex lambda) {
    ComplexMatrix out = a;
    out.add_diagonal(-lambda);
    return out;
}

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

// M_{j,i} for one eigenvalue family.
std::vector<ComplexMatrix> family_matrices(const ComplexMatrix& a, const Polynomial& p_a, const Spectrum& spectrum,
                                           std::size_t j) {
    const std::size_t n = a.order();
    const auto& [lambda, m] = spectrum[j];

    ComplexMatrix cofactor = ComplexMatrix::identity(n);
    for (std::size_t l = 0; l < spectrum.size(); ++l) {
        if (l == j) continue;
        const ComplexMatrix factor = shifted(a, spectrum[l].value);
        for (std::size_t e = 0; e < spectrum[l].multiplicity; ++e) cofactor = mat_mul(cofactor, factor);
    }

    // basis[k - 1] = p_jk(A); p_{j,m} = cofactor, p_{j,k} = p_{j,k+1} (A - lambda I).
    std::vector<ComplexMatrix> basis(m, cofactor);
    const ComplexMatrix own = shifted(a, lambda);
    for (std::size_t k = m - 1; k >= 1; --k) basis[k - 1] = mat_mul(basis[k], own);

    const auto coeffs = exp_coefficients(p_a, spectrum, j);
    std::vector<ComplexMatrix> out(m, ComplexMatrix::zeros(n));
    for (const auto& c : coeffs)
        for (std::size_t i = 0; i < c.t_poly.size(); ++i) out[i] += basis[c.k - 1] * c.t_poly[i];

    if (lambda.imag() == 0.0)
        for (auto& mat : out)
            for (auto& x : mat.entries()) x = Complex{x.real(), 0.0};
    return out;
}

}  // namespace

SymbolicExponential build_symbolic_exponential(const RealMatrix& a, const BuildOptions& options) {
    const std::size_t n = a.order();
    Polynomial p_a = characteristic_polynomial(a);
    const auto roots = find_roots(p_a, options.seed);
    const double tol = options.tolerance.value_or(default_cluster_tolerance(roots));
    if (!(tol > 0.0)) throw InputError("cluster tolerance must be positive");
    Spectrum spectrum = polish_spectrum(p_a, cluster_spectrum(roots, tol), tol);
    (void)basis_polynomials(p_a, spectrum);

    std::vector<std::string> warnings;
    if (!within_accuracy_envelope(a))
        warnings.push_back("matrix outside the accuracy envelope (order <= 32, infinity norm <= 1e3); "
                           "characteristic polynomial coefficients may be inaccurate");
    if (spectrum.min_separation() < kConditioningSeparation)
        warnings.push_back("ill-conditioned spectrum: minimum eigenvalue separation " +
                           format_number(spectrum.min_separation()) +
                           " is below 1e-3; increase the cluster tolerance to merge near-equal eigenvalues");

    const ComplexMatrix ac = to_complex(a);
    std::vector<std::vector<ComplexMatrix>> families(spectrum.size());
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        const auto partner = spectrum.conjugate_partner(j);
        if (partner && *partner < j) {
            for (const auto& mat : families[*partner]) families[j].push_back(conj(mat));
            continue;
        }
        families[j] = family_matrices(ac, p_a, spectrum, j);
    }

    std::vector<ExponentialTerm> terms;
    terms.reserve(n);
    for (std::size_t j = 0; j < spectrum.size(); ++j)
        for (std::size_t i = 0; i < families[j].size(); ++i)
            terms.push_back({spectrum[j].value, i, std::move(families[j][i])});

    return SymbolicExponential(n, std::move(terms), std::move(spectrum), std::move(p_a), tol, std::move(warnings));
}

ComplexMatrix evaluate_complex(const SymbolicExponential& s, double t) {
    if (!std::isfinite(t)) throw InputError("evaluation time must be finite");
    const std::size_t n = s.order();
    ComplexMatrix sum = ComplexMatrix::zeros(n);
    for (const auto& term : s.terms()) {
        const Complex exponent = term.lambda * t;
        if (exponent.real() > kMaxExponent) throw NumericalError("exponential overflow");
        double tp = 1.0;
        for (std::size_t i = 0; i < term.power; ++i) tp *= t;
        const Complex factor = std::exp(exponent) * tp;
        if (factor == Complex{}) continue;
        auto dst = sum.entries();
        const auto src = term.matrix.entries();
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += factor * src[k];
    }
    if (!all_finite(sum)) throw NumericalError("exponential overflow");
    return sum;
}

RealMatrix evaluate(const SymbolicExponential& s, double t) {
    const ComplexMatrix sum = evaluate_complex(s, t);
    RealMatrix re = real_part(sum);
    if (norm_inf(imag_part(sum)) > 1e-8 * (1.0 + norm_inf(re))) throw NumericalError("realification failed");
    return re;
}

RealMatrix expm_oracle(const RealMatrix& a, double t) {
    if (!std::isfinite(t)) throw InputError("evaluation time must be finite");
    const std::size_t n = a.order();
    RealMatrix x = a * t;
    const double norm = norm_inf(x);
    if (!std::isfinite(norm)) throw NumericalError("exponential overflow");

    int squarings = 0;
    double scaled = norm;
    while (scaled > 0.5) {
        scaled *= 0.5;
        ++squarings;
    }
    x *= std::ldexp(1.0, -squarings);

    RealMatrix sum = RealMatrix::identity(n);
    RealMatrix term = RealMatrix::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = mat_mul(term, x);
        term *= 1.0 / k;
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = mat_mul(sum, sum);
        if (!all_finite(sum)) throw NumericalError("exponential overflow");
    }
    return sum;
}

Trajectory solve_ivp(const SymbolicExponential& s, std::span<const double> x0, std::span<const double> times) {
    if (x0.size() != s.order()) throw InputError("initial state dimension does not match matrix order");
    for (double v : x0)
        if (!std::isfinite(v)) throw InputError("non-finite initial state entry");
    Trajectory out;
    out.times.assign(times.begin(), times.end());
    out.states.reserve(times.size());
    for (double t : times) out.states.push_back(mat_vec(evaluate(s, t), x0));
    return out;
}

Trajectory solve_ivp(const RealMatrix& a, std::span<const double> x0, std::span<const double> times,
                     const BuildOptions& options) {
    if (x0.size() != a.order()) throw InputError("initial state dimension does not match matrix order");
    return solve_ivp(build_symbolic_exponential(a, options), x0, times);
}

std::vector<double> stability_sample_times(double horizon, std::size_t samples) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw InputError("horizon must be a positive finite number");
    if (samples == 0) throw InputError("samples must be positive");
    if (samples == 1) return {horizon};
    constexpr double decades = 4.0;
    std::vector<double> out(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double frac = static_cast<double>(k) / static_cast<double>(samples - 1);
        out[k] = horizon * std::pow(10.0, -decades * (1.0 - frac));
    }
    out.back() = horizon;
    return out;
}

StabilityReport stability_report(const SymbolicExponential& s, double horizon, std::size_t samples) {
    const auto times = stability_sample_times(horizon, samples);
    StabilityReport report;
    report.horizon = horizon;
    report.spectral_abscissa = s.spectrum().spectral_abscissa();
    report.is_asymptotically_stable = report.spectral_abscissa < 0.0;
    if (!report.is_asymptotically_stable) return report;

    const double alpha = 0.5 * report.spectral_abscissa;
    // norm * e^{-alpha t} in log space; e^{-alpha t} alone can overflow.
    auto scaled_norm = [&](double t) {
        const double norm = norm_inf(evaluate(s, t));
        return norm == 0.0 ? 0.0 : std::exp(std::log(norm) - alpha * t);
    };
    std::vector<double> ratios;
    ratios.reserve(times.size());
    for (double t : times) ratios.push_back(scaled_norm(t));

    // The t = 0 value |I|_inf = 1 joins the sampled ratios.
    const double c = 1.1 * std::max(1.0, *std::max_element(ratios.begin(), ratios.end()));
    report.alpha = alpha;
    report.c = c;
    report.samples_checked = times.size();
    report.bound_held = std::all_of(ratios.begin(), ratios.end(), [c](double r) { return r <= c; });
    return report;
}

StabilityReport stability_report(const RealMatrix& a, double horizon, std::size_t samples,
                                 const BuildOptions& options) {
    (void)stability_sample_times(horizon, samples);
    return stability_report(build_symbolic_exponential(a, options), horizon, samples);
}

}  // namespace expm
