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

#ifndef EXPM_ROOTFIND_HPP
#define EXPM_ROOTFIND_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "expm/error.hpp"
#include "expm/polynomial.hpp"

namespace expm {

inline constexpr std::uint64_t kDefaultRootSeed = 20130702u;
inline constexpr int kMaxAberthSweeps = 500;

/// Raised when the simultaneous iteration hits its sweep cap without meeting
/// the residual bound. Carries the last iterate and |p(z_i)| for each root.
class RootConvergenceError : public NumericalError {
   public:
    RootConvergenceError(std::vector<Complex> best_iterate, std::vector<double> residuals)
        : NumericalError("root iteration did not converge"),
          best_iterate_(std::move(best_iterate)),
          residuals_(std::move(residuals)) {}

    const std::vector<Complex>& best_iterate() const noexcept { return best_iterate_; }
    const std::vector<double>& residuals() const noexcept { return residuals_; }

   private:
    std::vector<Complex> best_iterate_;
    std::vector<double> residuals_;
};

class ClusteringError : public NumericalError {
   public:
    ClusteringError() : NumericalError("ambiguous clustering") {}
};

struct Eigenvalue {
    Complex value;
    std::size_t multiplicity;
};

/**
 * Distinct eigenvalues with algebraic multiplicities.
 *
 * Multiplicities are positive and sum to the degree of the source
 * polynomial. Items produced by cluster_spectrum are sorted by real part
 * ascending, then imaginary part descending, and conjugate pairs are
 * stored as exact conjugates.
 */
class Spectrum {
   public:
    Spectrum(std::vector<Eigenvalue> items, std::size_t source_degree);

    std::span<const Eigenvalue> items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    const Eigenvalue& operator[](std::size_t j) const noexcept { return items_[j]; }
    std::size_t source_degree() const noexcept { return source_degree_; }

    /// Smallest pairwise distance between distinct eigenvalues; +inf for one item.
    double min_separation() const noexcept;
    double spectral_abscissa() const noexcept;

    /// Index of the item whose value is exactly conj(items[j].value).
    /// Returns j for a real eigenvalue and nullopt when no partner exists.
    std::optional<std::size_t> conjugate_partner(std::size_t j) const noexcept;

   private:
    std::vector<Eigenvalue> items_;
    std::size_t source_degree_;
};

/**
 * All complex roots (with repetition) of a monic polynomial by the
 * Aberth-Ehrlich simultaneous iteration, started from a seeded perturbation
 * of the circle of radius 1 + max|c_k/c_n|.
 *
 * Each returned root satisfies |p(z)| <= 1e-10 (1+|z|)^n max|c_k|;
 * otherwise RootConvergenceError is thrown after kMaxAberthSweeps sweeps.
 * For real coefficients the roots are then matched into exact conjugate
 * pairs and exact reals, provided the matched set still meets that bound.
 */
std::vector<Complex> find_roots(const Polynomial& p, std::uint64_t seed = kDefaultRootSeed);

/// 1e-6 * max(1, max|root|).
double default_cluster_tolerance(std::span<const Complex> roots);

/**
 * Single-linkage clustering with linking radius tol. Each cluster becomes its
 * mean with multiplicity equal to its size; near-conjugate clusters are
 * replaced by an exact conjugate pair and clusters within tol of the real
 * axis are snapped onto it.
 *
 * Throws ClusteringError when two resulting values lie closer than 2 tol or
 * when a conjugate pair would carry unequal multiplicities.
 */
Spectrum cluster_spectrum(std::span<const Complex> roots, double tol);

/**
 * Sharpens the representative of every eigenvalue with multiplicity m >= 2:
 * Newton's method on p^{(m-1)}, which has a simple root there, started from
 * the cluster mean. The mean is kept when Newton moves it by more than tol.
 * Conjugate pairs stay exact conjugates and real values stay real.
 */
Spectrum polish_spectrum(const Polynomial& p, const Spectrum& spectrum, double tol);

}  // namespace expm

#endif
