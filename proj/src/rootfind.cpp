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

#include "expm/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace expm {

Spectrum::Spectrum(std::vector<Eigenvalue> items, std::size_t source_degree)
    : items_(std::move(items)), source_degree_(source_degree) {
    std::size_t total = 0;
    for (const auto& e : items_) {
        if (e.multiplicity == 0) throw std::invalid_argument("eigenvalue multiplicity must be positive");
        if (!is_finite(e.value)) throw NumericalError("non-finite eigenvalue");
        total += e.multiplicity;
    }
    if (items_.empty() || total != source_degree_)
        throw std::invalid_argument("multiplicities must sum to the polynomial degree");
}

double Spectrum::min_separation() const noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < items_.size(); ++a)
        for (std::size_t b = a + 1; b < items_.size(); ++b)
            best = std::min(best, std::abs(items_[a].value - items_[b].value));
    return best;
}

double Spectrum::spectral_abscissa() const noexcept {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& e : items_) best = std::max(best, e.value.real());
    return best;
}

std::optional<std::size_t> Spectrum::conjugate_partner(std::size_t j) const noexcept {
    const Complex target = std::conj(items_[j].value);
    for (std::size_t k = 0; k < items_.size(); ++k)
        if (items_[k].value == target) return k;
    return std::nullopt;
}

namespace {

struct HornerResult {
    Complex value;
    Complex derivative;
    double magnitude;  // sum |c_k| |z|^k, the scale of rounding noise in value
};

HornerResult horner(std::span<const Complex> c, Complex z) {
    Complex p = c.back();
    Complex dp{};
    double kappa = std::abs(c.back());
    const double az = std::abs(z);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
        kappa = kappa * az + std::abs(c[k]);
    }
    return {p, dp, kappa};
}

/// Greedy conjugate matching, largest |Im| first: each root is paired with the
/// unmatched root nearest its conjugate, or put on the real axis when that is
/// the smaller move.
std::vector<Complex> pair_conjugates(std::vector<Complex> z) {
    const std::size_t n = z.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::abs(z[a].imag()) > std::abs(z[b].imag()); });
    std::vector<bool> used(n, false);
    for (std::size_t i : order) {
        if (used[i]) continue;
        used[i] = true;
        std::size_t best = n;
        double best_distance = std::abs(z[i].imag());
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            const double d = std::abs(z[k] - std::conj(z[i]));
            if (d < best_distance) {
                best = k;
                best_distance = d;
            }
        }
        if (best == n) {
            z[i] = Complex{z[i].real(), 0.0};
            continue;
        }
        used[best] = true;
        const Complex mid = 0.5 * (z[i] + std::conj(z[best]));
        z[i] = mid;
        z[best] = std::conj(mid);
    }
    return z;
}

}  // namespace

std::vector<Complex> find_roots(const Polynomial& p, std::uint64_t seed) {
    const int degree = p.degree();
    if (degree < 1) throw std::invalid_argument("find_roots: degree must be at least 1");
    const auto n = static_cast<std::size_t>(degree);
    const Complex lead = p.leading();
    std::vector<Complex> c(p.coefficients().begin(), p.coefficients().begin() + degree + 1);
    for (auto& x : c) x /= lead;

    if (n == 1) return {-c[0]};

    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
    radius += 1.0;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double two_pi = 2.0 * std::numbers::pi;
    const double offset = two_pi * unit(rng);
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = offset + two_pi * (static_cast<double>(k) + 0.25 * (unit(rng) - 0.5)) / static_cast<double>(n);
        const double r = radius * (1.0 + 0.05 * (unit(rng) - 0.5));
        z[k] = std::polar(r, angle);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double noise_factor = 4.0 * static_cast<double>(n) * eps;
    std::vector<bool> done(n, false);

    for (int sweep = 0; sweep < kMaxAberthSweeps; ++sweep) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            const auto h = horner(c, z[i]);
            if (h.value == Complex{}) {
                done[i] = true;
                continue;
            }
            // Once the residual is at rounding level, take this last step and stop.
            const bool at_noise_floor = std::abs(h.value) <= noise_factor * h.magnitude;
            if (h.derivative == Complex{}) {
                z[i] += Complex{eps, eps} * (1.0 + std::abs(z[i]));
                all_done = false;
                continue;
            }
            const Complex w = h.value / h.derivative;
            Complex repulsion{};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const Complex d = z[i] - z[j];
                if (d != Complex{}) repulsion += 1.0 / d;
            }
            const Complex denom = 1.0 - w * repulsion;
            const Complex step = denom == Complex{} ? w : w / denom;
            if (is_finite(step)) z[i] -= step;
            if (at_noise_floor || std::abs(step) <= eps * std::abs(z[i]))
                done[i] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }

    double cmax = 0.0;
    for (const auto& x : c) cmax = std::max(cmax, std::abs(x));
    std::vector<double> residuals(n);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        residuals[i] = std::abs(horner(c, z[i]).value);
        const double bound = 1e-10 * std::pow(1.0 + std::abs(z[i]), static_cast<double>(n)) * cmax;
        if (!(residuals[i] <= bound) || !is_finite(z[i])) ok = false;
    }
    if (!ok) throw RootConvergenceError(std::move(z), std::move(residuals));

    bool real_coefficients = true;
    for (const auto& x : c) real_coefficients = real_coefficients && x.imag() == 0.0;
    if (real_coefficients) {
        auto paired = pair_conjugates(z);
        bool accepted = true;
        for (const auto& x : paired)
            accepted = accepted && std::abs(horner(c, x).value) <=
                                       1e-10 * std::pow(1.0 + std::abs(x), static_cast<double>(n)) * cmax;
        if (accepted) return paired;
    }
    return z;
}

double default_cluster_tolerance(std::span<const Complex> roots) {
    double m = 1.0;
    for (const auto& r : roots) m = std::max(m, std::abs(r));
    return 1e-6 * m;
}

Spectrum cluster_spectrum(std::span<const Complex> roots, double tol) {
    if (roots.empty()) throw std::invalid_argument("cluster_spectrum: no roots");
    if (!(tol > 0.0)) throw std::invalid_argument("cluster_spectrum: tolerance must be positive");
    const std::size_t n = roots.size();

    // Single linkage via union-find over all pairs within the linking radius.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (std::abs(roots[a] - roots[b]) <= tol) parent[find(a)] = find(b);

    std::vector<Eigenvalue> clusters;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = clusters.size();
            clusters.push_back({Complex{}, 0});
        }
        auto& cl = clusters[slot[r]];
        cl.value += roots[i];
        ++cl.multiplicity;
    }
    for (auto& cl : clusters) cl.value /= static_cast<double>(cl.multiplicity);

    std::vector<bool> settled(clusters.size(), false);
    for (std::size_t a = 0; a < clusters.size(); ++a) {
        if (settled[a]) continue;
        settled[a] = true;
        auto& ca = clusters[a];
        if (std::abs(ca.value.imag()) <= tol) {
            ca.value = Complex{ca.value.real(), 0.0};
            continue;
        }
        std::optional<std::size_t> partner;
        double best = tol;
        for (std::size_t b = 0; b < clusters.size(); ++b) {
            if (settled[b] || std::abs(clusters[b].value.imag()) <= tol) continue;
            const double d = std::abs(ca.value - std::conj(clusters[b].value));
            if (d <= best) {
                best = d;
                partner = b;
            }
        }
        if (!partner) continue;
        auto& cb = clusters[*partner];
        if (cb.multiplicity != ca.multiplicity) throw ClusteringError();
        settled[*partner] = true;
        const Complex v = 0.5 * (ca.value + std::conj(cb.value));
        ca.value = v;
        cb.value = std::conj(v);
    }

    for (std::size_t a = 0; a < clusters.size(); ++a)
        for (std::size_t b = a + 1; b < clusters.size(); ++b)
            if (std::abs(clusters[a].value - clusters[b].value) < 2.0 * tol) throw ClusteringError();

    std::sort(clusters.begin(), clusters.end(), [](const Eigenvalue& x, const Eigenvalue& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() > y.value.imag();
    });
    return Spectrum(std::move(clusters), n);
}

namespace {

// Coefficients of p^{(d)} / d!.
std::vector<Complex> scaled_derivative(std::span<const Complex> c, std::size_t d) {
    if (c.size() <= d) return {Complex{}};
    std::vector<Complex> out(c.size() - d);
    for (std::size_t k = 0; k < out.size(); ++k) {
        double binom = 1.0;
        for (std::size_t r = 1; r <= d; ++r) binom = binom * static_cast<double>(k + r) / static_cast<double>(r);
        out[k] = c[k + d] * binom;
    }
    return out;
}

Complex newton_polish(std::span<const Complex> f, Complex start) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    Complex best = start;
    double best_residual = std::abs(horner(f, start).value);
    Complex z = start;
    for (int iter = 0; iter < 50 && best_residual > 0.0; ++iter) {
        const auto h = horner(f, z);
        if (h.derivative == Complex{}) break;
        const Complex step = h.value / h.derivative;
        z -= step;
        const double residual = std::abs(horner(f, z).value);
        if (!is_finite(z)) break;
        if (residual < best_residual) {
            best_residual = residual;
            best = z;
        }
        if (std::abs(step) <= 4.0 * eps * std::abs(z)) break;
    }
    return best;
}

}  // namespace

Spectrum polish_spectrum(const Polynomial& p, const Spectrum& spectrum, double tol) {
    std::vector<Eigenvalue> items(spectrum.items().begin(), spectrum.items().end());
    const auto c = p.coefficients().subspan(0, static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
    for (std::size_t j = 0; j < items.size(); ++j) {
        const auto& e = spectrum[j];
        if (e.multiplicity < 2 || e.value.imag() < 0.0) continue;
        const auto f = scaled_derivative(c, e.multiplicity - 1);
        Complex z = newton_polish(f, e.value);
        if (std::abs(z - e.value) > tol) continue;
        if (e.value.imag() == 0.0) z = Complex{z.real(), 0.0};
        items[j].value = z;
        if (e.value.imag() > 0.0)
            if (const auto partner = spectrum.conjugate_partner(j)) items[*partner].value = std::conj(z);
    }
    return Spectrum(std::move(items), spectrum.source_degree());
}

}  // namespace expm
