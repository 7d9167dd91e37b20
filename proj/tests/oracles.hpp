// Independent reference computations used only by the test suites. Nothing
// here calls into the spectral pipeline.
#ifndef EXPM_TESTS_ORACLES_HPP
#define EXPM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "expm/matrix.hpp"
#include "expm/polynomial.hpp"

namespace oracle {

using expm::Complex;
using expm::ComplexMatrix;
using expm::RealMatrix;

inline RealMatrix random_real(std::size_t n, double lo, double hi, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(lo, hi);
    RealMatrix m(n);
    for (auto& x : m.entries()) x = d(rng);
    return m;
}

/// Distinct roots on the grid {-3..3} + i{-1,0,1} with multiplicities in 1..3,
/// the first one repeated, total degree at most max_degree.
struct RepeatedRoots {
    std::vector<Complex> values;
    std::vector<std::size_t> multiplicities;
    std::size_t degree = 0;
};

inline RepeatedRoots random_repeated_roots(std::mt19937_64& rng, std::size_t max_degree = 6) {
    std::uniform_int_distribution<int> re(-3, 3), im(-1, 1), mult(1, 3);
    RepeatedRoots out;
    while (out.degree < max_degree) {
        const Complex v(re(rng), im(rng));
        if (std::find(out.values.begin(), out.values.end(), v) != out.values.end()) continue;
        std::size_t m = out.values.empty() ? std::size_t(2 + mult(rng) % 2) : std::size_t(mult(rng));
        m = std::min(m, max_degree - out.degree);
        out.values.push_back(v);
        out.multiplicities.push_back(m);
        out.degree += m;
        if (out.values.size() >= 2 && mult(rng) == 1) break;
    }
    return out;
}

inline RealMatrix random_integer(std::size_t n, int lo, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(lo, hi);
    RealMatrix m(n);
    for (auto& x : m.entries()) x = d(rng);
    return m;
}

inline ComplexMatrix random_complex(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    ComplexMatrix m(n);
    for (auto& x : m.entries()) x = Complex{d(rng), d(rng)};
    return m;
}

/// Triple loop summing k from the top down.
template <class T>
expm::SquareMatrix<T> naive_mul(const expm::SquareMatrix<T>& x, const expm::SquareMatrix<T>& y) {
    const std::size_t n = x.order();
    expm::SquareMatrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T sum{};
            for (std::size_t k = n; k-- > 0;) sum += x(i, k) * y(k, j);
            out(i, j) = sum;
        }
    return out;
}

/// Laplace expansion along the first row.
inline Complex cofactor_det(const ComplexMatrix& m) {
    const std::size_t n = m.order();
    if (n == 1) return m(0, 0);
    Complex det{};
    for (std::size_t c = 0; c < n; ++c) {
        ComplexMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        det += sign * m(0, c) * cofactor_det(minor);
    }
    return det;
}

/// Coefficients (ascending) of the interpolating polynomial through (xs, ys),
/// via Newton divided differences expanded to the monomial basis.
inline std::vector<Complex> interpolate(const std::vector<Complex>& xs, std::vector<Complex> ys) {
    const std::size_t m = xs.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Complex> coeffs(m, Complex{});
    for (std::size_t i = m; i-- > 0;) {
        // coeffs = coeffs * (z - xs[i]) + ys[i]
        std::vector<Complex> next(m, Complex{});
        for (std::size_t k = 0; k + 1 < m; ++k) next[k + 1] += coeffs[k];
        for (std::size_t k = 0; k < m; ++k) next[k] -= xs[i] * coeffs[k];
        next[0] += ys[i];
        coeffs = std::move(next);
    }
    return coeffs;
}

/// det(zI - A) by cofactor expansion at z = 0..n, interpolated.
inline std::vector<Complex> charpoly_by_interpolation(const RealMatrix& a) {
    const std::size_t n = a.order();
    std::vector<Complex> xs, ys;
    for (std::size_t s = 0; s <= n; ++s) {
        const double z = static_cast<double>(s);
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? z : 0.0) - a(i, j);
        xs.emplace_back(z);
        ys.push_back(cofactor_det(m));
    }
    return interpolate(xs, ys);
}

/// Gauss-Jordan with partial pivoting.
inline RealMatrix inverse(const RealMatrix& a) {
    const std::size_t n = a.order();
    RealMatrix w = a;
    RealMatrix inv = RealMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(w(col, j), w(piv, j));
            std::swap(inv(col, j), inv(piv, j));
        }
        const double d = w(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            w(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = w(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                w(r, j) -= f * w(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Remainder of num (ascending) divided by a monic polynomial.
inline std::vector<Complex> remainder_mod_monic(std::vector<Complex> num, const expm::Polynomial& p) {
    const auto d = static_cast<std::size_t>(p.degree());
    for (std::size_t top = num.size(); top-- > d;) {
        const Complex lead = num[top];
        if (lead == Complex{}) continue;
        for (std::size_t k = 0; k <= d; ++k) num[top - d + k] -= lead * p[k];
    }
    num.resize(d);
    if (num.empty()) num.push_back(Complex{});
    return num;
}

/// sum_{k=0}^{degree} (t z)^k / k!
inline std::vector<Complex> exp_taylor(double t, std::size_t degree) {
    std::vector<Complex> c(degree + 1);
    double term = 1.0;
    for (std::size_t k = 0; k <= degree; ++k) {
        if (k > 0) term *= t / static_cast<double>(k);
        c[k] = term;
    }
    return c;
}

/// Dominant eigenvalue of the companion matrix of a monic real polynomial by
/// power iteration (assumes a real, strictly dominant root).
inline double companion_dominant_root(const expm::Polynomial& p, int iterations = 2000) {
    const auto n = static_cast<std::size_t>(p.degree());
    RealMatrix c(n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p[i].real();
    std::vector<double> v(n, 1.0);
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        auto w = expm::mat_vec(c, v);
        double norm = 0.0;
        for (double x : w) norm = std::max(norm, std::abs(x));
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += w[i] * v[i];
            den += v[i] * v[i];
        }
        lambda = num / den;
        for (auto& x : w) x /= norm;
        v = std::move(w);
    }
    return lambda;
}

inline double max_abs_entry(const RealMatrix& m) {
    double best = 0.0;
    for (double x : m.entries()) best = std::max(best, std::abs(x));
    return best;
}

/// max_ij |a - b| / max(max|b|, tiny): entrywise error relative to the scale of b.
inline double entrywise_relative(const RealMatrix& a, const RealMatrix& b) {
    double worst = 0.0;
    const double scale = std::max(max_abs_entry(b), 1e-300);
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]) / scale);
    return worst;
}

inline double frobenius_relative(const RealMatrix& a, const RealMatrix& b) {
    return expm::norm_frobenius(a - b) / std::max(expm::norm_frobenius(b), 1e-300);
}

}  // namespace oracle

#endif
