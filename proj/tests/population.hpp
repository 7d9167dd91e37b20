// Seeded random matrices shared by the engine tests and the acceptance suite.
#ifndef EXPM_TESTS_POPULATION_HPP
#define EXPM_TESTS_POPULATION_HPP

#include <random>
#include <vector>

#include "expm/engine.hpp"
#include "oracles.hpp"

namespace population {

struct Member {
    expm::RealMatrix a;
    expm::SymbolicExponential s;
};

/// Entries uniform in [-1, 1], order 1..max_order, resampled until the
/// eigenvalues are at least min_separation apart.
inline std::vector<Member> random_separated(std::size_t count, std::uint64_t seed, std::size_t max_order = 8,
                                            double min_separation = 0.1) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order(1, max_order);
    std::vector<Member> out;
    while (out.size() < count) {
        auto a = oracle::random_real(order(rng), -1.0, 1.0, rng);
        auto s = expm::build_symbolic_exponential(a);
        if (s.spectrum().size() != a.order() || s.spectrum().min_separation() < min_separation) continue;
        out.push_back({std::move(a), std::move(s)});
    }
    return out;
}

/// Jordan block J_n(lambda).
inline expm::RealMatrix jordan_block(std::size_t n, double lambda) {
    expm::RealMatrix j(n);
    for (std::size_t r = 0; r < n; ++r) {
        j(r, r) = lambda;
        if (r + 1 < n) j(r, r + 1) = 1.0;
    }
    return j;
}

/// Real 2n x 2n embedding of J_n(a + ib): diagonal blocks [[a, b], [-b, a]],
/// identity blocks on the block superdiagonal.
inline expm::RealMatrix real_jordan_block(std::size_t n, double a, double b) {
    expm::RealMatrix j(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        j(2 * r, 2 * r) = a;
        j(2 * r + 1, 2 * r + 1) = a;
        j(2 * r, 2 * r + 1) = b;
        j(2 * r + 1, 2 * r) = -b;
        if (r + 1 < n) {
            j(2 * r, 2 * r + 2) = 1.0;
            j(2 * r + 1, 2 * r + 3) = 1.0;
        }
    }
    return j;
}

/// e^{tJ} for J = jordan_block(n, lambda): entry (r, r+i) is e^{lambda t} t^i / i!.
inline expm::RealMatrix jordan_exponential(std::size_t n, double lambda, double t) {
    expm::RealMatrix e(n);
    double coeff = std::exp(lambda * t);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r + i < n; ++r) e(r, r + i) = coeff;
        coeff *= t / double(i + 1);
    }
    return e;
}

inline expm::RealMatrix real_jordan_exponential(std::size_t n, double a, double b, double t) {
    expm::RealMatrix e(2 * n);
    const double c = std::cos(b * t), s = std::sin(b * t);
    double coeff = std::exp(a * t);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r + i < n; ++r) {
            const std::size_t row = 2 * r, col = 2 * (r + i);
            e(row, col) = coeff * c;
            e(row, col + 1) = coeff * s;
            e(row + 1, col) = -coeff * s;
            e(row + 1, col + 1) = coeff * c;
        }
        coeff *= t / double(i + 1);
    }
    return e;
}

}  // namespace population

#endif
