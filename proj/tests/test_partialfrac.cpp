#include <doctest.h>

#include <random>

#include "expm/partialfrac.hpp"
#include "oracles.hpp"

using namespace expm;

namespace {

Spectrum make_spectrum(const oracle::RepeatedRoots& roots) {
    std::vector<Eigenvalue> items;
    for (std::size_t j = 0; j < roots.values.size(); ++j) items.push_back({roots.values[j], roots.multiplicities[j]});
    return Spectrum(std::move(items), roots.degree);
}

Polynomial make_polynomial(const oracle::RepeatedRoots& roots) {
    std::vector<Complex> all;
    for (std::size_t j = 0; j < roots.values.size(); ++j) all.insert(all.end(), roots.multiplicities[j], roots.values[j]);
    return Polynomial::from_roots(all);
}

Complex recombine(const PartialFractionCoefficients& c, const Spectrum& s, Complex z) {
    Complex sum{};
    for (const auto& [key, value] : c) sum += value / std::pow(z - s[key.first].value, double(key.second));
    return sum;
}

bool close(Complex a, Complex b, double tol = 1e-13) { return std::abs(a - b) <= tol; }

std::vector<Complex> sample_points(const Spectrum& s, std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    std::vector<Complex> out;
    while (out.size() < count) {
        const Complex z(d(rng), d(rng));
        bool far = true;
        for (const auto& e : s.items()) far = far && std::abs(z - e.value) >= 0.5;
        if (far) out.push_back(z);
    }
    return out;
}

// (z+1)(z-5) with items ordered -1, 5.
const Spectrum kExample1({{-1.0, 1}, {5.0, 1}}, 2);
const Polynomial kExample1Poly{-5.0, -4.0, 1.0};

}  // namespace

TEST_CASE("basis_polynomials deflates at each eigenvalue") {
    const auto basis = basis_polynomials(kExample1Poly, kExample1);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].j == 0);
    CHECK(basis[0].k == 1);
    CHECK(close(basis[0].poly[0], -5.0));
    CHECK(close(basis[0].poly[1], 1.0));
    CHECK(basis[0].poly.degree() == 1);
    CHECK(close(basis[1].poly[0], 1.0));
    CHECK(close(basis[1].poly[1], 1.0));

    const Complex lambda{0.5, 0.0}, mu{-2.0, 0.0};
    const Spectrum s({{lambda, 2}, {mu, 1}}, 3);
    const auto p = Polynomial::from_roots(std::vector<Complex>{lambda, lambda, mu});
    const auto b = basis_polynomials(p, s);
    REQUIRE(b.size() == 3);
    const Polynomial expect[] = {Polynomial::from_roots(std::vector<Complex>{lambda, mu}),
                                 Polynomial::from_roots(std::vector<Complex>{mu}),
                                 Polynomial::from_roots(std::vector<Complex>{lambda, lambda})};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(b[i].poly.degree() == expect[i].degree());
        for (std::size_t c = 0; c < expect[i].size(); ++c) CHECK(close(b[i].poly[c], expect[i][c]));
    }
    CHECK(b[1].k == 2);
    CHECK(b[2].j == 1);
}

TEST_CASE("basis of z^n is the descending monomials") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Complex> c(n + 1, Complex{});
        c[n] = 1.0;
        const auto basis = basis_polynomials(Polynomial(c), Spectrum({{0.0, n}}, n));
        REQUIRE(basis.size() == n);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto& poly = basis[k - 1].poly;
            CHECK(poly.degree() == int(n - k));
            for (std::size_t i = 0; i < poly.size(); ++i) CHECK(poly[i] == (i == n - k ? Complex(1.0) : Complex{}));
        }
    }
}

TEST_CASE("basis_polynomials rejects a spectrum that is not the polynomial's") {
    CHECK_THROWS_WITH_AS(basis_polynomials(kExample1Poly, Spectrum({{-1.0, 1}, {4.0, 1}}, 2)),
                         "spectrum inconsistent with polynomial", NumericalError);
    CHECK_THROWS_AS(basis_polynomials(kExample1Poly, Spectrum({{-1.0, 3}}, 3)), std::invalid_argument);
}

TEST_CASE("pf_rational") {
    auto c = pf_rational(Polynomial{1.0}, kExample1Poly, kExample1);
    CHECK(close(c.at({0, 1}), -1.0 / 6.0));
    CHECK(close(c.at({1, 1}), 1.0 / 6.0));

    c = pf_rational(Polynomial{0.0}, kExample1Poly, kExample1);
    CHECK(c.size() == 2);
    for (const auto& [key, value] : c) CHECK(value == Complex{});

    // z / (z-1)^2 = 1/(z-1) + 1/(z-1)^2
    c = pf_rational(Polynomial{0.0, 1.0}, Polynomial{1.0, -2.0, 1.0}, Spectrum({{1.0, 2}}, 2));
    CHECK(close(c.at({0, 1}), 1.0));
    CHECK(close(c.at({0, 2}), 1.0));

    CHECK_THROWS_AS(pf_rational(Polynomial{0.0, 0.0, 1.0}, kExample1Poly, kExample1), std::invalid_argument);
    CHECK_THROWS_WITH_AS(pf_rational(Polynomial{1.0}, Polynomial{1.0, -2.0, 1.0}, Spectrum({{1.0, 1}, {1.0, 1}}, 2)),
                         "spectrum inconsistent with polynomial", NumericalError);
}

TEST_CASE("exp_coefficients") {
    const auto five = exp_coefficients(kExample1Poly, kExample1, 1);
    REQUIRE(five.size() == 1);
    CHECK(five[0].lambda == Complex(5.0));
    REQUIRE(five[0].t_poly.size() == 1);
    CHECK(close(five[0].t_poly[0], 1.0 / 6.0));
    CHECK(close(five[0](0.4), std::exp(2.0) / 6.0, 1e-12));

    // lambda double, mu simple: C_{lambda,1}(t) = e^{lambda t} (t/(lambda-mu) - 1/(lambda-mu)^2)
    const double lambda = 1.5, mu = -0.5, d = lambda - mu;
    const Spectrum s({{lambda, 2}, {mu, 1}}, 3);
    const auto p = Polynomial::from_roots(std::vector<Complex>{lambda, lambda, mu});
    const auto ec = exp_coefficients(p, s, 0);
    REQUIRE(ec.size() == 2);
    CHECK(ec[0].k == 1);
    REQUIRE(ec[0].t_poly.size() == 2);
    CHECK(close(ec[0].t_poly[0], -1.0 / (d * d)));
    CHECK(close(ec[0].t_poly[1], 1.0 / d));
    CHECK(ec[1].k == 2);
    REQUIRE(ec[1].t_poly.size() == 1);
    CHECK(close(ec[1].t_poly[0], 1.0 / d));
    for (double t : {-1.0, 0.25, 2.0})
        CHECK(close(ec[0](t), std::exp(lambda * t) * (t / d - 1.0 / (d * d)), 1e-12 * std::exp(lambda * std::abs(t))));
}

TEST_CASE("single eigenvalue: C_k(t) = e^{lambda t} t^{n-k}/(n-k)!") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const Complex lambda{-0.75, 0.0};
        const auto p = Polynomial::from_roots(std::vector<Complex>(n, lambda));
        const auto ec = exp_coefficients(p, Spectrum({{lambda, n}}, n), 0);
        REQUIRE(ec.size() == n);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto& tp = ec[k - 1].t_poly;
            REQUIRE(tp.size() == n - k + 1);
            for (std::size_t i = 0; i + 1 < tp.size(); ++i) CHECK(tp[i] == Complex{});
            CHECK(close(tp.back(), 1.0 / std::tgamma(double(n - k + 1))));
        }
    }
}

TEST_CASE("recombination reproduces r/p at off-spectrum points") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto roots = oracle::random_repeated_roots(rng);
        const auto s = make_spectrum(roots);
        const auto p = make_polynomial(roots);
        std::vector<Complex> r(roots.degree);
        for (auto& x : r) x = {d(rng), d(rng)};
        const Polynomial rp(r);
        const auto c = pf_rational(rp, p, s);
        CHECK(c.size() == roots.degree);
        for (const Complex z : sample_points(s, rng, 20)) {
            const Complex expect = rp(z) / p(z);
            CHECK(std::abs(recombine(c, s, z) - expect) <= 1e-8 * (1.0 + std::abs(expect)));
        }
    }
}

TEST_CASE("perturbing one constant breaks recombination") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto roots = oracle::random_repeated_roots(rng);
        const auto s = make_spectrum(roots);
        const auto p = make_polynomial(roots);
        std::vector<Complex> r(roots.degree);
        for (auto& x : r) x = {d(rng), d(rng)};
        const Polynomial rp(r);
        const auto c = pf_rational(rp, p, s);
        const auto points = sample_points(s, rng, 20);
        for (const auto& [key, value] : c) {
            auto bent = c;
            bent[key] += 1e-3;
            double worst = 0.0;
            for (const Complex z : points)
                worst = std::max(worst, std::abs(recombine(bent, s, z) - rp(z) / p(z)));
            CHECK(worst > 1e-5);
        }
    }
}

TEST_CASE("exp_coefficients agree with the reduced exponential Taylor polynomial") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const auto roots = oracle::random_repeated_roots(rng);
        const auto s = make_spectrum(roots);
        const auto p = make_polynomial(roots);
        for (double t : {-1.0, 0.3, 2.0}) {
            const Polynomial remainder(oracle::remainder_mod_monic(oracle::exp_taylor(t, 40), p));
            const auto reference = pf_rational(remainder, p, s);
            double scale = 0.0;
            for (const auto& [key, value] : reference) scale = std::max(scale, std::abs(value));
            for (std::size_t j = 0; j < s.size(); ++j)
                for (const auto& e : exp_coefficients(p, s, j))
                    CHECK(std::abs(e(t) - reference.at({j, e.k})) <= 1e-8 * scale);
        }
    }
}
