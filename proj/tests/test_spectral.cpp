#include "unifconc/error.hpp"
#include "unifconc/exactdist.hpp"
#include "unifconc/quadrature.hpp"
#include "unifconc/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace unifconc;

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

TEST_CASE("Gauss-Legendre rule")
{
    const auto& rule = gauss_legendre_20();
    REQUIRE(rule.nodes.size() == 20);
    double wsum = 0.0;
    for (double w : rule.weights) {
        wsum += w;
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
    // Exact for polynomials of degree 39.
    const double v = integrate_panels_serial([](double x) { return std::pow(x, 38); }, -1.0, 1.0, 1);
    CHECK(v == doctest::Approx(2.0 / 39.0).epsilon(1e-13));
}

TEST_CASE("parallel panel sum is bit-identical to the serial sum")
{
    const Integrand f = [](double t) { return std::pow(charfn_kernel(7, t), 11) * std::cos(13 * t); };
    for (long panels : {1L, 7L, 64L, 1000L}) {
        CHECK(integrate_panels(f, 0.0, pi / 2, panels) == integrate_panels_serial(f, 0.0, pi / 2, panels));
    }
}

TEST_CASE("refined and adaptive quadrature")
{
    const QuadratureResult r = integrate_refined([](double t) { return std::sin(t); }, 0.0, pi, 4, 1e-13);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r.error_estimate <= 1e-13);
    CHECK(r.subdivisions >= 4);

    const QuadratureResult a = integrate_adaptive([](double t) { return std::sqrt(t); }, 0.0, 1.0, 1e-12);
    CHECK(a.value == doctest::Approx(2.0 / 3.0).epsilon(1e-11));

    // A non-integrable-looking oscillation that cannot settle within two levels.
    CHECK_THROWS_AS(integrate_refined([](double t) { return std::sin(1.0 / (t + 1e-9)); }, 0.0, 1.0, 1, 1e-14, 3),
                    convergence_error);
    try {
        integrate_refined([](double t) { return std::sin(1.0 / (t + 1e-9)); }, 0.0, 1.0, 1, 1e-14, 3);
    } catch (const convergence_error& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.error_estimate() > 1e-14);
    }
}

TEST_CASE("characteristic function kernel")
{
    CHECK(charfn_kernel(3, 0.0) == 1.0);
    CHECK(charfn_kernel(3, 1e-9) == doctest::Approx(1.0));
    CHECK(std::abs(charfn_kernel(2, pi / 2)) < 1e-15);
    CHECK(charfn_kernel(2, pi / 4) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(charfn_kernel(3, -0.1), domain_error);
    CHECK_THROWS_AS(charfn_kernel(3, 2.0), domain_error);
    CHECK_THROWS_AS(charfn_kernel(0, 0.5), invalid_parameter);

    // The series branch below the crossover matches the direct ratio.
    for (long ell : {2L, 5L, 20L}) {
        for (double t : {1e-7, 1e-6, 0.5e-4, 0.99e-4}) {
            CHECK(charfn_kernel(ell, t) == doctest::Approx(std::sin(ell * t) / (ell * std::sin(t))).epsilon(1e-14));
        }
    }

    for (long ell = 2; ell <= 20; ++ell) {
        for (int i = 0; i <= 4000; ++i) {
            const double t = (pi / 2) * i / 4000.0;
            REQUIRE(std::abs(charfn_kernel(ell, t)) <= 1.0);
        }
    }
}

TEST_CASE("Fourier inversion examples")
{
    CHECK(fourier_pmf(2, 2, 1, 1e-12).value == doctest::Approx(0.5).epsilon(1e-11));
    CHECK(fourier_pmf(3, 3, 3, 1e-12).value == doctest::Approx(7.0 / 27.0).epsilon(1e-11));
    CHECK(std::abs(fourier_pmf(2, 1, 5, 1e-12).value) < 1e-11);
    CHECK_THROWS_AS(fourier_pmf(1, 3, 0, 1e-12), invalid_parameter);
    CHECK_THROWS_AS(fourier_pmf(2, 3, 0, 0.0), invalid_parameter);
}

TEST_CASE("Fourier inversion reproduces exact pmfs")
{
    for (long ell : {2L, 3L, 5L, 10L}) {
        for (long n = 1; n <= 20; ++n) {
            const ExactDensity d = power({ell, n});
            for (long k = 0; k < d.support_size(); ++k) {
                const QuadratureResult r = fourier_pmf(ell, n, k, 1e-11);
                const double exact = d.pmf(k).to_double();
                if (std::abs(r.value - exact) > 1e-10) {
                    FAIL("ell=" << ell << " n=" << n << " k=" << k << " got " << r.value << " want " << exact);
                }
            }
        }
    }
}

TEST_CASE("split parameters")
{
    const SplitParams p = SplitParams::for_lattice(3, 3);
    CHECK(p.alpha == 0);
    CHECK(SplitParams::for_lattice(2, 3).alpha == 1);
    CHECK(SplitParams::for_lattice(4, 5).alpha == 1);
    CHECK_THROWS_AS((SplitParams{3, 3, 1}.validate()), invalid_parameter);
    CHECK_THROWS_AS((SplitParams{1, 3, 0}.validate()), invalid_parameter);
}

TEST_CASE("split integrals")
{
    const SplitIntegrals s22 = split_integrals(SplitParams::for_lattice(2, 2), 1e-12);
    CHECK(s22.i1.value + s22.i2.value == doctest::Approx(0.5).epsilon(1e-11));
    const SplitIntegrals s33 = split_integrals(SplitParams::for_lattice(3, 3), 1e-12);
    CHECK(s33.i1.value + s33.i2.value == doctest::Approx(7.0 / 27.0).epsilon(1e-11));
    CHECK(s33.i2.value <= 1e-10);
    const SplitIntegrals s21 = split_integrals(SplitParams::for_lattice(2, 1), 1e-12);
    CHECK(s21.i2.value == 0.0);

    for (long ell = 2; ell <= 8; ++ell) {
        for (long n = 1; n <= 30; ++n) {
            const SplitIntegrals s = split_integrals(SplitParams::for_lattice(ell, n), 1e-12);
            const double c = concentration({ell, n}).to_double();
            const double scale = std::sqrt(pi * double(ell * ell - 1) * n / 6.0);
            CAPTURE(ell);
            CAPTURE(n);
            CHECK(std::abs(s.i1.value + s.i2.value - c) <= 1e-10);
            CHECK(scale * s.i1.value <= i1_majorant(ell, n) + 1e-9);
            CHECK(scale * s.i2.value <= scale * i2_majorant(ell, n) + 1e-9);
            if (n % 2 != 0) {
                CHECK(s.i2.value <= 1e-10);
            }
        }
    }
}

TEST_CASE("majorants")
{
    CHECK(i1_majorant(3, 1) == doctest::Approx(0.98125).epsilon(1e-15));
    CHECK(i1_majorant(3, 2) == doctest::Approx(0.9578125).epsilon(1e-15));
    CHECK(std::abs(i1_majorant(3, 1000000) - 1.0) < 1e-6);
    CHECK(i2_majorant(2, 3) == 0.0);
    // sqrt(2/(2 pi)) / (2 * 1 * 2)
    CHECK(i2_majorant(2, 2) == doctest::Approx(0.14104739588693907).epsilon(1e-14));
    CHECK(i2_majorant(3, 4) == doctest::Approx(std::sqrt(1.0 / (2 * pi)) / 72.0).epsilon(1e-14));
    CHECK(i2_majorant(3, 4) == doctest::Approx(0.005541).epsilon(1e-3));
    CHECK_THROWS_AS(i1_majorant(1, 1), invalid_parameter);
    CHECK_THROWS_AS(i2_majorant(2, 0), invalid_parameter);
}

TEST_CASE("Wallis integral")
{
    CHECK(wallis_integral(2.0, 1e-12).value == doctest::Approx(pi / 4).epsilon(1e-11));
    CHECK(wallis_integral(1.0, 1e-12).value == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(wallis_integral(4.0, 1e-12).value == doctest::Approx(3 * pi / 16).epsilon(1e-11));
    // Gamma-function closed form: sqrt(pi)/2 * Gamma((l+1)/2) / Gamma(l/2 + 1).
    for (double lambda : {0.5, 1.0, 2.0, 3.7, 10.0, 100.0}) {
        const double exact = std::sqrt(pi) / 2 * std::exp(std::lgamma((lambda + 1) / 2) - std::lgamma(lambda / 2 + 1));
        const double v = wallis_integral(lambda, 1e-12).value;
        CAPTURE(lambda);
        CHECK(v == doctest::Approx(exact).epsilon(1e-10));
        CHECK(v < std::sqrt(pi / (2 * lambda)));
    }
    CHECK_THROWS_AS(wallis_integral(0.0, 1e-12), invalid_parameter);
    CHECK_THROWS_AS(wallis_integral(-1.0, 1e-12), invalid_parameter);
}

TEST_CASE("Chebyshev-type lemma")
{
    const auto one = [](double) { return 1.0; };
    const auto sq = [](double x) { return x * x; };
    const ChebyshevSides flat = chebyshev_lemma_sides(one, sq, 1.0, 1e-12);
    CHECK(flat.lhs == doctest::Approx(flat.rhs).epsilon(1e-12));
    CHECK(chebyshev_lemma_check(one, sq, 1.0, 1e-9));

    const auto tent = [](double x) { return 1.0 - std::abs(x); };
    const ChebyshevSides t = chebyshev_lemma_sides(tent, sq, 1.0, 1e-12);
    CHECK(t.lhs == doctest::Approx(1.0 / 6.0).epsilon(1e-11));
    CHECK(t.rhs == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    CHECK(chebyshev_lemma_check(tent, sq, 1.0, 1e-9));

    CHECK(chebyshev_lemma_check([](double x) { return std::exp(-x * x); }, [](double x) { return std::exp(x); }, 2.0,
                                1e-9));
    // Hypotheses violated (f increasing in |x|): the inequality reverses.
    CHECK_FALSE(chebyshev_lemma_check([](double x) { return x * x; }, sq, 1.0, 1e-9));
    CHECK_THROWS_AS(chebyshev_lemma_check(one, sq, 0.0, 1e-9), invalid_parameter);
}
