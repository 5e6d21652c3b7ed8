#include "unifconc/spectral.hpp"

#include "unifconc/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace unifconc {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;
constexpr double series_crossover = 1e-4;

void require_lattice(long ell, long n)
{
    if (ell < 2) {
        throw invalid_parameter("spectral routines require ell >= 2, got " + std::to_string(ell));
    }
    if (n < 1) {
        throw invalid_parameter("spectral routines require n >= 1, got " + std::to_string(n));
    }
}

void require_tolerance(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw invalid_parameter("tolerance must be positive and finite");
    }
}

// kernel^n * cos(freq t), scaled by 2/pi.
Integrand inversion_integrand(long ell, long n, double freq)
{
    return [ell, n, freq](double t) {
        const double k = charfn_kernel(ell, t);
        return (2.0 / std::numbers::pi) * std::pow(k, static_cast<int>(n)) * std::cos(freq * t);
    };
}

// Enough panels for the trigonometric polynomial of degree n(ell-1) + |freq|
// and at least 8 panels per period of the cosine over [0, pi/2].
long initial_panels(long ell, long n, long freq, double a, double b)
{
    const double span = (b - a) / half_pi;
    const double degree = static_cast<double>(n * (ell - 1) + std::abs(freq));
    const double panels = std::max({8.0, 2.0 * std::abs(static_cast<double>(freq)) * span, 0.5 * degree * span});
    return static_cast<long>(std::ceil(panels));
}

} // namespace

SplitParams SplitParams::for_lattice(long ell, long n)
{
    require_lattice(ell, n);
    return {ell, n, (n * (ell - 1)) % 2};
}

void SplitParams::validate() const
{
    require_lattice(ell, n);
    if (alpha != (n * (ell - 1)) % 2) {
        throw invalid_parameter("SplitParams: alpha must equal the parity of n(ell-1)");
    }
}

double charfn_kernel(long ell, double t)
{
    if (ell < 1) {
        throw invalid_parameter("charfn_kernel: ell must be >= 1");
    }
    if (!(t >= 0.0 && t <= half_pi)) {
        throw domain_error("charfn_kernel: t must lie in [0, pi/2]");
    }
    if (t < series_crossover) {
        // log kernel = -(ell^2-1) t^2/6 - (ell^4-1) t^4/180 - O(t^6)
        const double l2 = static_cast<double>(ell) * static_cast<double>(ell);
        const double t2 = t * t;
        return std::exp(-(l2 - 1.0) * t2 / 6.0 - (l2 * l2 - 1.0) * t2 * t2 / 180.0);
    }
    return std::sin(static_cast<double>(ell) * t) / (static_cast<double>(ell) * std::sin(t));
}

QuadratureResult fourier_pmf(long ell, long n, long k, double tol)
{
    require_lattice(ell, n);
    require_tolerance(tol);
    const long freq = n * (ell - 1) - 2 * k;
    return integrate_refined(inversion_integrand(ell, n, static_cast<double>(freq)), 0.0, half_pi,
                             initial_panels(ell, n, freq, 0.0, half_pi), tol);
}

SplitIntegrals split_integrals(const SplitParams& params, double tol)
{
    params.validate();
    require_tolerance(tol);
    const double cut = std::numbers::pi / static_cast<double>(params.ell);
    const Integrand f = inversion_integrand(params.ell, params.n, static_cast<double>(params.alpha));
    SplitIntegrals out;
    out.i1 = integrate_refined(f, 0.0, cut, initial_panels(params.ell, params.n, params.alpha, 0.0, cut), tol / 2);
    if (cut < half_pi) {
        out.i2 = integrate_refined(f, cut, half_pi, initial_panels(params.ell, params.n, params.alpha, cut, half_pi),
                                   tol / 2);
    }
    return out;
}

double i1_majorant(long ell, long n)
{
    require_lattice(ell, n);
    const double nn = static_cast<double>(n);
    return 1.0 - 3.0 / (20.0 * nn) + 21.0 / (160.0 * nn * nn);
}

double i2_majorant(long ell, long n)
{
    require_lattice(ell, n);
    if (n % 2 != 0) {
        return 0.0;
    }
    const double nn = static_cast<double>(n);
    return std::sqrt(2.0 / (std::numbers::pi * nn)) /
           (static_cast<double>(ell) * (nn - 1.0) * std::ldexp(1.0, static_cast<int>(n - 1)));
}

QuadratureResult wallis_integral(double lambda, double tol)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw invalid_parameter("wallis_integral: lambda must be positive");
    }
    require_tolerance(tol);
    // t = u^2 smooths the t^lambda behaviour at the origin.
    const Integrand f = [lambda](double u) { return 2.0 * u * std::pow(std::sin(u * u), lambda); };
    return integrate_adaptive(f, 0.0, std::sqrt(half_pi), tol);
}

ChebyshevSides chebyshev_lemma_sides(const std::function<double(double)>& f, const std::function<double(double)>& g,
                                     double a, double tol)
{
    if (!(a > 0.0)) {
        throw invalid_parameter("chebyshev_lemma_check: a must be positive");
    }
    require_tolerance(tol);
    // Split at 0 where even functions such as 1-|x| have a kink.
    const auto integral = [&](const Integrand& h) {
        return integrate_adaptive(h, -a, 0.0, tol / 8).value + integrate_adaptive(h, 0.0, a, tol / 8).value;
    };
    const double fg = integral([&](double x) { return f(x) * g(x); });
    const double int_f = integral(f);
    const double int_g = integral(g);
    return {fg, int_f * int_g / (2.0 * a)};
}

bool chebyshev_lemma_check(const std::function<double(double)>& f, const std::function<double(double)>& g, double a,
                           double tol)
{
    const ChebyshevSides s = chebyshev_lemma_sides(f, g, a, tol);
    return s.lhs <= s.rhs + tol;
}

} // namespace unifconc
