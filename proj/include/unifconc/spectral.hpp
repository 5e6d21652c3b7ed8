#pragma once

#include "unifconc/quadrature.hpp"

#include <functional>
#include <utility>

namespace unifconc {

/// Parameters of the split of the central inversion integral at pi/ell.
struct SplitParams {
    long ell = 2;
    long n = 1;
    /// Parity of n(ell-1): 0 or 1.
    long alpha = 0;

    static SplitParams for_lattice(long ell, long n);
    void validate() const;
};

/// sin(ell t) / (ell sin t) on [0, pi/2], equal to 1 at t = 0.
/// Near zero it is evaluated from the series of log(sin x / x).
double charfn_kernel(long ell, double t);

/// u_ell^{*n}(k) by numeric Fourier inversion:
/// (2/pi) int_0^{pi/2} kernel(t)^n cos((n(ell-1) - 2k) t) dt.
QuadratureResult fourier_pmf(long ell, long n, long k, double tol);

struct SplitIntegrals {
    QuadratureResult i1; ///< over [0, pi/ell]
    QuadratureResult i2; ///< over [pi/ell, pi/2]
};

SplitIntegrals split_integrals(const SplitParams& params, double tol);

/// 1 - 3/(20n) + 21/(160n^2): upper bound for sqrt(pi(ell^2-1)n/6) * I1.
double i1_majorant(long ell, long n);

/// Upper bound for I2: zero for odd n, sqrt(2/(pi n)) / (ell (n-1) 2^(n-1)) for even n.
double i2_majorant(long ell, long n);

/// int_0^{pi/2} sin^lambda(t) dt.
QuadratureResult wallis_integral(double lambda, double tol);

struct ChebyshevSides {
    double lhs; ///< int_{-a}^{a} f g
    double rhs; ///< (1/2a) int f * int g
};

ChebyshevSides chebyshev_lemma_sides(const std::function<double(double)>& f, const std::function<double(double)>& g,
                                     double a, double tol);

/// Whether int f g <= (1/2a) int f int g + tol holds numerically on [-a, a].
/// The caller is responsible for the hypotheses (f even and decreasing on
/// [0, a], g convex); violating them may legitimately yield false.
bool chebyshev_lemma_check(const std::function<double(double)>& f, const std::function<double(double)>& g, double a,
                           double tol);

} // namespace unifconc
