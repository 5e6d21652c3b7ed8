#pragma once

#include <functional>
#include <span>

namespace unifconc {

struct QuadratureResult {
    double value = 0.0;
    /// Difference between the last two refinement levels (heuristic).
    double error_estimate = 0.0;
    long subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Fixed-order Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::span<const double> nodes;
    std::span<const double> weights;
};

/// The 20-point rule, computed once by Newton iteration on P_20.
const GaussLegendreRule& gauss_legendre_20();

/// Composite rule over `panels` equal panels. Panels are evaluated in
/// parallel and summed in panel order, so the result is bit-identical to
/// integrate_panels_serial. `f` must be safe to call concurrently.
double integrate_panels(const Integrand& f, double a, double b, long panels);
double integrate_panels_serial(const Integrand& f, double a, double b, long panels);

/// Doubles the panel count from `initial_panels` until two consecutive
/// levels agree within tol. Throws convergence_error after max_levels.
QuadratureResult integrate_refined(const Integrand& f, double a, double b, long initial_panels, double tol,
                                   int max_levels = 14);

/// Recursive bisection for integrands with endpoint singularities
/// (e.g. sin^0.5). Throws convergence_error when max_depth is exhausted.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double tol, int max_depth = 60);

} // namespace unifconc
