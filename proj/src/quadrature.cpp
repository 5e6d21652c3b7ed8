#include "unifconc/quadrature.hpp"

#include "unifconc/error.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace unifconc {

namespace {

constexpr int gl_order = 20;

struct Rule20 {
    std::array<double, gl_order> nodes{};
    std::array<double, gl_order> weights{};

    Rule20()
    {
        for (int i = 0; i < gl_order; ++i) {
            // Chebyshev-like initial guess for the i-th root of P_20.
            double x = std::cos(std::numbers::pi * (i + 0.75) / (gl_order + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= gl_order; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = gl_order * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) {
                    break;
                }
            }
            nodes[static_cast<size_t>(i)] = x;
            weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

double panel_sum(const Integrand& f, const GaussLegendreRule& rule, double lo, double hi)
{
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return s * half;
}

double panel_lo(double a, double b, long panels, long p)
{
    return a + (b - a) * static_cast<double>(p) / static_cast<double>(panels);
}

} // namespace

const GaussLegendreRule& gauss_legendre_20()
{
    static const Rule20 rule;
    static const GaussLegendreRule view{rule.nodes, rule.weights};
    return view;
}

double integrate_panels_serial(const Integrand& f, double a, double b, long panels)
{
    const auto& rule = gauss_legendre_20();
    double total = 0.0;
    for (long p = 0; p < panels; ++p) {
        total += panel_sum(f, rule, panel_lo(a, b, panels, p), panel_lo(a, b, panels, p + 1));
    }
    return total;
}

double integrate_panels(const Integrand& f, double a, double b, long panels)
{
    const auto& rule = gauss_legendre_20();
    std::vector<double> partial(static_cast<size_t>(panels));
#pragma omp parallel for schedule(static) if (panels >= 64)
    for (long p = 0; p < panels; ++p) {
        partial[static_cast<size_t>(p)] = panel_sum(f, rule, panel_lo(a, b, panels, p), panel_lo(a, b, panels, p + 1));
    }
    double total = 0.0;
    for (double v : partial) {
        total += v;
    }
    return total;
}

QuadratureResult integrate_refined(const Integrand& f, double a, double b, long initial_panels, double tol,
                                   int max_levels)
{
    if (!(tol > 0.0)) {
        throw invalid_parameter("integrate_refined: tolerance must be positive");
    }
    if (a == b) {
        return {0.0, 0.0, 0};
    }
    long panels = std::max(1L, initial_panels);
    double coarse = integrate_panels(f, a, b, panels);
    double diff = 0.0;
    for (int level = 0; level < max_levels; ++level) {
        panels *= 2;
        const double fine = integrate_panels(f, a, b, panels);
        diff = std::abs(fine - coarse);
        if (diff <= tol) {
            return {fine, diff, panels};
        }
        coarse = fine;
    }
    throw convergence_error("quadrature did not converge within " + std::to_string(max_levels) + " refinements",
                            coarse, diff);
}

namespace {

struct AdaptiveState {
    const Integrand& f;
    const GaussLegendreRule& rule;
    int max_depth;
    double error = 0.0;
    long panels = 0;
    bool exhausted = false;
};

double adapt(AdaptiveState& st, double a, double b, double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double left = panel_sum(st.f, st.rule, a, m);
    const double right = panel_sum(st.f, st.rule, m, b);
    const double diff = std::abs(left + right - whole);
    // Below a few ulps the refinement difference is rounding noise.
    const double noise = 16.0 * std::numeric_limits<double>::epsilon() * std::abs(left + right);
    if (diff <= std::max(tol, noise) || depth >= st.max_depth) {
        if (diff > std::max(tol, noise)) {
            st.exhausted = true;
        }
        st.error += diff;
        st.panels += 2;
        return left + right;
    }
    return adapt(st, a, m, left, 0.5 * tol, depth + 1) + adapt(st, m, b, right, 0.5 * tol, depth + 1);
}

} // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double tol, int max_depth)
{
    if (!(tol > 0.0)) {
        throw invalid_parameter("integrate_adaptive: tolerance must be positive");
    }
    if (a == b) {
        return {0.0, 0.0, 0};
    }
    AdaptiveState st{f, gauss_legendre_20(), max_depth};
    const double value = adapt(st, a, b, panel_sum(f, st.rule, a, b), tol, 0);
    if (st.exhausted) {
        throw convergence_error("adaptive quadrature hit its depth limit", value, st.error);
    }
    return {value, st.error, st.panels};
}

} // namespace unifconc
