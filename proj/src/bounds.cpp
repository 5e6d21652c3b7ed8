#include "unifconc/bounds.hpp"

#include "unifconc/error.hpp"

#include <cmath>
#include <string>

namespace unifconc {

namespace {

void require_lattice(long ell, long n)
{
    if (ell < 2) {
        throw invalid_parameter("bounds require ell >= 2, got " + std::to_string(ell));
    }
    if (n < 1) {
        throw invalid_parameter("bounds require n >= 1, got " + std::to_string(n));
    }
}

void require_positive(const char* name, long v)
{
    if (v < 1) {
        throw invalid_parameter(std::string(name) + " must be >= 1, got " + std::to_string(v));
    }
}

// Guard bits so that rounding in every operation stays within the promised width.
constexpr long guard_bits = 8;

BoundValue evaluate(const Expr& e, BoundKind kind, long precision_bits)
{
    require_positive("precision_bits", precision_bits);
    return {e.evaluate(precision_bits + guard_bits), kind};
}

} // namespace

Expr main_bound_expr(long ell, long n)
{
    require_lattice(ell, n);
    const BigRational scale = BigRational(BigInt(BigInt(ell) * ell - 1)) * BigRational(n);
    return sqrt(Expr(6) / (Expr::pi() * Expr(scale)));
}

Expr corollary_bound_expr(long ell, long n)
{
    require_lattice(ell, n);
    return Expr(2) * sqrt(Expr(2) / Expr::pi()) / (Expr(ell) * sqrt(Expr(n)));
}

Expr wallis_bound_expr(long k)
{
    require_positive("k", k);
    return Expr(1) / sqrt(Expr::pi() * Expr(k));
}

Expr d_sequence_expr(long n)
{
    require_positive("n", n);
    const BigInt nn(n);
    const BigRational rational_part =
        BigRational(1) - BigRational(BigInt(3), 20 * nn) + BigRational(BigInt(21), 160 * nn * nn);
    if (n % 2 != 0) {
        return Expr(rational_part);
    }
    const BigInt den = (nn - 1) * pow_ui(BigInt(2), static_cast<unsigned long>(n - 1));
    return Expr(rational_part) + Expr(BigRational(BigInt(1), den)) / sqrt(Expr(3));
}

Expr bessel_chain_expr(long n)
{
    require_positive("n", n);
    return sqrt(Expr(3) / (Expr::pi() * Expr(n)));
}

BoundValue main_bound(long ell, long n, long precision_bits)
{
    return evaluate(main_bound_expr(ell, n), BoundKind::main_bound, precision_bits);
}

BoundValue corollary_bound(long ell, long n, long precision_bits)
{
    return evaluate(corollary_bound_expr(ell, n), BoundKind::corollary_bound, precision_bits);
}

BoundValue wallis_bound(long k, long precision_bits)
{
    return evaluate(wallis_bound_expr(k), BoundKind::wallis_bound, precision_bits);
}

BoundValue d_sequence(long n, long precision_bits)
{
    return evaluate(d_sequence_expr(n), BoundKind::d_sequence, precision_bits);
}

BoundValue bessel_chain_bound(long n, long precision_bits)
{
    return evaluate(bessel_chain_expr(n), BoundKind::bessel_chain, precision_bits);
}

BoundValue bessel_G(const BigRational& lambda, double tolerance)
{
    if (lambda.sign() < 0) {
        throw invalid_parameter("bessel_G: lambda must be >= 0");
    }
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw invalid_parameter("bessel_G: tolerance must be positive and finite");
    }
    if (lambda.is_zero()) {
        return {Interval(Dyadic(1)), BoundKind::bessel_g};
    }

    // All terms are positive, so relative rounding of w bits per operation
    // keeps the accumulated rounding far below the tolerance.
    const long w = 80 + static_cast<long>(std::ceil(-std::log2(tolerance)));

    const Interval damping = exp_enclosure(-lambda, w);
    const BigRational quarter_sq = lambda * lambda / BigRational(4);
    const Interval x2 = Interval::enclose(quarter_sq, w);
    const Dyadic quarter_tol = Dyadic::from_rational(BigRational(mpq_class(tolerance)) / BigRational(4), 64, Round::down);

    Interval i0_term(Dyadic(1));
    Interval i1_term = Interval::enclose(lambda / BigRational(2), w);
    Interval sum(Dyadic(0));
    for (long m = 0;; ++m) {
        // Ratio bound for every later term of either series.
        const BigRational rho = quarter_sq / BigRational(BigInt(BigInt(m + 1) * (m + 1)));
        const Interval next = add(i0_term, i1_term, w);
        if (rho <= BigRational(BigInt(1), BigInt(2)) && (damping.hi() * next.hi()) <= quarter_tol) {
            const Interval tail = div(next, Interval::enclose(BigRational(1) - rho, w), w);
            sum = Interval(sum.lo(), (sum.hi() + tail.hi()).rounded(w, Round::up));
            break;
        }
        sum = add(sum, next, w);
        i0_term = div(mul(i0_term, x2, w), Interval(Dyadic(BigInt(m + 1) * (m + 1), 0)), w);
        i1_term = div(mul(i1_term, x2, w), Interval(Dyadic(BigInt(m + 1) * (m + 2), 0)), w);
    }
    return {mul(damping, sum, w), BoundKind::bessel_g};
}

BoundValue bessel_G(double lambda, double tolerance)
{
    if (!std::isfinite(lambda)) {
        throw invalid_parameter("bessel_G: lambda must be finite");
    }
    return bessel_G(BigRational(mpq_class(lambda)), tolerance);
}

} // namespace unifconc
