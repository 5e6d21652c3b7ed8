#pragma once

#include "unifconc/bigrational.hpp"
#include "unifconc/expr.hpp"
#include "unifconc/interval.hpp"

namespace unifconc {

enum class BoundKind { main_bound, corollary_bound, wallis_bound, bessel_g, bessel_chain, d_sequence };

struct BoundValue {
    Interval value;
    BoundKind kind;
};

// Closed forms of the bounds, usable directly with certify_less.
// All reject ell < 2 / n < 1 / k < 1 with invalid_parameter.

/// sqrt(6 / (pi (ell^2 - 1) n))
Expr main_bound_expr(long ell, long n);
/// 2 sqrt(2/pi) / (ell sqrt(n))
Expr corollary_bound_expr(long ell, long n);
/// 1 / sqrt(pi k)
Expr wallis_bound_expr(long k);
/// 1 - 3/(20n) + 21/(160n^2) + [n even] / (sqrt(3) (n-1) 2^(n-1))
Expr d_sequence_expr(long n);
/// sqrt(3 / (pi n))
Expr bessel_chain_expr(long n);

/// Enclosures with relative width at most 2^(2 - precision_bits).
BoundValue main_bound(long ell, long n, long precision_bits);
BoundValue corollary_bound(long ell, long n, long precision_bits);
BoundValue wallis_bound(long k, long precision_bits);
BoundValue d_sequence(long n, long precision_bits);
BoundValue bessel_chain_bound(long n, long precision_bits);

/// G(lambda) = e^-lambda (I0(lambda) + I1(lambda)) from the power series of
/// I0 and I1, truncated with a geometric tail bound; the truncation
/// contributes at most `tolerance` to the width of the enclosure.
BoundValue bessel_G(const BigRational& lambda, double tolerance);
BoundValue bessel_G(double lambda, double tolerance);

} // namespace unifconc
