#pragma once

#include "unifconc/bigrational.hpp"
#include "unifconc/exactdist.hpp"

namespace unifconc {

struct CltReport {
    long ell = 2;
    long n = 1;
    BigRational concentration;
    /// sqrt(n) c_{ell,n} / sqrt(6 / (pi (ell^2 - 1)))
    double ratio = 0.0;
    /// sup_k |sqrt(n) u(k) - phi((k - n mu) / (sigma sqrt(n))) / sigma|
    double sup_deviation = 0.0;
};

/// sqrt(n) c_{ell,n} sqrt(pi (ell^2 - 1) / 6), from the exact concentration
/// through a 128-bit enclosure.
double clt_ratio(long ell, long n);
double clt_ratio(long ell, long n, const BigRational& concentration);

/// Sup-norm distance between the rescaled pmf and the Gaussian density over
/// k in [-n(ell-1), 2n(ell-1)], in extended precision.
double local_clt_sup_dev(long ell, long n);
double local_clt_sup_dev(const ExactDensity& d);
/// Serial reference for the parallel scan.
double local_clt_sup_dev_serial(const ExactDensity& d);

CltReport clt_report(long ell, long n);

} // namespace unifconc
