#include "unifconc/asymptotics.hpp"

#include "unifconc/error.hpp"
#include "unifconc/expr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace unifconc {

namespace {

void require_lattice(long ell, long n)
{
    if (ell < 2) {
        throw invalid_parameter("asymptotics require ell >= 2 (sigma > 0), got " + std::to_string(ell));
    }
    if (n < 1) {
        throw invalid_parameter("asymptotics require n >= 1, got " + std::to_string(n));
    }
}

// num / den in [0, 1] to extended precision: floor(num 2^64 / den) / 2^64.
long double probability_to_long_double(const BigInt& num, const BigInt& den)
{
    BigInt scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), 64);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    if (mpz_sizeinbase(scaled.get_mpz_t(), 2) > 64) {
        return 1.0L;
    }
    // x87 long double carries a 64-bit mantissa, so this conversion is exact.
    const long double value = static_cast<long double>(mpz_get_ui(scaled.get_mpz_t()));
    return std::ldexp(value, -64);
}

struct GaussianScale {
    long double mean;
    long double sigma;
    long double root_n;
};

GaussianScale scale_for(const ExactDensity& d)
{
    const long double ell = static_cast<long double>(d.params().ell);
    const long double n = static_cast<long double>(d.params().n);
    return {n * (ell - 1.0L) / 2.0L, std::sqrt((ell * ell - 1.0L) / 12.0L), std::sqrt(n)};
}

long double deviation_at(const ExactDensity& d, const std::vector<long double>& pmf, const GaussianScale& s, long k)
{
    const long double u = (k >= 0 && k < d.support_size()) ? pmf[static_cast<size_t>(k)] : 0.0L;
    const long double x = (static_cast<long double>(k) - s.mean) / (s.sigma * s.root_n);
    const long double phi = std::exp(-x * x / 2.0L) / std::sqrt(2.0L * std::numbers::pi_v<long double>);
    return std::fabs(s.root_n * u - phi / s.sigma);
}

std::vector<long double> pmf_values(const ExactDensity& d)
{
    const BigInt den = d.denominator();
    std::vector<long double> out(static_cast<size_t>(d.support_size()));
    for (long k = 0; k < d.support_size(); ++k) {
        out[static_cast<size_t>(k)] = probability_to_long_double(d.numerator(k), den);
    }
    return out;
}

void require_density(const ExactDensity& d) { require_lattice(d.params().ell, d.params().n); }

} // namespace

double clt_ratio(long ell, long n, const BigRational& concentration)
{
    require_lattice(ell, n);
    const BigRational scale = BigRational(BigInt(BigInt(ell) * ell - 1)) * BigRational(n) / BigRational(6);
    const Expr ratio = Expr(concentration) * sqrt(Expr::pi() * Expr(scale));
    return ratio.evaluate(128).midpoint();
}

double clt_ratio(long ell, long n)
{
    return clt_ratio(ell, n, unifconc::concentration({ell, n}));
}

double local_clt_sup_dev_serial(const ExactDensity& d)
{
    require_density(d);
    const auto pmf = pmf_values(d);
    const GaussianScale s = scale_for(d);
    const long m = d.params().max_support();
    long double best = 0.0L;
    for (long k = -m; k <= 2 * m; ++k) {
        best = std::max(best, deviation_at(d, pmf, s, k));
    }
    return static_cast<double>(best);
}

double local_clt_sup_dev(const ExactDensity& d)
{
    require_density(d);
    const auto pmf = pmf_values(d);
    const GaussianScale s = scale_for(d);
    const long m = d.params().max_support();
    long double best = 0.0L;
    // max is order independent, so the reduction is deterministic.
#pragma omp parallel for reduction(max : best) schedule(static) if (m > 4096)
    for (long k = -m; k <= 2 * m; ++k) {
        best = std::max(best, deviation_at(d, pmf, s, k));
    }
    return static_cast<double>(best);
}

double local_clt_sup_dev(long ell, long n)
{
    require_lattice(ell, n);
    return local_clt_sup_dev(power({ell, n}));
}

CltReport clt_report(long ell, long n)
{
    require_lattice(ell, n);
    const ExactDensity d = power({ell, n});
    CltReport r;
    r.ell = ell;
    r.n = n;
    r.concentration = central_value(d);
    r.ratio = clt_ratio(ell, n, r.concentration);
    r.sup_deviation = local_clt_sup_dev(d);
    return r;
}

} // namespace unifconc
