#pragma once

#include "unifconc/bigrational.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace unifconc {

/// Lattice parameters of U_ell^{*n}: ell support points per factor, n factors.
struct LatticeParams {
    long ell = 1;
    long n = 1;

    /// Throws invalid_parameter unless ell >= 1 and n >= 1.
    void validate() const;

    /// Largest support point n(ell-1).
    long max_support() const { return n * (ell - 1); }
    long support_size() const { return max_support() + 1; }

    friend bool operator==(const LatticeParams&, const LatticeParams&) = default;
};

/// Exact pmf of U_ell^{*n}: the probability of k is numerators[k] / ell^n.
///
/// Numerators are stored un-reduced over the implicit common denominator, so
/// normalization (sum == ell^n) and symmetry can be checked exactly.
class ExactDensity {
public:
    ExactDensity(LatticeParams params, std::vector<BigInt> numerators);

    const LatticeParams& params() const { return params_; }
    std::span<const BigInt> numerators() const { return numerators_; }
    const BigInt& numerator(long k) const { return numerators_[static_cast<size_t>(k)]; }
    long support_size() const { return static_cast<long>(numerators_.size()); }

    /// Exponent of the common denominator ell^n.
    long denominator_exponent() const { return params_.n; }
    BigInt denominator() const;

    /// pmf value at any integer k (zero off the support).
    BigRational pmf(long k) const;

    /// Checks non-negativity, symmetry and normalization exactly.
    bool satisfies_invariants() const;

private:
    LatticeParams params_;
    std::vector<BigInt> numerators_;
};

/// The pmf of U_ell (uniform on {0, ..., ell-1}).
ExactDensity uniform_density(long ell);

/// The point mass at zero viewed as the zeroth convolution power (n = 0).
ExactDensity identity_density(long ell);

/// Exact convolution; both operands must share ell. Result n is a.n + b.n.
/// Symmetric inputs are exploited by computing half the output and mirroring.
/// Parallelized over output indices with OpenMP.
ExactDensity convolve(const ExactDensity& a, const ExactDensity& b);

/// Naive full Cauchy product; the serial reference for convolve.
ExactDensity convolve_serial(const ExactDensity& a, const ExactDensity& b);

/// U_ell^{*n} by binary powering (O(log n) convolutions).
ExactDensity power(const LatticeParams& params);

/// d * U_ell, computed as a sliding window sum. Used to step through
/// consecutive powers without re-squaring.
ExactDensity convolve_with_uniform(const ExactDensity& d);

/// De Moivre's alternating binomial sum for the pmf at k, evaluated exactly.
BigRational de_moivre_pmf(const LatticeParams& params, long k);

/// Numerator of de_moivre_pmf over ell^n (may be computed for k off the
/// support, where the alternating sum cancels to zero).
BigInt de_moivre_numerator(const LatticeParams& params, long k);

/// c_{ell,n}: the pmf at floor(n(ell-1)/2).
BigRational concentration(const LatticeParams& params);

/// Central value of an already computed density.
BigRational central_value(const ExactDensity& d);

/// All k at which the pmf is maximal, in increasing order.
std::vector<long> argmax_set(const ExactDensity& d);

struct Moments {
    BigRational mean;
    BigRational variance;
};

Moments moments(const ExactDensity& d);

/// max over k of u(k) + u(k+1).
BigRational pair_concentration(const LatticeParams& params);
BigRational pair_concentration(const ExactDensity& d);

/// Central binomial probability C(2k,k) 2^{-2k}.
BigRational central_binomial_probability(long k);

} // namespace unifconc
