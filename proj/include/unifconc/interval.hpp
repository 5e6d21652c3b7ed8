#pragma once

#include "unifconc/bigrational.hpp"

#include <string>

namespace unifconc {

enum class Round { down, up };

/// mantissa * 2^exponent, kept with an odd mantissa (or zero with exponent 0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long v) : Dyadic(BigInt(v), 0) {}
    Dyadic(BigInt mantissa, long exponent);

    const BigInt& mantissa() const { return mantissa_; }
    long exponent() const { return exponent_; }

    int sign() const { return sgn(mantissa_); }

    /// Rounds to at most `bits` significant bits in the given direction.
    Dyadic rounded(long bits, Round dir) const;

    /// Closest dyadic with `bits` significant bits on the requested side of q.
    static Dyadic from_rational(const BigRational& q, long bits, Round dir);

    BigRational to_rational() const;
    double to_double() const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }

    friend int compare(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

private:
    BigInt mantissa_ = 0;
    long exponent_ = 0;
};

/// Directed division a / b rounded to `bits` significant bits.
Dyadic divide(const Dyadic& a, const Dyadic& b, long bits, Round dir);

/// Directed square root of a non-negative dyadic.
Dyadic square_root(const Dyadic& a, long bits, Round dir);

/// Closed interval [lo, hi] with dyadic endpoints.
///
/// The precision-taking operations round outward, so the result always
/// contains the exact real result for any choice of operands in the inputs.
class Interval {
public:
    Interval() = default;
    Interval(Dyadic point) : lo_(point), hi_(point) {}
    Interval(Dyadic lo, Dyadic hi);

    /// Tightest enclosure of q at the given precision (exact when q is dyadic).
    static Interval enclose(const BigRational& q, long bits);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }

    Dyadic width() const { return hi_ - lo_; }
    bool contains(const BigRational& q) const;
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    double midpoint() const { return (lo_ + hi_).to_double() / 2.0; }

    Interval rounded(long bits) const;

    std::string to_string(int digits = 20) const;

private:
    Dyadic lo_;
    Dyadic hi_;
};

Interval add(const Interval& a, const Interval& b, long bits);
Interval sub(const Interval& a, const Interval& b, long bits);
Interval mul(const Interval& a, const Interval& b, long bits);
/// Throws domain_error when b contains zero.
Interval div(const Interval& a, const Interval& b, long bits);
Interval neg(const Interval& a);

/// Componentwise min: an enclosure of min(x, y) for x in a, y in b.
Interval min(const Interval& a, const Interval& b);

/// Enclosure of pi with width <= 2^-bits (Machin's arctan formula).
/// Results are memoized per precision.
Interval pi_enclosure(long bits);

/// Enclosure of {sqrt(t) : t in x}; throws domain_error when x.lo < 0.
Interval sqrt_enclosure(const Interval& x, long bits = 64);

/// Enclosure of exp(x) for rational x, relative width about 2^-bits.
Interval exp_enclosure(const BigRational& x, long bits);

} // namespace unifconc
