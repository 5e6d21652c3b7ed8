#include "unifconc/error.hpp"
#include "unifconc/interval.hpp"

#include <algorithm>
#include <cmath>

namespace unifconc {

namespace {

BigInt shl(const BigInt& v, long s)
{
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    return r;
}

BigInt shr(const BigInt& v, long s, Round dir)
{
    BigInt r;
    if (dir == Round::down) {
        mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    } else {
        mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    }
    return r;
}

BigInt divide_int(const BigInt& a, const BigInt& b, Round dir)
{
    BigInt r;
    if (dir == Round::down) {
        mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
        mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    return r;
}

} // namespace

Dyadic::Dyadic(BigInt mantissa, long exponent) : mantissa_(std::move(mantissa)), exponent_(exponent)
{
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    const long tz = static_cast<long>(mpz_scan1(mantissa_.get_mpz_t(), 0));
    if (tz > 0) {
        mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
        exponent_ += tz;
    }
}

Dyadic Dyadic::rounded(long bits, Round dir) const
{
    const long len = bit_length(mantissa_);
    if (len <= bits) {
        return *this;
    }
    const long s = len - bits;
    return Dyadic(shr(mantissa_, s, dir), exponent_ + s);
}

Dyadic Dyadic::from_rational(const BigRational& q, long bits, Round dir)
{
    const BigInt num = q.numerator();
    const BigInt den = q.denominator();
    if (mpz_popcount(den.get_mpz_t()) == 1) {
        const long e = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
        return Dyadic(num, -e).rounded(bits, dir);
    }
    // One guard bit beyond `bits` so the integer quotient has at least `bits` bits.
    const long k = bits - (bit_length(num) - bit_length(den)) + 1;
    BigInt m = k >= 0 ? divide_int(shl(num, k), den, dir) : divide_int(num, shl(den, -k), dir);
    return Dyadic(std::move(m), -k).rounded(bits, dir);
}

BigRational Dyadic::to_rational() const
{
    if (exponent_ >= 0) {
        return BigRational(shl(mantissa_, exponent_));
    }
    return BigRational(mantissa_, shl(BigInt(1), -exponent_));
}

double Dyadic::to_double() const
{
    if (mantissa_ == 0) {
        return 0.0;
    }
    long e = 0;
    const double d = mpz_get_d_2exp(&e, mantissa_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(std::clamp(e + exponent_, -100000L, 100000L)));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    if (a.mantissa_ == 0) {
        return b;
    }
    if (b.mantissa_ == 0) {
        return a;
    }
    if (a.exponent_ <= b.exponent_) {
        return Dyadic(a.mantissa_ + shl(b.mantissa_, b.exponent_ - a.exponent_), a.exponent_);
    }
    return Dyadic(shl(a.mantissa_, a.exponent_ - b.exponent_) + b.mantissa_, b.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b)
{
    return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

int compare(const Dyadic& a, const Dyadic& b)
{
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) {
        return sa < sb ? -1 : 1;
    }
    if (sa == 0) {
        return 0;
    }
    // Same sign: compare magnitudes of the leading bit first.
    const long ta = bit_length(a.mantissa_) + a.exponent_;
    const long tb = bit_length(b.mantissa_) + b.exponent_;
    if (ta != tb) {
        return (ta < tb ? -1 : 1) * sa;
    }
    const int c = a.exponent_ <= b.exponent_ ? cmp(a.mantissa_, shl(b.mantissa_, b.exponent_ - a.exponent_))
                                             : cmp(shl(a.mantissa_, a.exponent_ - b.exponent_), b.mantissa_);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

Dyadic divide(const Dyadic& a, const Dyadic& b, long bits, Round dir)
{
    if (b.sign() == 0) {
        throw domain_error("Dyadic divide: division by zero");
    }
    if (a.sign() == 0) {
        return Dyadic();
    }
    const long s = std::max(0L, bits + bit_length(b.mantissa()) - bit_length(a.mantissa()) + 1);
    BigInt q = divide_int(shl(a.mantissa(), s), b.mantissa(), dir);
    return Dyadic(std::move(q), a.exponent() - b.exponent() - s).rounded(bits, dir);
}

Dyadic square_root(const Dyadic& a, long bits, Round dir)
{
    if (a.sign() < 0) {
        throw domain_error("Dyadic square_root: negative argument");
    }
    if (a.sign() == 0) {
        return Dyadic();
    }
    // sqrt(m 2^e) = sqrt(m 2^(e + 2j)) 2^-j with e + 2j >= 0 and enough bits under the root.
    const long e = a.exponent();
    const long need = 2 * bits + 2 - bit_length(a.mantissa()) - e;
    long j = std::max((need + 1) / 2, (-e + 1) / 2);
    if (e + 2 * j < 0) {
        ++j;
    }
    const BigInt radicand = shl(a.mantissa(), e + 2 * j);
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), radicand.get_mpz_t());
    if (dir == Round::up && r * r != radicand) {
        r += 1;
    }
    return Dyadic(std::move(r), -j).rounded(bits, dir);
}

} // namespace unifconc
