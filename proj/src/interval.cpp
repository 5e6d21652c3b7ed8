#include "unifconc/error.hpp"
#include "unifconc/interval.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace unifconc {

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_) {
        throw domain_error("Interval: lower endpoint exceeds upper endpoint");
    }
}

Interval Interval::enclose(const BigRational& q, long bits)
{
    return Interval(Dyadic::from_rational(q, bits, Round::down), Dyadic::from_rational(q, bits, Round::up));
}

bool Interval::contains(const BigRational& q) const
{
    return lo_.to_rational() <= q && q <= hi_.to_rational();
}

Interval Interval::rounded(long bits) const
{
    return Interval(lo_.rounded(bits, Round::down), hi_.rounded(bits, Round::up));
}

std::string Interval::to_string(int digits) const
{
    return "[" + lo_.to_rational().to_decimal(digits) + ", " + hi_.to_rational().to_decimal(digits) + "]";
}

Interval add(const Interval& a, const Interval& b, long bits)
{
    return Interval((a.lo() + b.lo()).rounded(bits, Round::down), (a.hi() + b.hi()).rounded(bits, Round::up));
}

Interval sub(const Interval& a, const Interval& b, long bits)
{
    return Interval((a.lo() - b.hi()).rounded(bits, Round::down), (a.hi() - b.lo()).rounded(bits, Round::up));
}

Interval mul(const Interval& a, const Interval& b, long bits)
{
    const Dyadic p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p), [](const Dyadic& x, const Dyadic& y) { return x < y; });
    return Interval(mn->rounded(bits, Round::down), mx->rounded(bits, Round::up));
}

Interval div(const Interval& a, const Interval& b, long bits)
{
    if (b.contains_zero()) {
        throw domain_error("Interval div: divisor contains zero");
    }
    Dyadic lo, hi;
    bool first = true;
    for (const Dyadic* x : {&a.lo(), &a.hi()}) {
        for (const Dyadic* y : {&b.lo(), &b.hi()}) {
            Dyadic d = divide(*x, *y, bits, Round::down);
            Dyadic u = divide(*x, *y, bits, Round::up);
            if (first || d < lo) {
                lo = std::move(d);
            }
            if (first || hi < u) {
                hi = std::move(u);
            }
            first = false;
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval neg(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval min(const Interval& a, const Interval& b)
{
    return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

namespace {

struct ArctanSum {
    BigInt sum; // scaled by 2^w
    long terms;
};

// sum_k (-1)^k floor(2^w / ((2k+1) x^(2k+1))) until the truncated term vanishes.
// Each truncated term is within one unit of the true one and the dropped tail is
// below one unit, so |sum - 2^w atan(1/x)| < terms + 1.
ArctanSum arctan_inverse(unsigned long x, long w)
{
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(w));
    mpz_fdiv_q_ui(power.get_mpz_t(), power.get_mpz_t(), x);
    const unsigned long x2 = x * x;
    ArctanSum out{0, 0};
    BigInt term;
    for (unsigned long k = 0;; ++k) {
        mpz_fdiv_q_ui(term.get_mpz_t(), power.get_mpz_t(), 2 * k + 1);
        if (term == 0) {
            break;
        }
        if (k % 2 == 0) {
            out.sum += term;
        } else {
            out.sum -= term;
        }
        ++out.terms;
        mpz_fdiv_q_ui(power.get_mpz_t(), power.get_mpz_t(), x2);
    }
    return out;
}

Interval compute_pi(long bits)
{
    // pi = 16 atan(1/5) - 4 atan(1/239)
    const long w = bits + 24 + bit_length(BigInt(bits));
    const ArctanSum a5 = arctan_inverse(5, w);
    const ArctanSum a239 = arctan_inverse(239, w);
    const BigInt centre = 16 * a5.sum - 4 * a239.sum;
    const BigInt slack = 16 * BigInt(a5.terms + 1) + 4 * BigInt(a239.terms + 1);
    return Interval(Dyadic(centre - slack, -w), Dyadic(centre + slack, -w)).rounded(bits + 8);
}

} // namespace

Interval pi_enclosure(long bits)
{
    static std::mutex mutex;
    static std::map<long, Interval> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(bits); it != cache.end()) {
            return it->second;
        }
    }
    Interval value = compute_pi(bits);
    std::lock_guard lock(mutex);
    cache.emplace(bits, value);
    return value;
}

Interval sqrt_enclosure(const Interval& x, long bits)
{
    if (x.lo().sign() < 0) {
        throw domain_error("sqrt_enclosure: interval has negative lower endpoint");
    }
    return Interval(square_root(x.lo(), bits, Round::down), square_root(x.hi(), bits, Round::up));
}

Interval exp_enclosure(const BigRational& x, long bits)
{
    if (x.sign() < 0) {
        const Interval pos = exp_enclosure(-x, bits + 4);
        return div(Interval(Dyadic(1)), pos, bits);
    }
    // Reduce to y = x / 2^r <= 1/2, then square r times.
    long r = 0;
    {
        const long diff = bit_length(x.numerator()) - bit_length(x.denominator());
        r = std::max(0L, diff + 2);
    }
    const BigRational y = x / BigRational(pow_ui(BigInt(2), static_cast<unsigned long>(r)));
    const long w = bits + r + 16;
    const Interval yi = Interval::enclose(y, w);
    const Dyadic threshold(BigInt(1), -w);

    Interval sum(Dyadic(1));
    Interval term(Dyadic(1));
    for (long k = 1;; ++k) {
        term = div(mul(term, yi, w), Interval(Dyadic(k)), w);
        if (term.hi() < threshold) {
            // Remaining terms shrink by at least 1/2 each, so the tail is at most 2 * term.
            sum = Interval(sum.lo(), (sum.hi() + term.hi() * Dyadic(2)).rounded(w, Round::up));
            break;
        }
        sum = add(sum, term, w);
    }
    for (long i = 0; i < r; ++i) {
        sum = mul(sum, sum, w);
    }
    return sum.rounded(bits);
}

} // namespace unifconc
