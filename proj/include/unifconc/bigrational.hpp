#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace unifconc {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}
    BigRational(const BigInt& v) : q_(v) {}
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "p/q" or a finite decimal such as "-1.25e-3".
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when the denominator is one.
    std::string to_string() const;

    /// Scientific notation with `digits` significant digits, rounded to nearest.
    std::string to_decimal(int digits = 30) const;

    friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ + b.q_)); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ - b.q_)); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ * b.q_)); }
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

BigInt pow_ui(const BigInt& base, unsigned long exp);
BigInt binomial(unsigned long n, unsigned long k);

/// Number of bits in |v|; zero for v == 0.
long bit_length(const BigInt& v);

/// Decimal rounding of a rational to `digits` significant digits, in the
/// requested direction. Returns the exact value of the rounded decimal.
enum class Rounding { down, up, nearest };
BigRational round_decimal(const BigRational& v, int digits, Rounding mode);

} // namespace unifconc
