#include "unifconc/bigrational.hpp"

#include "unifconc/error.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace unifconc {

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den)
{
    if (den == 0) {
        throw domain_error("BigRational: zero denominator");
    }
    q_.canonicalize();
}

BigRational operator/(const BigRational& a, const BigRational& b)
{
    if (b.is_zero()) {
        throw domain_error("BigRational: division by zero");
    }
    return BigRational(mpq_class(a.q_ / b.q_));
}

BigInt pow_ui(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

long bit_length(const BigInt& v)
{
    if (v == 0) {
        return 0;
    }
    return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

namespace {

BigInt pow10(long e) { return pow_ui(BigInt(10), static_cast<unsigned long>(e)); }

// v * 10^-e as an exact rational
mpq_class scale_pow10(const mpq_class& v, long e)
{
    mpq_class r = v;
    if (e > 0) {
        r /= mpq_class(pow10(e));
    } else if (e < 0) {
        r *= mpq_class(pow10(-e));
    }
    return r;
}

BigInt round_integer(const mpq_class& x, Rounding mode)
{
    BigInt r;
    switch (mode) {
    case Rounding::down:
        mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        break;
    case Rounding::up:
        mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        break;
    case Rounding::nearest: {
        mpq_class shifted = x + mpq_class(1, 2);
        mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        break;
    }
    }
    return r;
}

// Decimal exponent e with 10^(digits-1) <= |v| * 10^-e < 10^digits.
long decimal_exponent(const mpq_class& absv, int digits)
{
    long e = static_cast<long>(mpz_sizeinbase(absv.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(absv.get_den_mpz_t(), 10)) - digits;
    const mpq_class lower(pow10(digits - 1));
    const mpq_class upper(pow10(digits));
    for (;;) {
        const mpq_class s = scale_pow10(absv, e);
        if (s < lower) {
            --e;
        } else if (s >= upper) {
            ++e;
        } else {
            return e;
        }
    }
}

} // namespace

BigRational round_decimal(const BigRational& v, int digits, Rounding mode)
{
    if (v.is_zero()) {
        return v;
    }
    const mpq_class absv = abs(v.raw());
    const long e = decimal_exponent(absv, digits);
    const BigInt m = round_integer(scale_pow10(v.raw(), e), mode);
    mpq_class r(m);
    return BigRational(scale_pow10(r, -e));
}

std::string BigRational::to_string() const
{
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::to_decimal(int digits) const
{
    if (is_zero()) {
        return "0";
    }
    const mpq_class absv = abs(q_);
    const long e = decimal_exponent(absv, digits);
    const BigInt m = round_integer(scale_pow10(absv, e), Rounding::nearest);
    const std::string s = m.get_str();
    const long exp10 = e + static_cast<long>(s.size()) - 1;

    std::string out = sign() < 0 ? "-" : "";
    out += s[0];
    if (digits > 1) {
        out += '.';
        std::string frac = s.substr(1, static_cast<size_t>(digits - 1));
        frac.resize(static_cast<size_t>(digits - 1), '0');
        out += frac;
    }
    out += 'e';
    out += exp10 < 0 ? '-' : '+';
    std::string es = std::to_string(exp10 < 0 ? -exp10 : exp10);
    if (es.size() < 2) {
        es.insert(0, "0");
    }
    out += es;
    return out;
}

BigRational BigRational::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw invalid_parameter("BigRational::parse: empty string");
    }
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0) {
            throw invalid_parameter("BigRational::parse: malformed fraction '" + s + "'");
        }
        return BigRational(num, den);
    }

    size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seen_point) {
                ++frac_digits;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    long exponent = 0;
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') {
            throw invalid_parameter("BigRational::parse: malformed number '" + s + "'");
        }
        const std::string es = s.substr(pos + 1);
        char* end = nullptr;
        exponent = std::strtol(es.c_str(), &end, 10);
        if (es.empty() || *end != '\0') {
            throw invalid_parameter("BigRational::parse: malformed exponent in '" + s + "'");
        }
    }
    if (digits.empty()) {
        throw invalid_parameter("BigRational::parse: no digits in '" + s + "'");
    }
    const BigInt mantissa(digits, 10);
    mpq_class r(negative ? BigInt(-mantissa) : mantissa);
    return BigRational(scale_pow10(r, frac_digits - exponent));
}

} // namespace unifconc
