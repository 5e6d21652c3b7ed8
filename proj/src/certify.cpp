#include "unifconc/certify.hpp"

#include "unifconc/error.hpp"

#include <algorithm>
#include <string>

namespace unifconc {

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::holds:
        return "holds";
    case Outcome::fails:
        return "fails";
    case Outcome::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

Outcome outcome_from_string(std::string_view s)
{
    if (s == "holds") {
        return Outcome::holds;
    }
    if (s == "fails") {
        return Outcome::fails;
    }
    if (s == "inconclusive") {
        return Outcome::inconclusive;
    }
    throw invalid_parameter("unknown verdict '" + std::string(s) + "'");
}

Verdict verdict_from_margin(const Interval& margin, long bits)
{
    Outcome o = Outcome::inconclusive;
    if (margin.lo().sign() > 0) {
        o = Outcome::holds;
    } else if (margin.hi().sign() < 0) {
        o = Outcome::fails;
    }
    return {o, bits, margin};
}

Verdict certify_less(const Expr& lhs, const Expr& rhs, long max_bits)
{
    if (max_bits < 8) {
        throw invalid_parameter("certify_less: max precision must be at least 8 bits");
    }
    const Expr difference = rhs - lhs;
    Verdict last;
    bool have_margin = false;
    for (long bits = std::min(default_start_bits, max_bits);; bits = std::min(2 * bits, max_bits)) {
        try {
            last = verdict_from_margin(difference.evaluate(bits), bits);
            have_margin = true;
            if (last.outcome != Outcome::inconclusive) {
                return last;
            }
        } catch (const domain_error& e) {
            // A divisor not yet separated from zero; more precision may help.
            if (bits >= max_bits) {
                throw expression_error(std::string("cannot evaluate expression: ") + e.what());
            }
        }
        if (bits >= max_bits) {
            break;
        }
    }
    if (!have_margin) {
        throw expression_error("cannot evaluate expression");
    }
    return last;
}

Verdict certify_less(const BigRational& lhs, const Expr& rhs, long max_bits)
{
    return certify_less(Expr(lhs), rhs, max_bits);
}

Verdict compare_exact(const BigRational& lhs, const BigRational& rhs, bool strict)
{
    const BigRational diff = rhs - lhs;
    const Dyadic lo = Dyadic::from_rational(diff, 64, Round::down);
    const Dyadic hi = Dyadic::from_rational(diff, 64, Round::up);
    Outcome o;
    if (diff.sign() > 0 || (!strict && diff.is_zero())) {
        o = Outcome::holds;
    } else {
        o = Outcome::fails;
    }
    return {o, 0, Interval(lo, hi)};
}

} // namespace unifconc
