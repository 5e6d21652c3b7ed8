#include "unifconc/bounds.hpp"
#include "unifconc/certify.hpp"
#include "unifconc/error.hpp"
#include "unifconc/exactdist.hpp"

#include <doctest.h>

#include <set>
#include <utility>

using namespace unifconc;

namespace {

BigRational dec(const char* s) { return BigRational::parse(s); }

// The enclosure contains the reference and is narrower than `slack`.
bool tight_around(const Interval& iv, const BigRational& reference, const BigRational& slack)
{
    return iv.lo().to_rational() <= reference + slack && reference - slack <= iv.hi().to_rational() &&
           iv.width().to_rational() <= slack;
}

BigRational rel_width(const BoundValue& b) { return b.value.width().to_rational() / b.value.lo().to_rational(); }

BigRational two_pow_neg(long e) { return BigRational(BigInt(1), pow_ui(BigInt(2), static_cast<unsigned long>(e))); }

} // namespace

// Reference digits below are from 50-digit mpmath evaluations of the closed forms.

TEST_CASE("main bound values and verdicts")
{
    const BoundValue b24 = main_bound(2, 4, 128);
    CHECK(b24.kind == BoundKind::main_bound);
    CHECK(tight_around(b24.value, dec("0.39894228040143267793994605993438186847585863116493"), dec("1e-30")));
    CHECK(BigRational(3, 8) < b24.value.lo().to_rational());

    const BoundValue b52 = main_bound(5, 2, 128);
    CHECK(tight_around(b52.value, dec("0.19947114020071633896997302996719093423792931558247"), dec("1e-30")));
    CHECK(b52.value.hi().to_rational() < BigRational(1, 5));

    const BoundValue b22 = main_bound(2, 2, 128);
    CHECK(tight_around(b22.value, dec("0.56418958354775628694807945156077258584405062932900"), dec("1e-30")));
    CHECK(BigRational(1, 2) < b22.value.lo().to_rational());
}

TEST_CASE("enclosure width tracks requested precision")
{
    for (long bits : {32L, 64L, 256L, 1024L}) {
        CHECK(rel_width(main_bound(7, 13, bits)) <= two_pow_neg(bits - 2));
        CHECK(rel_width(corollary_bound(7, 13, bits)) <= two_pow_neg(bits - 2));
        CHECK(rel_width(wallis_bound(99, bits)) <= two_pow_neg(bits - 2));
        CHECK(rel_width(d_sequence(6, bits)) <= two_pow_neg(bits - 2));
        CHECK(rel_width(bessel_chain_bound(17, bits)) <= two_pow_neg(bits - 2));
    }
    CHECK(main_bound(3, 3, 512).value.width() < main_bound(3, 3, 128).value.width());
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(main_bound(1, 3, 64), invalid_parameter);
    CHECK_THROWS_AS(main_bound(3, 0, 64), invalid_parameter);
    CHECK_THROWS_AS(corollary_bound(1, 1, 64), invalid_parameter);
    CHECK_THROWS_AS(wallis_bound(0, 64), invalid_parameter);
    CHECK_THROWS_AS(d_sequence(0, 64), invalid_parameter);
    CHECK_THROWS_AS(bessel_chain_bound(0, 64), invalid_parameter);
    CHECK_THROWS_AS(main_bound(2, 2, 0), invalid_parameter);
    CHECK_THROWS_AS(bessel_G(-1.0, 1e-12), invalid_parameter);
    CHECK_THROWS_AS(bessel_G(1.0, 0.0), invalid_parameter);
}

TEST_CASE("corollary bound")
{
    CHECK(tight_around(corollary_bound(2, 1, 128).value, dec("0.79788456080286535587989211986876373695171726232987"),
                       dec("1e-30")));
    const BoundValue c24 = corollary_bound(2, 4, 128);
    CHECK(tight_around(c24.value, dec("0.39894228040143267793994605993438186847585863116493"), dec("1e-30")));
    const BoundValue c41 = corollary_bound(4, 1, 128);
    CHECK(tight_around(c41.value, dec("0.39894228040143267793994605993438186847585863116493"), dec("1e-30")));
    CHECK(BigRational(1, 4) < c41.value.lo().to_rational());
}

TEST_CASE("main bound is strictly decreasing in ell and n")
{
    for (long ell = 2; ell <= 20; ++ell) {
        for (long n = 1; n <= 100; ++n) {
            const Expr here = main_bound_expr(ell, n);
            if (n < 100) {
                REQUIRE(certify_less(main_bound_expr(ell, n + 1), here).outcome == Outcome::holds);
            }
            if (ell < 20) {
                REQUIRE(certify_less(main_bound_expr(ell + 1, n), here).outcome == Outcome::holds);
            }
        }
    }
}

TEST_CASE("corollary bound dominates the main bound")
{
    for (long ell = 2; ell <= 30; ++ell) {
        for (long n = 1; n <= 40; ++n) {
            const Interval main = main_bound(ell, n, 200).value;
            const Interval cor = corollary_bound(ell, n, 200).value;
            if (ell == 2) {
                // Identical values: the enclosures must overlap.
                const BigRational gap = cor.lo().to_rational() - main.hi().to_rational();
                CHECK(gap <= BigRational(0));
                CHECK(main.lo().to_rational() <= cor.hi().to_rational());
            } else {
                CHECK(certify_less(main_bound_expr(ell, n), corollary_bound_expr(ell, n)).outcome == Outcome::holds);
            }
        }
    }
}

TEST_CASE("Bretagnolle relation: exact characterization on the grid")
{
    // c(ell,n) <= (2/ell) c(2,n) holds on l in 2..12, n in 1..60 except at
    // these cells (independently confirmed by brute-force rational arithmetic).
    const std::set<std::pair<long, long>> violations{{3, 3}, {3, 5}, {5, 3}, {7, 3}, {9, 3}, {11, 3}};
    std::set<std::pair<long, long>> found;
    for (long n = 1; n <= 60; ++n) {
        const BigRational binary = concentration({2, n});
        for (long ell = 2; ell <= 12; ++ell) {
            const Verdict v = compare_exact(concentration({ell, n}), BigRational(2, ell) * binary, false);
            if (v.outcome != Outcome::holds) {
                found.insert({ell, n});
            }
        }
    }
    CHECK(found == violations);
    CHECK(concentration({3, 3}) == BigRational(7, 27));
    CHECK(BigRational(2, 3) * concentration({2, 3}) == BigRational(1, 4));
}

TEST_CASE("Wallis bound")
{
    const BoundValue w1 = wallis_bound(1, 128);
    CHECK(tight_around(w1.value, dec("0.56418958354775628694807945156077258584405062932900"), dec("1e-30")));
    CHECK(BigRational(1, 2) < w1.value.lo().to_rational());
    const BoundValue w2 = wallis_bound(2, 128);
    CHECK(tight_around(w2.value, dec("0.39894228040143267793994605993438186847585863116493"), dec("1e-30")));
    CHECK(BigRational(3, 8) < w2.value.lo().to_rational());
    CHECK(certify_less(central_binomial_probability(100), wallis_bound_expr(100)).outcome == Outcome::holds);
}

TEST_CASE("d sequence")
{
    const BoundValue d1 = d_sequence(1, 128);
    CHECK(d_sequence_expr(1).rational_value() == BigRational(157, 160));
    CHECK(d1.value.contains(BigRational(157, 160)));
    CHECK(tight_around(d_sequence(2, 128).value, dec("1.2464876345948128822545743902509787278238008756351"), dec("1e-30")));
    CHECK(tight_around(d_sequence(4, 128).value, dec("0.99475938621623440685454786585424822731865007296959"), dec("1e-30")));
    // Odd n is exactly rational; even n carries the 1/(sqrt3 (n-1) 2^(n-1)) term.
    CHECK(d_sequence_expr(7).is_rational());
    CHECK_FALSE(d_sequence_expr(8).is_rational());
    CHECK(certify_less(Expr(1), d_sequence_expr(2)).outcome == Outcome::holds);
    for (long n : {1L, 3L, 4L, 5L, 6L, 10L, 100L, 9999L, 10000L}) {
        CHECK(certify_less(d_sequence_expr(n), Expr(1)).outcome == Outcome::holds);
    }
}

TEST_CASE("Bessel G enclosures")
{
    const BoundValue g0 = bessel_G(0.0, 1e-12);
    CHECK(g0.kind == BoundKind::bessel_g);
    CHECK(g0.value.lo().to_rational() == BigRational(1));
    CHECK(g0.value.hi().to_rational() == BigRational(1));

    struct Case {
        BigRational lambda;
        const char* value;
    };
    const Case cases[] = {
        {BigRational(2, 3), "0.752892258443716625"},
        {BigRational(4, 3), "0.612214668849917637"},
        {BigRational(2), "0.523777611802608699"},
        {BigRational(200, 3), "0.0975367562033119486"},
        {BigRational(400, 3), "0.0690339582135885083"},
    };
    for (const auto& c : cases) {
        const Interval g = bessel_G(c.lambda, 1e-12).value;
        CAPTURE(c.lambda.to_string());
        CHECK(tight_around(g, dec(c.value), dec("2e-12")));
        // A tighter tolerance narrows the enclosure.
        CHECK(tight_around(bessel_G(c.lambda, 1e-30).value, dec(c.value), dec("1e-18")));
    }
    CHECK(pair_concentration({3, 2}) < bessel_G(BigRational(4, 3), 1e-12).value.lo().to_rational());
    CHECK(bessel_G(BigRational(200, 3), 1e-12).value.hi() < bessel_chain_bound(100, 128).value.lo());
    const BoundValue from_double = bessel_G(0.5, 1e-12);
    CHECK(tight_around(from_double.value, dec("0.80145607363402176525"), dec("2e-12")));
}

TEST_CASE("Bessel chain bound")
{
    CHECK(tight_around(bessel_chain_bound(1, 128).value, dec("0.97720502380583984317276924567669400915177121638846"), dec("1e-30")));
    CHECK(tight_around(bessel_chain_bound(3, 128).value, dec("0.56418958354775628694807945156077258584405062932900"), dec("1e-30")));
    const BoundValue b2 = bessel_chain_bound(2, 128);
    CHECK(tight_around(b2.value, dec("0.69098829894267095853048929206377936627875474065249"), dec("1e-30")));
    CHECK(bessel_G(BigRational(4, 3), 1e-12).value.hi() < b2.value.lo());
}
