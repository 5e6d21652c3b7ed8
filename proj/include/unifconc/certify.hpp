#pragma once

#include "unifconc/bigrational.hpp"
#include "unifconc/expr.hpp"
#include "unifconc/interval.hpp"

#include <string_view>

namespace unifconc {

enum class Outcome { holds, fails, inconclusive };

std::string_view to_string(Outcome o);
Outcome outcome_from_string(std::string_view s);

/// Result of a certified comparison lhs < rhs.
/// margin encloses rhs - lhs: holds iff margin.lo > 0, fails iff margin.hi < 0.
struct Verdict {
    Outcome outcome = Outcome::inconclusive;
    long precision_bits_used = 0;
    Interval margin;
};

inline constexpr long default_start_bits = 64;
inline constexpr long default_max_bits = 4096;

/// Classifies a margin enclosure by its sign.
Verdict verdict_from_margin(const Interval& margin, long bits);

/// Certifies lhs < rhs, doubling precision from 64 bits up to max_bits
/// until the margin excludes zero.
Verdict certify_less(const BigRational& lhs, const Expr& rhs, long max_bits = default_max_bits);

/// General form: certifies lhs < rhs for two expressions.
Verdict certify_less(const Expr& lhs, const Expr& rhs, long max_bits = default_max_bits);

/// Exact comparison of two rationals. With strict = false equality counts as
/// holding; the margin is the exact (degenerate) difference rhs - lhs.
Verdict compare_exact(const BigRational& lhs, const BigRational& rhs, bool strict);

} // namespace unifconc
