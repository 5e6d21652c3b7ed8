#pragma once

#include "unifconc/bigrational.hpp"
#include "unifconc/interval.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace unifconc {

/// Closed-form real expression over rational constants, pi, sqrt and the
/// four arithmetic operations. Immutable; copies share structure.
class Expr {
public:
    enum class Kind { constant, pi, sqrt, neg, add, sub, mul, div };

    Expr(const BigRational& value);
    Expr(long value) : Expr(BigRational(value)) {}

    static Expr pi();

    /// Parses e.g. "sqrt(6/(pi*24*2))". Integers, "pi", "sqrt(...)",
    /// unary minus, + - * / and parentheses. Throws expression_error.
    static Expr parse(std::string_view text);

    Kind kind() const;

    /// Outward-rounded enclosure with `bits` significant bits per operation.
    /// Throws expression_error for a negative square root argument, and
    /// domain_error when a divisor cannot be separated from zero at this
    /// precision.
    Interval evaluate(long bits) const;

    /// Exact value when the expression contains neither pi nor sqrt.
    bool is_rational() const;
    BigRational rational_value() const;

    std::string to_string() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr operator-() const;
    friend Expr sqrt(const Expr& a);

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

} // namespace unifconc
