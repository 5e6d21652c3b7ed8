#include "unifconc/expr.hpp"

#include "unifconc/error.hpp"

#include <cctype>

namespace unifconc {

struct Expr::Node {
    Kind kind;
    BigRational value;
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(Expr::Kind kind, std::vector<NodePtr> args, BigRational value = {})
{
    return std::make_shared<const Expr::Node>(Expr::Node{kind, std::move(value), std::move(args)});
}

Interval eval_node(const Expr::Node& node, long bits)
{
    using K = Expr::Kind;
    switch (node.kind) {
    case K::constant:
        return Interval::enclose(node.value, bits);
    case K::pi:
        return pi_enclosure(bits);
    case K::sqrt: {
        const Interval arg = eval_node(*node.args[0], bits);
        if (arg.hi().sign() < 0) {
            throw expression_error("square root of a negative quantity");
        }
        // A lower endpoint below zero is a rounding artefact of a non-negative argument.
        const Interval clamped = arg.lo().sign() < 0 ? Interval(Dyadic(), arg.hi()) : arg;
        return sqrt_enclosure(clamped, bits);
    }
    case K::neg:
        return neg(eval_node(*node.args[0], bits));
    case K::add:
        return add(eval_node(*node.args[0], bits), eval_node(*node.args[1], bits), bits);
    case K::sub:
        return sub(eval_node(*node.args[0], bits), eval_node(*node.args[1], bits), bits);
    case K::mul:
        return mul(eval_node(*node.args[0], bits), eval_node(*node.args[1], bits), bits);
    case K::div:
        return div(eval_node(*node.args[0], bits), eval_node(*node.args[1], bits), bits);
    }
    throw expression_error("unknown expression node");
}

bool node_is_rational(const Expr::Node& node)
{
    if (node.kind == Expr::Kind::pi || node.kind == Expr::Kind::sqrt) {
        return false;
    }
    for (const auto& a : node.args) {
        if (!node_is_rational(*a)) {
            return false;
        }
    }
    return true;
}

BigRational node_rational(const Expr::Node& node)
{
    using K = Expr::Kind;
    switch (node.kind) {
    case K::constant:
        return node.value;
    case K::neg:
        return -node_rational(*node.args[0]);
    case K::add:
        return node_rational(*node.args[0]) + node_rational(*node.args[1]);
    case K::sub:
        return node_rational(*node.args[0]) - node_rational(*node.args[1]);
    case K::mul:
        return node_rational(*node.args[0]) * node_rational(*node.args[1]);
    case K::div: {
        const BigRational d = node_rational(*node.args[1]);
        if (d.is_zero()) {
            throw expression_error("division by zero");
        }
        return node_rational(*node.args[0]) / d;
    }
    default:
        throw expression_error("expression is not rational");
    }
}

std::string node_string(const Expr::Node& node)
{
    using K = Expr::Kind;
    const auto bin = [&](const char* op) {
        return "(" + node_string(*node.args[0]) + op + node_string(*node.args[1]) + ")";
    };
    switch (node.kind) {
    case K::constant:
        return node.value.sign() < 0 || node.value.denominator() != 1 ? "(" + node.value.to_string() + ")"
                                                                       : node.value.to_string();
    case K::pi:
        return "pi";
    case K::sqrt:
        return "sqrt(" + node_string(*node.args[0]) + ")";
    case K::neg:
        return "(-" + node_string(*node.args[0]) + ")";
    case K::add:
        return bin("+");
    case K::sub:
        return bin("-");
    case K::mul:
        return bin("*");
    case K::div:
        return bin("/");
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse()
    {
        NodePtr e = expression();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw expression_error("parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                               std::string(text_) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(std::string_view w)
    {
        skip_space();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    NodePtr expression()
    {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = make_node(Expr::Kind::add, {lhs, term()});
            } else if (accept('-')) {
                lhs = make_node(Expr::Kind::sub, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = make_node(Expr::Kind::mul, {lhs, unary()});
            } else if (accept('/')) {
                lhs = make_node(Expr::Kind::div, {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary()
    {
        if (accept('-')) {
            return make_node(Expr::Kind::neg, {unary()});
        }
        return primary();
    }

    NodePtr primary()
    {
        skip_space();
        if (accept('(')) {
            NodePtr e = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return e;
        }
        if (accept_word("pi")) {
            return make_node(Expr::Kind::pi, {});
        }
        if (accept_word("sqrt")) {
            if (!accept('(')) {
                fail("expected '(' after sqrt");
            }
            NodePtr e = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return make_node(Expr::Kind::sqrt, {e});
        }
        const size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        // Optional exponent: e, an optional sign, then digits.
        if (pos_ > start && pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            size_t q = pos_ + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) {
                ++q;
            }
            if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                    ++q;
                }
                pos_ = q;
            }
        }
        if (start == pos_) {
            fail(pos_ < text_.size() ? std::string("unexpected character '") + text_[pos_] + "'"
                                     : std::string("unexpected end of input"));
        }
        try {
            return make_node(Expr::Kind::constant, {}, BigRational::parse(text_.substr(start, pos_ - start)));
        } catch (const invalid_parameter&) {
            fail("malformed number");
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
};

} // namespace

Expr::Expr(const BigRational& value) : node_(make_node(Kind::constant, {}, value)) {}

Expr Expr::pi() { return Expr(make_node(Kind::pi, {})); }

Expr Expr::parse(std::string_view text) { return Expr(Parser(text).parse()); }

Expr::Kind Expr::kind() const { return node_->kind; }

Interval Expr::evaluate(long bits) const { return eval_node(*node_, bits); }

bool Expr::is_rational() const { return node_is_rational(*node_); }

BigRational Expr::rational_value() const { return node_rational(*node_); }

std::string Expr::to_string() const { return node_string(*node_); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Kind::add, {a.node_, b.node_})); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Kind::sub, {a.node_, b.node_})); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Kind::mul, {a.node_, b.node_})); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Kind::div, {a.node_, b.node_})); }
Expr Expr::operator-() const { return Expr(make_node(Kind::neg, {node_})); }
Expr sqrt(const Expr& a) { return Expr(make_node(Expr::Kind::sqrt, {a.node_})); }

} // namespace unifconc
