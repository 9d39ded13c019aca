#include "charcond/expr.hpp"

#include <cctype>
#include <utility>

namespace charcond::expr {

ParseError::ParseError(const std::string& message, size_t at)
    : std::runtime_error(message + " at offset " + std::to_string(at)), offset(at) {}

namespace {

using cyclo::BigInt;
using cyclo::CyclotomicInteger;

std::unique_ptr<Expression> node(Expression e) {
    return std::make_unique<Expression>(std::move(e));
}

/**
 * Single-pass recursive-descent parser over the input bytes.  Each parse_*
 * method leaves `pos` on the first byte it did not consume; errors always
 * report the offset where the offending token starts.
 */
class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression run() {
        Expression e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (!consume(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    std::string digits() {
        skip_ws();
        if (!at_digit()) throw ParseError("expected an integer", pos_);
        size_t start = pos_;
        while (at_digit()) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    long long bounded_digits(const char* what) {
        size_t start = pos_;
        std::string text = digits();
        if (text.size() > 18) throw ParseError(std::string(what) + " is out of range", start);
        return std::stoll(text);
    }

    Expression parse_expr() {
        Expression e = parse_term();
        for (;;) {
            if (consume('+')) {
                Expression rhs = parse_term();
                e = Expression{Expression::Kind::Add, 0, 1, 0, 0, node(std::move(e)),
                               node(std::move(rhs))};
            } else if (consume('-')) {
                Expression rhs = parse_term();
                e = Expression{Expression::Kind::Subtract, 0, 1, 0, 0, node(std::move(e)),
                               node(std::move(rhs))};
            } else {
                return e;
            }
        }
    }

    Expression parse_term() {
        Expression e = parse_factor();
        while (consume('*')) {
            Expression rhs = parse_factor();
            e = Expression{Expression::Kind::Multiply, 0, 1, 0, 0, node(std::move(e)),
                           node(std::move(rhs))};
        }
        return e;
    }

    Expression parse_factor() {
        Expression e = parse_atom();
        if (consume('^')) {
            skip_ws();
            size_t start = pos_;
            std::string text = digits();
            if (text.size() > 9) throw ParseError("exponent is out of range", start);
            Expression out{Expression::Kind::Power};
            out.power_exponent = std::stoull(text);
            out.lhs = node(std::move(e));
            return out;
        }
        return e;
    }

    Expression parse_atom() {
        skip_ws();
        size_t start = pos_;
        if (consume('-')) {
            Expression out{Expression::Kind::Negate};
            out.lhs = node(parse_atom());
            return out;
        }
        if (consume('(')) {
            Expression e = parse_expr();
            expect(')', "')'");
            return e;
        }
        if (peek() == 'z') {
            ++pos_;
            expect('(', "'(' after z");
            skip_ws();
            long long n = bounded_digits("root order");
            expect(',', "','");
            skip_ws();
            bool negative = consume('-');
            skip_ws();
            long long k = bounded_digits("root exponent");
            expect(')', "')'");
            if (n == 0) throw ParseError("root order must be positive", start);
            Expression out{Expression::Kind::Root};
            out.order = n;
            out.root_exponent = negative ? -k : k;
            return out;
        }
        if (at_digit()) {
            Expression out{Expression::Kind::Integer};
            out.literal = BigInt(digits());
            return out;
        }
        throw ParseError("expected an integer, z(n,k), '(', or '-'", pos_);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

CyclotomicInteger combine(const Expression& e,
                          CyclotomicInteger (*op)(const CyclotomicInteger&,
                                                  const CyclotomicInteger&)) {
    auto [a, b] = cyclo::lift_to_common(evaluate(*e.lhs), evaluate(*e.rhs));
    return op(a, b);
}

}  // namespace

Expression parse_expr(std::string_view text) { return Parser(text).run(); }

CyclotomicInteger evaluate(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::Integer: return CyclotomicInteger::from_integer(e.literal);
        case Expression::Kind::Root: return CyclotomicInteger::root(e.order, e.root_exponent);
        case Expression::Kind::Negate: return -evaluate(*e.lhs);
        case Expression::Kind::Add:
            return combine(e, [](const CyclotomicInteger& a, const CyclotomicInteger& b) {
                return a + b;
            });
        case Expression::Kind::Subtract:
            return combine(e, [](const CyclotomicInteger& a, const CyclotomicInteger& b) {
                return a - b;
            });
        case Expression::Kind::Multiply:
            return combine(e, [](const CyclotomicInteger& a, const CyclotomicInteger& b) {
                return a * b;
            });
        case Expression::Kind::Power: return evaluate(*e.lhs).pow(e.power_exponent);
    }
    throw std::logic_error("unhandled expression kind");
}

std::string to_expression(const cyclo::CyclotomicInteger& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [exponent, coeff] : v.terms()) {
        bool negative = coeff < 0;
        BigInt magnitude = negative ? BigInt(-coeff) : coeff;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        if (exponent == 0) {
            out += magnitude.str();
            continue;
        }
        if (magnitude != 1) {
            out += magnitude.str();
            out += '*';
        }
        cyclo::RootOfUnity r = cyclo::RootOfUnity(v.modulus(), exponent).reduced();
        out += "z(" + std::to_string(r.modulus) + "," + std::to_string(r.exponent) + ")";
    }
    return out;
}

}  // namespace charcond::expr
