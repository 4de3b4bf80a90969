#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wb/scalar.hpp"

namespace wb {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::string where) : std::runtime_error(msg), location(std::move(where)) {}
    std::string location;
};

struct Expr {
    enum Kind { Num, Ident, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Num;
    std::string text;  // literal or identifier
    int pos = 0;       // 1-based column
    int exponent = 0;
    std::vector<std::unique_ptr<Expr>> args;
};

// Arithmetic expressions: + - * / ^ (integer exponent), parentheses, rational
// literals and identifiers, where an identifier may carry a bracketed index
// such as x1_[1,2;1,1] or w[2,1].
std::unique_ptr<Expr> parse_expr(const std::string& src);

// Evaluate into any field-like T.
template <class T>
T eval_expr(const Expr& e, const std::function<T(const std::string&, int)>& ident,
            const std::function<T(const std::string&, int)>& number) {
    switch (e.kind) {
        case Expr::Num: return number(e.text, e.pos);
        case Expr::Ident: return ident(e.text, e.pos);
        case Expr::Neg: return -eval_expr<T>(*e.args[0], ident, number);
        case Expr::Add: return eval_expr<T>(*e.args[0], ident, number) + eval_expr<T>(*e.args[1], ident, number);
        case Expr::Sub: return eval_expr<T>(*e.args[0], ident, number) - eval_expr<T>(*e.args[1], ident, number);
        case Expr::Mul: return eval_expr<T>(*e.args[0], ident, number) * eval_expr<T>(*e.args[1], ident, number);
        case Expr::Div: return eval_expr<T>(*e.args[0], ident, number) / eval_expr<T>(*e.args[1], ident, number);
        case Expr::Pow: {
            T b = eval_expr<T>(*e.args[0], ident, number);
            T r = number("1", e.pos);
            for (int i = 0; i < e.exponent; ++i) r = r * b;
            return r;
        }
    }
    throw ParseError("bad expression node", std::to_string(e.pos));
}

}  // namespace wb
