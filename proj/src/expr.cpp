#include "wb/expr.hpp"

#include <algorithm>
#include <cctype>

namespace wb {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::unique_ptr<Expr> run() {
        auto e = sum();
        skip();
        if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(i_ + 1), "column " + std::to_string(i_ + 1));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    static std::unique_ptr<Expr> node(Expr::Kind k, int pos, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b = {}) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->pos = pos;
        e->args.push_back(std::move(a));
        if (b) e->args.push_back(std::move(b));
        return e;
    }

    std::unique_ptr<Expr> sum() {
        auto e = product();
        for (;;) {
            skip();
            int pos = static_cast<int>(i_) + 1;
            if (eat('+')) e = node(Expr::Add, pos, std::move(e), product());
            else if (eat('-')) e = node(Expr::Sub, pos, std::move(e), product());
            else return e;
        }
    }
    std::unique_ptr<Expr> product() {
        auto e = unary();
        for (;;) {
            skip();
            int pos = static_cast<int>(i_) + 1;
            if (eat('*')) e = node(Expr::Mul, pos, std::move(e), unary());
            else if (eat('/')) e = node(Expr::Div, pos, std::move(e), unary());
            else return e;
        }
    }
    std::unique_ptr<Expr> unary() {
        skip();
        int pos = static_cast<int>(i_) + 1;
        if (eat('-')) return node(Expr::Neg, pos, unary());
        if (eat('+')) return unary();
        return power();
    }
    std::unique_ptr<Expr> power() {
        auto base = atom();
        skip();
        int pos = static_cast<int>(i_) + 1;
        if (!eat('^')) return base;
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a nonnegative integer exponent");
        auto e = node(Expr::Pow, pos, std::move(base));
        e->exponent = std::stoi(s_.substr(start, i_ - start));
        return e;
    }
    std::unique_ptr<Expr> atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of expression");
        int pos = static_cast<int>(i_) + 1;
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            auto e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        auto e = std::make_unique<Expr>();
        e->pos = pos;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            e->kind = Expr::Num;
            e->text = s_.substr(start, i_ - start);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            if (i_ < s_.size() && s_[i_] == '[') {
                while (i_ < s_.size() && s_[i_] != ']') ++i_;
                if (i_ >= s_.size()) fail("unterminated '['");
                ++i_;
            }
            e->kind = Expr::Ident;
            e->text = s_.substr(start, i_ - start);
            e->text.erase(std::remove_if(e->text.begin(), e->text.end(),
                                         [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
                          e->text.end());
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expr(const std::string& src) { return Parser(src).run(); }

}  // namespace wb
