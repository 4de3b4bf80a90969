#include "wb/text.hpp"

#include "wb/expr.hpp"

namespace wb {

RatFun parse_ratfun(const std::string& src, const std::vector<std::string>& names, std::uint32_t p) {
    auto e = parse_expr(src);
    std::function<RatFun(const std::string&, int)> ident = [&](const std::string& s, int pos) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return RatFun::gen(static_cast<int>(i)) * RatFun(Scalar::of(1, p));
        throw ParseError("unknown symbol '" + s + "' at column " + std::to_string(pos),
                         "column " + std::to_string(pos));
    };
    std::function<RatFun(const std::string&, int)> number = [&](const std::string& s, int) {
        return RatFun(Scalar::parse(s, p));
    };
    try {
        return eval_expr<RatFun>(*e, ident, number);
    } catch (const ArithmeticError& err) {
        throw ParseError(std::string("arithmetic error: ") + err.what(), "expression");
    }
}

QPoly parse_poly(const std::string& src, const std::vector<std::string>& names, std::uint32_t p) {
    RatFun r = parse_ratfun(src, names, p);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial: '" + src + "'", "expression");
    return r.num() * r.den().constant_value().inverse();
}

}  // namespace wb
