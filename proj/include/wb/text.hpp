#pragma once

#include <string>
#include <vector>

#include "wb/expr.hpp"
#include "wb/ratfun.hpp"

namespace wb {

// Parse an expression over named generators into k(gens). Unknown names and
// malformed text raise ParseError.
RatFun parse_ratfun(const std::string& src, const std::vector<std::string>& names, std::uint32_t p);

// Same, but the result must be a polynomial.
QPoly parse_poly(const std::string& src, const std::vector<std::string>& names, std::uint32_t p);

}  // namespace wb
