#pragma once

#include <optional>
#include <string>

#include "wb/poly.hpp"

namespace wb {

// Multivariate gcd over Q or F_p (recursive primitive PRS), normalized monic.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

// a / b when b divides a exactly; throws otherwise.
QPoly poly_exact_div(const QPoly& a, const QPoly& b);
// a / b if exact, else nothing
std::optional<QPoly> poly_divide(const QPoly& a, const QPoly& b);

// Element of k(gens): numerator / denominator with gcd 1 and monic denominator.
class RatFun {
public:
    RatFun() : den_(Scalar(1)) {}
    RatFun(int v) : num_(Scalar(v)), den_(Scalar(1)) {}
    RatFun(const Scalar& s) : num_(s), den_(Scalar(1)) {}
    RatFun(const QPoly& n) : num_(n.with_order(Order::Grevlex)), den_(Scalar(1)) {}
    RatFun(const QPoly& n, const QPoly& d);

    static RatFun gen(int i) { return RatFun(QPoly::var(i)); }
    // n / d with gcd(n, d) = 1 already known; only the leading coefficient is normalized
    static RatFun coprime(const QPoly& n, const QPoly& d);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_scalar() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Scalar scalar_value() const { return num_.constant_value() / den_.constant_value(); }
    std::uint32_t characteristic() const;
    // coefficients moved into F_p (no-op for p = 0)
    RatFun lifted(std::uint32_t p) const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
    RatFun& operator/=(const RatFun& b) { return *this = *this / b; }
    RatFun pow(int k) const;
    RatFun inverse() const;

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // Canonical text with generator names; `atomic` wraps sums in parentheses.
    std::string str(const std::vector<std::string>& names, bool atomic = false) const;

private:
    void normalize();

    QPoly num_;
    QPoly den_;
};

std::string poly_str(const QPoly& p, const std::vector<std::string>& names);
std::string scalar_coeff_str(const Scalar& c, bool first, bool has_monomial);
std::string monomial_str(const Exp& e, const std::vector<std::string>& names);

}  // namespace wb
