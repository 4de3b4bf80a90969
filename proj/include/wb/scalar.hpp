#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wb {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Q or F_p. A value with characteristic 0 is a plain rational and
// is coerced into F_p when it meets an F_p value, so integer literals work in
// either setting.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    Scalar(int v) : q_(v) {}
    explicit Scalar(const mpq_class& q, std::uint32_t p = 0);

    static Scalar of(long v, std::uint32_t p) { return Scalar(mpq_class(v), p); }
    static Scalar parse(const std::string& text, std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    const mpq_class& value() const { return q_; }

    Scalar inverse() const;
    Scalar pow(unsigned e) const;
    Scalar lifted(std::uint32_t p) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    void reduce();
    static std::uint32_t common(const Scalar& a, const Scalar& b);

    mpq_class q_;
    std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::uint32_t p);

}  // namespace wb
