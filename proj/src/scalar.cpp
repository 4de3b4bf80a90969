#include "wb/scalar.hpp"

#include <ostream>

namespace wb {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Scalar::Scalar(const mpq_class& q, std::uint32_t p) : q_(q), p_(p) {
    q_.canonicalize();
    reduce();
}

Scalar Scalar::parse(const std::string& text, std::uint32_t p) {
    mpq_class q;
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || q.set_str(t, 10) != 0)
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(q, p);
}

void Scalar::reduce() {
    if (p_ == 0) return;
    mpz_class P(p_);
    mpz_class n = q_.get_num() % P;
    mpz_class d = q_.get_den() % P;
    if (d == 0) throw ArithmeticError("denominator divisible by the characteristic");
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
    n = (n * dinv) % P;
    if (n < 0) n += P;
    q_ = mpq_class(n);
}

std::uint32_t Scalar::common(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.p_;
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    throw ArithmeticError("mixed characteristics " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
}

Scalar Scalar::lifted(std::uint32_t p) const {
    if (p == p_) return *this;
    if (p_ != 0) throw ArithmeticError("cannot change a nonzero characteristic");
    return Scalar(q_, p);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.q_ = -r.q_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    std::uint32_t p = common(*this, o);
    if (p != p_) *this = lifted(p);
    q_ += o.p_ == p ? o.q_ : o.lifted(p).q_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    std::uint32_t p = common(*this, o);
    if (p != p_) *this = lifted(p);
    q_ *= o.p_ == p ? o.q_ : o.lifted(p).q_;
    reduce();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    Scalar r = *this;
    r.q_ = 1 / q_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(unsigned e) const {
    Scalar r = Scalar::of(1, p_);
    Scalar b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.q_ == b.q_;
    std::uint32_t p = Scalar::common(a, b);
    return a.lifted(p).q_ == b.lifted(p).q_;
}

std::string Scalar::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace wb
