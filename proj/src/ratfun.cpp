#include "wb/ratfun.hpp"

#include <optional>
#include <sstream>

namespace wb {

namespace {

QPoly unit_normal(const QPoly& p) {
    if (p.is_zero()) return p;
    return p * p.lc().inverse();
}

// Over Q: integer coefficients with content 1; over F_p: monic.
QPoly int_normal(const QPoly& p) {
    if (p.is_zero()) return p;
    std::uint32_t ch = p.lc().characteristic();
    if (ch != 0) return unit_normal(p);
    mpz_class l = 1, g = 0;
    for (auto& t : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.value().get_den_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.value().get_num_mpz_t());
    }
    mpq_class k(l, g);
    if (p.lc().value() < 0) k = -k;
    return p * QPoly(Scalar(k));
}

QPoly lc_in(const QPoly& p, int v) { return p.coeff_of(v, p.degree(v)); }

QPoly shift(const QPoly& p, int v, int k) {
    if (k == 0) return p;
    return p.mul_term(Scalar(1), exp_var(v, k));
}

// Pseudo-remainder of a by b as polynomials in v.
QPoly prem(QPoly a, const QPoly& b, int v) {
    int db = b.degree(v);
    QPoly lb = lc_in(b, v);
    while (!a.is_zero() && a.involves(v) && a.degree(v) >= db) {
        int da = a.degree(v);
        QPoly la = lc_in(a, v);
        a = lb * a - shift(la, v, da - db) * b;
    }
    if (!a.is_zero() && db == 0) return QPoly();
    return a;
}

QPoly content_in(const QPoly& p, int v) {
    QPoly g;
    int d = p.degree(v);
    for (int k = d; k >= 0; --k) {
        QPoly c = p.coeff_of(v, k);
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant()) return QPoly(Scalar(1));
    }
    return g;
}

QPoly primitive_in(const QPoly& p, int v) {
    if (p.is_zero()) return p;
    QPoly c = content_in(p, v);
    QPoly q = c.is_constant() ? p : poly_exact_div(p, c);
    return int_normal(q);
}

}  // namespace

std::optional<QPoly> poly_divide(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    QPoly r = a.with_order(Order::Grevlex);
    QPoly d = b.with_order(Order::Grevlex);
    QPoly q;
    while (!r.is_zero()) {
        if (!exp_divides(d.lm(), r.lm())) return std::nullopt;
        Exp e = exp_div(r.lm(), d.lm());
        Scalar c = r.lc() / d.lc();
        q += QPoly::monomial(c, e);
        r -= d.mul_term(c, e);
    }
    return q;
}

QPoly poly_exact_div(const QPoly& a, const QPoly& b) {
    auto q = poly_divide(a, b);
    if (!q) throw ArithmeticError("inexact polynomial division");
    return *q;
}

QPoly poly_gcd(const QPoly& a0, const QPoly& b0) {
    QPoly a = a0.with_order(Order::Grevlex), b = b0.with_order(Order::Grevlex);
    if (a.is_zero()) return unit_normal(b);
    if (b.is_zero()) return unit_normal(a);
    if (a.is_constant() || b.is_constant()) return QPoly(Scalar(1));
    int v = std::max(a.max_var(), b.max_var());
    if (!a.involves(v)) return poly_gcd(a, content_in(b, v));
    if (!b.involves(v)) return poly_gcd(content_in(a, v), b);
    QPoly ca = content_in(a, v), cb = content_in(b, v);
    QPoly c = poly_gcd(ca, cb);
    QPoly pa = primitive_in(a, v), pb = primitive_in(b, v);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        QPoly r = prem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) break;
        if (!r.involves(v)) {
            pa = QPoly(Scalar(1));
            break;
        }
        pb = primitive_in(r, v);
    }
    return unit_normal(c * primitive_in(pa, v));
}

RatFun::RatFun(const QPoly& n, const QPoly& d)
    : num_(n.with_order(Order::Grevlex)), den_(d.with_order(Order::Grevlex)) {
    normalize();
}

RatFun RatFun::coprime(const QPoly& n, const QPoly& d) {
    if (n.is_zero() || d.is_constant()) return RatFun(n, d);
    RatFun r;
    r.num_ = n.with_order(Order::Grevlex);
    r.den_ = d.with_order(Order::Grevlex);
    Scalar l = r.den_.lc();
    if (!l.is_one()) {
        Scalar li = l.inverse();
        r.num_ = r.num_ * li;
        r.den_ = r.den_ * li;
    }
    return r;
}

std::uint32_t RatFun::characteristic() const {
    if (!num_.is_zero()) return num_.lc().characteristic();
    return den_.lc().characteristic();
}

RatFun RatFun::lifted(std::uint32_t p) const {
    if (p == 0 || characteristic() == p) return *this;
    auto lift = [&](const QPoly& a) {
        QPoly r;
        for (auto& t : a.terms()) r += QPoly::monomial(t.c.lifted(p), t.e);
        return r;
    };
    return RatFun(lift(num_), lift(den_));
}

void RatFun::normalize() {
    if (den_.is_zero()) throw ArithmeticError("zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(Scalar::of(1, den_.lc().characteristic()));
        return;
    }
    if (!den_.is_constant() && !num_.is_constant()) {
        QPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
    }
    Scalar l = den_.lc();
    if (!l.is_one()) {
        Scalar li = l.inverse();
        num_ = num_ * li;
        den_ = den_ * li;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    if (a.den_.is_constant() && b.den_.is_constant()) return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    // Henrici: only the common part of the denominators can cancel
    QPoly g = a.den_ == b.den_ ? a.den_ : poly_gcd(a.den_, b.den_);
    RatFun r;
    if (g.is_constant()) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    } else {
        QPoly ap = poly_exact_div(a.den_, g), bp = poly_exact_div(b.den_, g);
        QPoly t = a.num_ * bp + b.num_ * ap;
        if (t.is_zero()) return RatFun(t);
        QPoly g2 = poly_gcd(t, g);
        if (!g2.is_constant()) {
            t = poly_exact_div(t, g2);
            g = poly_exact_div(g, g2);
        }
        r.num_ = t;
        r.den_ = ap * bp * g;
    }
    if (r.num_.is_zero()) return RatFun(r.num_);
    Scalar l = r.den_.lc();
    if (!l.is_one()) {
        Scalar li = l.inverse();
        r.num_ = r.num_ * li;
        r.den_ = r.den_ * li;
    }
    return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) {
        RatFun z;
        z.den_ = QPoly(Scalar::of(1, std::max(a.characteristic(), b.characteristic())));
        return z;
    }
    if (a.den_.is_constant() && b.den_.is_constant()) {
        RatFun r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }
    QPoly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
    RatFun r;
    r.num_ = poly_exact_div(a.num_, g1) * poly_exact_div(b.num_, g2);
    r.den_ = poly_exact_div(a.den_, g2) * poly_exact_div(b.den_, g1);
    Scalar l = r.den_.lc();
    if (!l.is_one()) {
        r.num_ = r.num_ * l.inverse();
        r.den_ = r.den_ * l.inverse();
    }
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return RatFun(den_, num_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFun r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;
}

std::string monomial_str(const Exp& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += i < names.size() ? names[i] : "v" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string scalar_coeff_str(const Scalar& c, bool first, bool has_monomial) {
    std::string v = c.str();
    bool neg = !v.empty() && v[0] == '-';
    if (neg) v.erase(0, 1);
    std::string out;
    if (first) out = neg ? "-" : "";
    else out = neg ? " - " : " + ";
    if (has_monomial && v == "1") return out;
    return out + v + (has_monomial ? "*" : "");
}

std::string poly_str(const QPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : p.terms()) {
        std::string m = monomial_str(t.e, names);
        s += scalar_coeff_str(t.c, first, !m.empty()) + m;
        first = false;
    }
    return s;
}

std::string RatFun::str(const std::vector<std::string>& names, bool atomic) const {
    std::string n = poly_str(num_, names);
    if (den_.is_constant()) {
        if (atomic && (num_.size() > 1 || (!n.empty() && n[0] == '-'))) return "(" + n + ")";
        return n;
    }
    std::string d = poly_str(den_, names);
    bool simple_den = den_.size() == 1 && den_.lc().is_one() && den_.terms()[0].e.size() > 0 &&
                      den_.variables().size() == 1;
    std::string s = (num_.size() > 1 ? "(" + n + ")" : n) + "/" + (simple_den ? d : "(" + d + ")");
    return atomic ? "(" + s + ")" : s;
}

}  // namespace wb
