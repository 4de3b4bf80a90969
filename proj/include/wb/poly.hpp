#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wb/scalar.hpp"

namespace wb {

// Exponent vector with trailing zeros trimmed, so polynomials over different
// numbers of variables mix freely. Variable i is more significant than j < i.
using Exp = std::vector<int>;

enum class Order { Grevlex, Lex };

inline int exp_at(const Exp& e, std::size_t i) { return i < e.size() ? e[i] : 0; }

inline int total_degree(const Exp& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

inline void trim(Exp& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

inline int exp_cmp(Order ord, const Exp& a, const Exp& b) {
    std::size_t n = std::max(a.size(), b.size());
    if (ord == Order::Lex) {
        for (std::size_t i = n; i-- > 0;) {
            int x = exp_at(a, i), y = exp_at(b, i);
            if (x != y) return x < y ? -1 : 1;
        }
        return 0;
    }
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) {
        int x = exp_at(a, i), y = exp_at(b, i);
        if (x != y) return x < y ? 1 : -1;
    }
    return 0;
}

inline Exp exp_mul(const Exp& a, const Exp& b) {
    Exp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = exp_at(a, i) + exp_at(b, i);
    return r;
}

inline bool exp_divides(const Exp& a, const Exp& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// b / a, assuming exp_divides(a, b).
inline Exp exp_div(const Exp& b, const Exp& a) {
    Exp r = b;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
    trim(r);
    return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(exp_at(a, i), exp_at(b, i));
    return r;
}

inline bool exp_coprime(const Exp& a, const Exp& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

inline Exp exp_var(int v, int k = 1) {
    Exp e(static_cast<std::size_t>(v) + 1, 0);
    e[v] = k;
    if (k == 0) e.clear();
    return e;
}

template <class C>
struct Term {
    Exp e;
    C c;
};

// Sparse multivariate polynomial over a field C, terms sorted by decreasing
// monomial under the polynomial's order.
template <class C>
class Poly {
public:
    Poly() = default;
    explicit Poly(Order ord) : ord_(ord) {}
    Poly(const C& c, Order ord = Order::Grevlex) : ord_(ord) {
        if (!c.is_zero()) t_.push_back({Exp{}, c});
    }

    static Poly monomial(const C& c, Exp e, Order ord = Order::Grevlex) {
        Poly p(ord);
        trim(e);
        if (!c.is_zero()) p.t_.push_back({std::move(e), c});
        return p;
    }
    static Poly var(int v, Order ord = Order::Grevlex) { return monomial(C(1), exp_var(v), ord); }

    Order order() const { return ord_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].e.empty()); }
    C constant_value() const { return is_zero() ? C() : (t_.back().e.empty() ? t_.back().c : C()); }
    std::size_t size() const { return t_.size(); }
    const std::vector<Term<C>>& terms() const { return t_; }

    const Term<C>& lead() const { return t_.front(); }
    const Exp& lm() const { return t_.front().e; }
    const C& lc() const { return t_.front().c; }

    int total_degree() const {
        int d = 0;
        for (auto& t : t_) d = std::max(d, wb::total_degree(t.e));
        return d;
    }
    int degree(int v) const {
        int d = 0;
        for (auto& t : t_) d = std::max(d, exp_at(t.e, v));
        return d;
    }
    // Highest variable index occurring, or -1.
    int max_var() const {
        int m = -1;
        for (auto& t : t_) m = std::max(m, static_cast<int>(t.e.size()) - 1);
        return m;
    }
    std::vector<int> variables() const {
        std::vector<bool> seen;
        for (auto& t : t_)
            for (std::size_t i = 0; i < t.e.size(); ++i)
                if (t.e[i]) {
                    if (seen.size() <= i) seen.resize(i + 1, false);
                    seen[i] = true;
                }
        std::vector<int> r;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i]) r.push_back(static_cast<int>(i));
        return r;
    }
    bool involves(int v) const {
        for (auto& t : t_)
            if (exp_at(t.e, v)) return true;
        return false;
    }

    Poly with_order(Order ord) const {
        if (ord == ord_) return *this;
        Poly r(ord);
        r.t_ = t_;
        r.sort_terms();
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.t_) t.c = -t.c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    Poly& operator+=(const Poly& b) { return *this = merge(*this, b, false); }
    Poly& operator-=(const Poly& b) { return *this = merge(*this, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.ord_);
        if (b.t_.size() == 1) return a.mul_term(b.t_[0].c, b.t_[0].e);
        if (a.t_.size() == 1) return b.with_order(a.ord_).mul_term(a.t_[0].c, a.t_[0].e);
        Poly r(a.ord_);
        r.t_.reserve(a.t_.size() * b.t_.size());
        for (auto& x : a.t_)
            for (auto& y : b.t_) r.t_.push_back({exp_mul(x.e, y.e), x.c * y.c});
        r.sort_terms();
        return r;
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend Poly operator*(const Poly& a, const C& c) {
        if (c.is_zero()) return Poly(a.ord_);
        Poly r = a;
        std::vector<Term<C>> out;
        out.reserve(r.t_.size());
        for (auto& t : r.t_) {
            C v = t.c * c;
            if (!v.is_zero()) out.push_back({std::move(t.e), std::move(v)});
        }
        r.t_ = std::move(out);
        return r;
    }
    friend Poly operator*(const C& c, const Poly& a) { return a * c; }

    Poly mul_term(const C& c, const Exp& e) const {
        Poly r(ord_);
        if (c.is_zero()) return r;
        r.t_.reserve(t_.size());
        for (auto& t : t_) {
            C v = t.c * c;
            if (!v.is_zero()) r.t_.push_back({exp_mul(t.e, e), std::move(v)});
        }
        return r;
    }

    Poly pow(unsigned k) const {
        Poly r(C(1), ord_);
        Poly b = *this;
        while (k) {
            if (k & 1u) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (C(1) / lc());
    }

    Poly derivative(int v) const {
        Poly r(ord_);
        for (auto& t : t_) {
            int k = exp_at(t.e, v);
            if (!k) continue;
            Exp e = t.e;
            e[v] -= 1;
            trim(e);
            C c = t.c * C(k);
            if (!c.is_zero()) r.t_.push_back({std::move(e), std::move(c)});
        }
        return r;
    }

    // Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coeff_of(int v, int k) const {
        Poly r(ord_);
        for (auto& t : t_)
            if (exp_at(t.e, v) == k) {
                Exp e = t.e;
                if (static_cast<std::size_t>(v) < e.size()) e[v] = 0;
                trim(e);
                r.t_.push_back({std::move(e), t.c});
            }
        r.sort_terms();
        return r;
    }

    // Rename variables: variable i becomes map[i] (identity beyond map.size()).
    Poly renamed(const std::vector<int>& map) const {
        Poly r(ord_);
        for (auto& t : t_) {
            Exp e;
            for (std::size_t i = 0; i < t.e.size(); ++i) {
                if (!t.e[i]) continue;
                int j = i < map.size() ? map[i] : static_cast<int>(i);
                if (static_cast<std::size_t>(j) >= e.size()) e.resize(j + 1, 0);
                e[j] += t.e[i];
            }
            trim(e);
            r.t_.push_back({std::move(e), t.c});
        }
        r.sort_terms();
        return r;
    }

    // Ring homomorphism evaluation: variables via `var`, coefficients via `coef`.
    template <class R, class VarFn, class CoefFn>
    R evaluate(VarFn&& var, CoefFn&& coef, const R& zero) const {
        R acc = zero;
        std::map<std::pair<int, int>, R> powers;
        std::map<int, R> base;
        auto power = [&](int v, int k) -> R {
            auto bit = base.find(v);
            if (bit == base.end()) bit = base.emplace(v, var(v)).first;
            R val = bit->second;
            for (int i = 2; i <= k; ++i) {
                auto it = powers.find({v, i});
                if (it != powers.end()) {
                    val = it->second;
                } else {
                    val = val * bit->second;
                    powers.emplace(std::make_pair(v, i), val);
                }
            }
            return val;
        };
        for (auto& t : t_) {
            R term = coef(t.c);
            for (std::size_t i = 0; i < t.e.size(); ++i)
                if (t.e[i]) term = term * power(static_cast<int>(i), t.e[i]);
            acc = acc + term;
        }
        return acc;
    }

    template <class F>
    auto map_coefficients(F&& f) const {
        using D = decltype(f(std::declval<C>()));
        Poly<D> r(ord_);
        std::vector<Term<D>> out;
        for (auto& t : t_) {
            D c = f(t.c);
            if (!c.is_zero()) out.push_back({t.e, std::move(c)});
        }
        r.assign_sorted(std::move(out));
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.ord_ != b.ord_) return a == b.with_order(a.ord_);
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].e != b.t_[i].e || !(a.t_[i].c == b.t_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Caller guarantees strictly decreasing exponents and nonzero coefficients.
    void assign_sorted(std::vector<Term<C>> terms) { t_ = std::move(terms); }

    void sort_terms() {
        Order ord = ord_;
        std::sort(t_.begin(), t_.end(),
                  [ord](const Term<C>& x, const Term<C>& y) { return exp_cmp(ord, x.e, y.e) > 0; });
        std::vector<Term<C>> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().e == t.e) {
                out.back().c = out.back().c + t.c;
            } else {
                if (!out.empty() && out.back().c.is_zero()) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
        t_ = std::move(out);
    }

private:
    static Poly merge(const Poly& a, const Poly& bb, bool negate) {
        const Poly& b = bb.ord_ == a.ord_ ? bb : bb.with_order(a.ord_);
        Poly r(a.ord_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int c;
            if (i == a.t_.size()) c = -1;
            else if (j == b.t_.size()) c = 1;
            else c = exp_cmp(a.ord_, a.t_[i].e, b.t_[j].e);
            if (c > 0) {
                r.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                r.t_.push_back({b.t_[j].e, negate ? -b.t_[j].c : b.t_[j].c});
                ++j;
            } else {
                C v = negate ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
                if (!v.is_zero()) r.t_.push_back({a.t_[i].e, std::move(v)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Order ord_ = Order::Grevlex;
    std::vector<Term<C>> t_;
};

using QPoly = Poly<Scalar>;

// Variable substitution into polynomials over the same coefficient field.
template <class C>
Poly<C> substitute(const Poly<C>& p, const std::function<Poly<C>(int)>& var) {
    return p.template evaluate<Poly<C>>(var, [&](const C& c) { return Poly<C>(c, p.order()); }, Poly<C>(p.order()));
}

}  // namespace wb
