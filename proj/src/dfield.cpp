#include "wb/dfield.hpp"

#include "wb/groebner.hpp"
#include "wb/text.hpp"

namespace wb {

DField::DField(std::shared_ptr<const OpSystem> ops, std::vector<std::string> gens, std::vector<std::vector<RatFun>> action)
    : ops_(std::move(ops)), gens_(std::move(gens)), action_(std::move(action)) {
    action_.resize(gens_.size());
    for (auto& row : action_) {
        row.resize(ops_->size(), RatFun(0));
        for (auto& x : row) x = x.lifted(characteristic());
    }
}

DVector<RatFun> DField::apply_e(int u, const RatFun& x) const {
    const LocalAlgebra& D = ops_->algebra(u);
    bool poly_action = true;
    for (auto& row : action_)
        for (int q = 1; q <= D.m(); ++q) poly_action = poly_action && row[ops_->flat(u, q)].is_polynomial();
    if (poly_action) {
        // all in polynomials, one division per coordinate at the end
        auto var = [&](int g) {
            std::vector<QPoly> c(D.dim());
            c[0] = QPoly::var(g);
            for (int q = 1; q <= D.m(); ++q) {
                const RatFun& v = action_[g][ops_->flat(u, q)];
                c[q] = v.num() * QPoly(v.den().constant_value().inverse());
            }
            return DVector<QPoly>(&D, std::move(c));
        };
        auto coef = [&](const Scalar& s) { return DVector<QPoly>::scalar(D, QPoly(s)); };
        DVector<QPoly> zero = DVector<QPoly>::scalar(D, QPoly());
        DVector<QPoly> num = x.num().evaluate<DVector<QPoly>>(var, coef, zero);
        DVector<QPoly> den = x.den().evaluate<DVector<QPoly>>(var, coef, zero);
        QPoly d0 = den[0];
        if (d0.is_zero()) throw Failure("DIV_FAIL", {}, "denominator has zero residue");
        // 1/(d0 + n) = sum_j (-n)^j / d0^(j+1), n nilpotent of index <= d
        DVector<QPoly> n = -den;
        n[0] = QPoly();
        int d = D.d();
        std::vector<QPoly> d0pow(d + 2, QPoly(Scalar(1)));
        for (int j = 1; j <= d + 1; ++j) d0pow[j] = d0pow[j - 1] * d0;
        DVector<QPoly> acc = zero, term = num;
        for (int j = 0; j <= d; ++j) {
            DVector<QPoly> scaled = term;
            for (int i = 0; i < scaled.size(); ++i) scaled[i] = scaled[i] * d0pow[d - j];
            acc = acc + scaled;
            term = term * n;
        }
        std::vector<RatFun> out(D.dim());
        for (int i = 1; i < D.dim(); ++i) {
            // strip whole powers of d0 first; a leftover common factor is rare
            QPoly a = acc[i];
            int k = d + 1;
            while (k > 0 && !a.is_zero()) {
                auto q = poly_divide(a, d0);
                if (!q) break;
                a = *q;
                --k;
            }
            if (a.is_zero() || d0.is_constant() || poly_gcd(a, d0).is_constant())
                out[i] = RatFun::coprime(a, d0pow[k]);
            else
                out[i] = RatFun(a, d0pow[k]);
        }
        out[0] = x;
        return DVector<RatFun>(&D, std::move(out));
    }
    auto var = [&](int g) {
        std::vector<RatFun> c(D.dim());
        c[0] = RatFun::gen(g);
        for (int q = 1; q <= D.m(); ++q) c[q] = action_[g][ops_->flat(u, q)];
        return DVector<RatFun>(&D, std::move(c));
    };
    auto coef = [&](const Scalar& s) { return DVector<RatFun>::scalar(D, RatFun(s)); };
    DVector<RatFun> zero = DVector<RatFun>::scalar(D, RatFun(0));
    DVector<RatFun> num = x.num().evaluate<DVector<RatFun>>(var, coef, zero);
    if (x.is_polynomial()) {
        Scalar d = x.den().constant_value().inverse();
        for (int i = 0; i < num.size(); ++i) num[i] = num[i] * RatFun(d);
        return num;
    }
    DVector<RatFun> den = x.den().evaluate<DVector<RatFun>>(var, coef, zero);
    if (den[0].is_zero()) throw Failure("DIV_FAIL", {}, "denominator has zero residue");
    return num * den.invert();
}

RatFun DField::partial(int k, const RatFun& x) const {
    if (x.is_scalar()) return RatFun(0);
    int u = ops_->type(k);
    if (x.is_polynomial() && ops_->algebra(u).entries().empty()) {
        // Leibniz without twist: sum of partial derivatives
        RatFun acc(0);
        for (int g : x.num().variables()) acc += RatFun(x.num().derivative(g)) * action_[g][k];
        return acc / RatFun(x.den());
    }
    return apply_e(u, x)[ops_->local(k)];
}

RatFun DField::apply_word(const Word& w, const RatFun& x) const {
    RatFun r = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = partial(*it, r);
    return r;
}

bool DField::is_constant(const RatFun& x) const {
    for (int k = 0; k < ops_->size(); ++k)
        if (!partial(k, x).is_zero()) return false;
    return true;
}

DField DField::extended(const std::string& name, const std::vector<RatFun>& values) const {
    auto gens = gens_;
    gens.push_back(name);
    auto action = action_;
    action.push_back(values);
    return DField(ops_, gens, action);
}

RatFun DField::parse(const std::string& text) const { return parse_ratfun(text, gens_, characteristic()); }

namespace {

std::vector<RatFun> dense(const KUni& a) {
    std::vector<RatFun> c(a.is_zero() ? 0 : a.degree(0) + 1, RatFun(0));
    for (auto& t : a.terms()) c[exp_at(t.e, 0)] = t.c;
    return c;
}

KUni sparse(const std::vector<RatFun>& c) {
    KUni r(Order::Lex);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) r += KUni::monomial(c[i], exp_var(0, static_cast<int>(i)), Order::Lex);
    return r;
}

// quotient and remainder of a by b
std::pair<KUni, KUni> divmod(const KUni& a, const KUni& b) {
    auto r = dense(a), d = dense(b);
    int db = static_cast<int>(d.size()) - 1;
    if (db < 0) throw Failure("DIV_FAIL", {}, "division by zero polynomial");
    std::vector<RatFun> q(r.size() > d.size() ? r.size() - d.size() + 1 : 1, RatFun(0));
    RatFun inv = d.back().inverse();
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (r[i].is_zero()) continue;
        RatFun c = r[i] * inv;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * d[j];
    }
    if (static_cast<int>(r.size()) > db) r.resize(db);
    return {sparse(q), sparse(r)};
}

}  // namespace

KUni uni_rem(const KUni& a, const KUni& f) {
    if (a.is_zero() || a.degree(0) < f.degree(0)) return a.with_order(Order::Lex);
    return divmod(a, f).second;
}

KUni uni_gcd(const KUni& a, const KUni& b) {
    KUni x = a.with_order(Order::Lex), y = b.with_order(Order::Lex);
    while (!y.is_zero()) {
        KUni r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

KUni uni_inverse(const KUni& a, const KUni& f) {
    // extended Euclid: s*a = g (mod f)
    KUni r0 = f.with_order(Order::Lex), r1 = uni_rem(a, f);
    KUni s0(Order::Lex), s1(RatFun(1), Order::Lex);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        KUni s = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if (r0.is_zero() || r0.degree(0) > 0) throw Failure("NOT_UNIT", {}, "element is not invertible modulo f");
    return uni_rem(s0 * KUni(r0.lc().inverse(), Order::Lex), f);
}

namespace {

// e_u(c) for a field element, lifted into polynomials over K
DVector<KUni> lift_e(const DField& K, int u, const RatFun& c) {
    auto v = K.apply_e(u, c);
    std::vector<KUni> out;
    for (auto& x : v.coords()) out.push_back(KUni(x, Order::Lex));
    return DVector<KUni>(&K.ops().algebra(u), std::move(out));
}

DVector<KUni> reduce(DVector<KUni> v, const KUni& f) {
    for (int i = 0; i < v.size(); ++i) v[i] = uni_rem(v[i], f);
    return v;
}

// f^e(E) with E = (a, Y_1, .., Y_m), Horner with reduction mod f
DVector<KUni> eval_fe(const DField& K, const KUni& f, int u, const DVector<KUni>& E) {
    const LocalAlgebra& D = K.ops().algebra(u);
    auto c = dense(f);
    DVector<KUni> acc = DVector<KUni>::scalar(D, KUni(Order::Lex));
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        acc = reduce(acc * E, f);
        if (!c[i].is_zero()) acc = acc + lift_e(K, u, c[i]);
    }
    return reduce(acc, f);
}

}  // namespace

std::vector<KUni> residual(const DField& K, const KUni& f, const std::vector<KUni>& values, int u) {
    const LocalAlgebra& D = K.ops().algebra(u);
    std::vector<KUni> E(D.dim());
    E[0] = KUni::var(0, Order::Lex);
    for (int q = 1; q <= D.m(); ++q) E[q] = values[K.ops().flat(u, q)];
    auto r = eval_fe(K, f, u, DVector<KUni>(&D, E));
    return r.coords();
}

std::vector<KUni> extend_separable(const DField& K, const KUni& f0) {
    KUni f = f0.with_order(Order::Lex).monic();
    KUni df = f.derivative(0);
    if (df.is_zero() || uni_gcd(f, df).degree(0) > 0)
        throw Failure("NOT_SEPARABLE", {}, "f'(a) vanishes modulo f");
    KUni inv = uni_inverse(df, f);
    std::vector<KUni> out(K.ops().size(), KUni(Order::Lex));
    for (int u = 1; u <= 2; ++u) {
        const LocalAlgebra& D = K.ops().algebra(u);
        if (D.m() == 0) continue;
        std::vector<KUni> E(D.dim(), KUni(Order::Lex));
        E[0] = KUni::var(0, Order::Lex);
        // grade by grade; unknowns of the current grade are still zero, so
        // coordinate i of f^e(E) is the known part h_i
        for (int g = 1; g <= D.d(); ++g) {
            auto h = eval_fe(K, f, u, DVector<KUni>(&D, E));
            for (int i = 1; i <= D.m(); ++i)
                if (D.sigma(i) == g) E[i] = uni_rem(-(h[i] * inv), f);
        }
        for (int i = 1; i <= D.m(); ++i) out[K.ops().flat(u, i)] = E[i];
    }
    return out;
}

Verdict extend_inseparable_decide(const DField& K, const KUni& f) {
    std::uint32_t p = K.characteristic();
    if (p == 0) throw Failure("NOT_INSEPARABLE", {}, "characteristic 0 polynomials are separable");
    for (auto& t : f.terms())
        if (exp_at(t.e, 0) % static_cast<int>(p) != 0)
            throw Failure("NOT_INSEPARABLE", {exp_at(t.e, 0)}, "f is not a polynomial in x^p");
    for (auto& t : f.terms())
        if (!K.is_constant(t.c))
            return Verdict::fail("NOT_EXTENDABLE", {exp_at(t.e, 0)},
                                 "coefficient of x^" + std::to_string(exp_at(t.e, 0)) + " (" + K.str(t.c) +
                                     ") is not a constant");
    return Verdict::ok();
}

}  // namespace wb
