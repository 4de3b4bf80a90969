#include "wb/kernel.hpp"

#include <algorithm>
#include <cctype>

#include "wb/expr.hpp"

namespace wb {

// ---- jet calculus

JetCalculus::JetCalculus(std::shared_ptr<const GammaSystem> G, int n) : G_(std::move(G)), free_(*G_), n_(n) {
    if (n_ < 1) throw Failure("NOT_A_KERNEL", {n_}, "a kernel needs at least one variable");
}

void JetCalculus::extend(int r) const {
    while (built_ < r) {
        int k = built_ + 1;
        auto ws = normal_words(ops(), k);
        for (int t = 1; t <= n_; ++t)
            for (auto& w : ws) {
                index_[{w, t}] = static_cast<int>(jets_.size());
                jets_.push_back({w, t});
            }
        upto_.push_back(static_cast<int>(jets_.size()));
        built_ = k;
    }
}

int JetCalculus::count(int r) const {
    extend(r);
    return upto_[r];
}

int JetCalculus::index(const Jet& j) const {
    extend(static_cast<int>(j.xi.size()));
    auto it = index_.find({j.xi, j.t});
    if (it == index_.end()) throw Failure("NOT_A_JET", {j.t}, jet_name(ops(), j) + " is not a normal jet");
    return it->second;
}

const Jet& JetCalculus::jet(int v) const {
    // orders past the last normal word add nothing; give up after a few
    int idle = 0;
    while (static_cast<int>(jets_.size()) <= v) {
        std::size_t before = jets_.size();
        extend(built_ + 1);
        idle = jets_.size() == before ? idle + 1 : 0;
        if (idle > 2) throw Failure("NOT_A_JET", {v}, "no jet variable with index " + std::to_string(v));
    }
    return jets_[v];
}

std::vector<std::string> JetCalculus::names(int r) const {
    std::vector<std::string> out;
    int c = count(r);
    for (int v = 0; v < c; ++v) out.push_back(name(v));
    return out;
}

KPoly JetCalculus::var(const Jet& j) const { return KPoly::var(index(j), Order::Lex); }

KPoly JetCalculus::from_free(const FreeVector& w, int t) const {
    KPoly out(Order::Lex);
    for (auto& [eta, c] : w) out += KPoly::monomial(c, exp_var(index({eta, t})), Order::Lex);
    return out;
}

KPoly JetCalculus::word_jet(const Word& xi, int t) const {
    return from_free(free_.apply_word(xi, basis_vector({}, ops().characteristic())), t);
}

const DVector<KPoly>& JetCalculus::e_var(int u, int v) const {
    auto key = std::make_pair(u, v);
    auto it = e_cache_.find(key);
    if (it != e_cache_.end()) return it->second;
    const LocalAlgebra& D = ops().algebra(u);
    const Jet& x = jet(v);
    std::vector<KPoly> c(D.dim(), KPoly(Order::Lex));
    c[0] = KPoly::var(v, Order::Lex);
    for (int j = 1; j <= D.m(); ++j) c[j] = from_free(free_.apply_basis(ops().flat(u, j), x.xi), x.t);
    return e_cache_.emplace(key, DVector<KPoly>(&D, std::move(c))).first->second;
}

DVector<KPoly> JetCalculus::e(int u, const KPoly& f) const {
    const LocalAlgebra& D = ops().algebra(u);
    DVector<KPoly> zero(&D, std::vector<KPoly>(D.dim(), KPoly(Order::Lex)));
    auto coef = [&](const RatFun& c) {
        auto ec = field().apply_e(u, c);
        std::vector<KPoly> out;
        for (auto& x : ec.coords()) out.push_back(KPoly(x, Order::Lex));
        return DVector<KPoly>(&D, std::move(out));
    };
    auto r = f.evaluate<DVector<KPoly>>([&](int v) { return e_var(u, v); }, coef, zero);
    for (int i = 0; i < r.size(); ++i) r[i] = r[i].with_order(Order::Lex);
    return r;
}

KPoly JetCalculus::apply(int k, const KPoly& f) const {
    if (f.is_zero()) return KPoly(Order::Lex);
    return e(ops().type(k), f)[ops().local(k)];
}

KPoly JetCalculus::parse(const std::string& text, int r) const {
    const auto& gens = field().gens();
    int g = static_cast<int>(gens.size());
    std::uint32_t p = ops().characteristic();
    RatFun one(Scalar::of(1, p));
    // jets become generators g, g+1, ... of one big rational function field
    auto to_big = [&](const KPoly& f) {
        RatFun acc(Scalar::of(0, p));
        for (auto& t : f.terms()) {
            Exp e(static_cast<std::size_t>(g), 0);
            e.insert(e.end(), t.e.begin(), t.e.end());
            acc += RatFun(QPoly::monomial(Scalar::of(1, p), e)) * t.c;
        }
        return acc;
    };
    auto expr = parse_expr(text);
    std::function<RatFun(const std::string&, int)> ident = [&](const std::string& s, int pos) -> RatFun {
        for (int i = 0; i < g; ++i)
            if (gens[i] == s) return RatFun::gen(i) * one;
        std::string where = "column " + std::to_string(pos);
        std::size_t us = s.find('_');
        bool digits = s.size() > 1 && s[0] == 'x' && us != std::string::npos && us > 1;
        for (std::size_t i = 1; digits && i < us; ++i) digits = std::isdigit(static_cast<unsigned char>(s[i])) != 0;
        if (!digits) throw ParseError("unknown symbol '" + s + "' at " + where, where);
        int t = std::stoi(s.substr(1, us - 1));
        if (t < 1 || t > n_) throw ParseError("variable index out of range in '" + s + "' at " + where, where);
        Word xi = ops().parse_word(s.substr(us + 1));
        if (static_cast<int>(xi.size()) > r)
            throw ParseError("jet '" + s + "' exceeds order " + std::to_string(r) + " at " + where, where);
        return to_big(word_jet(xi, t));
    };
    std::function<RatFun(const std::string&, int)> number = [&](const std::string& s, int) {
        return RatFun(Scalar::parse(s, p));
    };
    RatFun big;
    try {
        big = eval_expr<RatFun>(*expr, ident, number);
    } catch (const ArithmeticError& err) {
        throw ParseError(std::string("arithmetic error: ") + err.what(), "expression");
    }
    if (big.den().max_var() >= g) throw ParseError("jet variables in a denominator: '" + text + "'", "expression");
    std::map<Exp, QPoly> split;
    for (auto& t : big.num().terms()) {
        Exp base(t.e.begin(), t.e.begin() + std::min<std::size_t>(t.e.size(), g));
        Exp jet(t.e.size() > static_cast<std::size_t>(g) ? t.e.begin() + g : t.e.end(), t.e.end());
        trim(base);
        trim(jet);
        split[jet] += QPoly::monomial(t.c, base);
    }
    KPoly out(Order::Lex);
    for (auto& [e, c] : split) out += KPoly::monomial(RatFun(c, big.den()), e, Order::Lex);
    return out;
}

std::string JetCalculus::str(const KPoly& f) const {
    if (f.is_zero()) return "0";
    std::vector<std::string> nm;
    for (int v = 0; v <= f.max_var(); ++v) nm.push_back(name(v));
    const auto& gens = field().gens();
    std::string s;
    bool first = true;
    for (auto& t : f.terms()) {
        std::string m = monomial_str(t.e, nm);
        if (t.c.is_scalar()) {
            s += scalar_coeff_str(t.c.scalar_value(), first, !m.empty()) + m;
        } else {
            bool neg = !first && t.c.num().lc().sign() < 0 && t.c.characteristic() == 0;
            RatFun c = neg ? -t.c : t.c;
            s += (first ? "" : neg ? " - " : " + ") + c.str(gens, true) + (m.empty() ? "" : "*" + m);
        }
        first = false;
    }
    return s;
}

// ---- kernels

std::vector<int> jet_witness(const OpSystem& S, const Jet& j) {
    std::vector<int> w{j.t};
    for (int k : j.xi) {
        w.push_back(S.type(k));
        w.push_back(S.local(k));
    }
    return w;
}

namespace {

std::vector<int> op_witness(const OpSystem& S, int k) { return {S.type(k), S.local(k)}; }

}  // namespace

Kernel::Kernel(std::shared_ptr<const JetCalculus> J, int r, std::vector<KPoly> relations) : J_(std::move(J)), r_(r) {
    if (r_ < 0) throw Failure("NOT_A_KERNEL", {r_}, "negative length");
    int nv = J_->count(r_);
    for (auto& f : relations) {
        if (f.is_zero()) continue;
        KPoly g = f.with_order(Order::Lex);
        if (g.max_var() >= nv)
            throw Failure("NOT_A_KERNEL", jet_witness(ops(), J_->jet(g.max_var())),
                          "relation uses " + J_->name(g.max_var()) + " beyond order " + std::to_string(r_));
        gens_.push_back(std::move(g));
    }
    basis_ = groebner(gens_, Order::Lex);
    if (!basis_.empty() && basis_.front().is_constant())
        throw Failure("NOT_A_KERNEL", {}, "relations generate the unit ideal");
    // the operators must carry the relations of order <= r-1 into the ideal
    for (auto& g : basis_) {
        if (J_->order(g) >= r_) continue;
        for (int k = 0; k < ops().size(); ++k)
            if (!contains(J_->apply(k, g)))
                throw Failure("NOT_A_KERNEL", op_witness(ops(), k),
                              "d_(" + ops().op_str(k) + ") of " + str(g) + " is not a relation");
    }
}

Kernel Kernel::parse(std::shared_ptr<const GammaSystem> G, int n, int r, const std::vector<std::string>& relations) {
    auto J = std::make_shared<const JetCalculus>(std::move(G), n);
    std::vector<KPoly> rel;
    for (auto& s : relations) rel.push_back(J->parse(s, r));
    return Kernel(J, r, std::move(rel));
}

const LeaderReport& Kernel::leaders() const {
    if (leaders_) return *leaders_;
    auto rep = std::make_shared<LeaderReport>();
    for (int v = 0; v < nvars(); ++v) {
        const KPoly* best = nullptr;
        for (auto& g : basis_)
            if (g.max_var() == v && (!best || g.degree(v) < best->degree(v))) best = &g;
        if (!best) continue;
        LeaderInfo li;
        li.jet = J_->jet(v);
        li.var = v;
        li.min_poly = *best;
        li.separable = !contains(best->derivative(v));
        if (!li.separable) {
            rep->separable = false;
            rep->inseparable.push_back(li.jet);
        }
        rep->leaders.push_back(std::move(li));
    }
    for (auto& a : rep->leaders) {
        if (!a.separable) continue;
        auto pa = psi(ops(), a.jet.xi);
        bool minimal = true;
        for (auto& b : rep->leaders) {
            if (!b.separable || b.var == a.var || b.jet.t != a.jet.t) continue;
            if (dominates(pa, psi(ops(), b.jet.xi))) {
                minimal = false;
                break;
            }
        }
        if (minimal) rep->minimal.push_back(a.jet);
    }
    leaders_ = rep;
    return *leaders_;
}

Kernel generic_prolong(const Kernel& K, ProlongReport* report) {
    const JetCalculus& J = K.calculus();
    const OpSystem& S = K.ops();
    int s = K.r();
    if (S.characteristic()) {
        auto fv = frobenius_assumption(S.algebra(1), S.algebra(2));
        if (!fv.pass) throw Failure(fv.code, fv.witness, fv.detail);
    }
    std::vector<const LeaderInfo*> top;
    for (auto& li : K.leaders().leaders) {
        if (static_cast<int>(li.jet.xi.size()) != s) continue;
        if (!li.separable)
            throw Failure("INSEPARABLE_KERNEL", jet_witness(S, li.jet),
                          "inseparable leader " + jet_name(S, li.jet) + " at top order");
        top.push_back(&li);
    }

    struct Route {
        int i;
        const LeaderInfo* lead;
        KPoly rel;
    };
    std::map<int, std::vector<Route>> routes;
    std::vector<KPoly> gens = K.basis();
    for (auto* li : top)
        for (int i = 0; i < S.size(); ++i) {
            KPoly rel = J.apply(i, li->min_poly);
            Word w = prepend(i, li->jet.xi);
            if (!chi(S, w)) {
                gens.push_back(rel);
                continue;
            }
            routes[J.index({rho(S, w), li->jet.t})].push_back({i, li, rel});
        }
    // leaders come in increasing order and i increases inside, so the first
    // route to each jet is the least one
    for (auto& [mu, rs] : routes) gens.push_back(rs.front().rel);

    int n1 = J.count(s + 1);
    KPoly sep(RatFun(Scalar::of(1, S.characteristic())), Order::Lex);
    for (auto* li : top) {
        KPoly d = li->min_poly.derivative(li->var);
        if (!d.is_constant()) sep *= d;
    }
    std::vector<KPoly> basis;
    if (sep.is_constant()) {
        basis = groebner(gens, Order::Lex);
    } else {
        auto sat = gens;
        sat.push_back(KPoly(RatFun(Scalar::of(1, S.characteristic())), Order::Lex) -
                      sep.mul_term(RatFun(Scalar::of(1, S.characteristic())), exp_var(n1)));
        for (auto& g : groebner(sat, Order::Lex))
            if (g.max_var() < n1) basis.push_back(g);
    }
    if (!basis.empty() && basis.front().is_constant())
        throw Failure("NOT_A_KERNEL", {}, "prolongation is inconsistent");
    for (auto& g : basis)
        if (J.order(g) <= s && !K.contains(g))
            throw Failure("NOT_A_KERNEL", {}, "prolongation forces the new relation " + K.str(g));

    // every other route must give the chosen value
    ProlongReport rep;
    for (auto& [mu, rs] : routes) {
        rep.routes += static_cast<int>(rs.size());
        rep.specialized.push_back(J.jet(mu));
        auto coef = [&](const KPoly& rel) { return rel.coeff_of(mu, 1); };
        const KPoly& r0 = rs.front().rel;
        KPoly c0 = coef(r0), rest0 = r0 - c0.mul_term(RatFun(1), exp_var(mu));
        for (std::size_t k = 1; k < rs.size(); ++k) {
            const KPoly& rk = rs[k].rel;
            KPoly ck = coef(rk), restk = rk - ck.mul_term(RatFun(1), exp_var(mu));
            KPoly diff = rest0 * ck - restk * c0;
            ++rep.routes_compared;
            if (rk.degree(mu) != 1 || !in_ideal(diff.with_order(Order::Lex), basis))
                throw Failure("NOT_A_KERNEL", jet_witness(S, J.jet(mu)),
                              "routes to " + J.name(mu) + " give different values");
        }
    }
    if (report) *report = rep;
    return Kernel(K.calculus_ptr(), s + 1, basis);
}

Verdict realisation_criterion(const Kernel& K, int r) {
    const OpSystem& S = K.ops();
    if (K.r() < 2 * r)
        return Verdict::fail("SHORT_KERNEL", {K.r(), 2 * r}, "the criterion needs a kernel of length 2r");
    const auto& L = K.leaders();
    if (!L.separable)
        return Verdict::fail("INSEPARABLE_KERNEL", jet_witness(S, L.inseparable.front()),
                             "inseparable leader " + jet_name(S, L.inseparable.front()));
    if ((S.m1() == 0 && r >= 1) || (S.size() == 1 && r >= 2)) return Verdict::ok();
    // minimal leaders of order <= 2r among the leaders of order <= 2r
    for (auto& a : L.leaders) {
        int len = static_cast<int>(a.jet.xi.size());
        if (!a.separable || len <= r || len > 2 * r) continue;
        bool minimal = true;
        auto pa = psi(S, a.jet.xi);
        for (auto& b : L.leaders)
            if (b.separable && b.var != a.var && b.jet.t == a.jet.t && dominates(pa, psi(S, b.jet.xi)))
                minimal = false;
        if (minimal)
            return Verdict::fail("NEW_MINIMAL_LEADER", jet_witness(S, a.jet),
                                 "minimal leader " + jet_name(S, a.jet) + " above order " + std::to_string(r));
    }
    return Verdict::ok();
}

Kernel realize(const Kernel& K, int r, int s) {
    if (r < 0 || s < 2 * r || s < K.r())
        throw Failure("BAD_ORDER", {r, s}, "target order must be at least 2r and the kernel length");
    Kernel cur = K;
    while (cur.r() < 2 * r) cur = generic_prolong(cur);
    auto v = realisation_criterion(cur, r);
    if (!v.pass) throw Failure("CRITERION_FAIL", v.witness, v.code + ": " + v.detail);
    auto base = cur.leaders().minimal;
    while (cur.r() < s) {
        cur = generic_prolong(cur);
        if (!(cur.leaders().minimal == base))
            throw Failure("NEW_MINIMAL_LEADER", {cur.r()}, "prolongation changed the minimal leaders");
    }
    return cur;
}

Verdict specialize_check(const Kernel& K, const std::vector<RatFun>& b) {
    if (static_cast<int>(b.size()) != K.n())
        return Verdict::fail("BAD_POINT", {static_cast<int>(b.size()), K.n()}, "wrong number of values");
    const DField& F = K.gamma().field();
    std::uint32_t p = K.ops().characteristic();
    std::map<int, RatFun> values;
    auto value = [&](int v) {
        auto it = values.find(v);
        if (it != values.end()) return it->second;
        const Jet& j = K.calculus().jet(v);
        return values.emplace(v, F.apply_word(j.xi, b[j.t - 1].lifted(p))).first->second;
    };
    const auto& gens = K.generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        RatFun x = gens[k].evaluate<RatFun>(value, [](const RatFun& c) { return c; }, RatFun(Scalar::of(0, p)));
        if (!x.is_zero())
            return Verdict::fail("REJECT", {static_cast<int>(k) + 1}, "relation " + K.str(gens[k]) + " gives " + F.str(x));
    }
    return Verdict::ok();
}

bool isomorphic(const Kernel& A, const Kernel& B) {
    if (A.n() != B.n() || A.r() != B.r() || A.ops().size() != B.ops().size()) return false;
    for (auto& g : A.basis())
        if (!B.contains(g)) return false;
    for (auto& g : B.basis())
        if (!A.contains(g)) return false;
    return true;
}

Verdict gamma_commuting(const Kernel& K, const std::vector<KPoly>& elems) {
    const JetCalculus& J = K.calculus();
    const OpSystem& S = K.ops();
    const GammaSystem& G = K.gamma();
    for (std::size_t e = 0; e < elems.size(); ++e) {
        std::vector<KPoly> d1;
        for (int k = 0; k < S.size(); ++k) d1.push_back(J.apply(k, elems[e]));
        for (int i = 0; i < S.size(); ++i)
            for (int j = 0; j < S.size(); ++j) {
                KPoly x = J.apply(i, d1[j]);
                if (chi(S, i, j)) x -= J.apply(j, d1[i]);
                for (auto& [l, c] : G.terms(i, j)) x -= d1[l] * c;
                if (!K.contains(x))
                    return Verdict::fail("GAMMA_FAIL",
                                         {static_cast<int>(e) + 1, S.type(i), S.local(i), S.type(j), S.local(j)},
                                         "commutation fails on " + K.str(elems[e]));
            }
    }
    return Verdict::ok();
}

}  // namespace wb
