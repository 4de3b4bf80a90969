#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wb/poly.hpp"

namespace wb {

struct GbAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int gb_degree_cap() {
    if (const char* s = std::getenv("WORKBENCH_GB_DEGREE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && v > 0) return static_cast<int>(v);
    }
    return 12;
}

// Full reduction of f modulo G (all polynomials in the same order).
template <class C>
Poly<C> normal_form(const Poly<C>& f0, const std::vector<Poly<C>>& G) {
    if (G.empty() || f0.is_zero()) return f0;
    Order ord = G.front().order();
    Poly<C> f = f0.with_order(ord);
    std::vector<Term<C>> rem;
    while (!f.is_zero()) {
        const Term<C>& lt = f.lead();
        const Poly<C>* div = nullptr;
        for (auto& g : G)
            if (exp_divides(g.lm(), lt.e)) {
                div = &g;
                break;
            }
        if (div) {
            C c = lt.c / div->lc();
            Exp e = exp_div(lt.e, div->lm());
            f -= div->mul_term(c, e);
        } else {
            rem.push_back(lt);
            Poly<C> tail(ord);
            std::vector<Term<C>> rest(f.terms().begin() + 1, f.terms().end());
            tail.assign_sorted(std::move(rest));
            f = std::move(tail);
        }
    }
    Poly<C> r(ord);
    r.assign_sorted(std::move(rem));
    return r;
}

namespace detail {

template <class C>
Poly<C> spoly(const Poly<C>& f, const Poly<C>& g) {
    Exp l = exp_lcm(f.lm(), g.lm());
    return f.mul_term(C(1) / f.lc(), exp_div(l, f.lm())) - g.mul_term(C(1) / g.lc(), exp_div(l, g.lm()));
}

template <class C>
std::vector<Poly<C>> reduce_basis(std::vector<Poly<C>> G) {
    // drop elements whose leading monomial is divisible by another's
    std::vector<Poly<C>> min;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (exp_divides(G[j].lm(), G[i].lm()) && (G[j].lm() != G[i].lm() || j < i)) redundant = true;
        }
        if (!redundant) min.push_back(G[i]);
    }
    std::vector<Poly<C>> out;
    for (std::size_t i = 0; i < min.size(); ++i) {
        std::vector<Poly<C>> others;
        for (std::size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        out.push_back(normal_form(min[i], others).monic());
    }
    Order ord = out.empty() ? Order::Grevlex : out.front().order();
    std::sort(out.begin(), out.end(),
              [ord](const Poly<C>& a, const Poly<C>& b) { return exp_cmp(ord, a.lm(), b.lm()) < 0; });
    return out;
}

}  // namespace detail

// Reduced Groebner basis (Buchberger, normal selection, product and chain criteria).
template <class C>
std::vector<Poly<C>> groebner(const std::vector<Poly<C>>& gens, Order ord, int degree_cap = gb_degree_cap()) {
    std::vector<Poly<C>> G;
    for (auto& g : gens) {
        Poly<C> h = g.with_order(ord);
        if (h.is_zero()) continue;
        h = normal_form(h, G);
        if (!h.is_zero()) G.push_back(h.monic());
    }
    struct Pair {
        std::size_t i, j;
        Exp lcm;
    };
    std::vector<Pair> pairs;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, exp_lcm(G[i].lm(), G[j].lm())});

    auto select = [&]() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int da = total_degree(pairs[k].lcm), db = total_degree(pairs[best].lcm);
            if (da < db || (da == db && exp_cmp(ord, pairs[k].lcm, pairs[best].lcm) < 0)) best = k;
        }
        return best;
    };

    while (!pairs.empty()) {
        std::size_t k = select();
        Pair pr = pairs[k];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
        if (exp_coprime(G[pr.i].lm(), G[pr.j].lm())) continue;
        if (total_degree(pr.lcm) > degree_cap)
            throw GbAbort("Groebner computation exceeded degree cap " + std::to_string(degree_cap));
        Poly<C> h = normal_form(detail::spoly(G[pr.i], G[pr.j]), G);
        if (h.is_zero()) continue;
        h = h.monic();
        std::size_t n = G.size();
        // chain criterion against the new leading monomial
        std::vector<Pair> kept;
        for (auto& p : pairs) {
            Exp li = exp_lcm(G[p.i].lm(), h.lm()), lj = exp_lcm(G[p.j].lm(), h.lm());
            if (exp_divides(h.lm(), p.lcm) && li != p.lcm && lj != p.lcm) continue;
            kept.push_back(p);
        }
        pairs = std::move(kept);
        G.push_back(h);
        for (std::size_t i = 0; i < n; ++i) pairs.push_back({i, n, exp_lcm(G[i].lm(), h.lm())});
    }
    return detail::reduce_basis(std::move(G));
}

template <class C>
bool in_ideal(const Poly<C>& f, const std::vector<Poly<C>>& gb) {
    return normal_form(f, gb).is_zero();
}

// Generators plus cached reduced bases, one per order.
template <class C>
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(std::vector<Poly<C>> gens) : gens_(std::move(gens)) {}

    const std::vector<Poly<C>>& generators() const { return gens_; }
    const std::vector<Poly<C>>& basis(Order ord) const {
        auto it = cache_.find(ord);
        if (it == cache_.end()) it = cache_.emplace(ord, groebner(gens_, ord)).first;
        return it->second;
    }
    bool contains(const Poly<C>& f, Order ord = Order::Grevlex) const { return in_ideal(f, basis(ord)); }
    Poly<C> reduce(const Poly<C>& f, Order ord = Order::Grevlex) const { return normal_form(f, basis(ord)); }

private:
    std::vector<Poly<C>> gens_;
    mutable std::map<Order, std::vector<Poly<C>>> cache_;
};

// Minimal polynomial of variable v over the variables `preds` modulo I: the
// element of least v-degree in I ∩ k[preds, v] that involves v, or nothing.
template <class C>
std::optional<Poly<C>> min_poly(int v, const std::vector<Poly<C>>& gens, const std::vector<int>& preds) {
    // Reindex so that eliminated variables > v > preds under lex.
    int top = v;
    for (auto& g : gens) top = std::max(top, g.max_var());
    for (int p : preds) top = std::max(top, p);
    std::vector<bool> kept(static_cast<std::size_t>(top) + 1, false);
    for (int p : preds) kept[p] = true;
    std::vector<int> fwd(static_cast<std::size_t>(top) + 1, -1), back;
    for (int p : preds) {
        fwd[p] = static_cast<int>(back.size());
        back.push_back(p);
    }
    int vpos = static_cast<int>(back.size());
    fwd[v] = vpos;
    back.push_back(v);
    for (int i = 0; i <= top; ++i)
        if (fwd[i] < 0) {
            fwd[i] = static_cast<int>(back.size());
            back.push_back(i);
        }
    std::vector<Poly<C>> moved;
    for (auto& g : gens) moved.push_back(g.renamed(fwd).with_order(Order::Lex));
    auto G = groebner(moved, Order::Lex);
    std::optional<Poly<C>> best;
    for (auto& g : G) {
        if (g.max_var() != vpos) continue;
        if (!best || g.degree(vpos) < best->degree(vpos)) best = g;
    }
    if (!best) return std::nullopt;
    return best->renamed(back);
}

}  // namespace wb
