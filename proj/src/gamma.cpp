#include "wb/gamma.hpp"

#include <algorithm>
#include <map>

namespace wb {

namespace {

const RatFun& zero_rf() {
    static const RatFun z;
    return z;
}

std::string op_name(int u, int i) { return "(" + std::to_string(u) + "," + std::to_string(i) + ")"; }

}  // namespace

GammaSystem::GammaSystem(std::shared_ptr<const DField> field) : field_(std::move(field)) {
    for (int u = 1; u <= 2; ++u) c_[u].assign(static_cast<std::size_t>(m(u)) * m(u) * m(u), RatFun(0));
}

const RatFun& GammaSystem::coeff(int u, int l, int i, int j) const {
    int n = m(u);
    if (l < 1 || i < 1 || j < 1 || l > n || i > n || j > n) return zero_rf();
    return c_[u][(static_cast<std::size_t>(l - 1) * n + (i - 1)) * n + (j - 1)];
}

void GammaSystem::set(int u, int l, int i, int j, const RatFun& c) {
    int n = m(u);
    if (l < 1 || i < 1 || j < 1 || l > n || i > n || j > n)
        throw Failure("GAMMA_INVALID", {u, l, i, j}, "coefficient index out of range");
    c_[u][(static_cast<std::size_t>(l - 1) * n + (i - 1)) * n + (j - 1)] = c.lifted(ops().characteristic());
    dirty_ = true;
}

const RatFun& GammaSystem::c(int l, int i, int j) const {
    const OpSystem& S = ops();
    int u = S.type(l);
    if (S.type(i) != u || S.type(j) != u) return zero_rf();
    return coeff(u, S.local(l), S.local(i), S.local(j));
}

const std::vector<std::pair<int, RatFun>>& GammaSystem::terms(int i, int j) const {
    if (dirty_) rebuild();
    return terms_[i * ops().size() + j];
}

void GammaSystem::rebuild() const {
    const OpSystem& S = ops();
    int N = S.size();
    terms_.assign(static_cast<std::size_t>(N) * N, {});
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int l = 0; l < N; ++l) {
                const RatFun& v = c(l, i, j);
                if (!v.is_zero()) terms_[i * N + j].push_back({l, v});
            }
    dirty_ = false;
}

bool GammaSystem::constant_coefficients() const {
    for (int u = 1; u <= 2; ++u)
        for (auto& x : c_[u])
            if (!x.is_scalar()) return false;
    return true;
}

std::vector<GammaSystem::Entry> GammaSystem::entries() const {
    std::vector<Entry> out;
    for (int u = 1; u <= 2; ++u)
        for (int l = 1; l <= m(u); ++l)
            for (int i = 1; i <= m(u); ++i)
                for (int j = 1; j <= m(u); ++j)
                    if (!coeff(u, l, i, j).is_zero()) out.push_back({u, l, i, j, coeff(u, l, i, j)});
    return out;
}

GammaSystem GammaSystem::with_field(std::shared_ptr<const DField> f) const {
    GammaSystem G(std::move(f));
    for (int u = 1; u <= 2; ++u) G.c_[u] = c_[u];
    return G;
}

Verdict check_lie_type(const GammaSystem& G) {
    auto nul = null_set(G.ops().algebra(1));
    auto in_null = [&](int q) { return std::find(nul.begin(), nul.end(), q) != nul.end(); };
    for (int l = 1; l <= G.m(1); ++l)
        for (int i = 1; i <= G.m(1); ++i)
            for (int j = 1; j <= G.m(1); ++j)
                if (!G.coeff(1, l, i, j).is_zero() && (!in_null(i) || !in_null(j)))
                    return Verdict::fail("LIE_TYPE_FAIL", {l, i, j},
                                         "c_" + std::to_string(l) + "^{" + std::to_string(i) + "," + std::to_string(j) +
                                             "} != 0 but an index is outside Null(D1)");
    if (G.ops().characteristic() == 0)
        for (auto& e : G.entries())
            if (e.u == 2)
                return Verdict::fail("HS_CHAR_FAIL", {e.l, e.i, e.j}, "HS coefficients need positive characteristic");
    return Verdict::ok();
}

namespace {

// Element of D (x) D (F) as a sparse map (i, j) -> coefficient of e_i (x) e_j.
using TensorElt = std::map<std::pair<int, int>, RatFun>;

void add_term(TensorElt& x, std::pair<int, int> k, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = x.find(k);
    if (it == x.end()) {
        x.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
}

// products e_a e_b = sum_s coeff e_s including the unit
std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> product_table(const LocalAlgebra& D) {
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> t(D.dim(), std::vector<std::vector<std::pair<int, Scalar>>>(D.dim()));
    for (int a = 0; a <= D.m(); ++a)
        for (int b = 0; b <= D.m(); ++b)
            for (int s = 0; s <= D.m(); ++s) {
                Scalar c = D.full(s, a, b);
                if (!c.is_zero()) t[a][b].push_back({s, c});
            }
    return t;
}

}  // namespace

Verdict check_hom(const GammaSystem& G, int which) {
    const LocalAlgebra& D = G.ops().algebra(which);
    if (D.m() == 0) return Verdict::ok();
    auto P = product_table(D);
    auto mul = [&](const TensorElt& x, const TensorElt& y) {
        TensorElt z;
        for (auto& [ij, a] : x)
            for (auto& [kl, b] : y) {
                RatFun ab = a * b;
                for (auto& [s, c1] : P[ij.first][kl.first])
                    for (auto& [t, c2] : P[ij.second][kl.second]) add_term(z, {s, t}, ab * RatFun(c1 * c2));
            }
        return z;
    };
    std::vector<TensorElt> r(D.dim());
    for (int l = 1; l <= D.m(); ++l) {
        if (which == 2) add_term(r[l], {l, 0}, RatFun(D.one()));
        add_term(r[l], {0, l}, RatFun(D.one()));
        for (int i = 1; i <= D.m(); ++i)
            for (int j = 1; j <= D.m(); ++j)
                add_term(r[l], {i, j}, which == 2 ? G.coeff(2, l, i, j) : G.coeff(1, l, j, i));
    }
    for (int p = 1; p <= D.m(); ++p)
        for (int q = p; q <= D.m(); ++q) {
            auto lhs = mul(r[p], r[q]);
            TensorElt rhs;
            for (int i = 1; i <= D.m(); ++i)
                if (!D.alpha(i, p, q).is_zero())
                    for (auto& [k, c] : r[i]) add_term(rhs, k, c * RatFun(D.alpha(i, p, q)));
            if (lhs != rhs)
                return Verdict::fail("HOM_FAIL", {p, q},
                                     "r(e" + std::to_string(p) + ")r(e" + std::to_string(q) + ") != r(e" +
                                         std::to_string(p) + "e" + std::to_string(q) + ")");
        }
    return Verdict::ok();
}

namespace {

// d_{u,k}(c_{v,l}^{ij}) for all indices, zero when coefficients are constant
struct Derivs {
    const GammaSystem& G;
    int u, v;
    bool zero;
    std::vector<RatFun> d;
    Derivs(const GammaSystem& g, int u_, int v_) : G(g), u(u_), v(v_) {
        zero = true;
        int mu = G.m(u), mv = G.m(v);
        d.assign(static_cast<std::size_t>(mu) * mv * mv * mv, RatFun(0));
        for (int k = 1; k <= mu; ++k)
            for (int l = 1; l <= mv; ++l)
                for (int i = 1; i <= mv; ++i)
                    for (int j = 1; j <= mv; ++j) {
                        const RatFun& c = G.coeff(v, l, i, j);
                        if (c.is_scalar()) continue;
                        RatFun x = G.field().partial(G.ops().flat(u, k), c);
                        if (!x.is_zero()) zero = false;
                        at(k, l, i, j) = x;
                    }
    }
    RatFun& at(int k, int l, int i, int j) {
        int mv = G.m(v);
        return d[((static_cast<std::size_t>(k - 1) * mv + (l - 1)) * mv + (i - 1)) * mv + (j - 1)];
    }
};

void add_prod(RatFun& acc, const RatFun& a, const RatFun& b) {
    if (!a.is_zero() && !b.is_zero()) acc += a * b;
}

}  // namespace

Verdict check_jacobi(const GammaSystem& G) {
    int m = G.m(1);
    auto c = [&](int l, int i, int j) -> const RatFun& { return G.coeff(1, l, i, j); };
    for (int l = 1; l <= m; ++l)
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) {
                bool bad = i == j ? !c(l, i, i).is_zero() : !(c(l, i, j) + c(l, j, i)).is_zero();
                if (bad)
                    return Verdict::fail("JACOBI_FAIL", {1, l, i, j},
                                         "condition 1: (c_" + std::to_string(l) + "^{ij}) is not skew-symmetric at (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
            }
    Derivs D(G, 1, 1);
    auto d = [&](int k, int l, int i, int j) -> const RatFun& { return D.at(k, l, i, j); };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                for (int r = 1; r <= m; ++r) {
                    RatFun lhs(0);
                    for (int l = 1; l <= m; ++l) {
                        add_prod(lhs, c(l, i, j), c(r, l, k));
                        add_prod(lhs, c(l, k, i), c(r, l, j));
                        add_prod(lhs, c(l, j, k), c(r, l, i));
                    }
                    RatFun rhs = D.zero ? RatFun(0) : d(i, r, j, k) + d(k, r, i, j) + d(j, r, k, i);
                    if (lhs != rhs)
                        return Verdict::fail("JACOBI_FAIL", {2, i, j, k, r}, "condition 2 (Jacobi identity) fails");
                }
    if (D.zero) return Verdict::ok();
    const LocalAlgebra& A = G.ops().algebra(1);
    auto alpha = [&](int i, int p, int q) { return RatFun(A.alpha(i, p, q)); };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                for (int r = 1; r <= m; ++r) {
                    RatFun s(0);
                    for (int p = 1; p <= m; ++p) {
                        add_prod(s, alpha(i, p, r), d(p, r, j, k));
                        add_prod(s, alpha(k, p, r), d(p, r, i, j));
                        add_prod(s, alpha(j, p, r), d(p, r, k, i));
                    }
                    if (!s.is_zero()) return Verdict::fail("JACOBI_FAIL", {3, i, j, k, r}, "condition 3 fails");
                    for (int q = 1; q < r; ++q) {
                        RatFun t(0);
                        for (int p = 1; p <= m; ++p) {
                            add_prod(t, alpha(i, p, q), d(p, r, j, k));
                            add_prod(t, alpha(k, p, q), d(p, r, i, j));
                            add_prod(t, alpha(j, p, q), d(p, r, k, i));
                            add_prod(t, alpha(i, p, r), d(p, q, j, k));
                            add_prod(t, alpha(k, p, r), d(p, q, i, j));
                            add_prod(t, alpha(j, p, r), d(p, q, k, i));
                        }
                        if (!t.is_zero())
                            return Verdict::fail("JACOBI_FAIL", {3, i, j, k, r, q}, "condition 3 fails");
                    }
                }
    return Verdict::ok();
}

Verdict check_associative(const GammaSystem& G) {
    int m = G.m(2);
    auto c = [&](int l, int i, int j) -> const RatFun& { return G.coeff(2, l, i, j); };
    Derivs D(G, 2, 2);
    const LocalAlgebra& A = G.ops().algebra(2);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                for (int r = 1; r <= m; ++r) {
                    RatFun lhs(0);
                    for (int l = 1; l <= m; ++l) {
                        add_prod(lhs, c(l, i, j), c(r, l, k));
                        add_prod(lhs, -c(l, j, k), c(r, i, l));
                        if (!D.zero)
                            for (auto& e : A.entries())
                                if (e.i == i) add_prod(lhs, -RatFun(e.a) * D.at(e.p, l, j, k), c(r, e.q, l));
                    }
                    RatFun rhs = D.zero ? RatFun(0) : D.at(i, r, j, k);
                    if (lhs != rhs)
                        return Verdict::fail("ASSOC_FAIL", {i, j, k, r},
                                             "associativity fails at (i,j,k,r) = (" + std::to_string(i) + "," +
                                                 std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(r) + ")");
                }
    return Verdict::ok();
}

Verdict check_jacobi_associative(const GammaSystem& G) {
    if (auto v = check_jacobi(G); !v) return v;
    if (auto v = check_associative(G); !v) return v;
    for (int u = 1; u <= 2; ++u) {
        int v = 3 - u;
        Derivs D(G, u, v);
        if (D.zero) continue;
        for (int k = 1; k <= G.m(u); ++k)
            for (int r = 1; r <= G.m(v); ++r)
                for (int i = 1; i <= G.m(v); ++i)
                    for (int j = 1; j <= G.m(v); ++j)
                        if (!D.at(k, r, i, j).is_zero())
                            return Verdict::fail("CROSS_FAIL", {u, k, v, r, i, j},
                                                 "d" + op_name(u, k) + " of c_{" + std::to_string(v) + "," +
                                                     std::to_string(r) + "}^{" + std::to_string(i) + "," +
                                                     std::to_string(j) + "} is not zero");
    }
    return Verdict::ok();
}

Verdict check_generators(const GammaSystem& G) {
    const DField& K = G.field();
    const OpSystem& S = G.ops();
    for (int g = 0; g < K.ngens(); ++g)
        for (int i = 0; i < S.size(); ++i)
            for (int j = 0; j < S.size(); ++j) {
                RatFun lhs = K.partial(i, K.action(g, j));
                RatFun rhs(0);
                if (chi(S, i, j)) rhs += K.partial(j, K.action(g, i));
                for (auto& [l, c] : G.terms(i, j)) rhs += c * K.action(g, l);
                if (lhs != rhs)
                    return Verdict::fail("GAMMA_FAIL", {S.type(i), S.local(i), S.type(j), S.local(j), g + 1},
                                         "commutation of d" + op_name(S.type(i), S.local(i)) + " and d" +
                                             op_name(S.type(j), S.local(j)) + " fails on " + K.gens()[g]);
            }
    return Verdict::ok();
}

GammaSystem extend_transcendental(const GammaSystem& G, const std::string& name, const std::vector<RatFun>& values) {
    auto K = std::make_shared<const DField>(G.field().extended(name, values));
    GammaSystem H = G.with_field(K);
    if (auto v = check_generators(H); !v) throw Failure(v.code, v.witness, v.detail);
    return H;
}

Scalar HsSystem::at(int l, int i, int j) const {
    Scalar one = algebra.one(), zero = algebra.zero();
    if (i == 0) return l == j ? one : zero;
    if (j == 0) return l == i ? one : zero;
    if (l == 0) return zero;
    return c[l][i][j];
}

namespace {

std::vector<std::vector<std::vector<Scalar>>> dense_zero(int m, std::uint32_t p) {
    return std::vector<std::vector<std::vector<Scalar>>>(
        m + 1, std::vector<std::vector<Scalar>>(m + 1, std::vector<Scalar>(m + 1, Scalar::of(0, p))));
}

}  // namespace

HsSystem iterative_hs_coeffs(std::uint32_t p, int n) {
    if (!is_prime(p) || n < 1) throw Failure("GAMMA_INVALID", {static_cast<int>(p), n}, "need a prime p and n >= 1");
    int N = 1;
    for (int k = 0; k < n; ++k) N *= static_cast<int>(p);
    N -= 1;
    AlgebraSpec s;
    s.characteristic = p;
    s.m = N;
    for (int i = 1; i <= N; ++i) s.grades.push_back(i);
    for (int a = 1; a <= N; ++a)
        for (int b = a; b <= N; ++b)
            if (a + b <= N) s.products[{a, b}][a + b] = Scalar::of(1, p);
    HsSystem H{LocalAlgebra::validate(s), dense_zero(N, p)};
    // binomials mod p by Pascal's rule
    std::vector<std::vector<Scalar>> binom(2 * N + 1);
    for (int a = 0; a <= 2 * N; ++a) {
        binom[a].assign(a + 1, Scalar::of(1, p));
        for (int b = 1; b < a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
    }
    for (int i = 1; i <= N; ++i)
        for (int j = 1; i + j <= N; ++j) H.c[i + j][i][j] = binom[i + j][i];
    return H;
}

HsSystem hs_tensor_reduce(const std::vector<HsSystem>& systems, TensorAlgebra* last) {
    if (systems.empty()) throw Failure("GAMMA_INVALID", {}, "nothing to reduce");
    HsSystem cur = systems[0];
    for (std::size_t s = 1; s < systems.size(); ++s) {
        const HsSystem& nx = systems[s];
        TensorAlgebra T = tensor(cur.algebra, nx.algebra);
        int m = T.algebra.m();
        auto c = dense_zero(m, T.algebra.characteristic());
        for (int L = 1; L <= m; ++L)
            for (int I = 1; I <= m; ++I)
                for (int J = 1; J <= m; ++J) {
                    auto [l, l2] = T.pairs[L];
                    auto [i, i2] = T.pairs[I];
                    auto [j, j2] = T.pairs[J];
                    c[L][I][J] = cur.at(l, i, j) * nx.at(l2, i2, j2);
                }
        cur = HsSystem{T.algebra, c};
        if (last) *last = T;
    }
    return cur;
}

std::shared_ptr<const DField> bare_field(std::shared_ptr<const LocalAlgebra> D1, std::shared_ptr<const LocalAlgebra> D2) {
    auto ops = std::make_shared<const OpSystem>(std::move(D1), std::move(D2));
    return std::make_shared<const DField>(ops, std::vector<std::string>{}, std::vector<std::vector<RatFun>>{});
}

GammaSystem hs_gamma(const HsSystem& S) {
    AlgebraSpec pt;
    pt.characteristic = S.algebra.characteristic();
    auto F = bare_field(std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(pt)),
                        std::make_shared<const LocalAlgebra>(S.algebra));
    GammaSystem G(F);
    int m = S.algebra.m();
    for (int l = 1; l <= m; ++l)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                if (!S.c[l][i][j].is_zero()) G.set(2, l, i, j, RatFun(S.c[l][i][j]));
    return G;
}

}  // namespace wb
