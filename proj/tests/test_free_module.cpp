#include "doctest.h"

#include "support.hpp"

using namespace wbt;

namespace {

// [a, b] = a for a = (1,1) < b = (1,2)
GammaSystem bracket_system() {
    GammaSystem G(field(derivs(2), point()));
    G.set(1, 1, 1, 2, RatFun(1));
    G.set(1, 1, 2, 1, RatFun(-1));
    return G;
}

std::vector<GammaSystem> fixtures() {
    return {trivial_system(), sl2_system(), iterative_system(2, 2), iterative_system(3, 1), mixed_system()};
}

FreeVector one(const GammaSystem& G, const Word& w) { return basis_vector(w, G.ops().characteristic()); }

}  // namespace

TEST_CASE("apply_free examples") {
    auto T = trivial_system();
    FreeModule V(T);
    CHECK(V.apply(0, one(T, {0})) == one(T, {0, 0}));

    auto B = bracket_system();
    FreeModule W(B);
    int a = B.ops().flat(1, 1), b = B.ops().flat(1, 2);
    FreeVector expect = one(B, {b, a});
    add_to(expect, Word{a}, RatFun(1));
    CHECK(W.apply(a, one(B, {b})) == expect);
    CHECK(W.str(W.apply(a, one(B, {b}))) == "w[1,2;1,1] + w[1,1]");

    auto H = iterative_system(2, 2);
    FreeModule U(H);
    CHECK(U.apply(0, one(H, {0})).empty());
    // d1 d2 = d3 there
    CHECK(U.apply(0, one(H, {1})) == one(H, {2}));
}

TEST_CASE("apply_free with a nonconstant coefficient") {
    // d(t w) = w + t dw on Q(t)
    auto G = qt_system();
    FreeModule V(G);
    FreeVector v;
    add_to(v, Word{}, RatFun::gen(0));
    FreeVector expect;
    add_to(expect, Word{}, RatFun(1));
    add_to(expect, Word{0}, RatFun::gen(0));
    CHECK(V.apply(0, v) == expect);
}

TEST_CASE("ell examples") {
    auto S = sl2_system();
    FreeModule V(S);
    for (auto& xi : normal_words_upto(S.ops(), 3)) CHECK(V.ell(xi).empty());
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            FreeVector expect;
            for (auto& [l, c] : S.terms(i, j)) add_to(expect, Word{l}, c);
            CHECK(V.ell({i, j}) == expect);
        }

    auto M = mixed_system();
    FreeModule U(M);
    int h = M.ops().flat(2, 1);
    for (auto& xi : normal_words_upto(M.ops(), 3)) {
        if (hs_count(M.ops(), xi) > 0) continue;
        CHECK(U.ell(prepend(h, xi)).empty());
    }
}

TEST_CASE("free module commutes for jacobi-associative fixtures") {
    for (auto& G : fixtures()) {
        REQUIRE(check_jacobi_associative(G).pass);
        auto f = free_commutativity(G, 4);
        CHECK(!f);
    }
    CHECK(!free_commutativity(bracket_system(), 4));
}

TEST_CASE("ell drops degree and reconstructs") {
    for (auto& G : fixtures()) {
        FreeModule V(G);
        const OpSystem& S = G.ops();
        int top = S.size() <= 2 ? 5 : 4;
        for (int len = 1; len <= top; ++len)
            for (auto& xi : all_words(S, len)) {
                FreeVector l = V.ell(xi);
                CHECK(max_length(l) <= len - 1);
                FreeVector lhs = V.apply_word(xi, one(G, {}));
                FreeVector rhs = l;
                if (chi(S, xi)) add_to(rhs, rho(S, xi), RatFun(1));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("ell recursion for a leading smaller operator") {
    for (auto& G : fixtures()) {
        FreeModule V(G);
        const OpSystem& S = G.ops();
        for (auto& lam : normal_words_upto(S, 3)) {
            if (lam.empty()) continue;
            int k = lam[0];
            Word eta(lam.begin() + 1, lam.end());
            for (int i = 0; i < k; ++i) {
                FreeVector rhs;
                if (chi(S, i, k)) rhs = V.apply(k, V.ell(prepend(i, eta)));
                FreeVector deta = V.apply_word(eta, one(G, {}));
                for (auto& [l, c] : G.terms(i, k)) add_to(rhs, V.apply(l, deta), c);
                CHECK(V.ell(prepend(i, lam)) == rhs);
            }
        }
    }
}

TEST_CASE("operators of a tensor reduction factor") {
    auto A = iterative_hs_coeffs(2, 1);
    auto B = iterative_hs_coeffs(2, 2);
    TensorAlgebra T;
    auto R = hs_tensor_reduce({A, B}, &T);
    auto G = hs_gamma(R);
    REQUIRE(check_associative(G).pass);
    FreeModule V(G);
    const OpSystem& S = G.ops();
    auto op = [&](int i, int j) { return S.flat(2, T.index(i, j)); };
    for (int len = 0; len <= 3; ++len)
        for (auto& xi : all_words(S, len)) {
            FreeVector w = V.apply_word(xi, one(G, {}));
            for (int i = 1; i <= A.algebra.m(); ++i)
                for (int j = 1; j <= B.algebra.m(); ++j)
                    CHECK(V.apply(op(i, j), w) == V.apply(op(i, 0), V.apply(op(0, j), w)));
        }
}

TEST_CASE("memo detects nothing unusual on repeated use") {
    auto G = sl2_system();
    FreeModule V(G);
    auto x = V.apply_word({0, 1, 2, 0}, one(G, {}));
    auto y = V.apply_word({0, 1, 2, 0}, one(G, {}));
    CHECK(x == y);
    CHECK(max_length(x) == 4);
}
