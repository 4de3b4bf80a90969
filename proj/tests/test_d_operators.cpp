#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace wbt;

namespace {

KUni X() { return KUni::var(0, Order::Lex); }
KUni C(const RatFun& c) { return KUni(c, Order::Lex); }

RatFun random_poly(std::mt19937& rng, int ngens, std::uint32_t p) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, ngens > 1 ? 1 : 2);
    QPoly r;
    for (int k = 0; k < 3; ++k) {
        Exp e;
        for (int g = 0; g < ngens; ++g) e = exp_mul(e, exp_var(g, deg(rng)));
        r += QPoly::monomial(Scalar::of(coef(rng), p), e);
    }
    return RatFun(r);
}

RatFun random_element(std::mt19937& rng, int ngens, std::uint32_t p) {
    RatFun d;
    do d = random_poly(rng, ngens, p);
    while (d.is_zero());
    return random_poly(rng, ngens, p) / d;
}

}  // namespace

TEST_CASE("apply_e examples") {
    // one derivation on Q(x, y)
    auto K = field(derivs(1), point(), {"x", "y"}, {{"y^2"}, {"x + 1"}});
    RatFun x = RatFun::gen(0), y = RatFun::gen(1);
    auto e = K->apply_e(1, x * y);
    CHECK(e[0] == x * y);
    CHECK(e[1] == K->action(0, 0) * y + x * K->action(1, 0));

    auto g = K->parse("x^2 + y");
    auto inv = K->apply_e(1, RatFun(1) / g);
    CHECK(inv[1] == -K->partial(0, g) / g.pow(2));

    // k[e]/(e^3): coordinate 2 of e(xy)
    auto H = field(point(), truncated(0, 2), {"x", "y"}, {{"y", "x*y"}, {"3", "x - y"}});
    auto h = H->apply_e(2, x * y);
    int d1 = H->ops().flat(2, 1), d2 = H->ops().flat(2, 2);
    CHECK(h[2] == H->action(0, d2) * y + x * H->action(1, d2) + H->action(0, d1) * H->action(1, d1));
}

TEST_CASE("apply_partial examples") {
    auto K = qt_system().field_ptr();
    CHECK(K->partial(0, RatFun(Scalar(mpq_class(7, 3)))).is_zero());
    CHECK(K->partial(0, K->parse("t^2")) == K->parse("2*t"));

    // char 2, d1 t = d1 s = 0, d2 t = s, d2 s = 0
    auto F = field(point(2), truncated(2, 2), {"s", "t"}, {{"0", "0"}, {"0", "s"}});
    CHECK(F->partial(F->ops().flat(2, 2), F->parse("t*s")) == F->parse("s^2"));
}

TEST_CASE("is_constant") {
    auto K = qt_system().field_ptr();
    CHECK(K->is_constant(RatFun(5)));
    CHECK(!K->is_constant(K->parse("t")));
    auto Z = field(derivs(1), point(), {"t"}, {{"0"}});
    CHECK(Z->is_constant(Z->parse("t^2 - t")));
}

TEST_CASE("extend_separable examples") {
    auto K = qt_system().field_ptr();
    RatFun t = RatFun::gen(0);
    // a^2 = t: da = 1/(2a) = a/(2t)
    KUni f = X() * X() - C(t);
    auto v = extend_separable(*K, f);
    CHECK(v[0] == KUni::monomial(RatFun(1) / (RatFun(2) * t), exp_var(0), Order::Lex));

    // a^2 - a = t: da (2a - 1) = 1
    KUni g = X() * X() - X() - C(t);
    auto w = extend_separable(*K, g);
    CHECK(uni_rem(w[0] * (C(RatFun(2)) * X() - C(RatFun(1))), g) == C(RatFun(1)));

    // a = t^3: da = 3t^2
    auto u = extend_separable(*K, X() - C(t.pow(3)));
    CHECK(u[0] == C(RatFun(3) * t.pow(2)));

    CHECK_THROWS_AS(extend_separable(*K, (X() - C(t)) * (X() - C(t))), Failure);
}

TEST_CASE("extend_separable over a truncated HS algebra") {
    auto K = field(point(), truncated(0, 3), {"t"}, {{"1", "t", "0"}});
    KUni f = X() * X() * X() - C(RatFun::gen(0)) * X() - C(RatFun(1));
    auto v = extend_separable(*K, f);
    for (auto& r : residual(*K, f, v, 2)) CHECK(r.is_zero());
    // perturbed values leave a residue
    auto bad = v;
    bad[K->ops().flat(2, 2)] = bad[K->ops().flat(2, 2)] + C(RatFun(1));
    auto res = residual(*K, f, bad, 2);
    CHECK(!res[2].is_zero());
}

TEST_CASE("extend_transcendental") {
    auto G = commuting_system();
    auto H = extend_transcendental(G, "x", {RatFun(0), RatFun(0)});
    CHECK(H.field().ngens() == 1);
    try {
        extend_transcendental(G, "x", {RatFun(1), RatFun::gen(0)});
        FAIL("accepted");
    } catch (const Failure& f) {
        CHECK(f.code == "GAMMA_FAIL");
        CHECK(f.witness == std::vector<int>{1, 1, 1, 2, 1});
    }
    auto T = trivial_system();
    CHECK_NOTHROW(extend_transcendental(T, "x", {RatFun::gen(0).pow(3) + RatFun(1)}));
    // a bracket [d1, d2] = d1 accepts d1 x = 1, d2 x = x
    GammaSystem B(field(derivs(2), point()));
    B.set(1, 1, 1, 2, RatFun(1));
    B.set(1, 1, 2, 1, RatFun(-1));
    CHECK_NOTHROW(extend_transcendental(B, "x", {RatFun(1), RatFun::gen(0)}));
}

TEST_CASE("extend_inseparable_decide") {
    auto F = field(point(2), truncated(2, 2), {"s", "t"}, {{"0", "0"}, {"0", "s"}});
    RatFun t = RatFun::gen(1);
    KUni f = X() * X() - C(t);
    auto v = extend_inseparable_decide(*F, f);
    CHECK(!v.pass);
    CHECK(v.code == "NOT_EXTENDABLE");
    CHECK(extend_inseparable_decide(*F, X() * X() - C(RatFun(1))).pass);
    auto Z = field(derivs(1, 2), point(2), {"t"}, {{"0"}});
    CHECK(extend_inseparable_decide(*Z, X() * X() - C(RatFun::gen(0))).pass);
    CHECK_THROWS_AS(extend_inseparable_decide(*F, X() * X() - X() - C(t)), Failure);
    CHECK(!frobenius_assumption(*truncated(2, 2), *point(2)).pass);
}

TEST_CASE("apply_e is a homomorphism") {
    std::vector<std::shared_ptr<const DField>> fields = {
        qt_system().field_ptr(),
        field(point(), truncated(0, 2), {"x", "y"}, {{"y", "x*y"}, {"3", "x - y"}}),
        field(point(2), truncated(2, 2), {"s", "t"}, {{"0", "0"}, {"0", "s"}}),
        field(derivs(2, 3), truncated(3, 1), {"t"}, {{"1", "t", "t^2"}}),
    };
    std::mt19937 rng(11);
    for (auto& K : fields) {
        std::uint32_t p = K->characteristic();
        for (int trial = 0; trial < 100; ++trial) {
            RatFun a = random_element(rng, K->ngens(), p), b = random_element(rng, K->ngens(), p);
            for (int u = 1; u <= 2; ++u) {
                if (K->ops().count(u) == 0) continue;
                auto ea = K->apply_e(u, a), eb = K->apply_e(u, b);
                CHECK(K->apply_e(u, a * b) == ea * eb);
                CHECK(K->apply_e(u, a + b) == ea + eb);
                CHECK(ea[0] == a);
            }
        }
    }
}

TEST_CASE("separable extensions are exact and reproducible") {
    auto K = qt_system().field_ptr();
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-4, 4), deg(1, 3);
    int done = 0;
    while (done < 20) {
        int n = deg(rng);
        KUni f = KUni::monomial(RatFun(1), exp_var(0, n), Order::Lex);
        for (int i = 0; i < n; ++i) {
            RatFun c = RatFun(coef(rng)) + RatFun(coef(rng)) * RatFun::gen(0);
            if (!c.is_zero()) f += KUni::monomial(c, exp_var(0, i), Order::Lex);
        }
        if (uni_gcd(f, f.derivative(0)).degree(0) > 0) continue;
        auto v = extend_separable(*K, f);
        for (auto& r : residual(*K, f, v, 1)) CHECK(r.is_zero());
        CHECK(extend_separable(*K, f) == v);
        ++done;
    }
}

TEST_CASE("root derivative depends only on the supporting operators") {
    // two structures on Q(t) over k[e]/(e^3) that agree on d1
    auto A = field(point(), truncated(0, 2), {"t"}, {{"1", "0"}});
    auto B = field(point(), truncated(0, 2), {"t"}, {{"1", "t"}});
    KUni f = X() * X() - C(RatFun::gen(0)) * X() - C(RatFun(2));
    auto va = extend_separable(*A, f), vb = extend_separable(*B, f);
    int d1 = A->ops().flat(2, 1), d2 = A->ops().flat(2, 2);
    CHECK(va[d1] == vb[d1]);
    CHECK(va[d2] != vb[d2]);
}

TEST_CASE("univariate helpers") {
    RatFun t = RatFun::gen(0);
    KUni f = X() * X() - C(t);
    CHECK(uni_rem(X() * X() * X(), f) == C(t) * X());
    CHECK(uni_gcd(f, X() - C(RatFun(1))) == C(RatFun(1)));
    KUni inv = uni_inverse(X(), f);
    CHECK(uni_rem(inv * X(), f) == C(RatFun(1)));
    CHECK_THROWS_AS(uni_inverse(X() - C(t), (X() - C(t)) * X()), Failure);
}
