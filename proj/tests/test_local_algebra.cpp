#include "doctest.h"

#include <random>

#include "wb/local_algebra.hpp"
#include "wb/ratfun.hpp"

using namespace wb;

namespace {

// k[e]/(e^(n+1)) with basis e, e^2, .., e^n
AlgebraSpec truncated(std::uint32_t p, int n) {
    AlgebraSpec s;
    s.characteristic = p;
    s.m = n;
    for (int i = 1; i <= n; ++i) s.grades.push_back(i);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            if (a + b <= n) s.products[{a, b}][a + b] = Scalar(1);
    return s;
}

// k[e1..em]/(e)^2
AlgebraSpec derivations(std::uint32_t p, int m) {
    AlgebraSpec s;
    s.characteristic = p;
    s.m = m;
    s.grades.assign(m, 1);
    return s;
}

std::vector<Scalar> V(std::initializer_list<long> xs) {
    std::vector<Scalar> v;
    for (long x : xs) v.push_back(Scalar(x));
    return v;
}

}  // namespace

TEST_CASE("validate accepts dual numbers") {
    auto A = LocalAlgebra::validate(derivations(0, 1));
    CHECK(A.m() == 1);
    CHECK(A.d() == 1);
    CHECK(A.entries().empty());
}

TEST_CASE("validate rejects an idempotent") {
    AlgebraSpec s = derivations(0, 1);
    s.products[{1, 1}][1] = Scalar(1);
    try {
        LocalAlgebra::validate(s);
        FAIL("accepted");
    } catch (const Failure& f) {
        CHECK(f.code == "NOT_LOCAL");
    }
}

TEST_CASE("validate rejects a wrong grade") {
    AlgebraSpec s = truncated(0, 2);
    s.grades = {1, 1};
    try {
        LocalAlgebra::validate(s);
        FAIL("accepted");
    } catch (const Failure& f) {
        CHECK(f.code == "RANK_FAIL");
        CHECK(f.witness == std::vector<int>{2, 1, 1});
    }
}

TEST_CASE("validate rejects non-associative tables") {
    // (e1 e1) e2 = e2 e2 = e3 but e1 (e1 e2) = e1 e3 = 0
    AlgebraSpec s;
    s.m = 3;
    s.grades = {1, 2, 3};
    s.products[{1, 1}][2] = Scalar(1);
    s.products[{1, 2}][3] = Scalar(1);
    s.products[{2, 2}][3] = Scalar(1);
    try {
        LocalAlgebra::validate(s);
        FAIL("accepted");
    } catch (const Failure& f) {
        CHECK(f.code == "ASSOC_FAIL");
    }
}

TEST_CASE("mul") {
    auto D = LocalAlgebra::validate(derivations(0, 1));
    DVector<Scalar> a(&D, V({2, 3})), b(&D, V({5, 7}));
    CHECK((a * b).coords() == V({10, 2 * 7 + 3 * 5}));
    auto T = LocalAlgebra::validate(truncated(0, 2));
    DVector<Scalar> e(&T, V({0, 1, 0}));
    CHECK((e * e).coords() == V({0, 0, 1}));
    DVector<Scalar> u(&T, V({1, 0, 0})), v(&T, V({4, -1, 9}));
    CHECK((u * v) == v);
}

TEST_CASE("invert") {
    auto D = LocalAlgebra::validate(derivations(0, 1));
    std::vector<std::string> names = {"a", "b"};
    DVector<RatFun> x(&D, {RatFun::gen(0), RatFun::gen(1)});
    auto y = x.invert();
    CHECK(y[0] == RatFun(1) / RatFun::gen(0));
    CHECK(y[1] == -RatFun::gen(1) / RatFun::gen(0).pow(2));
    DVector<Scalar> s(&D, V({4, 0}));
    CHECK(s.invert().coords() == std::vector<Scalar>{Scalar(mpq_class(1, 4)), Scalar(0)});
    DVector<Scalar> z(&D, V({0, 1}));
    CHECK_THROWS_AS(z.invert(), Failure);
}

TEST_CASE("null set and support") {
    CHECK(null_set(LocalAlgebra::validate(derivations(0, 3))) == std::vector<int>{1, 2, 3});
    auto T2 = LocalAlgebra::validate(truncated(0, 2));
    auto T3 = LocalAlgebra::validate(truncated(0, 3));
    CHECK(null_set(T2) == std::vector<int>{2});
    CHECK(null_set(T3) == std::vector<int>{3});
    CHECK(support(T2, 1).empty());
    CHECK(support(T2, 2) == std::vector<int>{1});
    CHECK(support(T3, 3) == std::vector<int>{1, 2});
}

TEST_CASE("frobenius assumption") {
    auto Q = LocalAlgebra::validate(truncated(0, 2));
    CHECK(frobenius_assumption(Q, Q).pass);
    auto F2 = LocalAlgebra::validate(truncated(2, 1));
    CHECK(frobenius_assumption(F2, F2).pass);
    auto F3 = LocalAlgebra::validate(truncated(2, 2));
    auto v = frobenius_assumption(F3, F3);
    CHECK(!v.pass);
    CHECK(v.witness == std::vector<int>{1, 1});
}

TEST_CASE("tensor products") {
    auto F2 = LocalAlgebra::validate(truncated(2, 1));
    auto T = tensor(F2, F2);
    CHECK(T.algebra.dim() == 4);
    int a = T.index(1, 0), b = T.index(0, 1), ab = T.index(1, 1);
    auto prod = T.algebra.mul(T.algebra.basis(a), T.algebra.basis(b));
    CHECK(prod == T.algebra.basis(ab));
    auto sq = T.algebra.mul(T.algebra.basis(a), T.algebra.basis(a));
    CHECK(std::all_of(sq.begin(), sq.end(), [](const Scalar& x) { return x.is_zero(); }));
    auto Q = LocalAlgebra::validate(derivations(0, 1));
    CHECK(tensor(Q, Q).algebra.d() == 2);
    auto Big = tensor(LocalAlgebra::validate(truncated(3, 2)), LocalAlgebra::validate(derivations(3, 2)));
    CHECK(Big.algebra.dim() == 9);
    for (int k = 1; k < Big.algebra.dim(); ++k) {
        auto [i, j] = Big.pairs[k];
        CHECK(Big.algebra.sigma(k) == (i ? i : 0) + (j ? 1 : 0));
    }
}

TEST_CASE("invariants over fixture algebras") {
    std::vector<AlgebraSpec> specs = {derivations(0, 2), truncated(0, 3), truncated(2, 3), truncated(3, 2), derivations(2, 2)};
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (auto& s : specs) {
        auto D = LocalAlgebra::validate(s);
        for (int i = 0; i <= D.m(); ++i)
            for (int p = 1; p <= D.m(); ++p)
                for (int q = 1; q <= D.m(); ++q) CHECK(D.alpha(i, p, q) == D.alpha(i, q, p));
        auto nul = null_set(D);
        for (int q = 1; q <= D.m(); ++q)
            if (D.sigma(q) == D.d()) CHECK(std::find(nul.begin(), nul.end(), q) != nul.end());
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Scalar> a, b;
            for (int i = 0; i <= D.m(); ++i) {
                a.push_back(Scalar::of(dist(rng), D.characteristic()));
                b.push_back(Scalar::of(dist(rng), D.characteristic()));
            }
            if (a[0].is_zero()) a[0] = D.one();
            if (b[0].is_zero()) b[0] = D.one();
            DVector<Scalar> x(&D, a), y(&D, b);
            CHECK((x * y).invert() == x.invert() * y.invert());
            CHECK((x * x.invert()) == DVector<Scalar>::scalar(D, D.one()));
        }
        AlgebraSpec back = D.spec();
        CHECK(LocalAlgebra::validate(back).entries().size() == D.entries().size());
    }
}
