#include "doctest.h"

#include <random>
#include <set>

#include "wb/jets.hpp"

using namespace wb;

namespace {

std::shared_ptr<const LocalAlgebra> derivs(int m) {
    AlgebraSpec s;
    s.m = m;
    s.grades.assign(m, 1);
    return std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(s));
}

std::shared_ptr<const LocalAlgebra> trunc(std::uint32_t p, int n) {
    AlgebraSpec s;
    s.characteristic = p;
    s.m = n;
    for (int i = 1; i <= n; ++i) s.grades.push_back(i);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            if (a + b <= n) s.products[{a, b}][a + b] = Scalar(1);
    return std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(s));
}

std::shared_ptr<const LocalAlgebra> point(std::uint32_t p = 0) {
    AlgebraSpec s;
    s.characteristic = p;
    return std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(s));
}

// two Lie operators and two HS operators over F_2
OpSystem mixed() {
    AlgebraSpec s;
    s.characteristic = 2;
    s.m = 2;
    s.grades = {1, 1};
    return OpSystem(std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(s)), trunc(2, 2));
}

}  // namespace

TEST_CASE("operator order and text") {
    OpSystem S = mixed();
    CHECK(S.size() == 4);
    CHECK(S.op_str(0) == "2,1");
    CHECK(S.op_str(1) == "2,2");
    CHECK(S.op_str(2) == "1,1");
    CHECK(S.op_str(3) == "1,2");
    CHECK(S.parse_word("[1,2; 2,1]") == Word{3, 0});
    CHECK(S.parse_word("[]").empty());
    CHECK(S.word_str({3, 2, 1}) == "[1,2;1,1;2,2]");
    CHECK_THROWS_AS(S.parse_word("[3,1]"), ParseError);
    CHECK_THROWS_AS(S.parse_word("1,1"), ParseError);
    CHECK(jet_name(S, {{2}, 1}) == "x1_[1,1]");
}

TEST_CASE("rho examples") {
    OpSystem S = mixed();
    int l1 = S.flat(1, 1), l2 = S.flat(1, 2), h1 = S.flat(2, 1);
    CHECK(rho(S, {l1, l2}) == Word{l2, l1});
    CHECK(rho(S, {h1, h1}).empty());
    CHECK(chi(S, Word{h1, h1}) == 0);
    CHECK(rho(S, {h1, l1}) == Word{l1, h1});
    CHECK(chi(S, Word{h1, l1}) == 1);
}

TEST_CASE("tri_leq examples") {
    OpSystem S(derivs(2), point());
    CHECK(tri_leq(S, {}, 1, {}, 2));
    CHECK(tri_leq(S, {S.flat(1, 1)}, 1, {S.flat(1, 2)}, 1));
    CHECK(!tri_leq(S, {S.flat(1, 2)}, 1, {S.flat(1, 1)}, 1));
    CHECK(tri_leq(S, {S.flat(1, 2)}, 2, {S.flat(1, 2)}, 2));
}

TEST_CASE("dickson examples") {
    using E = std::pair<std::vector<int>, int>;
    std::vector<E> in = {{{2, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}};
    CHECK(dickson_minimize(in) == std::vector<E>{{{2, 0}, 1}, {{1, 1}, 1}});
    CHECK(dickson_minimize({}).empty());
    // different t never compare
    CHECK(dickson_minimize({{{1, 0}, 1}, {{2, 0}, 2}}).size() == 2);
}

TEST_CASE("dickson vs pairwise oracle") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(0, 3), t(1, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<std::pair<std::vector<int>, int>> uniq;
        for (int k = 0; k < 12; ++k) uniq.insert({{d(rng), d(rng), d(rng)}, t(rng)});
        std::vector<std::pair<std::vector<int>, int>> in(uniq.begin(), uniq.end());
        auto out = dickson_minimize(in);
        std::set<std::pair<std::vector<int>, int>> expect;
        for (auto& a : in) {
            bool min = true;
            for (auto& b : in)
                if (a != b && a.second == b.second && dominates(a.first, b.first)) min = false;
            if (min) expect.insert(a);
        }
        CHECK(std::set<std::pair<std::vector<int>, int>>(out.begin(), out.end()) == expect);
        for (auto& a : in) {
            bool covered = false;
            for (auto& b : out) covered |= a.second == b.second && dominates(a.first, b.first);
            CHECK(covered);
        }
    }
}

TEST_CASE("index invariants") {
    std::vector<OpSystem> systems = {OpSystem(derivs(1), point()), OpSystem(derivs(2), point()), mixed(),
                                     OpSystem(point(3), trunc(3, 2))};
    for (auto& S : systems) {
        for (int r = 0; r <= 4; ++r)
            for (auto& w : all_words(S, r)) {
                auto once = rho(S, w);
                CHECK(rho(S, once) == once);
                if (chi(S, w)) CHECK(is_normal(S, once));
            }
        auto N = normal_words_upto(S, 5);
        std::set<std::vector<int>> seen;
        for (auto& w : N) {
            CHECK(is_normal(S, w));
            CHECK(seen.insert(psi(S, w)).second);
        }
        // enumeration count matches a brute force filter
        for (int r = 0; r <= 4; ++r) {
            std::size_t brute = 0;
            for (auto& w : all_words(S, r)) brute += is_normal(S, w);
            CHECK(normal_words(S, r).size() == brute);
        }
        auto J = jets_upto(S, 2, 4);
        for (std::size_t a = 0; a + 1 < J.size(); ++a) CHECK(tri_less(S, J[a].xi, J[a].t, J[a + 1].xi, J[a + 1].t));
        for (auto& a : J)
            for (auto& b : J) {
                bool ab = tri_leq(S, a.xi, a.t, b.xi, b.t), ba = tri_leq(S, b.xi, b.t, a.xi, a.t);
                CHECK((ab || ba));
                if (ab && ba) CHECK(a == b);
            }
        // transitivity on a subsample
        for (std::size_t a = 0; a < J.size(); a += 3)
            for (std::size_t b = 0; b < J.size(); b += 2)
                for (std::size_t c = 0; c < J.size(); c += 5)
                    if (tri_leq(S, J[a].xi, J[a].t, J[b].xi, J[b].t) && tri_leq(S, J[b].xi, J[b].t, J[c].xi, J[c].t))
                        CHECK(tri_leq(S, J[a].xi, J[a].t, J[c].xi, J[c].t));
    }
}
