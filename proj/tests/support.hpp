#pragma once

#include <memory>
#include <optional>

#include "wb/free_module.hpp"
#include "wb/gamma.hpp"
#include "wb/text.hpp"

namespace wbt {

using namespace wb;

inline std::shared_ptr<const LocalAlgebra> point(std::uint32_t p = 0) {
    AlgebraSpec s;
    s.characteristic = p;
    return std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(s));
}

// k[e1..em]/(e)^2
inline std::shared_ptr<const LocalAlgebra> derivs(int m, std::uint32_t p = 0) {
    AlgebraSpec s;
    s.characteristic = p;
    s.m = m;
    s.grades.assign(m, 1);
    return std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(s));
}

// k[e]/(e^(n+1))
inline std::shared_ptr<const LocalAlgebra> truncated(std::uint32_t p, int n) {
    AlgebraSpec s;
    s.characteristic = p;
    s.m = n;
    for (int i = 1; i <= n; ++i) s.grades.push_back(i);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            if (a + b <= n) s.products[{a, b}][a + b] = Scalar(1);
    return std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(s));
}

inline std::shared_ptr<const DField> field(std::shared_ptr<const LocalAlgebra> D1, std::shared_ptr<const LocalAlgebra> D2,
                                           std::vector<std::string> gens = {},
                                           std::vector<std::vector<std::string>> action = {}) {
    auto ops = std::make_shared<const OpSystem>(D1, D2);
    std::vector<std::vector<RatFun>> act;
    for (auto& row : action) {
        std::vector<RatFun> r;
        for (auto& s : row) r.push_back(parse_ratfun(s, gens, D1->characteristic()));
        act.push_back(r);
    }
    return std::make_shared<const DField>(ops, gens, act);
}

inline GammaSystem trivial_system() { return GammaSystem(field(derivs(1), point())); }

inline GammaSystem sl2_system() {
    GammaSystem G(field(derivs(3), point()));
    G.set(1, 3, 1, 2, RatFun(1));
    G.set(1, 3, 2, 1, RatFun(-1));
    G.set(1, 1, 3, 1, RatFun(2));
    G.set(1, 1, 1, 3, RatFun(-2));
    G.set(1, 2, 3, 2, RatFun(-2));
    G.set(1, 2, 2, 3, RatFun(2));
    return G;
}

inline GammaSystem iterative_system(std::uint32_t p, int n) { return hs_gamma(iterative_hs_coeffs(p, n)); }

// two derivations with [d1, d2] = d1 and one HS operator with d d = 0, over F_2
inline GammaSystem mixed_system() {
    GammaSystem G(field(derivs(2, 2), truncated(2, 1)));
    G.set(1, 1, 1, 2, RatFun(1));
    G.set(1, 1, 2, 1, RatFun(1));
    return G;
}

// two commuting derivations over Q
inline GammaSystem commuting_system() { return GammaSystem(field(derivs(2), point())); }

// d/dt on Q(t)
inline GammaSystem qt_system() { return GammaSystem(field(derivs(1), point(), {"t"}, {{"1"}})); }

// Gamma-commutativity of the free module on all normal words of length <= len;
// returns the first failing (i, j, lambda) or nothing.
struct CommFailure {
    int i, j;
    Word lambda;
};
inline std::optional<CommFailure> free_commutativity(const GammaSystem& G, int len) {
    FreeModule V(G);
    const OpSystem& S = G.ops();
    for (auto& lam : normal_words_upto(S, len))
        for (int i = 0; i < S.size(); ++i)
            for (int j = 0; j < S.size(); ++j) {
                FreeVector w = basis_vector(lam, S.characteristic());
                FreeVector lhs = V.apply(i, V.apply(j, w));
                FreeVector rhs;
                if (chi(S, i, j)) rhs = V.apply(j, V.apply(i, w));
                for (auto& [l, c] : G.terms(i, j)) add_to(rhs, V.apply(l, w), c);
                if (lhs != rhs) return CommFailure{i, j, lam};
            }
    return std::nullopt;
}

}  // namespace wbt
