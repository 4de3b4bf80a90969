#pragma once

#include <map>
#include <set>
#include <string>

#include "wb/gamma.hpp"

namespace wb {

// F-linear combination of symbols w^xi over normal words xi.
using FreeVector = std::map<Word, RatFun>;

void add_to(FreeVector& v, const Word& w, const RatFun& c);
void add_to(FreeVector& v, const FreeVector& x, const RatFun& c);
FreeVector basis_vector(const Word& w, std::uint32_t p = 0);
int max_length(const FreeVector& v);

// The free Gamma-commuting module V_F. Memoizes d_i(w^xi); not thread safe.
class FreeModule {
public:
    explicit FreeModule(const GammaSystem& G) : G_(G) {}

    const GammaSystem& gamma() const { return G_; }
    const FreeVector& apply_basis(int i, const Word& xi) const;
    FreeVector apply(int i, const FreeVector& v) const;
    // d_{i1} ... d_{ir} v, rightmost first; xi need not be normal
    FreeVector apply_word(const Word& xi, const FreeVector& v) const;
    // d_xi w^0 - chi_xi w^rho(xi)
    FreeVector ell(const Word& xi) const;

    std::string str(const FreeVector& v) const;

private:
    const GammaSystem& G_;
    mutable std::map<std::pair<int, Word>, FreeVector> memo_;
    mutable std::set<std::pair<int, Word>> active_;
};

}  // namespace wb
