#pragma once

#include <memory>
#include <vector>

#include "wb/dfield.hpp"

namespace wb {

// Coefficients c_{u,l}^{ij} of an LHS commutation system over a DField.
// u = 1 Lie (brackets), u = 2 HS (products of operators).
class GammaSystem {
public:
    explicit GammaSystem(std::shared_ptr<const DField> field);

    const DField& field() const { return *field_; }
    std::shared_ptr<const DField> field_ptr() const { return field_; }
    const OpSystem& ops() const { return field_->ops(); }
    int m(int u) const { return ops().count(u); }

    // local indices 1..m_u
    const RatFun& coeff(int u, int l, int i, int j) const;
    void set(int u, int l, int i, int j, const RatFun& c);
    // flat indices; zero across types
    const RatFun& c(int l, int i, int j) const;
    // nonzero (l, c) for the flat pair (i, j)
    const std::vector<std::pair<int, RatFun>>& terms(int i, int j) const;
    bool constant_coefficients() const;

    struct Entry {
        int u, l, i, j;
        RatFun c;
    };
    std::vector<Entry> entries() const;

    GammaSystem with_field(std::shared_ptr<const DField> f) const;

private:
    void rebuild() const;

    std::shared_ptr<const DField> field_;
    std::vector<RatFun> c_[3];
    mutable std::vector<std::vector<std::pair<int, RatFun>>> terms_;
    mutable bool dirty_ = true;
};

// c^{ji} = 0 unless i, j in Null(D1); HS coefficients only in positive characteristic.
Verdict check_lie_type(const GammaSystem& G);
// r(e_p) r(e_q) = r(e_p e_q) in D (x) D (F)
Verdict check_hom(const GammaSystem& G, int which);
Verdict check_jacobi(const GammaSystem& G);
Verdict check_associative(const GammaSystem& G);
Verdict check_jacobi_associative(const GammaSystem& G);
// Gamma-commutativity on the generators of the field
Verdict check_generators(const GammaSystem& G);

// New transcendental generator with declared operator values; revalidates
// on generators, throwing Failure GAMMA_FAIL.
GammaSystem extend_transcendental(const GammaSystem& G, const std::string& name, const std::vector<RatFun>& values);

// HS-only data over k: algebra plus coefficients hs[l][i][j] (1-based, dense).
struct HsSystem {
    LocalAlgebra algebra;
    std::vector<std::vector<std::vector<Scalar>>> c;  // c[l][i][j], index 0 unused
    Scalar at(int l, int i, int j) const;            // with the index-0 conventions
};

HsSystem iterative_hs_coeffs(std::uint32_t p, int n);
HsSystem hs_tensor_reduce(const std::vector<HsSystem>& systems, TensorAlgebra* last = nullptr);

// Field with no generators over a pure Lie / pure HS algebra, and Gamma built from it.
std::shared_ptr<const DField> bare_field(std::shared_ptr<const LocalAlgebra> D1, std::shared_ptr<const LocalAlgebra> D2);
GammaSystem hs_gamma(const HsSystem& S);

}  // namespace wb
