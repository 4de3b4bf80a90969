#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wb/jets.hpp"
#include "wb/local_algebra.hpp"
#include "wb/ratfun.hpp"

namespace wb {

// Rational function field k(gens) with operator values on the generators.
// action[g][k] = d_k(gen g) for every flat operator index k.
class DField {
public:
    DField(std::shared_ptr<const OpSystem> ops, std::vector<std::string> gens, std::vector<std::vector<RatFun>> action);

    std::uint32_t characteristic() const { return ops_->characteristic(); }
    const OpSystem& ops() const { return *ops_; }
    std::shared_ptr<const OpSystem> ops_ptr() const { return ops_; }
    const std::vector<std::string>& gens() const { return gens_; }
    int ngens() const { return static_cast<int>(gens_.size()); }
    const RatFun& action(int g, int k) const { return action_[g][k]; }
    const std::vector<std::vector<RatFun>>& action() const { return action_; }

    // e_u(x) in D_u(K); coordinate 0 is x.
    DVector<RatFun> apply_e(int u, const RatFun& x) const;
    RatFun partial(int k, const RatFun& x) const;
    // d_{i1} ... d_{ir} x, rightmost operator first
    RatFun apply_word(const Word& w, const RatFun& x) const;
    bool is_constant(const RatFun& x) const;

    DField extended(const std::string& name, const std::vector<RatFun>& values) const;

    RatFun parse(const std::string& text) const;
    std::string str(const RatFun& x) const { return x.str(gens_); }

private:
    std::shared_ptr<const OpSystem> ops_;
    std::vector<std::string> gens_;
    std::vector<std::vector<RatFun>> action_;
};

// Polynomials in one new variable (index 0) over K.
using KUni = Poly<RatFun>;

// d_k(a) for every flat k, where a is a root of the separable f, as
// polynomials in a reduced modulo f. Throws Failure NOT_SEPARABLE.
std::vector<KUni> extend_separable(const DField& K, const KUni& f);

// f^e(e(a)) coordinates modulo f, given the values d_k(a); all zero for a
// correct extension.
std::vector<KUni> residual(const DField& K, const KUni& f, const std::vector<KUni>& values, int u);

// Inseparable minimal polynomial f = g(x^p): EXTENDABLE iff every coefficient
// is a constant. Pass means extendable.
Verdict extend_inseparable_decide(const DField& K, const KUni& f);

// Univariate helpers over K.
KUni uni_rem(const KUni& a, const KUni& f);
KUni uni_gcd(const KUni& a, const KUni& b);
// inverse of a modulo f; throws Failure NOT_UNIT when gcd(a,f) != 1
KUni uni_inverse(const KUni& a, const KUni& f);

}  // namespace wb
