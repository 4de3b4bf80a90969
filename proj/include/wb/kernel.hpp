#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wb/free_module.hpp"
#include "wb/groebner.hpp"

namespace wb {

// Polynomials in jet variables over the base field K.
using KPoly = Poly<RatFun>;

// Jet variables x_t^xi for a fixed n, numbered in increasing order. The
// numbering of the jets of order <= r is a prefix of the one for r + 1, so a
// variable index never changes under prolongation. Also carries the operator
// action on jets (through the free module) and on polynomials (through e).
// Caches grow on demand; not thread safe.
class JetCalculus {
public:
    JetCalculus(std::shared_ptr<const GammaSystem> G, int n);

    const GammaSystem& gamma() const { return *G_; }
    std::shared_ptr<const GammaSystem> gamma_ptr() const { return G_; }
    const OpSystem& ops() const { return G_->ops(); }
    const DField& field() const { return G_->field(); }
    const FreeModule& free() const { return free_; }
    int n() const { return n_; }

    int count(int r) const;  // jets of order <= r
    int index(const Jet& j) const;
    const Jet& jet(int v) const;
    int order(int v) const { return static_cast<int>(jet(v).xi.size()); }
    int order(const KPoly& f) const { return f.is_zero() || f.is_constant() ? 0 : order(f.max_var()); }
    std::string name(int v) const { return jet_name(ops(), jet(v)); }
    std::vector<std::string> names(int r) const;

    KPoly var(const Jet& j) const;
    KPoly constant(const RatFun& c) const { return KPoly(c, Order::Lex); }
    // d_xi x_t for any word, rewritten in normal jets
    KPoly word_jet(const Word& xi, int t) const;

    DVector<KPoly> e(int u, const KPoly& f) const;
    KPoly apply(int k, const KPoly& f) const;

    // Text over the base generators and jet names of order <= r. Non-normal
    // words are rewritten; unknown names raise ParseError.
    KPoly parse(const std::string& text, int r) const;
    std::string str(const KPoly& f) const;

private:
    void extend(int r) const;
    const DVector<KPoly>& e_var(int u, int v) const;
    KPoly from_free(const FreeVector& w, int t) const;

    std::shared_ptr<const GammaSystem> G_;
    FreeModule free_;
    int n_;
    mutable int built_ = -1;
    mutable std::vector<Jet> jets_;
    mutable std::vector<int> upto_;
    mutable std::map<std::pair<Word, int>, int> index_;
    mutable std::map<std::pair<int, int>, DVector<KPoly>> e_cache_;
};

struct LeaderInfo {
    Jet jet;
    int var = 0;
    bool separable = true;
    KPoly min_poly;
};

struct LeaderReport {
    std::vector<LeaderInfo> leaders;  // increasing
    std::vector<Jet> minimal;         // minimal separable leaders
    std::vector<Jet> inseparable;
    bool separable = true;
};

// A kernel of length r: relations among the jets of order <= r.
class Kernel {
public:
    // Throws Failure NOT_A_KERNEL when the ideal is the unit ideal or the
    // operators do not map the relations of order <= r-1 into the ideal.
    Kernel(std::shared_ptr<const JetCalculus> J, int r, std::vector<KPoly> relations);
    static Kernel parse(std::shared_ptr<const GammaSystem> G, int n, int r, const std::vector<std::string>& relations);

    const JetCalculus& calculus() const { return *J_; }
    std::shared_ptr<const JetCalculus> calculus_ptr() const { return J_; }
    const GammaSystem& gamma() const { return J_->gamma(); }
    const OpSystem& ops() const { return J_->ops(); }
    int n() const { return J_->n(); }
    int r() const { return r_; }
    int nvars() const { return J_->count(r_); }

    const std::vector<KPoly>& generators() const { return gens_; }
    // reduced lex basis, variables in jet order
    const std::vector<KPoly>& basis() const { return basis_; }
    bool contains(const KPoly& f) const { return in_ideal(f.with_order(Order::Lex), basis_); }
    KPoly reduce(const KPoly& f) const { return normal_form(f.with_order(Order::Lex), basis_); }
    std::string str(const KPoly& f) const { return J_->str(f); }

    const LeaderReport& leaders() const;

private:
    std::shared_ptr<const JetCalculus> J_;
    int r_;
    std::vector<KPoly> gens_, basis_;
    mutable std::shared_ptr<LeaderReport> leaders_;
};

// Jet as a witness tuple (t, u1, i1, u2, i2, ...).
std::vector<int> jet_witness(const OpSystem& S, const Jet& j);

struct ProlongReport {
    int routes = 0;          // admissible (i, tau) routes met
    int routes_compared = 0;  // routes checked against the chosen one
    std::vector<Jet> specialized;
};

// Generic prolongation to length r + 1. Throws Failure INSEPARABLE_KERNEL,
// FROBENIUS_FAIL or NOT_A_KERNEL.
Kernel generic_prolong(const Kernel& K, ProlongReport* report = nullptr);

// Separable, and the minimal separable leaders of order <= 2r are those of
// order <= r. Needs a kernel of length >= 2r.
Verdict realisation_criterion(const Kernel& K, int r);

// Prolongs to length 2r first when needed, checks the criterion (Failure
// CRITERION_FAIL), then prolongs to length s.
Kernel realize(const Kernel& K, int r, int s);

// Substitutes x_t^xi -> d_xi(b_t) into the relations.
Verdict specialize_check(const Kernel& K, const std::vector<RatFun>& b);

bool isomorphic(const Kernel& A, const Kernel& B);

// d_i d_j f - chi_ij d_j d_i f - sum_l c_l^ij d_l f lies in the ideal for
// every f given and all i, j. Witness (element, i, j) with 1-based element.
Verdict gamma_commuting(const Kernel& K, const std::vector<KPoly>& elems);

}  // namespace wb
