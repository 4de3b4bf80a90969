#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wb/failure.hpp"
#include "wb/poly.hpp"
#include "wb/scalar.hpp"

namespace wb {

// Raw description of an algebra with basis 1 = e0, e1..em.
struct AlgebraSpec {
    std::uint32_t characteristic = 0;
    int m = 0;
    std::vector<int> grades;  // grades[p-1] = sigma(p)
    // products[{p,q}][i] = coefficient of e_i in e_p*e_q, p,q >= 1
    std::map<std::pair<int, int>, std::map<int, Scalar>> products;
};

class LocalAlgebra {
public:
    struct Entry {
        int i, p, q;
        Scalar a;
    };

    LocalAlgebra() = default;

    // Checks the ideal, commutativity/associativity, nilpotency and ranked
    // basis conditions. Throws Failure (NOT_LOCAL, ASSOC_FAIL, RANK_FAIL).
    static LocalAlgebra validate(const AlgebraSpec& spec);

    std::uint32_t characteristic() const { return p_; }
    int m() const { return m_; }
    int dim() const { return m_ + 1; }
    int sigma(int p) const { return p == 0 ? 0 : sigma_[p - 1]; }
    int d() const { return d_; }
    // D_j for j = -1..d (index j+1)
    std::vector<int> breakpoints() const;

    // alpha_i^{pq}: coefficient of e_i in e_p e_q for p,q >= 1.
    const Scalar& alpha(int i, int p, int q) const;
    // Structure constant including the unit: e_p e_q with p or q = 0.
    Scalar full(int i, int p, int q) const;
    const std::vector<Entry>& entries() const { return entries_; }
    Scalar one() const { return Scalar::of(1, p_); }
    Scalar zero() const { return Scalar::of(0, p_); }

    // Product of two coordinate vectors over k.
    std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    std::vector<Scalar> basis(int i) const;

    AlgebraSpec spec() const;

private:
    std::uint32_t p_ = 0;
    int m_ = 0, d_ = 0;
    std::vector<int> sigma_;
    std::vector<Scalar> table_;  // (m+1)^3, index (i, p, q)
    std::vector<Entry> entries_;
};

std::vector<int> null_set(const LocalAlgebra& D);
std::vector<int> support(const LocalAlgebra& D, int i);
Verdict frobenius_assumption(const LocalAlgebra& D1, const LocalAlgebra& D2);

// Tensor product with basis e_i (x) e_j ordered by total grade, then (i,j).
struct TensorAlgebra {
    LocalAlgebra algebra;
    std::vector<std::pair<int, int>> pairs;  // basis index -> (i, j)
    int index(int i, int j) const;
};
TensorAlgebra tensor(const LocalAlgebra& D1, const LocalAlgebra& D2);

// Lift a k-scalar into a coefficient ring.
template <class R>
struct Lift {
    static R of(const Scalar& s) { return R(s); }
};
template <class C>
struct Lift<Poly<C>> {
    static Poly<C> of(const Scalar& s) { return Poly<C>(Lift<C>::of(s)); }
};

// Element of D(R) = D (x) R as m+1 coordinates.
template <class R>
class DVector {
public:
    DVector() = default;
    DVector(const LocalAlgebra* D, std::vector<R> c) : D_(D), c_(std::move(c)) {}
    static DVector scalar(const LocalAlgebra& D, const R& x) {
        std::vector<R> c(D.dim(), Lift<R>::of(D.zero()));
        c[0] = x;
        return DVector(&D, std::move(c));
    }

    const LocalAlgebra& algebra() const { return *D_; }
    const R& operator[](int i) const { return c_[i]; }
    R& operator[](int i) { return c_[i]; }
    const std::vector<R>& coords() const { return c_; }
    int size() const { return static_cast<int>(c_.size()); }
    bool is_zero() const {
        for (auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend DVector operator+(const DVector& a, const DVector& b) {
        DVector r = a;
        for (int i = 0; i < r.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }
    friend DVector operator-(const DVector& a, const DVector& b) {
        DVector r = a;
        for (int i = 0; i < r.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
        return r;
    }
    DVector operator-() const {
        DVector r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend DVector operator*(const DVector& a, const DVector& b) {
        const LocalAlgebra& D = *a.D_;
        std::vector<R> c(D.dim());
        c[0] = a.c_[0] * b.c_[0];
        for (int i = 1; i < D.dim(); ++i) c[i] = a.c_[0] * b.c_[i] + a.c_[i] * b.c_[0];
        for (auto& e : D.entries()) {
            if (a.c_[e.p].is_zero() || b.c_[e.q].is_zero()) continue;
            c[e.i] = c[e.i] + a.c_[e.p] * b.c_[e.q] * Lift<R>::of(e.a);
        }
        return DVector(a.D_, std::move(c));
    }
    friend bool operator==(const DVector& a, const DVector& b) { return a.c_ == b.c_; }

    // Geometric series in the nilpotent part; needs a field-like R.
    DVector invert() const {
        if (c_[0].is_zero()) throw Failure("NOT_UNIT", {0}, "residue is zero");
        R inv0 = Lift<R>::of(D_->one()) / c_[0];
        DVector n = *this;
        n.c_[0] = Lift<R>::of(D_->zero());
        for (int i = 1; i < size(); ++i) n.c_[i] = -(n.c_[i] * inv0);
        DVector acc = scalar(*D_, Lift<R>::of(D_->one()));
        DVector term = acc;
        for (int j = 1; j <= D_->d(); ++j) {
            term = term * n;
            acc = acc + term;
        }
        for (auto& x : acc.c_) x = x * inv0;
        return acc;
    }

private:
    const LocalAlgebra* D_ = nullptr;
    std::vector<R> c_;
};

}  // namespace wb
