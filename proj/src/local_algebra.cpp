#include "wb/local_algebra.hpp"

#include <algorithm>
#include <set>

namespace wb {

namespace {

// Row-reduced basis of a span of coordinate vectors.
std::vector<std::vector<Scalar>> echelon(std::vector<std::vector<Scalar>> rows) {
    std::vector<std::vector<Scalar>> out;
    if (rows.empty()) return out;
    std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar k = rows[i][c];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= k * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace

LocalAlgebra LocalAlgebra::validate(const AlgebraSpec& s) {
    if (s.characteristic != 0 && !is_prime(s.characteristic))
        throw Failure("NOT_LOCAL", {}, "characteristic must be 0 or prime");
    if (s.m < 0) throw Failure("NOT_LOCAL", {}, "negative dimension");
    if (static_cast<int>(s.grades.size()) != s.m)
        throw Failure("RANK_FAIL", {}, "expected " + std::to_string(s.m) + " grades");
    LocalAlgebra A;
    A.p_ = s.characteristic;
    A.m_ = s.m;
    A.sigma_ = s.grades;
    int n = s.m + 1;
    A.table_.assign(static_cast<std::size_t>(n) * n * n, Scalar::of(0, A.p_));
    for (int p = 1; p <= s.m; ++p) {
        if (A.sigma_[p - 1] < 1) throw Failure("RANK_FAIL", {p}, "grades must be positive");
        if (p > 1 && A.sigma_[p - 1] < A.sigma_[p - 2]) throw Failure("RANK_FAIL", {p}, "grades must be non-decreasing");
    }
    auto at = [&](int i, int p, int q) -> Scalar& { return A.table_[(static_cast<std::size_t>(i) * n + p) * n + q]; };
    for (auto& [pq, coeffs] : s.products) {
        auto [p, q] = pq;
        if (p < 1 || q < 1 || p > s.m || q > s.m) throw Failure("NOT_LOCAL", {p, q}, "product index out of range");
        for (auto& [i, c] : coeffs) {
            if (i < 0 || i > s.m) throw Failure("NOT_LOCAL", {i, p, q}, "target index out of range");
            at(i, p, q) = c.lifted(A.p_);
        }
    }
    // products listed once stand for both orders
    for (auto& [pq, coeffs] : s.products) {
        auto [p, q] = pq;
        if (p != q && !s.products.count({q, p}))
            for (int i = 0; i <= s.m; ++i) at(i, q, p) = at(i, p, q);
    }
    for (int p = 1; p <= s.m; ++p)
        for (int q = 1; q <= s.m; ++q)
            if (!at(0, p, q).is_zero())
                throw Failure("NOT_LOCAL", {0, p, q}, "e" + std::to_string(p) + "*e" + std::to_string(q) +
                                                          " has a unit component; e1..em do not span an ideal");
    for (int i = 0; i <= s.m; ++i)
        for (int p = 1; p <= s.m; ++p)
            for (int q = 1; q <= s.m; ++q)
                if (!at(i, p, q).is_zero()) A.entries_.push_back({i, p, q, at(i, p, q)});

    for (int p = 1; p <= s.m; ++p)
        for (int q = p + 1; q <= s.m; ++q)
            for (int i = 0; i <= s.m; ++i)
                if (at(i, p, q) != at(i, q, p))
                    throw Failure("ASSOC_FAIL", {p, q}, "multiplication is not commutative");
    for (int p = 1; p <= s.m; ++p)
        for (int q = 1; q <= s.m; ++q)
            for (int r = 1; r <= s.m; ++r) {
                auto left = A.mul(A.mul(A.basis(p), A.basis(q)), A.basis(r));
                auto right = A.mul(A.basis(p), A.mul(A.basis(q), A.basis(r)));
                if (left != right)
                    throw Failure("ASSOC_FAIL", {p, q, r},
                                  "(e" + std::to_string(p) + "e" + std::to_string(q) + ")e" + std::to_string(r) +
                                      " != e" + std::to_string(p) + "(e" + std::to_string(q) + "e" + std::to_string(r) + ")");
            }

    // powers of the maximal ideal
    std::vector<std::vector<std::vector<Scalar>>> powers;
    std::vector<std::vector<Scalar>> cur;
    for (int p = 1; p <= s.m; ++p) cur.push_back(A.basis(p));
    cur = echelon(cur);
    powers.push_back(cur);  // m^1
    while (!cur.empty()) {
        if (static_cast<int>(powers.size()) > s.m)
            throw Failure("NOT_LOCAL", {static_cast<int>(powers.size())}, "maximal ideal is not nilpotent");
        std::vector<std::vector<Scalar>> next;
        for (auto& v : cur)
            for (int p = 1; p <= s.m; ++p) next.push_back(A.mul(v, A.basis(p)));
        next = echelon(next);
        if (next.size() == cur.size())
            throw Failure("NOT_LOCAL", {static_cast<int>(powers.size())}, "maximal ideal is not nilpotent");
        powers.push_back(next);
        cur = next;
    }
    A.d_ = static_cast<int>(powers.size()) - 1;

    for (auto& e : A.entries_)
        if (e.i >= 1 && A.sigma(e.p) + A.sigma(e.q) > A.sigma(e.i))
            throw Failure("RANK_FAIL", {e.i, e.p, e.q},
                          "alpha_" + std::to_string(e.i) + "^{" + std::to_string(e.p) + "," + std::to_string(e.q) +
                              "} != 0 but sigma(p)+sigma(q) > sigma(i)");
    for (int g = 1; g <= A.d_ + 1; ++g) {
        int declared = 0;
        for (int p = 1; p <= s.m; ++p) declared += A.sigma(p) >= g;
        int actual = g - 1 < static_cast<int>(powers.size()) ? static_cast<int>(powers[g - 1].size()) : 0;
        if (declared != actual) {
            int w = 0;
            for (int p = 1; p <= s.m && !w; ++p)
                if (A.sigma(p) >= g) w = p;
            throw Failure("RANK_FAIL", {w}, "grade " + std::to_string(g) + ": m^" + std::to_string(g) + " has dimension " +
                                                std::to_string(actual) + " but " + std::to_string(declared) +
                                                " basis elements are declared there");
        }
    }
    if (s.m > 0 && A.sigma(s.m) != A.d_)
        throw Failure("RANK_FAIL", {s.m}, "largest grade differs from the nilpotency index");
    return A;
}

std::vector<int> LocalAlgebra::breakpoints() const {
    std::vector<int> D{0};
    int acc = 0;
    for (int j = 0; j <= d_; ++j) {
        int dj = j == 0 ? 1 : static_cast<int>(std::count(sigma_.begin(), sigma_.end(), j));
        acc += dj;
        D.push_back(acc);
    }
    return D;
}

const Scalar& LocalAlgebra::alpha(int i, int p, int q) const {
    static const Scalar zero;
    if (p < 1 || q < 1 || p > m_ || q > m_ || i < 0 || i > m_) return zero;
    int n = m_ + 1;
    return table_[(static_cast<std::size_t>(i) * n + p) * n + q];
}

Scalar LocalAlgebra::full(int i, int p, int q) const {
    if (p == 0) return i == q ? one() : zero();
    if (q == 0) return i == p ? one() : zero();
    return alpha(i, p, q);
}

std::vector<Scalar> LocalAlgebra::basis(int i) const {
    std::vector<Scalar> v(dim(), zero());
    v[i] = one();
    return v;
}

std::vector<Scalar> LocalAlgebra::mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    DVector<Scalar> x(this, a), y(this, b);
    return (x * y).coords();
}

AlgebraSpec LocalAlgebra::spec() const {
    AlgebraSpec s;
    s.characteristic = p_;
    s.m = m_;
    s.grades = sigma_;
    for (auto& e : entries_)
        if (e.p <= e.q) s.products[{e.p, e.q}][e.i] = e.a;
    return s;
}

std::vector<int> null_set(const LocalAlgebra& D) {
    std::set<int> bad;
    for (auto& e : D.entries()) bad.insert(e.q);
    std::vector<int> out;
    for (int q = 1; q <= D.m(); ++q)
        if (!bad.count(q)) out.push_back(q);
    return out;
}

std::vector<int> support(const LocalAlgebra& D, int i) {
    auto supp1 = [&](int j) {
        std::set<int> s;
        for (auto& e : D.entries())
            if (e.i == j) s.insert(e.q);
        return s;
    };
    std::set<int> all, layer = supp1(i);
    for (int n = 1; n <= D.sigma(i) && !layer.empty(); ++n) {
        all.insert(layer.begin(), layer.end());
        std::set<int> next;
        for (int q : layer) {
            auto s = supp1(q);
            next.insert(s.begin(), s.end());
        }
        layer = next;
    }
    return {all.begin(), all.end()};
}

Verdict frobenius_assumption(const LocalAlgebra& D1, const LocalAlgebra& D2) {
    std::uint32_t p = D1.characteristic();
    if (p == 0 || D1.m() == 0) return Verdict::ok();
    const LocalAlgebra* algs[2] = {&D1, &D2};
    for (int u = 0; u < 2; ++u) {
        const LocalAlgebra& D = *algs[u];
        for (int q = 1; q <= D.m(); ++q) {
            auto pw = D.basis(0);
            for (std::uint32_t k = 0; k < p; ++k) pw = D.mul(pw, D.basis(q));
            bool zero = std::all_of(pw.begin(), pw.end(), [](const Scalar& x) { return x.is_zero(); });
            if (!zero)
                return Verdict::fail("FROBENIUS_FAIL", {u + 1, q},
                                     "e_{" + std::to_string(u + 1) + "," + std::to_string(q) + "}^" + std::to_string(p) +
                                         " != 0, so the maximal ideal is not the Frobenius kernel");
        }
    }
    return Verdict::ok();
}

int TensorAlgebra::index(int i, int j) const {
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
    return -1;
}

TensorAlgebra tensor(const LocalAlgebra& D1, const LocalAlgebra& D2) {
    TensorAlgebra T;
    for (int i = 0; i <= D1.m(); ++i)
        for (int j = 0; j <= D2.m(); ++j) T.pairs.push_back({i, j});
    std::stable_sort(T.pairs.begin(), T.pairs.end(), [&](const auto& a, const auto& b) {
        int ga = D1.sigma(a.first) + D2.sigma(a.second), gb = D1.sigma(b.first) + D2.sigma(b.second);
        if (ga != gb) return ga < gb;
        return a < b;
    });
    AlgebraSpec s;
    s.characteristic = D1.characteristic();
    s.m = static_cast<int>(T.pairs.size()) - 1;
    for (int k = 1; k <= s.m; ++k) s.grades.push_back(D1.sigma(T.pairs[k].first) + D2.sigma(T.pairs[k].second));
    for (int x = 1; x <= s.m; ++x)
        for (int y = x; y <= s.m; ++y) {
            auto [i, j] = T.pairs[x];
            auto [k, l] = T.pairs[y];
            std::map<int, Scalar> coeffs;
            for (int z = 1; z <= s.m; ++z) {
                auto [a, b] = T.pairs[z];
                Scalar c = D1.full(a, i, k) * D2.full(b, j, l);
                if (!c.is_zero()) coeffs[z] = c;
            }
            if (!coeffs.empty()) s.products[{x, y}] = coeffs;
        }
    T.algebra = LocalAlgebra::validate(s);
    return T;
}

}  // namespace wb
