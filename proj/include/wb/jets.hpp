#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wb/expr.hpp"
#include "wb/local_algebra.hpp"

namespace wb {

// A word over the operator alphabet. Entries are flat indices: 0..m2-1 are
// the HS operators (2,1)..(2,m2), m2..m2+m1-1 the Lie operators (1,1)..(1,m1),
// so the integer order is the operator order. The word (i1,..,ir) stands for
// d_{i1} ... d_{ir}.
using Word = std::vector<int>;

class OpSystem {
public:
    OpSystem(std::shared_ptr<const LocalAlgebra> D1, std::shared_ptr<const LocalAlgebra> D2);

    int size() const { return m1_ + m2_; }
    int m1() const { return m1_; }
    int m2() const { return m2_; }
    std::uint32_t characteristic() const { return D1_->characteristic(); }
    const LocalAlgebra& algebra(int u) const { return u == 1 ? *D1_ : *D2_; }
    std::shared_ptr<const LocalAlgebra> algebra_ptr(int u) const { return u == 1 ? D1_ : D2_; }

    bool is_hs(int k) const { return k < m2_; }
    int type(int k) const { return is_hs(k) ? 2 : 1; }
    int local(int k) const { return is_hs(k) ? k + 1 : k - m2_ + 1; }
    int flat(int u, int i) const { return u == 2 ? i - 1 : m2_ + i - 1; }
    int count(int u) const { return u == 1 ? m1_ : m2_; }

    // alpha_k^{pq}, zero across types
    Scalar alpha(int k, int p, int q) const;
    struct AlphaEntry {
        int p, q;
        Scalar a;
    };
    const std::vector<AlphaEntry>& alpha_entries(int k) const { return alpha_[k]; }

    // Text forms: "1,2" for an operator, "[1,2;2,1]" for a word.
    std::string op_str(int k) const;
    std::string word_str(const Word& w) const;
    int parse_op(const std::string& s) const;  // throws ParseError
    Word parse_word(const std::string& s) const;

private:
    std::shared_ptr<const LocalAlgebra> D1_, D2_;
    int m1_, m2_;
    std::vector<std::vector<AlphaEntry>> alpha_;
};

int hs_count(const OpSystem& S, const Word& w);
int chi(const OpSystem& S, const Word& w);
int chi(const OpSystem& S, int i, int j);
bool is_normal(const OpSystem& S, const Word& w);
Word rho(const OpSystem& S, const Word& w);
std::vector<int> psi(const OpSystem& S, const Word& w);
Word prepend(int i, const Word& w);

// (|xi|, t, psi(xi)) <= (|eta|, t', psi(eta)) lexicographically
bool tri_leq(const OpSystem& S, const Word& a, int t, const Word& b, int t2);
bool tri_less(const OpSystem& S, const Word& a, int t, const Word& b, int t2);

// Normal words of length exactly r / at most r, in increasing order.
std::vector<Word> normal_words(const OpSystem& S, int r);
std::vector<Word> normal_words_upto(const OpSystem& S, int r);
// All words (not necessarily normal) of length r.
std::vector<Word> all_words(const OpSystem& S, int r);

struct Jet {
    Word xi;
    int t;
    friend bool operator==(const Jet& a, const Jet& b) { return a.t == b.t && a.xi == b.xi; }
};
// Jets (xi, t), |xi| <= r, t = 1..n, sorted increasingly.
std::vector<Jet> jets_upto(const OpSystem& S, int n, int r);
std::string jet_name(const OpSystem& S, const Jet& j);

// Minimal elements under the product order on psi (same t). Input as
// (psi-vector, t) pairs; output keeps input order of survivors.
std::vector<std::pair<std::vector<int>, int>> dickson_minimize(const std::vector<std::pair<std::vector<int>, int>>& S);
bool dominates(const std::vector<int>& a, const std::vector<int>& b);  // a >= b componentwise

}  // namespace wb
