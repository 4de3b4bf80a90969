#include "wb/jets.hpp"

#include <algorithm>
#include <sstream>


namespace wb {

OpSystem::OpSystem(std::shared_ptr<const LocalAlgebra> D1, std::shared_ptr<const LocalAlgebra> D2)
    : D1_(std::move(D1)), D2_(std::move(D2)), m1_(D1_->m()), m2_(D2_->m()) {
    alpha_.resize(size());
    for (int u = 1; u <= 2; ++u)
        for (auto& e : algebra(u).entries())
            if (e.i >= 1) alpha_[flat(u, e.i)].push_back({flat(u, e.p), flat(u, e.q), e.a});
}

Scalar OpSystem::alpha(int k, int p, int q) const {
    for (auto& e : alpha_[k])
        if (e.p == p && e.q == q) return e.a;
    return Scalar::of(0, characteristic());
}

std::string OpSystem::op_str(int k) const { return std::to_string(type(k)) + "," + std::to_string(local(k)); }

std::string OpSystem::word_str(const Word& w) const {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ";";
        s += op_str(w[i]);
    }
    return s + "]";
}

int OpSystem::parse_op(const std::string& s0) const {
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("operator '" + s0 + "' is not of the form u,i", s0);
    int u = 0, i = 0;
    try {
        std::size_t a = 0, b = 0;
        u = std::stoi(s.substr(0, comma), &a);
        i = std::stoi(s.substr(comma + 1), &b);
        if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
        throw ParseError("operator '" + s0 + "' is not of the form u,i", s0);
    }
    if ((u != 1 && u != 2) || i < 1 || i > count(u))
        throw ParseError("operator (" + std::to_string(u) + "," + std::to_string(i) + ") does not exist", s0);
    return flat(u, i);
}

Word OpSystem::parse_word(const std::string& s0) const {
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("index '" + s0 + "' must be [u,i;...]", s0);
    s = s.substr(1, s.size() - 2);
    Word w;
    if (s.empty()) return w;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) w.push_back(parse_op(part));
    return w;
}

int hs_count(const OpSystem& S, const Word& w) {
    int n = 0;
    for (int k : w) n += S.is_hs(k);
    return n;
}

int chi(const OpSystem& S, const Word& w) { return hs_count(S, w) >= 2 ? 0 : 1; }
int chi(const OpSystem& S, int i, int j) { return S.is_hs(i) && S.is_hs(j) ? 0 : 1; }

bool is_normal(const OpSystem& S, const Word& w) {
    return hs_count(S, w) <= 1 && std::is_sorted(w.begin(), w.end(), std::greater<int>());
}

Word rho(const OpSystem& S, const Word& w) {
    if (hs_count(S, w) >= 2) return {};
    Word r = w;
    std::sort(r.begin(), r.end(), std::greater<int>());
    return r;
}

std::vector<int> psi(const OpSystem& S, const Word& w) {
    int n = S.size();
    std::vector<int> v(n, 0);
    for (int k : w) v[n - 1 - k]++;
    return v;
}

Word prepend(int i, const Word& w) {
    Word r;
    r.reserve(w.size() + 1);
    r.push_back(i);
    r.insert(r.end(), w.begin(), w.end());
    return r;
}

static int tri_cmp(const OpSystem& S, const Word& a, int t, const Word& b, int t2) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (t != t2) return t < t2 ? -1 : 1;
    auto pa = psi(S, a), pb = psi(S, b);
    if (pa == pb) return 0;
    return pa < pb ? -1 : 1;
}

bool tri_leq(const OpSystem& S, const Word& a, int t, const Word& b, int t2) { return tri_cmp(S, a, t, b, t2) <= 0; }
bool tri_less(const OpSystem& S, const Word& a, int t, const Word& b, int t2) { return tri_cmp(S, a, t, b, t2) < 0; }

std::vector<Word> normal_words(const OpSystem& S, int r) {
    std::vector<Word> out;
    Word cur;
    // non-increasing sequences; at most one HS entry, necessarily last
    auto rec = [&](auto& self, int left, int maxk) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = maxk; k >= 0; --k) {
            if (S.is_hs(k) && left > 1) continue;
            cur.push_back(k);
            self(self, left - 1, k);
            cur.pop_back();
        }
    };
    if (r == 0) return {Word{}};
    if (S.size() == 0) return out;
    rec(rec, r, S.size() - 1);
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return psi(S, a) < psi(S, b); });
    return out;
}

std::vector<Word> normal_words_upto(const OpSystem& S, int r) {
    std::vector<Word> out;
    for (int k = 0; k <= r; ++k) {
        auto w = normal_words(S, k);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

std::vector<Word> all_words(const OpSystem& S, int r) {
    std::vector<Word> out{Word{}};
    for (int k = 0; k < r; ++k) {
        std::vector<Word> next;
        for (auto& w : out)
            for (int i = 0; i < S.size(); ++i) next.push_back(prepend(i, w));
        out = std::move(next);
    }
    return out;
}

std::vector<Jet> jets_upto(const OpSystem& S, int n, int r) {
    std::vector<Jet> out;
    for (int k = 0; k <= r; ++k) {
        auto ws = normal_words(S, k);
        for (int t = 1; t <= n; ++t)
            for (auto& w : ws) out.push_back({w, t});
    }
    return out;
}

std::string jet_name(const OpSystem& S, const Jet& j) { return "x" + std::to_string(j.t) + "_" + S.word_str(j.xi); }

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

std::vector<std::pair<std::vector<int>, int>> dickson_minimize(const std::vector<std::pair<std::vector<int>, int>>& S) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (std::size_t i = 0; i < S.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < S.size() && minimal; ++j) {
            if (i == j || S[i].second != S[j].second) continue;
            if (dominates(S[i].first, S[j].first) && (S[i].first != S[j].first || j < i)) minimal = false;
        }
        if (minimal) out.push_back(S[i]);
    }
    return out;
}

}  // namespace wb
