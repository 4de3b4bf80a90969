#include "wb/free_module.hpp"

#include <stdexcept>

namespace wb {

void add_to(FreeVector& v, const Word& w, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = v.find(w);
    if (it == v.end()) {
        v.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

void add_to(FreeVector& v, const FreeVector& x, const RatFun& c) {
    if (c.is_zero()) return;
    for (auto& [w, a] : x) add_to(v, w, a * c);
}

FreeVector basis_vector(const Word& w, std::uint32_t p) { return FreeVector{{w, RatFun(Scalar::of(1, p))}}; }

int max_length(const FreeVector& v) {
    int r = -1;
    for (auto& [w, c] : v) r = std::max(r, static_cast<int>(w.size()));
    return r;
}

const FreeVector& FreeModule::apply_basis(int i, const Word& xi) const {
    auto key = std::make_pair(i, xi);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (!active_.insert(key).second) throw std::logic_error("free module recursion does not terminate");
    const OpSystem& S = G_.ops();
    FreeVector out;
    if (xi.empty()) {
        out = basis_vector({i}, S.characteristic());
    } else if (i >= xi[0]) {
        if (S.is_hs(i)) {
            // then xi = (j) with j HS and d_i d_j = sum c_l^{ij} d_l
            for (auto& [l, c] : G_.terms(i, xi[0])) add_to(out, Word{l}, c);
        } else {
            out = basis_vector(prepend(i, xi), S.characteristic());
        }
    } else {
        int j = xi[0];
        Word eta(xi.begin() + 1, xi.end());
        if (chi(S, i, j)) {
            FreeVector inner = apply_basis(i, eta);
            out = apply(j, inner);
        }
        for (auto& [l, c] : G_.terms(i, j)) add_to(out, apply_basis(l, eta), c);
    }
    active_.erase(key);
    return memo_.emplace(key, std::move(out)).first->second;
}

FreeVector FreeModule::apply(int i, const FreeVector& v) const {
    const DField& K = G_.field();
    const OpSystem& S = G_.ops();
    FreeVector out;
    for (auto& [xi, c] : v) {
        add_to(out, apply_basis(i, xi), c);
        if (c.is_scalar()) continue;
        add_to(out, xi, K.partial(i, c));
        for (auto& e : S.alpha_entries(i)) {
            RatFun dp = K.partial(e.p, c);
            if (dp.is_zero()) continue;
            add_to(out, apply_basis(e.q, xi), dp * RatFun(e.a));
        }
    }
    return out;
}

FreeVector FreeModule::apply_word(const Word& xi, const FreeVector& v) const {
    FreeVector r = v;
    for (auto it = xi.rbegin(); it != xi.rend(); ++it) r = apply(*it, r);
    return r;
}

FreeVector FreeModule::ell(const Word& xi) const {
    FreeVector r = apply_word(xi, basis_vector({}, G_.ops().characteristic()));
    const OpSystem& S = G_.ops();
    if (chi(S, xi)) add_to(r, rho(S, xi), RatFun(Scalar::of(-1, S.characteristic())));
    return r;
}

std::string FreeModule::str(const FreeVector& v) const {
    if (v.empty()) return "0";
    const OpSystem& S = G_.ops();
    const auto& names = G_.field().gens();
    std::string s;
    bool first = true;
    // largest words first
    std::vector<const std::pair<const Word, RatFun>*> items;
    for (auto& kv : v) items.push_back(&kv);
    std::sort(items.begin(), items.end(), [&](auto* a, auto* b) {
        if (a->first.size() != b->first.size()) return a->first.size() > b->first.size();
        return psi(S, a->first) > psi(S, b->first);
    });
    for (auto* kv : items) {
        const RatFun& c = kv->second;
        std::string sym = "w" + S.word_str(kv->first);
        if (c.is_scalar()) {
            s += scalar_coeff_str(c.scalar_value(), first, true) + sym;
        } else {
            s += (first ? "" : " + ") + c.str(names, true) + "*" + sym;
        }
        first = false;
    }
    return s;
}

}  // namespace wb
