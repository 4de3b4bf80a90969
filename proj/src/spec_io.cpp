#include "wb/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "wb/text.hpp"

namespace wb::io {

namespace {

[[noreturn]] void fail(const Where& w, const std::string& msg) { throw ParseError(w.at + ": " + msg, w.at); }

const json& need(const json& j, const std::string& key, const Where& w) {
    if (!j.is_object()) fail(w, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(w, "missing field '" + key + "'");
    return *it;
}

long need_int(const json& j, const std::string& key, const Where& w, long lo) {
    const json& v = need(j, key, w);
    if (!v.is_number_integer()) fail(w / key, "expected an integer");
    long x = v.get<long>();
    if (x < lo) fail(w / key, "must be at least " + std::to_string(lo));
    return x;
}

int small_int(const std::string& s, const Where& w) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        fail(w, "'" + s + "' is not an integer");
    }
    if (used != s.size()) fail(w, "'" + s + "' is not an integer");
    return v;
}

Scalar scalar_from(const json& v, std::uint32_t p, const Where& w) {
    try {
        if (v.is_number_integer()) return Scalar::of(v.get<long>(), p);
        if (v.is_string()) return Scalar::parse(v.get<std::string>(), p);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        fail(w, e.what());
    }
    fail(w, "expected a scalar literal");
}

std::string expr_text(const json& v, const Where& w) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    fail(w, "expected an expression string");
}

RatFun field_value(const DField& K, const json& v, const Where& w) {
    std::string s = expr_text(v, w);
    try {
        return K.parse(s);
    } catch (const ParseError& e) {
        fail(w, e.what());
    }
}

std::uint32_t characteristic_of(const json& j, const Where& w) {
    long p = need_int(j, "char", w, 0);
    if (p > 0xffffffffL) fail(w / "char", "too large");
    return static_cast<std::uint32_t>(p);
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

}  // namespace

std::string scalar_text(const Scalar& s) { return s.str(); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string() + ": cannot read file", file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string loc = file.string() + ":" + std::to_string(line) + ":" + std::to_string(col);
        throw ParseError(loc + ": malformed JSON", loc);
    }
}

std::pair<json, Where> resolve(const json& ref, const Where& w) {
    if (ref.is_string()) {
        fs::path p = w.dir / ref.get<std::string>();
        return {read_json(p), Where{p.parent_path(), p.filename().string()}};
    }
    if (ref.is_object()) return {ref, w};
    fail(w, "expected a file reference or an inline object");
}

// ---- algebras

AlgebraSpec algebra_spec(const json& j, const Where& w) {
    AlgebraSpec s;
    s.characteristic = characteristic_of(j, w);
    s.m = static_cast<int>(need_int(j, "dim", w, 1)) - 1;
    const json& g = need(j, "grades", w);
    if (!g.is_array() || static_cast<int>(g.size()) != s.m)
        fail(w / "grades", "expected " + std::to_string(s.m) + " integer grades");
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].is_number_integer()) fail((w / "grades")[i], "expected an integer");
        s.grades.push_back(g[i].get<int>());
    }
    if (j.contains("products")) {
        const json& pr = j["products"];
        if (!pr.is_array()) fail(w / "products", "expected an array");
        for (std::size_t k = 0; k < pr.size(); ++k) {
            Where wk = (w / "products")[k];
            int p = static_cast<int>(need_int(pr[k], "p", wk, 1));
            int q = static_cast<int>(need_int(pr[k], "q", wk, 1));
            if (p > s.m || q > s.m) fail(wk, "product index out of range");
            if (s.products.count({p, q})) fail(wk, "duplicate product entry");
            auto& row = s.products[{p, q}];
            const json& co = need(pr[k], "coeffs", wk);
            if (!co.is_object()) fail(wk / "coeffs", "expected an object");
            for (auto it = co.begin(); it != co.end(); ++it) {
                Where wc = wk / "coeffs" / it.key();
                int i = small_int(it.key(), wc);
                if (i < 0 || i > s.m) fail(wc, "target index out of range");
                Scalar c = scalar_from(it.value(), s.characteristic, wc);
                if (!c.is_zero()) row[i] = c;
            }
        }
    }
    return s;
}

std::shared_ptr<const LocalAlgebra> load_algebra(const json& ref, const Where& w) {
    auto [doc, where] = resolve(ref, w);
    return std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(algebra_spec(doc, where)));
}

json algebra_json(const LocalAlgebra& D) {
    AlgebraSpec s = D.spec();
    json products = json::array();
    for (auto& [pq, row] : s.products) {
        json co = json::object();
        for (auto& [i, c] : row) co[std::to_string(i)] = scalar_text(c);
        products.push_back({{"p", pq.first}, {"q", pq.second}, {"coeffs", co}});
    }
    return {{"char", s.characteristic}, {"dim", s.m + 1}, {"grades", s.grades}, {"products", products}};
}

// ---- fields

std::shared_ptr<const DField> load_dfield(const json& ref, const Where& w0) {
    auto [j, w] = resolve(ref, w0);
    std::uint32_t p = characteristic_of(j, w);
    auto alg = [&](const char* key) {
        if (!j.contains(key)) {
            // no algebras at all: a single derivation
            AlgebraSpec s;
            s.characteristic = p;
            if (std::string(key) == "d1" && !j.contains("d2")) {
                s.m = 1;
                s.grades = {1};
            }
            return std::make_shared<const LocalAlgebra>(LocalAlgebra::validate(s));
        }
        auto D = load_algebra(j[key], w / key);
        if (D->characteristic() != p) fail(w / key, "characteristic differs from the field's");
        return D;
    };
    auto ops = std::make_shared<const OpSystem>(alg("d1"), alg("d2"));
    std::vector<std::string> gens;
    if (j.contains("gens")) {
        const json& g = j["gens"];
        if (!g.is_array()) fail(w / "gens", "expected an array of names");
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g[i].is_string() || !is_identifier(g[i].get<std::string>()))
                fail((w / "gens")[i], "expected an identifier");
            gens.push_back(g[i].get<std::string>());
        }
        if (std::set<std::string>(gens.begin(), gens.end()).size() != gens.size())
            fail(w / "gens", "duplicate generator name");
    }
    std::vector<std::vector<RatFun>> action(gens.size(), std::vector<RatFun>(ops->size(), RatFun(Scalar::of(0, p))));
    if (j.contains("action")) {
        const json& a = j["action"];
        if (!a.is_object()) fail(w / "action", "expected an object");
        for (auto it = a.begin(); it != a.end(); ++it) {
            Where wg = w / "action" / it.key();
            auto pos = std::find(gens.begin(), gens.end(), it.key());
            if (pos == gens.end()) fail(wg, "unknown generator");
            std::size_t g = static_cast<std::size_t>(pos - gens.begin());
            if (!it.value().is_object()) fail(wg, "expected an object keyed by operator");
            for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
                Where wk = wg / jt.key();
                int k = 0;
                try {
                    k = ops->parse_op(jt.key());
                } catch (const ParseError& e) {
                    fail(wk, e.what());
                }
                try {
                    action[g][k] = parse_ratfun(expr_text(jt.value(), wk), gens, p);
                } catch (const ParseError& e) {
                    fail(wk, e.what());
                }
            }
        }
    }
    return std::make_shared<const DField>(ops, gens, action);
}

json dfield_json(const DField& K) {
    const OpSystem& S = K.ops();
    json action = json::object();
    for (int g = 0; g < K.ngens(); ++g) {
        json row = json::object();
        for (int k = 0; k < S.size(); ++k)
            if (!K.action(g, k).is_zero()) row[S.op_str(k)] = K.str(K.action(g, k));
        if (!row.empty()) action[K.gens()[g]] = row;
    }
    return {{"char", S.characteristic()},
            {"d1", algebra_json(S.algebra(1))},
            {"d2", algebra_json(S.algebra(2))},
            {"gens", K.gens()},
            {"action", action}};
}

// ---- commutation systems

std::shared_ptr<const GammaSystem> load_gamma(const json& ref, const Where& w0, std::shared_ptr<const DField> field) {
    auto [j, w] = resolve(ref, w0);
    if (!j.is_object()) fail(w, "expected an object");
    std::shared_ptr<const DField> K = field;
    if (j.contains("field")) {
        K = load_dfield(j["field"], w / "field");
        if (field && dump(dfield_json(*field)) != dump(dfield_json(*K)))
            fail(w / "field", "differs from the kernel's dfield");
    }
    if (!K) fail(w, "missing field 'field'");
    auto G = std::make_shared<GammaSystem>(K);
    std::set<std::tuple<int, int, int, int>> seen;
    for (int u = 1; u <= 2; ++u) {
        const char* key = u == 1 ? "lie" : "hs";
        if (!j.contains(key)) continue;
        const json& arr = j[key];
        if (!arr.is_array()) fail(w / key, "expected an array");
        int m = K->ops().count(u);
        for (std::size_t n = 0; n < arr.size(); ++n) {
            Where we = (w / key)[n];
            int i = static_cast<int>(need_int(arr[n], "i", we, 1));
            int jj = static_cast<int>(need_int(arr[n], "j", we, 1));
            int l = static_cast<int>(need_int(arr[n], "l", we, 1));
            if (i > m || jj > m || l > m) fail(we, "index out of range for " + std::to_string(m) + " operators");
            if (!seen.insert({u, i, jj, l}).second) fail(we, "duplicate entry");
            G->set(u, l, i, jj, field_value(*K, need(arr[n], "c", we), we / "c"));
        }
    }
    return G;
}

json gamma_json(const GammaSystem& G) {
    json lie = json::array(), hs = json::array();
    auto entries = G.entries();
    std::sort(entries.begin(), entries.end(), [](auto& a, auto& b) {
        return std::tie(a.u, a.i, a.j, a.l) < std::tie(b.u, b.i, b.j, b.l);
    });
    for (auto& e : entries) {
        if (e.c.is_zero()) continue;
        json x = {{"i", e.i}, {"j", e.j}, {"l", e.l}, {"c", G.field().str(e.c)}};
        (e.u == 1 ? lie : hs).push_back(x);
    }
    return {{"field", dfield_json(G.field())}, {"lie", lie}, {"hs", hs}};
}

// ---- kernels

namespace {

struct KernelParts {
    std::shared_ptr<const GammaSystem> gamma;
    int n = 1, r = 0;
    std::vector<KPoly> relations;
    std::shared_ptr<const JetCalculus> calculus;
};

KernelParts kernel_parts(const json& j, const Where& w) {
    if (!j.is_object()) fail(w, "expected an object");
    KernelParts k;
    std::shared_ptr<const DField> field;
    if (j.contains("dfield")) field = load_dfield(j["dfield"], w / "dfield");
    if (j.contains("gamma")) {
        k.gamma = load_gamma(j["gamma"], w / "gamma", field);
    } else {
        if (!field) fail(w, "missing field 'gamma' (or 'dfield')");
        k.gamma = std::make_shared<const GammaSystem>(field);
    }
    k.n = static_cast<int>(need_int(j, "n", w, 1));
    k.r = static_cast<int>(need_int(j, "r", w, 0));
    const json& rel = need(j, "relations", w);
    if (!rel.is_array()) fail(w / "relations", "expected an array of strings");
    k.calculus = std::make_shared<const JetCalculus>(k.gamma, k.n);
    for (std::size_t i = 0; i < rel.size(); ++i) {
        Where wr = (w / "relations")[i];
        if (!rel[i].is_string()) fail(wr, "expected a string");
        try {
            KPoly f = k.calculus->parse(rel[i].get<std::string>(), k.r);
            if (!f.is_zero()) k.relations.push_back(f);
        } catch (const ParseError& e) {
            fail(wr, e.what());
        }
    }
    return k;
}

}  // namespace

Kernel load_kernel(const json& ref, const Where& w0) {
    auto [j, w] = resolve(ref, w0);
    auto k = kernel_parts(j, w);
    return Kernel(k.calculus, k.r, k.relations);
}

json kernel_json(const Kernel& K) {
    json rel = json::array();
    for (auto& g : K.basis()) rel.push_back(K.str(g));
    return {{"gamma", gamma_json(K.gamma())}, {"n", K.n()}, {"r", K.r()}, {"relations", rel}};
}

// ---- canonical forms

std::string spec_kind(const json& j, const Where& w) {
    if (!j.is_object()) fail(w, "expected an object");
    if (j.contains("relations")) return "kernel";
    if (j.contains("dim") || j.contains("grades") || j.contains("products")) return "algebra";
    if (j.contains("lie") || j.contains("hs") || j.contains("field")) return "gamma";
    if (j.contains("char")) return "dfield";
    fail(w, "cannot tell which kind of spec this is");
}

namespace {

// A reference keeps its spelling; an inline object is normalized.
json canonical_ref(const json& ref, const Where& w) {
    if (ref.is_string()) {
        auto [doc, where] = resolve(ref, w);
        canonical(doc, where);
        return ref;
    }
    return canonical(ref, w);
}

}  // namespace

json canonical(const json& j, const Where& w) {
    std::string kind = spec_kind(j, w);
    if (kind == "algebra") {
        auto D = LocalAlgebra::validate(algebra_spec(j, w));
        return algebra_json(D);
    }
    if (kind == "dfield") {
        auto K = load_dfield(j, w);
        json out = dfield_json(*K);
        for (const char* key : {"d1", "d2"}) {
            if (j.contains(key)) out[key] = canonical_ref(j[key], w / key);
            else out.erase(key);
        }
        return out;
    }
    if (kind == "gamma") {
        auto G = load_gamma(j, w);
        json out = gamma_json(*G);
        out["field"] = canonical_ref(j["field"], w / "field");
        return out;
    }
    auto k = kernel_parts(j, w);
    Kernel K(k.calculus, k.r, k.relations);
    json rel = json::array();
    for (auto& f : k.relations) rel.push_back(k.calculus->str(f));
    json out = {{"n", k.n}, {"r", k.r}, {"relations", rel}};
    if (j.contains("dfield")) out["dfield"] = canonical_ref(j["dfield"], w / "dfield");
    if (j.contains("gamma")) {
        const json& g = j["gamma"];
        if (g.is_string()) {
            out["gamma"] = g;
        } else {
            json c = gamma_json(*k.gamma);
            if (g.contains("field")) c["field"] = canonical_ref(g["field"], w / "gamma" / "field");
            else c.erase("field");
            out["gamma"] = c;
        }
    }
    return out;
}

}  // namespace wb::io
