#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wb/spec_io.hpp"

using namespace wb;
using io::json;
namespace fs = std::filesystem;

namespace {

enum Exit { OK = 0, FAILED = 1, MALFORMED = 2, GB_CAP = 3 };

struct Result {
    json report = json::object();
    std::vector<std::string> text;
    int code = OK;
};

struct Options {
    std::string format = "text";
    std::string out;
};

std::pair<json, io::Where> open_spec(const std::string& file) {
    fs::path p(file);
    return {io::read_json(p), io::Where{p.parent_path(), p.filename().string()}};
}

std::string witness_str(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

json verdict_json(const std::string& name, const Verdict& v) {
    json j = {{"name", name}, {"pass", v.pass}};
    if (!v.pass) {
        j["code"] = v.code;
        j["witness"] = v.witness;
        j["detail"] = v.detail;
    }
    return j;
}

std::string verdict_line(const std::string& name, const Verdict& v) {
    if (v.pass) return name + ": PASS";
    return name + ": FAIL " + v.code + " " + witness_str(v.witness) + (v.detail.empty() ? "" : " " + v.detail);
}

// ---- algebra

Result algebra_validate(const std::string& file) {
    auto [doc, w] = open_spec(file);
    auto D = io::load_algebra(doc, w);
    Result r;
    r.report = {{"status", "PASS"}, {"algebra", io::algebra_json(*D)}, {"nilpotency", D->d()},
                {"null_set", null_set(*D)}, {"breakpoints", D->breakpoints()}};
    r.text.push_back("PASS local algebra of dimension " + std::to_string(D->dim()) + ", m^" + std::to_string(D->d() + 1) +
                     " = 0");
    return r;
}

Result algebra_tensor(const std::string& a, const std::string& b) {
    auto [da, wa] = open_spec(a);
    auto [db, wb] = open_spec(b);
    auto T = tensor(*io::load_algebra(da, wa), *io::load_algebra(db, wb));
    Result r;
    r.report = io::algebra_json(T.algebra);
    return r;
}

// ---- gamma

Result gamma_check(const std::string& file, bool jacobi, bool assoc) {
    auto [doc, w] = open_spec(file);
    auto G = io::load_gamma(doc, w);
    std::vector<std::pair<std::string, Verdict>> checks;
    if (jacobi) checks.push_back({"jacobi", check_jacobi(*G)});
    if (assoc) checks.push_back({"associative", check_associative(*G)});
    if (!jacobi && !assoc) {
        checks.push_back({"lie_type", check_lie_type(*G)});
        checks.push_back({"hom_lie", check_hom(*G, 1)});
        checks.push_back({"hom_hs", check_hom(*G, 2)});
        checks.push_back({"jacobi_associative", check_jacobi_associative(*G)});
        checks.push_back({"generators", check_generators(*G)});
    }
    Result r;
    json arr = json::array();
    bool ok = true;
    for (auto& [name, v] : checks) {
        arr.push_back(verdict_json(name, v));
        r.text.push_back(verdict_line(name, v));
        ok = ok && v.pass;
    }
    r.report = {{"status", ok ? "PASS" : "FAIL"}, {"checks", arr}};
    r.code = ok ? OK : FAILED;
    return r;
}

Result gamma_reduce(const std::vector<std::string>& files) {
    std::vector<HsSystem> systems;
    for (auto& f : files) {
        auto [doc, w] = open_spec(f);
        auto G = io::load_gamma(doc, w);
        if (G->m(1) != 0 || G->field().ngens() != 0 || !G->constant_coefficients())
            throw ParseError(f + ": reduce takes HS-only systems over the prime field", f);
        HsSystem S;
        S.algebra = G->ops().algebra(2);
        int m = S.algebra.m();
        S.c.assign(m + 1, std::vector<std::vector<Scalar>>(m + 1, std::vector<Scalar>(m + 1, S.algebra.zero())));
        for (int l = 1; l <= m; ++l)
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) {
                    const RatFun& c = G->coeff(2, l, i, j);
                    if (!c.is_zero()) S.c[l][i][j] = c.scalar_value();
                }
        systems.push_back(std::move(S));
    }
    Result r;
    r.report = io::gamma_json(hs_gamma(hs_tensor_reduce(systems)));
    return r;
}

// ---- dfield

Result dfield_validate(const std::string& file) {
    auto [doc, w] = open_spec(file);
    auto K = io::load_dfield(doc, w);
    Result r;
    json ops = json::array();
    for (int k = 0; k < K->ops().size(); ++k) ops.push_back(K->ops().op_str(k));
    r.report = {{"status", "PASS"}, {"field", io::dfield_json(*K)}, {"operators", ops}};
    r.text.push_back("PASS " + std::to_string(K->ngens()) + " generators, " + std::to_string(K->ops().size()) +
                     " operators");
    return r;
}

Result dfield_apply(const std::string& file, const std::string& op, const std::string& expr) {
    auto [doc, w] = open_spec(file);
    auto K = io::load_dfield(doc, w);
    Word word = op.find('[') != std::string::npos ? K->ops().parse_word(op) : Word{K->ops().parse_op(op)};
    RatFun x = K->parse(expr);
    RatFun v = K->apply_word(word, x);
    Result r;
    r.report = {{"status", "OK"}, {"op", K->ops().word_str(word)}, {"expr", K->str(x)}, {"value", K->str(v)}};
    r.text.push_back(K->str(v));
    return r;
}

// ---- free module

Result free_table(const std::string& file, int order) {
    auto [doc, w] = open_spec(file);
    auto G = io::load_gamma(doc, w);
    FreeModule V(*G);
    const OpSystem& S = G->ops();
    Result r;
    json rows = json::array();
    for (auto& lam : normal_words_upto(S, order))
        for (int i = 0; i < S.size(); ++i) {
            std::string value = V.str(V.apply_basis(i, lam));
            rows.push_back({{"op", S.op_str(i)}, {"word", S.word_str(lam)}, {"value", value}});
            r.text.push_back("d_(" + S.op_str(i) + ") w" + S.word_str(lam) + " = " + value);
        }
    r.report = {{"status", "OK"}, {"order", order}, {"table", rows}};
    return r;
}

// ---- kernels

json leaders_json(const Kernel& K) {
    const OpSystem& S = K.ops();
    const auto& L = K.leaders();
    json all = json::array(), minimal = json::array(), insep = json::array();
    for (auto& li : L.leaders)
        all.push_back({{"jet", jet_name(S, li.jet)}, {"separable", li.separable}, {"min_poly", K.str(li.min_poly)}});
    for (auto& j : L.minimal) minimal.push_back(jet_name(S, j));
    for (auto& j : L.inseparable) insep.push_back(jet_name(S, j));
    return {{"leaders", all}, {"minimal", minimal}, {"inseparable", insep}, {"separable", L.separable}};
}

void kernel_text(const Kernel& K, Result& r) {
    r.text.push_back("length " + std::to_string(K.r()) + ", " + std::to_string(K.nvars()) + " jets");
    for (auto& g : K.basis()) r.text.push_back("  " + K.str(g) + " = 0");
    const auto& L = K.leaders();
    std::string m = "minimal separable leaders:";
    for (auto& j : L.minimal) m += " " + jet_name(K.ops(), j);
    r.text.push_back(m);
    if (!L.separable) {
        std::string s = "inseparable leaders:";
        for (auto& j : L.inseparable) s += " " + jet_name(K.ops(), j);
        r.text.push_back(s);
    }
}

json kernel_summary(const Kernel& K) {
    json rel = json::array();
    for (auto& g : K.basis()) rel.push_back(K.str(g));
    return {{"n", K.n()}, {"r", K.r()}, {"relations", rel}};
}

Result kernel_leaders(const std::string& file) {
    auto [doc, w] = open_spec(file);
    Kernel K = io::load_kernel(doc, w);
    Result r;
    r.report = {{"status", "OK"}, {"kernel", kernel_summary(K)}, {"leaders", leaders_json(K)}};
    for (auto& li : K.leaders().leaders)
        r.text.push_back(jet_name(K.ops(), li.jet) + (li.separable ? " separable: " : " inseparable: ") +
                         K.str(li.min_poly));
    if (K.leaders().leaders.empty()) r.text.push_back("no leaders");
    return r;
}

Result kernel_prolong(const std::string& file, int steps) {
    auto [doc, w] = open_spec(file);
    Kernel K = io::load_kernel(doc, w);
    json reports = json::array();
    for (int s = 0; s < steps; ++s) {
        ProlongReport rep;
        K = generic_prolong(K, &rep);
        json spec = json::array();
        for (auto& j : rep.specialized) spec.push_back(jet_name(K.ops(), j));
        reports.push_back({{"length", K.r()}, {"routes", rep.routes}, {"routes_compared", rep.routes_compared},
                           {"specialized", spec}});
    }
    Result r;
    r.report = {{"status", "OK"}, {"kernel", kernel_summary(K)}, {"leaders", leaders_json(K)}, {"steps", reports}};
    kernel_text(K, r);
    return r;
}

Result kernel_realize(const std::string& file, int rr, int order) {
    auto [doc, w] = open_spec(file);
    Kernel K = io::load_kernel(doc, w);
    Kernel R = realize(K, rr, order);
    Result r;
    json jets = json::array();
    const JetCalculus& J = R.calculus();
    for (int v = 0; v < R.nvars(); ++v) {
        std::string value = R.str(R.reduce(KPoly::var(v, Order::Lex)));
        jets.push_back({{"jet", J.name(v)}, {"value", value}});
    }
    r.report = {{"status", "OK"}, {"kernel", kernel_summary(R)}, {"leaders", leaders_json(R)}, {"jets", jets}};
    kernel_text(R, r);
    for (auto& j : jets) r.text.push_back("  " + j["jet"].get<std::string>() + " -> " + j["value"].get<std::string>());
    return r;
}

Result kernel_check_point(const std::string& file, const std::string& values) {
    auto [doc, w] = open_spec(file);
    Kernel K = io::load_kernel(doc, w);
    std::vector<RatFun> b;
    std::stringstream ss(values);
    std::string part;
    while (std::getline(ss, part, ',')) b.push_back(K.gamma().field().parse(part));
    if (static_cast<int>(b.size()) != K.n())
        throw ParseError("--values needs " + std::to_string(K.n()) + " comma-separated values", "--values");
    auto v = specialize_check(K, b);
    Result r;
    if (v.pass) {
        r.report = {{"status", "ACCEPT"}};
        r.text.push_back("ACCEPT");
    } else {
        r.report = {{"status", "REJECT"}, {"code", v.code}, {"witness", v.witness}, {"detail", v.detail}};
        r.text.push_back("REJECT " + v.detail);
        r.code = FAILED;
    }
    return r;
}

Result canon(const std::string& file) {
    auto [doc, w] = open_spec(file);
    Result r;
    r.report = io::canonical(doc, w);
    return r;
}

void emit(const Result& r, const Options& opt, bool spec_output) {
    std::string text;
    if (spec_output || opt.format == "json") {
        text = io::dump(r.report);
    } else {
        for (auto& l : r.text) text += l + "\n";
    }
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        if (!f) throw ParseError("cannot write " + opt.out, opt.out);
        f << text;
    }
}

void error_out(const Options& opt, const std::string& status, const json& extra, const std::string& line) {
    if (opt.format == "json") {
        json j = {{"status", status}};
        j.update(extra);
        std::cout << io::dump(j);
    }
    std::cerr << line << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench: operator fields, commutation systems and kernels"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", opt.out, "Write output to this file");

    std::function<Result()> run;
    bool spec_output = false;
    std::string file, file2, op, expr, values, gamma_file;
    std::vector<std::string> files;
    int order = 2, steps = 1, rr = 1;
    bool jacobi = false, assoc = false, all = false;

    auto* alg = app.add_subcommand("algebra", "Local operator algebras");
    alg->require_subcommand(1);
    auto* av = alg->add_subcommand("validate", "Validate an algebra spec");
    av->add_option("file", file)->required();
    av->callback([&] { run = [&] { return algebra_validate(file); }; });
    auto* at = alg->add_subcommand("tensor", "Tensor product of two algebras");
    at->add_option("file1", file)->required();
    at->add_option("file2", file2)->required();
    at->callback([&] {
        spec_output = true;
        run = [&] { return algebra_tensor(file, file2); };
    });

    auto* gam = app.add_subcommand("gamma", "Commutation systems");
    gam->require_subcommand(1);
    auto* gc = gam->add_subcommand("check", "Validate a commutation system");
    gc->add_option("file", file)->required();
    gc->add_flag("--jacobi", jacobi, "Jacobi identity only");
    gc->add_flag("--assoc", assoc, "HS associativity only");
    gc->add_flag("--all", all, "Every check (default)");
    gc->callback([&] {
        if (all) jacobi = assoc = false;
        run = [&] { return gamma_check(file, jacobi, assoc); };
    });
    auto* gr = gam->add_subcommand("reduce", "Reduce several HS systems to one");
    gr->add_option("files", files)->required();
    gr->callback([&] {
        spec_output = true;
        run = [&] { return gamma_reduce(files); };
    });

    auto* df = app.add_subcommand("dfield", "Fields with operators");
    df->require_subcommand(1);
    auto* dv = df->add_subcommand("validate", "Validate a field spec");
    dv->add_option("file", file)->required();
    dv->callback([&] { run = [&] { return dfield_validate(file); }; });
    auto* da = df->add_subcommand("apply", "Apply an operator or word to an element");
    da->add_option("file", file)->required();
    da->add_option("--op", op, "Operator u,i or word [u,i;...]")->required();
    da->add_option("--expr", expr, "Element of the field")->required();
    da->callback([&] { run = [&] { return dfield_apply(file, op, expr); }; });

    auto* fr = app.add_subcommand("free", "Free commuting module");
    fr->require_subcommand(1);
    auto* ft = fr->add_subcommand("table", "Operator action on basis words");
    ft->add_option("--gamma", gamma_file, "Commutation system")->required();
    ft->add_option("--order", order, "Largest word length")->check(CLI::Range(0, 8));
    ft->callback([&] { run = [&] { return free_table(gamma_file, order); }; });

    auto* ke = app.add_subcommand("kernel", "Kernels and their prolongations");
    ke->require_subcommand(1);
    auto* kl = ke->add_subcommand("leaders", "Leader report");
    kl->add_option("file", file)->required();
    kl->callback([&] { run = [&] { return kernel_leaders(file); }; });
    auto* kp = ke->add_subcommand("prolong", "Generic prolongation");
    kp->add_option("file", file)->required();
    kp->add_option("--steps", steps, "Number of steps")->check(CLI::Range(0, 50));
    kp->callback([&] { run = [&] { return kernel_prolong(file, steps); }; });
    auto* kr = ke->add_subcommand("realize", "Criterion check and prolongation to an order");
    kr->add_option("file", file)->required();
    kr->add_option("--r", rr, "Criterion order")->check(CLI::Range(0, 50));
    kr->add_option("--order", order, "Target length")->required()->check(CLI::Range(0, 100));
    kr->callback([&] { run = [&] { return kernel_realize(file, rr, order); }; });
    auto* kc = ke->add_subcommand("check-point", "Test a tuple of field elements against the relations");
    kc->add_option("file", file)->required();
    kc->add_option("--values", values, "Comma-separated field elements")->required();
    kc->callback([&] { run = [&] { return kernel_check_point(file, values); }; });

    auto* ca = app.add_subcommand("canon", "Canonical form of any spec file");
    ca->add_option("file", file)->required();
    ca->callback([&] {
        spec_output = true;
        run = [&] { return canon(file); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? OK : MALFORMED;
    }

    try {
        Result r = run();
        emit(r, opt, spec_output);
        return r.code;
    } catch (const ParseError& e) {
        error_out(opt, "PARSE_ERROR", {{"location", e.location}, {"detail", e.what()}}, std::string("PARSE_ERROR: ") + e.what());
        return MALFORMED;
    } catch (const GbAbort& e) {
        error_out(opt, "GB_ABORT", {{"detail", e.what()}}, std::string("GB_ABORT: ") + e.what());
        return GB_CAP;
    } catch (const Failure& f) {
        error_out(opt, "FAIL", {{"code", f.code}, {"witness", f.witness}, {"detail", f.what()}},
                  "FAIL " + witness_str(f.witness) + " " + f.what());
        return FAILED;
    } catch (const ArithmeticError& e) {
        error_out(opt, "PARSE_ERROR", {{"location", "input"}, {"detail", e.what()}},
                  std::string("PARSE_ERROR: ") + e.what());
        return MALFORMED;
    }
}
