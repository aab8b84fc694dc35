// liexp: batch front-end for expansions, invariant tensors and Chern-Simons forms.
//
//   liexp expand      --config c.json [--out dir] [--format json|latex|both]
//   liexp invariants  --config c.json ...
//   liexp lagrangian  --config c.json [--compare c5_cs] ...
//   liexp semigroup   --config c.json ...
//   liexp check       --config c.json ...
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

#include "liexp/expansion.hpp"
#include "liexp/pipeline.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#ifndef LIEXP_DATA_DIR
#define LIEXP_DATA_DIR "data"
#endif

using namespace liexp;

namespace {

struct Options {
    std::string config;
    std::string out;
    std::string format = "both";
    std::string compare;
    std::string data;
};

struct Run {
    Json config;
    DataPaths paths;
};

Run load(const Options& o) {
    Run r;
    r.config = read_json_file(o.config);
    r.paths.root = o.data;
    if (r.paths.root.empty()) {
        const char* env = std::getenv("LIEXP_DATA");
        r.paths.root = env ? env : LIEXP_DATA_DIR;
    }
    r.paths.config_dir = std::filesystem::path(o.config).parent_path().string();
    if (r.paths.config_dir.empty()) r.paths.config_dir = ".";
    return r;
}

void emit(const Options& o, const std::string& stem, const Json& json, const std::string& latex) {
    if (o.out.empty()) return;
    std::filesystem::create_directories(o.out);
    if (o.format != "latex") write_text_file(o.out + "/" + stem + ".json", format_json(json));
    if (o.format != "json") write_text_file(o.out + "/" + stem + ".tex", latex);
}

std::string stem_of(const LieAlgebra& l) {
    std::string s;
    for (char c : l.name()) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return s.empty() ? "algebra" : s;
}

int cmd_expand(const Options& o) {
    const Run r = load(o);
    const PipelineResult p = run_pipeline(r.config, r.paths);
    std::cout << p.algebra.name() << ": " << p.algebra.dim() << " generators\n" << commutator_table(p.algebra);
    int status = 0;
    const AxiomReport axioms = check_axioms(p.algebra);
    std::cout << "axioms: " << (axioms.ok ? "ok" : "FAILED: " + axioms.message) << "\n";
    if (!axioms.ok) status = 1;
    if (r.config.contains("expect")) {
        const LieAlgebra expected = load_algebra(r.config.at("expect"), r.paths);
        const bool same = p.algebra.same_constants(expected);
        std::cout << "expected " << expected.name() << ": " << (same ? "same structure constants" : "DIFFERENT") << "\n";
        if (!same) status = 1;
    }
    const std::string stem = stem_of(p.algebra);
    emit(o, stem, to_json(p.algebra), algebra_latex(p.algebra));
    if (!o.out.empty() && o.format != "latex") write_text_file(o.out + "/" + stem + ".txt", commutator_table(p.algebra));
    return status;
}

int cmd_invariants(const Options& o) {
    const Run r = load(o);
    const PipelineResult p = run_pipeline(r.config, r.paths);
    const InvariantTensor t = build_tensor(r.config.contains("tensor") ? r.config.at("tensor") : Json::object(), p);
    for (const auto& row : tensor_table(p.algebra, t)) std::cout << row.str() << "\n";
    const InvarianceReport inv = verify_invariance(p.algebra, t);
    std::cout << "invariance: " << (inv.ok ? "ok" : "FAILED: " + inv.message) << "\n";
    emit(o, stem_of(p.algebra) + ".tensor", to_json(t), tensor_latex(p.algebra, t));
    return inv.ok ? 0 : 1;
}

int cmd_lagrangian(const Options& o) {
    const Run r = load(o);
    const PipelineResult p = run_pipeline(r.config, r.paths);
    const InvariantTensor t = build_tensor(r.config.contains("tensor") ? r.config.at("tensor") : Json::object(), p);
    std::optional<std::string> extra;
    if (!o.compare.empty()) extra = o.compare;
    const LagrangianResult res = run_lagrangian(r.config, p, t, r.paths, extra);

    int status = 0;
    const InvarianceReport inv = verify_invariance(p.algebra, res.tensor);
    std::cout << "tensor invariance: " << (inv.ok ? "ok" : "FAILED: " + inv.message) << "\n";
    if (!inv.ok) status = 1;
    std::cout << "form: " << res.form.size() << " monomials\n";

    Json out;
    out["algebra"] = p.algebra.name();
    out["form"] = to_json(res.form);
    Json cmp = Json::array();
    for (const auto& [s, rep] : res.comparisons) {
        std::cout << "compare " << s.golden << ": " << rep.render();
        Json c = to_json(rep);
        c["golden"] = s.golden;
        cmp.push_back(std::move(c));
        if (!rep.match) status = 1;
    }
    out["comparisons"] = std::move(cmp);
    if (res.lovelock) {
        std::cout << "lovelock: beta0 = " << res.lovelock->beta0.str() << ", beta1 = " << res.lovelock->beta1.str()
                  << ", beta2 = " << res.lovelock->beta2.str() << "\n";
        out["lovelock"] = to_json(*res.lovelock);
    }
    emit(o, stem_of(p.algebra) + ".lagrangian", out, form_latex(res.form));
    return status;
}

int cmd_semigroup(const Options& o) {
    const Run r = load(o);
    if (!r.config.contains("semigroup")) throw ConfigError("config: missing \"semigroup\"");
    const Semigroup s = load_semigroup(r.config.at("semigroup"), r.paths);
    int status = 0;
    std::cout << s.name() << " (order " << s.order() << ")\n";
    for (const auto& row : s.table()) {
        for (int x : row) std::cout << " " << x;
        std::cout << "\n";
    }
    const auto axioms = s.check_axioms();
    std::cout << "axioms: " << (axioms.ok ? "ok" : "FAILED: " + axioms.message) << "\n";
    if (!axioms.ok) status = 1;
    Json out;
    out["semigroup"] = to_json(s);
    if (r.config.contains("isomorphic_to")) {
        const Semigroup other = load_semigroup(r.config.at("isomorphic_to"), r.paths);
        const auto iso = find_isomorphism(s, other);
        std::cout << "isomorphic to " << other.name() << ": " << (iso ? "yes" : "NO") << "\n";
        out["isomorphism"] = iso ? Json(*iso) : Json(nullptr);
        if (!iso) status = 1;
    }
    if (r.config.contains("selector_identities")) {
        const int n = r.config.at("selector_identities").get<int>();
        for (int k = 1; k <= n; ++k) {
            const auto rep = check_even_cyclic_identities(k);
            std::cout << "selector identities Z" << 2 * k << ": " << (rep.ok ? "ok" : "FAILED: " + rep.failure) << "\n";
            if (!rep.ok) status = 1;
        }
    }
    std::string latex = "\\begin{array}{c|" + std::string(static_cast<std::size_t>(s.order()), 'c') + "}\n";
    for (int x = 0; x < s.order(); ++x) latex += " & \\lambda_{" + std::to_string(x) + "}";
    latex += " \\\\\\hline\n";
    for (int x = 0; x < s.order(); ++x) {
        latex += "\\lambda_{" + std::to_string(x) + "}";
        for (int y = 0; y < s.order(); ++y) latex += " & \\lambda_{" + std::to_string(s.product(x, y)) + "}";
        latex += " \\\\\n";
    }
    latex += "\\end{array}\n";
    emit(o, "semigroup_" + s.name(), out, latex);
    return status;
}

int cmd_check(const Options& o) {
    const Run r = load(o);
    const LieAlgebra l = load_algebra(r.config.contains("algebra") ? r.config.at("algebra") : Json(), r.paths);
    int status = 0;
    const AxiomReport axioms = check_axioms(l);
    std::cout << l.name() << " axioms: " << (axioms.ok ? "ok" : "FAILED: " + axioms.message) << "\n";
    if (!axioms.ok) status = 1;
    Json out;
    out["algebra"] = l.name();
    out["axioms"] = axioms.ok;
    out["killing"] = [&] {
        const KillingProfile k = killing_profile(l);
        Json j;
        j["positive"] = k.signature.positive;
        j["negative"] = k.signature.negative;
        j["zero"] = k.signature.zero;
        j["derived_dim"] = k.derived_dim;
        j["center_dim"] = k.center_dim;
        std::cout << "killing signature (+" << k.signature.positive << ", -" << k.signature.negative << ", 0 "
                  << k.signature.zero << "), derived " << k.derived_dim << ", center " << k.center_dim << "\n";
        return j;
    }();
    if (r.config.contains("tensor")) {
        const Json& ts = r.config.at("tensor");
        const Json tj = ts.is_object() && ts.contains("path") ? read_json_file(r.paths.resolve(ts.at("path").get<std::string>())) : ts;
        const InvariantTensor t = tensor_from_json(tj);
        if (t.dim() != l.dim()) throw ConfigError("tensor dimension does not match the algebra");
        const InvarianceReport inv = verify_invariance(l, t);
        std::cout << "invariance: " << (inv.ok ? "ok" : "FAILED: " + inv.message) << "\n";
        out["invariance"] = inv.ok;
        if (!inv.ok) status = 1;
    }
    emit(o, stem_of(l) + ".check", out, "% no LaTeX output for check\n");
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semigroup expansions, invariant tensors and Chern-Simons forms"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "JSON config")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", o.out, "output directory");
        sub->add_option("--format", o.format, "json, latex or both")->check(CLI::IsMember({"json", "latex", "both"}));
        sub->add_option("--data", o.data, "fixture directory (default: LIEXP_DATA or the source tree)");
    };
    auto* expand = app.add_subcommand("expand", "run an expansion pipeline and check the axioms");
    auto* invariants = app.add_subcommand("invariants", "lift and verify the invariant tensor");
    auto* lagrangian = app.add_subcommand("lagrangian", "build a Chern-Simons or transgression form");
    auto* semigroup = app.add_subcommand("semigroup", "construct and verify a semigroup");
    auto* check = app.add_subcommand("check", "axioms, Killing profile and invariance of given files");
    for (auto* sub : {expand, invariants, lagrangian, semigroup, check}) add_common(sub);
    lagrangian->add_option("--compare", o.compare, "golden expression to compare against");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(o);
        if (invariants->parsed()) return cmd_invariants(o);
        if (lagrangian->parsed()) return cmd_lagrangian(o);
        if (semigroup->parsed()) return cmd_semigroup(o);
        if (check->parsed()) return cmd_check(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
