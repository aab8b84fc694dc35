#include "liexp/pipeline.hpp"

#include "liexp/expansion.hpp"
#include "liexp/transgression.hpp"

#include <filesystem>
#include <set>

namespace liexp {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

int require_int(const Json& j, const char* key, const std::string& where) {
    const Json& v = require(j, key, where);
    if (!v.is_number_integer()) throw ConfigError(where + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

std::string require_string(const Json& j, const char* key, const std::string& where) {
    const Json& v = require(j, key, where);
    if (!v.is_string()) throw ConfigError(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

ScalarExpr parse_scalar(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return ScalarExpr(v.get<long>());
    if (!v.is_string()) throw ConfigError(where + ": expected a scalar expression");
    try {
        return ScalarExpr::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

std::vector<ScalarExpr> parse_alphas(const Json& spec, int default_count, const std::string& where) {
    if (!spec.contains("alphas")) return alpha_symbols(default_count);
    const Json& a = spec.at("alphas");
    if (a.is_number_integer()) return alpha_symbols(a.get<int>());
    if (!a.is_array()) throw ConfigError(where + ": \"alphas\" must be a count or a list");
    std::vector<ScalarExpr> out;
    for (const auto& x : a) out.push_back(parse_scalar(x, where + ".alphas"));
    return out;
}

Field parse_field(const Json& v, const std::string& where) {
    const std::string name = v.is_string() ? v.get<std::string>() : "";
    for (Field f : {Field::omega, Field::e, Field::k, Field::h})
        if (field_name(f) == name) return f;
    throw ConfigError(where + ": unknown field '" + name + "' (use w, e, k, h)");
}

std::set<Field> parse_fields(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ConfigError(where + ": expected a list of fields");
    std::set<Field> out;
    for (const auto& x : v) out.insert(parse_field(x, where));
    return out;
}

template <typename F>
auto as_config_error(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

}  // namespace

std::string DataPaths::resolve(const std::string& path) const {
    const std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(config_dir) / p).string();
}

LieAlgebra load_algebra(const Json& spec, const DataPaths& paths) {
    if (spec.is_string()) return algebra_from_json(read_json_file(paths.algebra(spec.get<std::string>())));
    if (spec.is_object() && spec.contains("path"))
        return algebra_from_json(read_json_file(paths.resolve(require_string(spec, "path", "algebra"))));
    if (spec.is_object() && spec.contains("generators")) return algebra_from_json(spec);
    throw ConfigError("algebra: expected a fixture name, {\"path\": ...} or an inline algebra");
}

Semigroup load_semigroup(const Json& spec, const DataPaths& paths) {
    return as_config_error("semigroup", [&]() -> Semigroup {
        if (spec.is_string()) return make_named_semigroup(spec.get<std::string>());
        if (spec.is_object() && spec.contains("cyclic")) return make_cyclic(require_int(spec, "cyclic", "semigroup"));
        if (spec.is_object() && spec.contains("direct_product")) {
            const Json& f = spec.at("direct_product");
            if (!f.is_array() || f.size() != 2) throw ConfigError("semigroup: direct_product takes two factors");
            return direct_product(load_semigroup(f[0], paths), load_semigroup(f[1], paths));
        }
        if (spec.is_object() && spec.contains("path"))
            return semigroup_from_json(read_json_file(paths.resolve(require_string(spec, "path", "semigroup"))));
        if (spec.is_object() && spec.contains("table")) return semigroup_from_json(spec);
        throw ConfigError("semigroup: expected a name, {\"cyclic\": n}, {\"direct_product\": [..]}, a path or a table");
    });
}

PipelineResult run_pipeline(const Json& config, const DataPaths& paths) {
    PipelineResult r;
    r.algebra = load_algebra(require(config, "algebra", "config"), paths);
    r.base = r.algebra;
    r.lift_layout = r.algebra;
    bool expanded_only = false;  // current algebra is the bare S x g
    const Json steps = config.contains("steps") ? config.at("steps") : Json::array();
    if (!steps.is_array()) throw ConfigError("config: \"steps\" must be a list");

    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Json& step = steps[i];
        const std::string where = "steps[" + std::to_string(i) + "]";
        const std::string op = require_string(step, "op", where);
        if (r.rotation && op != "name" && op != "rotate_translations")
            throw ConfigError(where + ": " + op + " after a basis rotation");

        if (op == "s_expand") {
            if (r.semigroup) throw ConfigError(where + ": only one expansion per pipeline");
            r.semigroup = load_semigroup(require(step, "semigroup", where), paths);
            r.base = r.algebra;
            r.algebra = s_expand(*r.semigroup, r.algebra);
            expanded_only = true;
        } else if (op == "resonant") {
            if (!expanded_only) throw ConfigError(where + ": resonant needs the bare expansion S x g");
            const Json& part = require(step, "partition", where);
            if (!part.is_object()) throw ConfigError(where + ": partition maps generator symbols to parts");
            ResonanceSpec spec;
            for (const auto& lab : r.base.labels()) {
                if (!part.contains(lab.base)) throw ConfigError(where + ": partition has no part for " + lab.base);
                spec.partition.push_back(part.at(lab.base).get<int>());
            }
            const Json& subsets = require(step, "subsets", where);
            for (const auto& sp : subsets) spec.subsets.push_back(sp.get<std::vector<int>>());
            r.algebra = as_config_error(where, [&] { return resonant_subalgebra(r.algebra, r.base, *r.semigroup, spec); });
            expanded_only = false;
        } else if (op == "zero_reduce") {
            if (!r.semigroup || !r.semigroup->zero()) throw ConfigError(where + ": zero_reduce needs an expansion by a semigroup with a zero");
            if (r.reduction != Reduction::none) throw ConfigError(where + ": the algebra is already reduced");
            r.algebra = zero_reduce(r.algebra, *r.semigroup);
            r.reduction = Reduction::zero;
            expanded_only = false;
        } else if (op == "h_reduce") {
            const int n = require_int(step, "n", where);
            if (n < 1) throw ConfigError(where + ": n must be positive");
            if (r.semigroup) {
                if (!expanded_only) throw ConfigError(where + ": the H-condition applies to the bare expansion");
                if (!(*r.semigroup == make_cyclic(2 * n)))
                    throw ConfigError(where + ": the H-condition with n = " + std::to_string(n) + " needs a Z" +
                                      std::to_string(2 * n) + " expansion");
                r.algebra = impose_sign_identification(r.algebra, *r.semigroup, h_pairing(n));
            } else {
                r.base = r.algebra;
                r.semigroup = make_cyclic(2 * n);
                r.algebra = h_reduce(n, r.algebra);
            }
            r.reduction = Reduction::h;
            r.h_n = n;
            expanded_only = false;
        } else if (op == "sign_identify") {
            if (!r.semigroup || !expanded_only) throw ConfigError(where + ": sign_identify applies to the bare expansion");
            std::map<int, int> pairing;
            for (const auto& pr : require(step, "pairing", where)) {
                const auto xy = pr.get<std::vector<int>>();
                if (xy.size() != 2) throw ConfigError(where + ": pairing entries are [x, y]");
                pairing[xy[0]] = xy[1];
                pairing[xy[1]] = xy[0];
            }
            r.algebra = as_config_error(where, [&] { return impose_sign_identification(r.algebra, *r.semigroup, pairing); });
            r.reduction = Reduction::sign;
            expanded_only = false;
        } else if (op == "rename") {
            std::vector<TagRename> rules;
            for (const auto& rule : require(step, "rules", where))
                rules.push_back({require_string(rule, "base", where), require_int(rule, "tag", where),
                                 require_string(rule, "to", where)});
            r.algebra = rename_tagged(r.algebra, rules);
        } else if (op == "rotate_translations") {
            const Matrix m = as_config_error(where, [&] { return translation_rotation(r.algebra); });
            r.rotation = r.rotation ? multiply(m, *r.rotation) : m;
            r.algebra = change_basis(r.algebra, m);
            continue;
        } else if (op == "name") {
            r.algebra = r.algebra.renamed(require_string(step, "value", where));
        } else {
            throw ConfigError(where + ": unknown op '" + op + "'");
        }
        if (!r.rotation) r.lift_layout = r.algebra;
    }
    if (config.contains("name")) r.algebra = r.algebra.renamed(require_string(config, "name", "config"));
    if (!r.rotation) r.lift_layout = r.algebra;
    return r;
}

InvariantTensor build_tensor(const Json& spec, const PipelineResult& p) {
    const std::string source = spec.contains("source") ? require_string(spec, "source", "tensor") : "epsilon";
    if (source != "epsilon") throw ConfigError("tensor: only the epsilon source is available");
    const InvariantTensor eps = as_config_error("tensor", [&] { return epsilon_tensor(p.base); });

    const int order = p.semigroup ? p.semigroup->order() : 1;
    const auto alphas = parse_alphas(spec, order, "tensor");
    InvariantTensor t(eps.rank(), p.lift_layout.dim());
    switch (p.reduction) {
        case Reduction::none:
            if (p.semigroup) throw ConfigError("tensor: lifting needs a 0_S or H reduction");
            if (alphas.empty()) throw ConfigError("tensor: no alpha given");
            t = eps.scaled(alphas[0]);
            break;
        case Reduction::zero:
            t = as_config_error("tensor", [&] { return lift_0s(*p.semigroup, eps, p.lift_layout, alphas); });
            break;
        case Reduction::h:
            t = as_config_error("tensor", [&] { return lift_h(p.h_n, eps, alphas); });
            break;
        case Reduction::sign:
            throw ConfigError("tensor: no lifting theorem for a general sign identification");
    }
    if (p.rotation) t = rotate_tensor(t, *p.rotation);
    if (spec.contains("scale")) t = t.scaled(parse_scalar(spec.at("scale"), "tensor.scale"));
    return t;
}

LagrangianResult run_lagrangian(const Json& config, const PipelineResult& p, const InvariantTensor& t,
                                const DataPaths& paths, const std::optional<std::string>& extra_golden) {
    const Json& spec = require(config, "lagrangian", "config");
    const int dim = require_int(spec, "dimension", "lagrangian");
    if (dim != 3 && dim != 5) throw ConfigError("lagrangian: dimension must be 3 or 5");
    if (t.rank() != (dim + 1) / 2) throw ConfigError("lagrangian: tensor rank does not fit the dimension");
    const auto fields = parse_fields(require(spec, "fields", "lagrangian"), "lagrangian.fields");
    const ScalarExpr kappa = spec.contains("kappa") ? parse_scalar(spec.at("kappa"), "lagrangian.kappa") : ScalarExpr(1);
    InvariantTensor tensor = t;
    if (spec.contains("alphas")) tensor = t.substitute_alphas(parse_alphas(spec, 0, "lagrangian"));

    const LieAlgebra& l = p.algebra;
    auto connection = [&](const std::set<Field>& fs) {
        return as_config_error("lagrangian", [&] { return build_connection(l, dim, gravity_connection(fs)); });
    };

    LagrangianResult out;
    out.tensor = tensor;
    const LieValuedForm a = connection(fields);
    if (spec.contains("transgression")) {
        const auto abar = connection(parse_fields(spec.at("transgression"), "lagrangian.transgression"));
        out.form = kappa * transgression(a, abar, tensor, l);
    } else {
        out.form = chern_simons(a, tensor, l, kappa);
    }

    std::vector<ComparisonSpec> specs;
    if (spec.contains("compare"))
        for (const auto& c : spec.at("compare")) {
            ComparisonSpec cs;
            cs.golden = require_string(c, "golden", "lagrangian.compare");
            cs.options.global_scalar = c.value("global_scalar", false);
            cs.options.modulo_exact = c.value("modulo_exact", false);
            if (c.contains("zero_fields")) cs.options.zero_fields = parse_fields(c.at("zero_fields"), "zero_fields");
            specs.push_back(std::move(cs));
        }
    if (extra_golden) {
        bool listed = false;
        for (const auto& s : specs) listed = listed || s.golden == *extra_golden;
        if (!listed) specs.push_back({*extra_golden, {}});
        else std::erase_if(specs, [&](const ComparisonSpec& s) { return s.golden != *extra_golden; });
    }
    for (const auto& s : specs) {
        const TargetExpression target = load_target(paths.golden(s.golden));
        if (target.dimension != dim)
            throw ConfigError("golden " + s.golden + " is written for dimension " + std::to_string(target.dimension));
        out.comparisons.push_back({s, compare_to_target(out.form, target, s.options)});
    }

    if (dim == 5 && spec.value("lovelock", false)) {
        const auto q = transgression(connection({Field::omega, Field::e}), connection({Field::omega}), tensor, l);
        out.lovelock = lovelock_dictionary(q);
    }
    return out;
}

Json to_json(const LovelockDictionary& d) {
    Json j;
    j["beta0"] = d.beta0.str();
    j["beta1"] = d.beta1.str();
    j["beta2"] = d.beta2.str();
    return j;
}

}  // namespace liexp
