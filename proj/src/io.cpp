#include "liexp/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace liexp {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) malformed(std::string(what) + " is not an integer");
    return j.get<int>();
}

std::vector<int> as_ints(const Json& j, const char* what) {
    if (!j.is_array()) malformed(std::string(what) + " is not an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) malformed(std::string(what) + " is not a string");
    return j.get<std::string>();
}

Field field_from_name(const std::string& name) {
    for (Field f : {Field::omega, Field::e, Field::k, Field::h, Field::mc})
        if (field_name(f) == name) return f;
    malformed("unknown field '" + name + "'");
}

Json symbol_json(const FormSymbol& s) {
    Json j;
    j["field"] = field_name(s.field);
    j["i"] = s.i;
    j["j"] = s.j;
    j["d"] = s.differentiated;
    return j;
}

FormSymbol symbol_from_json(const Json& j) {
    FormSymbol s;
    s.field = field_from_name(as_string(member(j, "field"), "field"));
    s.i = static_cast<std::uint16_t>(as_int(member(j, "i"), "i"));
    s.j = static_cast<std::uint16_t>(as_int(member(j, "j"), "j"));
    if (!member(j, "d").is_boolean()) malformed("d is not a boolean");
    s.differentiated = j.at("d").get<bool>();
    return s;
}

std::string family_of(const Monomial& m) {
    std::map<std::string, int> counts;
    for (const auto& s : m) {
        std::string name = s.latex();
        name = name.substr(0, name.find('^'));
        ++counts[name];
    }
    std::string out;
    for (const auto& [k, n] : counts) out += (out.empty() ? "" : " ") + k + (n > 1 ? "^{" + std::to_string(n) + "}" : "");
    return out;
}

}  // namespace

Json to_json(const ScalarExpr& x) {
    Json out = Json::array();
    for (const auto& [key, c] : x.terms()) {
        Json t;
        t["alpha"] = key.alpha >= 0 ? Json(key.alpha) : Json(nullptr);
        t["ell"] = key.ell;
        t["q"] = c.str();
        out.push_back(std::move(t));
    }
    return out;
}

ScalarExpr scalar_from_json(const Json& j) {
    if (!j.is_array()) malformed("coefficient is not an array");
    ScalarExpr out;
    for (const auto& t : j) {
        const Json& a = member(t, "alpha");
        const int alpha = a.is_null() ? -1 : as_int(a, "alpha");
        const int ell = as_int(member(t, "ell"), "ell");
        QSqrt2 c;
        try {
            c = QSqrt2::parse(as_string(member(t, "q"), "q"));
        } catch (const std::invalid_argument& e) {
            malformed(e.what());
        }
        out += ScalarExpr::term({alpha, ell}, c);
    }
    return out;
}

Json to_json(const Semigroup& s) {
    Json j;
    j["name"] = s.name();
    j["order"] = s.order();
    j["zero"] = s.zero() ? Json(*s.zero()) : Json(nullptr);
    j["table"] = s.table();
    return j;
}

Semigroup semigroup_from_json(const Json& j) {
    const std::string name = as_string(member(j, "name"), "name");
    const Json& z = member(j, "zero");
    std::optional<int> zero;
    if (!z.is_null()) zero = as_int(z, "zero");
    std::vector<std::vector<int>> table;
    if (!member(j, "table").is_array()) malformed("table is not an array");
    for (const auto& row : j.at("table")) table.push_back(as_ints(row, "table row"));
    return Semigroup(name, std::move(table), zero);
}

Json to_json(const LieAlgebra& l) {
    Json j;
    j["name"] = l.name();
    j["dim"] = l.dim();
    Json gens = Json::array();
    for (const auto& lab : l.labels()) {
        Json g;
        g["base"] = lab.base;
        g["indices"] = lab.indices;
        g["tags"] = lab.tags;
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    Json cs = Json::array();
    for (const auto& c : l.constants()) cs.push_back(Json::array({c.a, c.b, c.c, c.value.str()}));
    j["constants"] = std::move(cs);
    if (l.has_origin()) {
        Json o = Json::array();
        for (const auto& e : l.origin()) o.push_back(Json::array({e.base, e.tag}));
        j["origin"] = std::move(o);
    }
    return j;
}

LieAlgebra algebra_from_json(const Json& j) {
    const std::string name = as_string(member(j, "name"), "name");
    std::vector<Label> labels;
    if (!member(j, "generators").is_array()) malformed("generators is not an array");
    for (const auto& g : j.at("generators")) {
        Label lab;
        lab.base = as_string(member(g, "base"), "base");
        lab.indices = as_ints(member(g, "indices"), "indices");
        if (g.contains("tags")) lab.tags = as_ints(g.at("tags"), "tags");
        labels.push_back(std::move(lab));
    }
    const int dim = static_cast<int>(labels.size());
    if (j.contains("dim") && as_int(j.at("dim"), "dim") != dim) malformed("dim does not match the generator list");
    std::vector<StructureConstant> cs;
    if (!member(j, "constants").is_array()) malformed("constants is not an array");
    for (const auto& c : j.at("constants")) {
        if (!c.is_array() || c.size() != 4) malformed("a constant must be [a, b, c, value]");
        StructureConstant sc{as_int(c[0], "a"), as_int(c[1], "b"), as_int(c[2], "c"), {}};
        for (int x : {sc.a, sc.b, sc.c})
            if (x < 0 || x >= dim) malformed("constant index out of range");
        try {
            sc.value = c[3].is_string() ? QSqrt2::parse(c[3].get<std::string>()) : QSqrt2(as_int(c[3], "value"));
        } catch (const std::invalid_argument& e) {
            malformed(e.what());
        }
        cs.push_back(std::move(sc));
    }
    std::vector<ExpandedLabel> origin;
    if (j.contains("origin")) {
        for (const auto& o : j.at("origin")) {
            const auto pair = as_ints(o, "origin entry");
            if (pair.size() != 2) malformed("an origin entry must be [base, tag]");
            origin.push_back({pair[0], pair[1]});
        }
        if (static_cast<int>(origin.size()) != dim) malformed("origin does not cover every generator");
    }
    return LieAlgebra(name, std::move(labels), cs, std::move(origin));
}

Json to_json(const InvariantTensor& t) {
    Json j;
    j["rank"] = t.rank();
    j["dim"] = t.dim();
    Json entries = Json::array();
    for (const auto& [idx, v] : t.entries()) {
        Json e;
        e["indices"] = idx;
        e["coeff"] = to_json(v);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

InvariantTensor tensor_from_json(const Json& j) {
    const int rank = as_int(member(j, "rank"), "rank");
    const int dim = as_int(member(j, "dim"), "dim");
    if (rank < 1 || dim < 0) malformed("rank or dim out of range");
    InvariantTensor t(rank, dim);
    if (!member(j, "entries").is_array()) malformed("entries is not an array");
    for (const auto& e : j.at("entries")) {
        auto idx = as_ints(member(e, "indices"), "indices");
        if (static_cast<int>(idx.size()) != rank) malformed("entry has the wrong number of indices");
        for (int x : idx)
            if (x < 0 || x >= dim) malformed("entry index out of range");
        t.add(std::move(idx), scalar_from_json(member(e, "coeff")));
    }
    return t;
}

Json to_json(const ScalarForm& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json t;
        Json syms = Json::array();
        for (const auto& s : m) syms.push_back(symbol_json(s));
        t["monomial"] = std::move(syms);
        t["text"] = monomial_str(m);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["size"] = f.size();
    j["terms"] = std::move(terms);
    return j;
}

ScalarForm form_from_json(const Json& j) {
    if (!member(j, "terms").is_array()) malformed("terms is not an array");
    ScalarForm out;
    for (const auto& t : j.at("terms")) {
        std::vector<FormSymbol> syms;
        if (!member(t, "monomial").is_array()) malformed("monomial is not an array");
        for (const auto& s : t.at("monomial")) syms.push_back(symbol_from_json(s));
        out += ScalarForm::monomial(syms, scalar_from_json(member(t, "coeff")));
    }
    return out;
}

Json to_json(const ComparisonReport& r) {
    Json j;
    j["match"] = r.match;
    j["global_scalar"] = r.scalar ? to_json(*r.scalar) : Json(nullptr);
    j["note"] = r.note;
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        Json x;
        x["line"] = t.line;
        x["term"] = t.text;
        x["printed"] = t.printed.str();
        x["computed"] = t.computed ? Json(t.computed->str()) : Json(nullptr);
        x["agrees"] = t.agrees;
        terms.push_back(std::move(x));
    }
    j["terms"] = std::move(terms);
    j["residual_monomials"] = r.residual_monomials;
    j["unexplained_monomials"] = r.unexplained_monomials;
    j["unexplained_families"] = r.unexplained_families;
    return j;
}

std::string format_json(const Json& j) {
    if (!j.is_object() || j.empty()) return j.dump() + "\n";
    std::string out = "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
        out += "  " + Json(key).dump() + ": ";
        if (value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object())) {
            out += "[\n";
            for (std::size_t k = 0; k < value.size(); ++k)
                out += "    " + value[k].dump() + (k + 1 < value.size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += value.dump();
        }
        out += ++i < j.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string commutator_table(const LieAlgebra& l) {
    std::ostringstream out;
    out << l.name() << " (dim " << l.dim() << ")\n";
    for (int a = 0; a < l.dim(); ++a)
        for (int b = a + 1; b < l.dim(); ++b) {
            const auto& terms = l.bracket_of(a, b);
            if (terms.empty()) continue;
            out << "[" << l.label(a).str() << ", " << l.label(b).str() << "] =";
            bool first = true;
            for (const auto& t : terms) {
                QSqrt2 c = t.value;
                const bool neg = c.sign() < 0;
                if (neg) c = -c;
                out << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
                if (!(c == QSqrt2(1))) out << (c.is_rational() ? c.str() : "(" + c.str() + ")") << " ";
                out << l.label(t.target).str();
                first = false;
            }
            out << "\n";
        }
    return out.str();
}

std::string algebra_latex(const LieAlgebra& l) {
    std::ostringstream out;
    out << "\\begin{align*}\n";
    for (int a = 0; a < l.dim(); ++a)
        for (int b = a + 1; b < l.dim(); ++b) {
            const auto& terms = l.bracket_of(a, b);
            if (terms.empty()) continue;
            out << "\\left[" << l.label(a).latex() << ", " << l.label(b).latex() << "\\right] &=";
            bool first = true;
            for (const auto& t : terms) {
                const std::string c = ScalarExpr(t.value).latex();
                const bool neg = !c.empty() && c[0] == '-';
                std::string mag = neg ? c.substr(1) : c;
                if (mag == "1") mag.clear();
                out << (first ? (neg ? " -" : " ") : (neg ? " - " : " + ")) << mag << (mag.empty() ? "" : " ")
                    << l.label(t.target).latex();
                first = false;
            }
            out << " \\\\\n";
        }
    out << "\\end{align*}\n";
    return out.str();
}

std::string tensor_latex(const LieAlgebra& l, const InvariantTensor& t) {
    std::ostringstream out;
    const auto rows = tensor_table(l, t);
    if (rows.empty()) return "% zero tensor\n";
    static const std::string letters = "abcdefghij";
    out << "\\begin{array}{l}\n";
    for (const auto& row : rows) {
        std::size_t next = 0;
        std::string slots, eps;
        for (std::size_t i = 0; i < row.slots.size(); ++i) {
            const auto cut = row.slots[i].rfind('_');
            const std::string base = row.slots[i].substr(0, cut);
            const int n = std::stoi(row.slots[i].substr(cut + 1));
            std::string idx;
            for (int k = 0; k < n && next < letters.size(); ++k) idx += letters[next++];
            eps += idx;
            slots += (i ? "," : "") + base + "_{" + idx + "}";
        }
        out << "\\left\\langle " << slots << "\\right\\rangle = ";
        if (row.eps_coefficient) out << "\\left(" << row.eps_coefficient->latex() << "\\right)\\varepsilon_{" << eps << "}";
        else out << "\\text{" << row.entries << " entries, not of the form } c\\,\\varepsilon";
        out << " \\\\\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

std::string form_latex(const ScalarForm& f) {
    std::map<std::string, std::vector<std::pair<Monomial, ScalarExpr>>> families;
    for (const auto& [m, c] : f.terms()) families[family_of(m)].push_back({m, c});
    std::ostringstream out;
    if (families.empty()) return "0\n";
    for (const auto& [fam, terms] : families) {
        out << "% family " << fam << " (" << terms.size() << " monomials)\n";
        for (const auto& [m, c] : terms) {
            out << "+\\left(" << c.latex() << "\\right)";
            for (const auto& s : m) out << " " << s.latex();
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace liexp
