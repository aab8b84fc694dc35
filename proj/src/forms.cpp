#include "liexp/forms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace liexp {

std::string field_name(Field f) {
    switch (f) {
        case Field::omega: return "w";
        case Field::e: return "e";
        case Field::k: return "k";
        case Field::h: return "h";
        case Field::mc: return "mc";
    }
    return "?";
}

namespace {
bool is_pair_field(Field f) { return f == Field::omega || f == Field::k; }
}  // namespace

std::string FormSymbol::str() const {
    std::string out = (differentiated ? "d" : "") + field_name(field) + std::to_string(i);
    if (is_pair_field(field)) out += std::to_string(j);
    return out;
}

std::string FormSymbol::latex() const {
    std::string base;
    switch (field) {
        case Field::omega: base = "\\omega"; break;
        case Field::e: base = "e"; break;
        case Field::k: base = "k"; break;
        case Field::h: base = "h"; break;
        case Field::mc: base = "\\omega"; break;
    }
    std::string idx = std::to_string(i);
    if (is_pair_field(field)) idx += std::to_string(j);
    return (differentiated ? "d" : "") + base + "^{" + idx + "}";
}

int degree(const Monomial& m) {
    int d = 0;
    for (const auto& s : m) d += s.degree();
    return d;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? " " : "") + m[i].str();
    return out;
}

std::pair<int, Monomial> wedge_monomials(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.reserve(x.size() + y.size());
    // odd symbols of x not yet emitted
    int odd_left = 0;
    for (const auto& s : x) odd_left += s.odd() ? 1 : 0;
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i] < y[j])) {
            if (x[i].odd()) --odd_left;
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j] < x[i]) {
            if (y[j].odd() && (odd_left % 2 == 1)) sign = -sign;
            out.push_back(y[j++]);
        } else {
            if (x[i].odd()) return {0, {}};
            out.push_back(x[i++]);
            out.push_back(y[j++]);
        }
    }
    return {sign, std::move(out)};
}

ScalarForm ScalarForm::constant(const ScalarExpr& c) {
    ScalarForm f;
    f.add({}, c);
    return f;
}

ScalarForm ScalarForm::symbol(const FormSymbol& s, const ScalarExpr& c) {
    if (is_pair_field(s.field) && s.i >= s.j) throw std::invalid_argument("pair symbol must have i < j; use pair_symbol");
    ScalarForm f;
    f.add({s}, c);
    return f;
}

ScalarForm ScalarForm::pair_symbol(Field f, int a, int b, bool differentiated) {
    if (a == b) return {};
    if (a < b) return symbol({f, static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), differentiated});
    return symbol({f, static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(a), differentiated}, ScalarExpr(-1));
}

ScalarForm ScalarForm::monomial(const std::vector<FormSymbol>& symbols, const ScalarExpr& c) {
    std::pair<int, Monomial> acc{1, {}};
    for (const auto& s : symbols) {
        auto [sg, m] = wedge_monomials(acc.second, {s});
        if (sg == 0) return {};
        acc = {acc.first * sg, std::move(m)};
    }
    ScalarForm f;
    f.add(acc.second, acc.first == 1 ? c : -c);
    return f;
}

ScalarExpr ScalarForm::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? ScalarExpr() : it->second;
}

void ScalarForm::add(const Monomial& m, const ScalarExpr& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ScalarForm& ScalarForm::operator+=(const ScalarForm& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

ScalarForm& ScalarForm::operator-=(const ScalarForm& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

ScalarForm operator-(const ScalarForm& x) {
    ScalarForm out;
    for (const auto& [m, c] : x.terms_) out.terms_.emplace(m, -c);
    return out;
}

ScalarForm operator*(const ScalarExpr& c, const ScalarForm& f) {
    ScalarForm out;
    for (const auto& [m, v] : f.terms_) out.add(m, c * v);
    return out;
}

ScalarForm ScalarForm::without_fields(const std::set<Field>& fields) const {
    ScalarForm out;
    for (const auto& [m, c] : terms_)
        if (std::none_of(m.begin(), m.end(), [&](const FormSymbol& s) { return fields.count(s.field) > 0; }))
            out.terms_.emplace(m, c);
    return out;
}

ScalarForm ScalarForm::substitute_alphas(std::span<const ScalarExpr> values) const {
    ScalarForm out;
    for (const auto& [m, c] : terms_) out.add(m, c.substitute_alphas(values));
    return out;
}

ScalarForm ScalarForm::weight_part(int weight) const {
    ScalarForm out;
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.size()) == weight) out.terms_.emplace(m, c);
    return out;
}

std::string ScalarForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) out += "(" + c.str() + ") " + monomial_str(m) + "\n";
    return out;
}

ScalarForm wedge(const ScalarForm& x, const ScalarForm& y) {
    ScalarForm out;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            auto [sign, m] = wedge_monomials(mx, my);
            if (sign == 0) continue;
            ScalarExpr c = cx * cy;
            out.add(m, sign > 0 ? c : -c);
        }
    return out;
}

namespace {

// Applies the odd derivation determined by its action on single symbols.
ScalarForm apply_odd_derivation(const ScalarForm& f, const std::function<std::optional<FormSymbol>(const FormSymbol&)>& act) {
    ScalarForm out;
    for (const auto& [m, c] : f.terms()) {
        int prefix_degree = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (auto r = act(m[i])) {
                const Monomial prefix(m.begin(), m.begin() + static_cast<long>(i));
                const Monomial suffix(m.begin() + static_cast<long>(i) + 1, m.end());
                auto [s1, head] = wedge_monomials(prefix, {*r});
                if (s1 != 0) {
                    auto [s2, full] = wedge_monomials(head, suffix);
                    if (s2 != 0) {
                        const int sign = s1 * s2 * (prefix_degree % 2 ? -1 : 1);
                        out.add(full, sign > 0 ? c : -c);
                    }
                }
            }
            prefix_degree += m[i].degree();
        }
    }
    return out;
}

}  // namespace

ScalarForm exterior_d(const ScalarForm& f) {
    return apply_odd_derivation(f, [](const FormSymbol& s) -> std::optional<FormSymbol> {
        if (s.differentiated) return std::nullopt;
        FormSymbol r = s;
        r.differentiated = true;
        return r;
    });
}

ScalarForm homotopy(const ScalarForm& f) {
    return apply_odd_derivation(f, [](const FormSymbol& s) -> std::optional<FormSymbol> {
        if (!s.differentiated) return std::nullopt;
        FormSymbol r = s;
        r.differentiated = false;
        return r;
    });
}

LieValuedForm::LieValuedForm(int dim, int degree) : components_(static_cast<std::size_t>(dim)), degree_(degree) {}

void LieValuedForm::add(int a, const ScalarForm& f) {
    for (const auto& [m, c] : f.terms())
        if (liexp::degree(m) != degree_)
            throw std::invalid_argument("component of degree " + std::to_string(liexp::degree(m)) +
                                        " added to a Lie-valued " + std::to_string(degree_) + "-form");
    components_[static_cast<std::size_t>(a)] += f;
}

bool LieValuedForm::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const ScalarForm& f) { return f.is_zero(); });
}

LieValuedForm& LieValuedForm::operator+=(const LieValuedForm& o) {
    if (o.dim() != dim() || o.degree_ != degree_) throw std::invalid_argument("adding incompatible Lie-valued forms");
    for (int a = 0; a < dim(); ++a) components_[static_cast<std::size_t>(a)] += o[a];
    return *this;
}

LieValuedForm& LieValuedForm::operator-=(const LieValuedForm& o) {
    if (o.dim() != dim() || o.degree_ != degree_) throw std::invalid_argument("subtracting incompatible Lie-valued forms");
    for (int a = 0; a < dim(); ++a) components_[static_cast<std::size_t>(a)] -= o[a];
    return *this;
}

LieValuedForm operator*(const ScalarExpr& c, const LieValuedForm& f) {
    LieValuedForm out(f.dim(), f.degree());
    for (int a = 0; a < f.dim(); ++a) out.components_[static_cast<std::size_t>(a)] = c * f[a];
    return out;
}

LieValuedForm wedge(const LieValuedForm& f, const ScalarForm& g) {
    int gd = -1;
    for (const auto& [m, c] : g.terms()) {
        if (gd >= 0 && degree(m) != gd) throw std::invalid_argument("wedge with an inhomogeneous form");
        gd = degree(m);
    }
    LieValuedForm out(f.dim(), f.degree() + std::max(gd, 0));
    for (int a = 0; a < f.dim(); ++a) out.add(a, wedge(f[a], g));
    return out;
}

LieValuedForm exterior_d(const LieValuedForm& f) {
    LieValuedForm out(f.dim(), f.degree() + 1);
    for (int a = 0; a < f.dim(); ++a) out.add(a, exterior_d(f[a]));
    return out;
}

LieValuedForm lie_bracket_form(const LieValuedForm& f, const LieValuedForm& g, const LieAlgebra& l) {
    if (f.dim() != l.dim() || g.dim() != l.dim()) throw std::invalid_argument("forms are not valued in this algebra");
    LieValuedForm out(l.dim(), f.degree() + g.degree());
    for (int a = 0; a < l.dim(); ++a) {
        if (f[a].is_zero()) continue;
        for (int b = 0; b < l.dim(); ++b) {
            if (g[b].is_zero() || l.bracket_of(a, b).empty()) continue;
            const ScalarForm w = wedge(f[a], g[b]);
            for (const auto& t : l.bracket_of(a, b)) out.add(t.target, ScalarExpr(t.value) * w);
        }
    }
    return out;
}

LieValuedForm curvature(const LieValuedForm& a, const LieAlgebra& l) {
    return exterior_d(a) + ScalarExpr(ratio(1, 2)) * lie_bracket_form(a, a, l);
}

ScalarForm contract(const InvariantTensor& t, std::span<const LieValuedForm> forms) {
    if (static_cast<int>(forms.size()) != t.rank()) throw std::invalid_argument("contract: rank mismatch");
    for (const auto& f : forms)
        if (f.dim() != t.dim()) throw std::invalid_argument("contract: form is not valued in the tensor's algebra");
    ScalarForm out;
    for (const auto& [key, value] : t.entries()) {
        std::vector<int> p = key;
        do {
            bool zero = false;
            for (std::size_t s = 0; s < p.size() && !zero; ++s) zero = forms[s][p[s]].is_zero();
            if (zero) continue;
            ScalarForm acc = forms[0][p[0]];
            for (std::size_t s = 1; s < p.size() && !acc.is_zero(); ++s) acc = wedge(acc, forms[s][p[s]]);
            out += value * acc;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

}  // namespace liexp
