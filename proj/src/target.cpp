#include "liexp/target.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace liexp {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct FactorKind {
    const char* name;
    int arity;
};

constexpr FactorKind kFactorKinds[] = {
    {"e", 1},  {"h", 1},  {"w", 2},  {"k", 2},  {"de", 1}, {"dh", 1}, {"dw", 2},
    {"dk", 2}, {"R", 2},  {"T", 1},  {"Dk", 2}, {"Dh", 1}, {"eps", -1},
};

int arity_of(const std::string& name) {
    for (const auto& k : kFactorKinds)
        if (name == k.name) return k.arity;
    return -2;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<TargetFactor> parse_factors(std::string_view s, int line, int offset) {
    std::vector<TargetFactor> out;
    std::size_t pos = 0;
    auto col = [&] { return offset + static_cast<int>(pos) + 1; };
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    for (;;) {
        skip();
        if (pos == s.size()) break;
        const std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        TargetFactor f{std::string(s.substr(start, pos - start)), {}};
        if (f.name.empty()) throw ParseError("expected a factor name", line, col());
        const int arity = arity_of(f.name);
        if (arity == -2) {
            pos = start;
            throw ParseError("unknown factor '" + f.name + "'", line, col());
        }
        skip();
        if (pos == s.size() || s[pos] != '(') throw ParseError("expected '(' after " + f.name, line, col());
        ++pos;
        for (;;) {
            skip();
            const std::size_t is = pos;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
            if (is == pos) throw ParseError("expected an index name", line, col());
            f.indices.emplace_back(s.substr(is, pos - is));
            skip();
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or ')'", line, col());
        }
        if (arity > 0 && static_cast<int>(f.indices.size()) != arity)
            throw ParseError(f.name + " takes " + std::to_string(arity) + " indices", line, col());
        out.push_back(std::move(f));
    }
    if (out.empty()) throw ParseError("term has no factors", line, offset + 1);
    return out;
}

void validate_indices(const TargetTerm& t, int dimension) {
    std::map<std::string, int> in_eps, in_fields;
    int eps_count = 0;
    for (const auto& f : t.factors) {
        if (f.name == "eps") {
            ++eps_count;
            if (static_cast<int>(f.indices.size()) != dimension)
                throw ParseError("eps needs " + std::to_string(dimension) + " indices", t.line, 1);
            for (const auto& i : f.indices) ++in_eps[i];
        } else {
            for (const auto& i : f.indices) ++in_fields[i];
        }
    }
    if (eps_count > 1) throw ParseError("at most one eps per term", t.line, 1);
    for (const auto& [i, n] : in_eps)
        if (n != 1 || in_fields[i] != 1)
            throw ParseError("eps index '" + i + "' must appear exactly once in the field factors", t.line, 1);
    for (const auto& [i, n] : in_fields)
        if (!in_eps.count(i) && n != 2) throw ParseError("index '" + i + "' must be contracted exactly once", t.line, 1);
}

}  // namespace

TargetExpression parse_target(std::string_view text) {
    TargetExpression out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) continue;
        if (s[0] == '@') {
            std::istringstream hs(s.substr(1));
            std::string key, value;
            hs >> key >> value;
            if (key == "name") out.name = value;
            else if (key == "dim") {
                try {
                    out.dimension = std::stoi(value);
                } catch (const std::exception&) {
                    throw ParseError("malformed @dim", line, 1);
                }
            } else {
                throw ParseError("unknown header '" + key + "'", line, 2);
            }
            continue;
        }
        const std::string body = raw.substr(0, raw.find('#'));
        const std::size_t bar = body.find('|');
        if (bar == std::string::npos) throw ParseError("expected 'coefficient | factors'", line, 1);
        TargetTerm t;
        t.line = line;
        try {
            t.coefficient = ScalarExpr::parse(body.substr(0, bar));
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("coefficient: ") + e.what(), line, 1);
        }
        const std::string rest = body.substr(bar + 1);
        t.factors = parse_factors(rest, line, static_cast<int>(bar) + 1);
        t.text = trim(rest);
        out.terms.push_back(std::move(t));
    }
    if (out.dimension != 3 && out.dimension != 5) throw ParseError("@dim must be 3 or 5", line, 1);
    for (const auto& t : out.terms) validate_indices(t, out.dimension);
    return out;
}

TargetExpression load_target(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_target(ss.str());
}

namespace {

class FactorValues {
public:
    explicit FactorValues(int dimension) : d_(dimension) {}

    const ScalarForm& get(const std::string& name, const std::vector<int>& idx) {
        auto key = std::make_pair(name, idx);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, compute(name, idx)).first->second;
    }

private:
    ScalarForm single(Field f, int a, bool d) const {
        return ScalarForm::symbol({f, static_cast<std::uint16_t>(a), 0, d});
    }
    ScalarForm pair(Field f, int a, int b, bool d = false) const { return ScalarForm::pair_symbol(f, a, b, d); }

    ScalarForm compute(const std::string& n, const std::vector<int>& x) {
        if (n == "e") return single(Field::e, x[0], false);
        if (n == "h") return single(Field::h, x[0], false);
        if (n == "de") return single(Field::e, x[0], true);
        if (n == "dh") return single(Field::h, x[0], true);
        if (n == "w") return pair(Field::omega, x[0], x[1]);
        if (n == "k") return pair(Field::k, x[0], x[1]);
        if (n == "dw") return pair(Field::omega, x[0], x[1], true);
        if (n == "dk") return pair(Field::k, x[0], x[1], true);
        ScalarForm out;
        const int a = x[0];
        if (n == "R") {
            // R^{ab} = dw^{ab} + w^a_c w^{cb}
            const int b = x[1];
            out = pair(Field::omega, a, b, true);
            for (int c = 0; c < d_; ++c) out += ScalarExpr(eta(c)) * wedge(pair(Field::omega, a, c), pair(Field::omega, c, b));
        } else if (n == "T") {
            // T^a = de^a + w^a_c e^c
            out = single(Field::e, a, true);
            for (int c = 0; c < d_; ++c) out += ScalarExpr(eta(c)) * wedge(pair(Field::omega, a, c), single(Field::e, c, false));
        } else if (n == "Dh") {
            out = single(Field::h, a, true);
            for (int c = 0; c < d_; ++c) out += ScalarExpr(eta(c)) * wedge(pair(Field::omega, a, c), single(Field::h, c, false));
        } else if (n == "Dk") {
            // D k^{ab} = dk^{ab} + w^a_c k^{cb} + w^b_c k^{ac}
            const int b = x[1];
            out = pair(Field::k, a, b, true);
            for (int c = 0; c < d_; ++c) {
                out += ScalarExpr(eta(c)) * wedge(pair(Field::omega, a, c), pair(Field::k, c, b));
                out += ScalarExpr(eta(c)) * wedge(pair(Field::omega, b, c), pair(Field::k, a, c));
            }
        }
        return out;
    }

    int d_;
    std::map<std::pair<std::string, std::vector<int>>, ScalarForm> cache_;
};

}  // namespace

ScalarForm expand_term(const TargetTerm& term, int dimension) {
    validate_indices(term, dimension);
    std::vector<std::string> eps_letters, eta_letters;
    for (const auto& f : term.factors)
        if (f.name == "eps") eps_letters = f.indices;
    for (const auto& f : term.factors)
        if (f.name != "eps")
            for (const auto& i : f.indices)
                if (std::find(eps_letters.begin(), eps_letters.end(), i) == eps_letters.end() &&
                    std::find(eta_letters.begin(), eta_letters.end(), i) == eta_letters.end())
                    eta_letters.push_back(i);

    FactorValues values(dimension);
    std::map<std::string, int> assign;
    ScalarForm out;
    auto emit = [&](int weight) {
        ScalarForm acc = ScalarForm::constant(ScalarExpr(weight) * term.coefficient);
        for (const auto& f : term.factors) {
            if (f.name == "eps") continue;
            std::vector<int> idx;
            for (const auto& i : f.indices) idx.push_back(assign.at(i));
            acc = wedge(acc, values.get(f.name, idx));
            if (acc.is_zero()) return;
        }
        out += acc;
    };
    std::function<void(std::size_t, int)> over_eta = [&](std::size_t k, int weight) {
        if (k == eta_letters.size()) {
            emit(weight);
            return;
        }
        for (int v = 0; v < dimension; ++v) {
            assign[eta_letters[k]] = v;
            over_eta(k + 1, weight * eta(v));
        }
    };
    if (eps_letters.empty()) {
        over_eta(0, 1);
        return out;
    }
    std::vector<int> perm(static_cast<std::size_t>(dimension));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::size_t i = 0; i < eps_letters.size(); ++i) assign[eps_letters[i]] = perm[i];
        over_eta(0, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ScalarForm expand_target(const TargetExpression& target) {
    ScalarForm out;
    for (const auto& t : target.terms) out += expand_term(t, target.dimension);
    return out;
}

std::optional<ScalarExpr> monomial_ratio(const ScalarExpr& y, const ScalarExpr& x) {
    if (x.is_zero()) return std::nullopt;
    const auto& [kx, cx] = x.terms()[0];
    for (const auto& [ky, cy] : y.terms()) {
        if (ky.alpha != kx.alpha) continue;
        const ScalarExpr s = ScalarExpr::ell(ky.ell - kx.ell, cy / cx);
        if (s * x == y) return s;
    }
    return std::nullopt;
}

namespace {

std::string family_of(const Monomial& m) {
    std::map<std::string, int> counts;
    for (const auto& s : m) ++counts[(s.differentiated ? "d" : "") + field_name(s.field)];
    std::string out;
    for (const auto& [k, n] : counts) out += (out.empty() ? "" : " ") + k + (n > 1 ? "^" + std::to_string(n) : "");
    return out;
}

}  // namespace

ComparisonReport compare_to_target(const ScalarForm& computed_in, const TargetExpression& target,
                                   const ComparisonOptions& options) {
    ComparisonReport rep;
    const ScalarForm computed = computed_in.without_fields(options.zero_fields);
    std::vector<ScalarForm> units;
    std::vector<const TargetTerm*> live;
    for (const auto& t : target.terms) {
        TargetTerm unit = t;
        unit.coefficient = ScalarExpr(1);
        ScalarForm u = expand_term(unit, target.dimension).without_fields(options.zero_fields);
        if (u.is_zero()) continue;
        units.push_back(std::move(u));
        live.push_back(&t);
    }
    ScalarForm expected;
    for (std::size_t i = 0; i < units.size(); ++i) expected += live[i]->coefficient * units[i];

    // Modulo exact forms, two forms agree iff their exterior derivatives do, so
    // coefficients are read off the d-images.
    auto view = [&](const ScalarForm& f) { return options.modulo_exact ? exterior_d(f) : f; };
    std::vector<ScalarForm> seen;
    for (const auto& u : units) seen.push_back(view(u));
    const ScalarForm computed_seen = view(computed);

    // a monomial of each term that no other term touches
    std::vector<std::optional<Monomial>> unique(units.size());
    for (std::size_t i = 0; i < units.size(); ++i)
        for (const auto& [m, c] : seen[i].terms()) {
            bool shared = false;
            for (std::size_t j = 0; j < units.size() && !shared; ++j)
                shared = j != i && seen[j].terms().count(m);
            if (!shared) {
                unique[i] = m;
                break;
            }
        }

    ScalarExpr s(1);
    if (options.global_scalar) {
        std::optional<ScalarExpr> found;
        if (!units.empty() && unique[0]) {
            const auto unit = seen[0].coefficient(*unique[0]).as_constant();
            if (unit)
                found = monomial_ratio(live[0]->coefficient * ScalarExpr(*unit),
                                       computed_seen.coefficient(*unique[0]));
        }
        if (!found) {
            rep.note = "no global scalar relates the anchor term of the target to the computed form";
            found = ScalarExpr(1);
        }
        s = *found;
        rep.scalar = s;
    }
    const ScalarForm scaled = s * computed;
    rep.residual = scaled - expected;
    const ScalarForm residual_seen = view(rep.residual);
    const ScalarForm scaled_seen = s * computed_seen;
    rep.residual_monomials = residual_seen.size();
    if (options.modulo_exact) rep.match = rep.note.empty() && exactness(rep.residual).exact;
    else rep.match = rep.note.empty() && rep.residual.is_zero();

    std::set<std::string> families;
    for (const auto& [m, c] : residual_seen.terms()) {
        bool covered = false;
        for (const auto& u : seen)
            if (u.terms().count(m)) {
                covered = true;
                break;
            }
        if (!covered) {
            ++rep.unexplained_monomials;
            families.insert(family_of(m));
        }
    }
    rep.unexplained_families.assign(families.begin(), families.end());

    for (std::size_t i = 0; i < units.size(); ++i) {
        TermReport tr;
        tr.index = i;
        tr.line = live[i]->line;
        tr.text = live[i]->text;
        tr.printed = live[i]->coefficient;
        if (unique[i]) {
            const auto unit = seen[i].coefficient(*unique[i]).as_constant();
            if (unit) tr.computed = scaled_seen.coefficient(*unique[i]) * ScalarExpr(unit->inverse());
            tr.agrees = tr.computed && *tr.computed == tr.printed;
        } else {
            tr.agrees = true;
            for (const auto& [m, c] : seen[i].terms())
                if (residual_seen.terms().count(m)) {
                    tr.agrees = false;
                    break;
                }
        }
        rep.terms.push_back(std::move(tr));
    }
    return rep;
}

std::string ComparisonReport::render() const {
    std::ostringstream out;
    out << (match ? "MATCH" : "MISMATCH");
    if (scalar) out << "  (global scalar " << scalar->str() << ")";
    out << "\n";
    if (!note.empty()) out << "  note: " << note << "\n";
    for (const auto& t : terms) {
        out << "  [" << (t.agrees ? "ok" : "!!") << "] line " << t.line << ": " << t.text << "\n"
            << "        printed  " << t.printed.str() << "\n";
        if (t.computed) out << "        computed " << t.computed->str() << "\n";
        else out << "        computed (no monomial unique to this term)\n";
    }
    out << "  residual monomials: " << residual_monomials << ", outside every printed term: " << unexplained_monomials
        << "\n";
    for (const auto& f : unexplained_families) out << "    unexplained family: " << f << "\n";
    return out.str();
}

}  // namespace liexp
