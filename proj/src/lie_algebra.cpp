#include "liexp/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace liexp {

std::string Label::str() const {
    std::string out = base;
    for (int i : indices) out += std::to_string(i);
    for (int t : tags) out += ":" + std::to_string(t);
    return out;
}

std::string Label::latex() const {
    std::string out = base;
    std::string sub;
    for (int i : indices) sub += std::to_string(i);
    if (!tags.empty()) {
        if (!sub.empty()) sub += ",";
        for (std::size_t k = 0; k < tags.size(); ++k) sub += (k ? "," : "") + std::to_string(tags[k]);
        sub = "(" + sub + ")";
    }
    if (!sub.empty()) out += "_{" + sub + "}";
    return out;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<Label> labels, const std::vector<StructureConstant>& constants,
                       std::vector<ExpandedLabel> origin)
    : name_(std::move(name)), labels_(std::move(labels)), origin_(std::move(origin)) {
    const int n = dim();
    if (!origin_.empty() && static_cast<int>(origin_.size()) != n)
        throw std::invalid_argument("provenance list does not match the dimension");
    std::map<std::tuple<int, int, int>, QSqrt2> acc;
    for (const auto& k : constants) {
        if (k.a < 0 || k.a >= n || k.b < 0 || k.b >= n || k.c < 0 || k.c >= n)
            throw std::invalid_argument("structure constant index out of range");
        if (k.a <= k.b) acc[{k.a, k.b, k.c}] += k.value;
        else acc[{k.b, k.a, k.c}] -= k.value;
    }
    full_.assign(static_cast<std::size_t>(n * n), {});
    for (const auto& [key, v] : acc) {
        if (v.is_zero()) continue;
        const auto [a, b, c] = key;
        canonical_.push_back({a, b, c, v});
        full_[static_cast<std::size_t>(a * n + b)].push_back({c, v});
        if (a != b) full_[static_cast<std::size_t>(b * n + a)].push_back({c, -v});
    }
}

QSqrt2 LieAlgebra::constant(int a, int b, int c) const {
    for (const auto& t : bracket_of(a, b))
        if (t.target == c) return t.value;
    return QSqrt2(0);
}

int LieAlgebra::find(std::string_view base, const std::vector<int>& indices) const {
    for (int i = 0; i < dim(); ++i)
        if (labels_[static_cast<std::size_t>(i)].base == base && labels_[static_cast<std::size_t>(i)].indices == indices)
            return i;
    return -1;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
    LieAlgebra out = *this;
    out.name_ = std::move(name);
    return out;
}

LieAlgebra LieAlgebra::relabeled(std::vector<Label> labels) const {
    if (static_cast<int>(labels.size()) != dim()) throw std::invalid_argument("label count does not match dimension");
    LieAlgebra out = *this;
    out.labels_ = std::move(labels);
    return out;
}

Vector bracket(const LieAlgebra& l, const Vector& x, const Vector& y) {
    const int n = l.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("bracket: vector length does not match the algebra dimension");
    Vector out(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        if (x[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 0; b < n; ++b) {
            if (y[static_cast<std::size_t>(b)].is_zero()) continue;
            const QSqrt2 xy = x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)];
            for (const auto& t : l.bracket_of(a, b)) out[static_cast<std::size_t>(t.target)] += xy * t.value;
        }
    }
    return out;
}

AxiomReport check_axioms(const LieAlgebra& l) {
    const int n = l.dim();
    for (const auto& k : l.constants())
        if (k.a == k.b)
            return {false,
                    "antisymmetry: [" + l.label(k.a).str() + "," + l.label(k.a).str() + "] has a component along " +
                        l.label(k.c).str(),
                    std::array<int, 4>{k.a, k.a, k.c, -1}};
    Vector jac(static_cast<std::size_t>(n));
    // [[x,y],z] accumulated into jac
    auto nested = [&](int x, int y, int z) {
        for (const auto& t1 : l.bracket_of(x, y))
            for (const auto& t2 : l.bracket_of(t1.target, z)) jac[static_cast<std::size_t>(t2.target)] += t1.value * t2.value;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                std::fill(jac.begin(), jac.end(), QSqrt2(0));
                nested(a, b, d);
                nested(b, d, a);
                nested(d, a, b);
                for (int e = 0; e < n; ++e)
                    if (!jac[static_cast<std::size_t>(e)].is_zero())
                        return {false,
                                "Jacobi identity fails for (" + l.label(a).str() + "," + l.label(b).str() + "," +
                                    l.label(d).str() + ") along " + l.label(e).str() + ": " +
                                    jac[static_cast<std::size_t>(e)].str(),
                                std::array<int, 4>{a, b, d, e}};
            }
    return {};
}

Matrix killing_form(const LieAlgebra& l) {
    const int n = l.dim();
    // ad matrices: (ad_A)_{D C} = C_{AC}^D
    std::vector<Matrix> ad(static_cast<std::size_t>(n), Matrix(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n))));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (const auto& t : l.bracket_of(a, c)) ad[static_cast<std::size_t>(a)][static_cast<std::size_t>(t.target)][static_cast<std::size_t>(c)] = t.value;
    Matrix b(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            QSqrt2 tr;
            // trace(ad_x ad_y) = sum_{C,D} C_{xC}^D C_{yD}^C
            for (int c = 0; c < n; ++c)
                for (const auto& t : l.bracket_of(x, c)) {
                    const QSqrt2& v = ad[static_cast<std::size_t>(y)][static_cast<std::size_t>(c)][static_cast<std::size_t>(t.target)];
                    if (!v.is_zero()) tr += t.value * v;
                }
            b[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = tr;
            b[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = tr;
        }
    return b;
}

KillingProfile killing_profile(const LieAlgebra& l) {
    const int n = l.dim();
    KillingProfile p;
    p.signature = inertia(killing_form(l));
    Matrix span;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vector v(static_cast<std::size_t>(n));
            for (const auto& t : l.bracket_of(a, b)) v[static_cast<std::size_t>(t.target)] = t.value;
            span.push_back(std::move(v));
        }
    p.derived_dim = rank(span);
    // center = kernel of x -> ad_x, viewed as an n x (n*n) map
    Matrix admap(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n * n)));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (const auto& t : l.bracket_of(a, c))
                admap[static_cast<std::size_t>(a)][static_cast<std::size_t>(c * n + t.target)] = t.value;
    p.center_dim = n - rank(admap);
    return p;
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& m, std::vector<Label> new_labels) {
    const int n = l.dim();
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument("change_basis: matrix size does not match dimension");
    const auto minv = inverse(m);
    if (!minv) throw std::invalid_argument("change_basis: singular basis change");
    if (new_labels.empty()) new_labels = l.labels();
    std::vector<StructureConstant> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vector v = bracket(l, m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
            for (int k = 0; k < n; ++k) {
                QSqrt2 s;
                for (int c = 0; c < n; ++c)
                    if (!v[static_cast<std::size_t>(c)].is_zero()) s += v[static_cast<std::size_t>(c)] * (*minv)[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
                if (!s.is_zero()) out.push_back({i, j, k, s});
            }
        }
    return LieAlgebra(l.name(), std::move(new_labels), out);
}

namespace {

int levi_civita3(int i, int j, int k) {
    // indices 0..2
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

// so(3)-type pair algebra: [J,J] = eps J, [J,K] = eps K, [K,K] = s eps J
LieAlgebra rotation_pair(const std::string& name, int kk_sign) {
    std::vector<Label> labels;
    for (int i = 1; i <= 3; ++i) labels.push_back({"J", {i}, {}});
    for (int i = 1; i <= 3; ++i) labels.push_back({"K", {i}, {}});
    std::vector<StructureConstant> c;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int e = levi_civita3(i, j, k);
                if (e == 0) continue;
                c.push_back({i, j, k, e});
                c.push_back({i + 3, j + 3, k, kk_sign * e});
            }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int e = levi_civita3(i, j, k);
                if (e != 0) c.push_back({i, j + 3, k + 3, e});
            }
    return LieAlgebra(name, std::move(labels), c);
}

}  // namespace

LieAlgebra make_ads(int d) {
    if (d < 2) throw std::invalid_argument("ads(d) needs d >= 2");
    std::vector<Label> labels;
    std::map<std::pair<int, int>, int> jidx;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            jidx[{a, b}] = static_cast<int>(labels.size());
            labels.push_back({"J", {a, b}, {}});
        }
    const int p0 = static_cast<int>(labels.size());
    for (int a = 0; a < d; ++a) labels.push_back({"P", {a}, {}});

    std::vector<StructureConstant> c;
    // J_xy with x > y is -J_yx, x == y vanishes
    auto add_j = [&](int lhs, int rhs, int x, int y, int coeff) {
        if (x == y || coeff == 0) return;
        if (x < y) c.push_back({lhs, rhs, jidx.at({x, y}), coeff});
        else c.push_back({lhs, rhs, jidx.at({y, x}), -coeff});
    };
    for (const auto& [ab, i] : jidx)
        for (const auto& [cd, j] : jidx) {
            if (i >= j) continue;
            const auto [a, b] = ab;
            const auto [cc, dd] = cd;
            const int dac = a == cc ? eta(a) : 0, dbd = b == dd ? eta(b) : 0;
            const int dbc = b == cc ? eta(b) : 0, dad = a == dd ? eta(a) : 0;
            add_j(i, j, b, dd, -dac);
            add_j(i, j, a, cc, -dbd);
            add_j(i, j, a, dd, dbc);
            add_j(i, j, b, cc, dad);
        }
    for (const auto& [ab, i] : jidx) {
        const auto [a, b] = ab;
        for (int cc = 0; cc < d; ++cc) {
            if (a == cc) c.push_back({i, p0 + cc, p0 + b, -eta(a)});
            if (b == cc) c.push_back({i, p0 + cc, p0 + a, eta(b)});
        }
    }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) c.push_back({p0 + a, p0 + b, jidx.at({a, b}), 1});
    return LieAlgebra("ads" + std::to_string(d), std::move(labels), c);
}

LieAlgebra make_named(const std::string& name, int d) {
    if (name == "so3") {
        std::vector<Label> labels;
        for (int i = 1; i <= 3; ++i) labels.push_back({"J", {i}, {}});
        std::vector<StructureConstant> c;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (int e = levi_civita3(i, j, k)) c.push_back({i, j, k, e});
        return LieAlgebra("so3", std::move(labels), c);
    }
    if (name == "so31") return rotation_pair("so31", -1);
    if (name == "so4") return rotation_pair("so4", 1);
    if (name == "ads3") return make_ads(3);
    if (name == "ads5") return make_ads(5);
    if (name == "ads" && (d == 3 || d == 5)) return make_ads(d);
    throw std::invalid_argument("unknown named algebra '" + name + "'");
}

namespace {

using Flat = std::vector<Rational>;

Flat commutator(const Flat& x, const Flat& y, int m) {
    Flat out(static_cast<std::size_t>(m * m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const Rational& xik = x[static_cast<std::size_t>(i * m + k)];
            const Rational& yik = y[static_cast<std::size_t>(i * m + k)];
            for (int j = 0; j < m; ++j) {
                if (sgn(xik) != 0) out[static_cast<std::size_t>(i * m + j)] += xik * y[static_cast<std::size_t>(k * m + j)];
                if (sgn(yik) != 0) out[static_cast<std::size_t>(i * m + j)] -= yik * x[static_cast<std::size_t>(k * m + j)];
            }
        }
    return out;
}

// Reduced row echelon basis of a matrix span; insert() reports whether v was new.
struct EchelonBasis {
    std::vector<Flat> rows;
    std::vector<std::size_t> pivots;

    Flat reduce(Flat v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rational f = v[pivots[r]];
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
        }
        return v;
    }
    bool insert(const Flat& v) {
        Flat w = reduce(v);
        std::size_t p = 0;
        while (p < w.size() && sgn(w[p]) == 0) ++p;
        if (p == w.size()) return false;
        const Rational inv = 1 / w[p];
        for (auto& x : w) x *= inv;
        for (auto& row : rows) {
            const Rational f = row[p];
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * w[j];
        }
        rows.push_back(std::move(w));
        pivots.push_back(p);
        return true;
    }
};

}  // namespace

LieAlgebra make_random_algebra(int target_dim, bool nilpotent, std::uint32_t seed) {
    const int m = nilpotent ? 5 : 4;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        EchelonBasis basis;
        std::vector<Flat> gens;
        for (int g = 0; g < 2; ++g) {
            Flat x(static_cast<std::size_t>(m * m));
            for (int i = 0; i < m; ++i)
                for (int j = nilpotent ? i + 1 : i; j < m; ++j) x[static_cast<std::size_t>(i * m + j)] = entry(rng);
            if (basis.insert(x)) gens.push_back(x);
        }
        // keep the generating matrices themselves so the basis stays "random"
        std::vector<Flat> elems = gens;
        bool grew = true;
        while (grew && static_cast<int>(elems.size()) <= target_dim) {
            grew = false;
            const std::size_t n = elems.size();
            for (std::size_t i = 0; i < n && !grew; ++i)
                for (std::size_t j = i + 1; j < n && !grew; ++j) {
                    Flat c = commutator(elems[i], elems[j], m);
                    if (basis.insert(c)) {
                        elems.push_back(std::move(c));
                        grew = true;
                    }
                }
        }
        if (static_cast<int>(elems.size()) != target_dim) continue;
        // coordinates of w in the basis `elems`: solve through the echelon form
        const int n = target_dim;
        Matrix coords_of_elems(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r)
                coords_of_elems[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] =
                    QSqrt2(elems[static_cast<std::size_t>(i)][basis.pivots[static_cast<std::size_t>(r)]]);
        const auto to_elems = inverse(coords_of_elems);
        std::vector<StructureConstant> c;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Flat w = commutator(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)], m);
                for (int k = 0; k < n; ++k) {
                    QSqrt2 s;
                    for (int r = 0; r < n; ++r)
                        s += QSqrt2(w[basis.pivots[static_cast<std::size_t>(r)]]) *
                             (*to_elems)[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
                    if (!s.is_zero()) c.push_back({i, j, k, s});
                }
            }
        std::vector<Label> labels;
        for (int i = 0; i < n; ++i) labels.push_back({"X", {i}, {}});
        return LieAlgebra((nilpotent ? "nilpotent" : "solvable") + std::to_string(n) + "_" + std::to_string(seed),
                          std::move(labels), c);
    }
    throw std::runtime_error("random algebra construction did not reach the requested dimension");
}

}  // namespace liexp
