#include "liexp/expansion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liexp {

namespace {

Label tagged(const Label& base, int tag) {
    Label l = base;
    l.tags.push_back(tag);
    return l;
}

void require_origin(const LieAlgebra& g) {
    if (!g.has_origin()) throw std::invalid_argument("algebra " + g.name() + " carries no expansion tags");
}

// Restriction of an expanded algebra to the generators in `keep` (ascending), dropping
// every component that leaves the kept set.
LieAlgebra restrict_to(const LieAlgebra& big, const std::vector<int>& keep, const std::string& name) {
    std::vector<int> pos(static_cast<std::size_t>(big.dim()), -1);
    std::vector<Label> labels;
    std::vector<ExpandedLabel> origin;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        labels.push_back(big.label(keep[i]));
        if (big.has_origin()) origin.push_back(big.origin()[static_cast<std::size_t>(keep[i])]);
    }
    std::vector<StructureConstant> c;
    for (const auto& k : big.constants()) {
        const int a = pos[static_cast<std::size_t>(k.a)], b = pos[static_cast<std::size_t>(k.b)];
        const int t = pos[static_cast<std::size_t>(k.c)];
        if (a >= 0 && b >= 0 && t >= 0) c.push_back({a, b, t, k.value});
    }
    return LieAlgebra(name, std::move(labels), c, std::move(origin));
}

}  // namespace

LieAlgebra s_expand(const Semigroup& s, const LieAlgebra& g) {
    if (auto r = s.check_axioms(); !r.ok) throw std::invalid_argument("invalid semigroup " + s.name() + ": " + r.message);
    const int n = g.dim();
    const int order = s.order();
    std::vector<Label> labels;
    std::vector<ExpandedLabel> origin;
    for (int alpha = 0; alpha < order; ++alpha)
        for (int a = 0; a < n; ++a) {
            labels.push_back(tagged(g.label(a), alpha));
            origin.push_back({a, alpha});
        }
    std::vector<StructureConstant> c;
    for (int alpha = 0; alpha < order; ++alpha)
        for (int beta = 0; beta < order; ++beta) {
            const int gamma = s.product(alpha, beta);
            for (const auto& k : g.constants())
                c.push_back({alpha * n + k.a, beta * n + k.b, gamma * n + k.c, k.value});
        }
    return LieAlgebra(s.name() + "x" + g.name(), std::move(labels), c, std::move(origin));
}

LieAlgebra zero_reduce(const LieAlgebra& expanded, const Semigroup& s) {
    if (!s.zero()) throw std::invalid_argument("semigroup " + s.name() + " has no zero element");
    require_origin(expanded);
    std::vector<int> keep;
    for (int i = 0; i < expanded.dim(); ++i)
        if (expanded.origin()[static_cast<std::size_t>(i)].tag != *s.zero()) keep.push_back(i);
    return restrict_to(expanded, keep, expanded.name() + "_0");
}

std::vector<std::vector<std::vector<int>>> subspace_products(const LieAlgebra& g, const ResonanceSpec& spec) {
    if (static_cast<int>(spec.partition.size()) != g.dim())
        throw std::invalid_argument("resonance partition does not cover every generator");
    const int parts = static_cast<int>(spec.subsets.size());
    for (int p : spec.partition)
        if (p < 0 || p >= parts) throw std::invalid_argument("partition refers to an unknown part");
    std::vector<std::vector<std::set<int>>> hit(static_cast<std::size_t>(parts), std::vector<std::set<int>>(static_cast<std::size_t>(parts)));
    for (const auto& k : g.constants()) {
        const int p = spec.partition[static_cast<std::size_t>(k.a)];
        const int q = spec.partition[static_cast<std::size_t>(k.b)];
        const int r = spec.partition[static_cast<std::size_t>(k.c)];
        hit[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].insert(r);
        hit[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)].insert(r);
    }
    std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(parts), std::vector<std::vector<int>>(static_cast<std::size_t>(parts)));
    for (int p = 0; p < parts; ++p)
        for (int q = 0; q < parts; ++q)
            out[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].assign(hit[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].begin(), hit[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].end());
    return out;
}

std::optional<ResonanceViolation> find_resonance_violation(const LieAlgebra& g, const Semigroup& s,
                                                           const ResonanceSpec& spec) {
    const auto ipq = subspace_products(g, spec);
    const int parts = static_cast<int>(spec.subsets.size());
    for (const auto& sp : spec.subsets)
        for (int x : sp)
            if (x < 0 || x >= s.order()) throw std::invalid_argument("resonance subset element out of range");
    for (int p = 0; p < parts; ++p)
        for (int q = 0; q < parts; ++q) {
            std::set<int> allowed;
            for (int r : ipq[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)])
                allowed.insert(spec.subsets[static_cast<std::size_t>(r)].begin(), spec.subsets[static_cast<std::size_t>(r)].end());
            if (ipq[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].empty()) continue;  // [V_p, V_q] = 0
            for (int x : spec.subsets[static_cast<std::size_t>(p)])
                for (int y : spec.subsets[static_cast<std::size_t>(q)])
                    if (!allowed.count(s.product(x, y))) return ResonanceViolation{p, q, s.product(x, y)};
        }
    return std::nullopt;
}

LieAlgebra resonant_subalgebra(const LieAlgebra& expanded, const LieAlgebra& g, const Semigroup& s,
                               const ResonanceSpec& spec) {
    require_origin(expanded);
    if (auto v = find_resonance_violation(g, s, spec))
        throw std::invalid_argument("resonance violated: S_" + std::to_string(v->p) + " . S_" + std::to_string(v->q) +
                                    " contains lambda_" + std::to_string(v->element) +
                                    " outside the subsets allowed by [V_p, V_q]");
    std::vector<int> keep;
    for (int i = 0; i < expanded.dim(); ++i) {
        const auto& o = expanded.origin()[static_cast<std::size_t>(i)];
        const auto& sp = spec.subsets[static_cast<std::size_t>(spec.partition[static_cast<std::size_t>(o.base)])];
        if (std::find(sp.begin(), sp.end(), o.tag) != sp.end()) keep.push_back(i);
    }
    return restrict_to(expanded, keep, expanded.name() + "_R");
}

LieAlgebra h_reduce(int n, const LieAlgebra& g) {
    if (n < 1) throw std::invalid_argument("h_reduce needs n >= 1");
    const Semigroup z = make_cyclic(2 * n);
    const int d = g.dim();
    std::vector<Label> labels;
    std::vector<ExpandedLabel> origin;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < d; ++a) {
            labels.push_back(tagged(g.label(a), i));
            origin.push_back({a, i});
        }
    std::vector<StructureConstant> c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const int sel = selector(z, i, j, k) - selector(z, i, j, k + n);
                if (sel == 0) continue;
                for (const auto& kc : g.constants())
                    c.push_back({i * d + kc.a, j * d + kc.b, k * d + kc.c, kc.value * QSqrt2(sel)});
            }
    return LieAlgebra("(Z" + std::to_string(2 * n) + "x" + g.name() + ")_H", std::move(labels), c, std::move(origin));
}

GreaterInterval greater_interval_algebra(int n, const LieAlgebra& g) {
    if (n < 1) throw std::invalid_argument("greater_interval_algebra needs n >= 1");
    const Semigroup z = make_cyclic(2 * n);
    const int d = g.dim();
    std::vector<Label> labels;
    std::vector<ExpandedLabel> origin;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < d; ++a) {
            labels.push_back(tagged(g.label(a), i + n));
            origin.push_back({a, i + n});
        }
    std::vector<StructureConstant> c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // [T_(A,i+n), T_(B,j+n)] = K_{i+n,j+n}^gamma C T_(C,gamma), with T_(C,k) = -T_(C,k+n)
                const int sel = -(selector(z, i, j, k) - selector(z, i, j, k + n));
                if (sel == 0) continue;
                for (const auto& kc : g.constants())
                    c.push_back({i * d + kc.a, j * d + kc.b, k * d + kc.c, kc.value * QSqrt2(sel)});
            }
    GreaterInterval out{LieAlgebra("(Z" + std::to_string(2 * n) + "x" + g.name() + ")_H+", std::move(labels), c,
                                   std::move(origin)),
                        false};
    const LieAlgebra flipped = change_basis(out.algebra, scalar_matrix(out.algebra.dim(), QSqrt2(-1)));
    out.witness_ok = flipped.same_constants(h_reduce(n, g));
    return out;
}

std::map<int, int> h_pairing(int n) {
    std::map<int, int> p;
    for (int i = 0; i < n; ++i) {
        p[i] = i + n;
        p[i + n] = i;
    }
    return p;
}

LieAlgebra impose_sign_identification(const LieAlgebra& expanded, const Semigroup& s, const std::map<int, int>& pairing) {
    require_origin(expanded);
    const int order = s.order();
    std::vector<int> partner(static_cast<std::size_t>(order), -1);
    for (const auto& [x, y] : pairing) {
        if (x < 0 || x >= order || y < 0 || y >= order) throw std::invalid_argument("pairing tag out of range");
        if (x == y) throw std::invalid_argument("pairing has a fixed point at " + std::to_string(x));
        partner[static_cast<std::size_t>(x)] = y;
    }
    for (int x = 0; x < order; ++x) {
        const int y = partner[static_cast<std::size_t>(x)];
        if (y < 0) throw std::invalid_argument("pairing does not cover tag " + std::to_string(x));
        if (partner[static_cast<std::size_t>(y)] != x) throw std::invalid_argument("pairing is not an involution");
    }
    // phi(gamma) = (sign, representative)
    std::vector<int> rep(static_cast<std::size_t>(order)), sign(static_cast<std::size_t>(order));
    for (int x = 0; x < order; ++x) {
        const int y = partner[static_cast<std::size_t>(x)];
        rep[static_cast<std::size_t>(x)] = std::min(x, y);
        sign[static_cast<std::size_t>(x)] = x < y ? 1 : -1;
    }
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            const int direct = s.product(x, y);
            const int via = s.product(rep[static_cast<std::size_t>(x)], rep[static_cast<std::size_t>(y)]);
            const int sdirect = sign[static_cast<std::size_t>(direct)];
            const int svia = sign[static_cast<std::size_t>(x)] * sign[static_cast<std::size_t>(y)] * sign[static_cast<std::size_t>(via)];
            if (rep[static_cast<std::size_t>(direct)] != rep[static_cast<std::size_t>(via)] || sdirect != svia)
                throw std::invalid_argument("inconsistent sign identification: lambda_" + std::to_string(x) + " lambda_" +
                                            std::to_string(y) + " = lambda_" + std::to_string(direct) +
                                            " but the identified factors give " + (svia < 0 ? "-" : "+") + "lambda_" +
                                            std::to_string(rep[static_cast<std::size_t>(via)]));
        }
    std::vector<int> reps;
    for (int x = 0; x < order; ++x)
        if (rep[static_cast<std::size_t>(x)] == x) reps.push_back(x);
    std::vector<int> rank(static_cast<std::size_t>(order), -1);
    for (std::size_t i = 0; i < reps.size(); ++i) rank[static_cast<std::size_t>(reps[i])] = static_cast<int>(i);

    // representative generators of `expanded`, tag-major by representative rank then base
    int d = 0;
    for (const auto& o : expanded.origin()) d = std::max(d, o.base + 1);
    std::vector<int> new_index(static_cast<std::size_t>(expanded.dim()), -1);
    std::vector<std::pair<int, int>> order_key;
    for (int i = 0; i < expanded.dim(); ++i) {
        const auto& o = expanded.origin()[static_cast<std::size_t>(i)];
        if (rep[static_cast<std::size_t>(o.tag)] == o.tag) order_key.push_back({rank[static_cast<std::size_t>(o.tag)] * d + o.base, i});
    }
    std::sort(order_key.begin(), order_key.end());
    std::vector<Label> labels;
    std::vector<ExpandedLabel> origin;
    std::map<std::pair<int, int>, int> index_of;  // (base, rep tag) -> new index
    for (const auto& [key, i] : order_key) {
        new_index[static_cast<std::size_t>(i)] = static_cast<int>(labels.size());
        index_of[{expanded.origin()[static_cast<std::size_t>(i)].base, expanded.origin()[static_cast<std::size_t>(i)].tag}] = static_cast<int>(labels.size());
        labels.push_back(expanded.label(i));
        origin.push_back(expanded.origin()[static_cast<std::size_t>(i)]);
    }
    std::vector<StructureConstant> c;
    for (const auto& k : expanded.constants()) {
        const int a = new_index[static_cast<std::size_t>(k.a)], b = new_index[static_cast<std::size_t>(k.b)];
        if (a < 0 || b < 0) continue;
        const auto& oc = expanded.origin()[static_cast<std::size_t>(k.c)];
        const auto it = index_of.find({oc.base, rep[static_cast<std::size_t>(oc.tag)]});
        if (it == index_of.end()) throw std::invalid_argument("expanded algebra lacks a representative generator");
        c.push_back({a, b, it->second, k.value * QSqrt2(sign[static_cast<std::size_t>(oc.tag)])});
    }
    return LieAlgebra("(" + expanded.name() + ")_H", std::move(labels), c, std::move(origin));
}

}  // namespace liexp
