#include "liexp/transgression.hpp"

#include <stdexcept>

namespace liexp {

std::vector<ConnectionPiece> gravity_connection(const std::set<Field>& fields) {
    std::vector<ConnectionPiece> out;
    // the factor 1/2 and the sum over both orders of (a, b) combine to a < b with weight 1
    if (fields.count(Field::omega)) out.push_back({Field::omega, "J", 2, ScalarExpr(1)});
    if (fields.count(Field::e)) out.push_back({Field::e, "P", 1, ScalarExpr::ell(-1)});
    if (fields.count(Field::k)) out.push_back({Field::k, "Z", 2, ScalarExpr(1)});
    if (fields.count(Field::h)) out.push_back({Field::h, "Z", 1, ScalarExpr::ell(-1)});
    return out;
}

LieValuedForm build_connection(const LieAlgebra& l, int spacetime_dim, const std::vector<ConnectionPiece>& pieces) {
    LieValuedForm a(l.dim(), 1);
    for (const auto& p : pieces) {
        if (p.index_count == 1) {
            for (int x = 0; x < spacetime_dim; ++x) {
                const int g = l.find(p.generator, {x});
                if (g < 0) throw std::invalid_argument("algebra has no generator " + p.generator + std::to_string(x));
                a.add(g, ScalarForm::symbol({p.field, static_cast<std::uint16_t>(x), 0, false}, p.scale));
            }
        } else {
            for (int x = 0; x < spacetime_dim; ++x)
                for (int y = x + 1; y < spacetime_dim; ++y) {
                    const int g = l.find(p.generator, {x, y});
                    if (g < 0)
                        throw std::invalid_argument("algebra has no generator " + p.generator + std::to_string(x) +
                                                    std::to_string(y));
                    a.add(g, ScalarForm::symbol({p.field, static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y), false},
                                                p.scale));
                }
        }
    }
    return a;
}

ScalarForm transgression(const LieValuedForm& a, const LieValuedForm& abar, const InvariantTensor& t, const LieAlgebra& l) {
    if (a.degree() != 1 || abar.degree() != 1) throw std::invalid_argument("transgression needs connection 1-forms");
    if (a.dim() != l.dim() || abar.dim() != l.dim()) throw std::invalid_argument("connections are not valued in the algebra");
    const int k = t.rank() - 1;
    if (k < 1) throw std::invalid_argument("transgression needs a tensor of rank >= 2");
    const LieValuedForm theta = a - abar;
    const ScalarExpr half(ratio(1, 2));
    // F_t = F0 + t F1 + t^2 F2
    const LieValuedForm f[3] = {
        curvature(abar, l),
        exterior_d(theta) + half * (lie_bracket_form(abar, theta, l) + lie_bracket_form(theta, abar, l)),
        half * lie_bracket_form(theta, theta, l),
    };
    ScalarForm out;
    std::vector<int> m(static_cast<std::size_t>(k), 0);
    std::vector<LieValuedForm> slots(static_cast<std::size_t>(k + 1));
    slots[0] = theta;
    for (;;) {
        int power = 0;
        bool zero = false;
        for (int s = 0; s < k; ++s) {
            power += m[static_cast<std::size_t>(s)];
            slots[static_cast<std::size_t>(s + 1)] = f[m[static_cast<std::size_t>(s)]];
            zero = zero || slots[static_cast<std::size_t>(s + 1)].is_zero();
        }
        if (!zero) out += ScalarExpr(ratio(k + 1, power + 1)) * contract(t, slots);
        int s = k - 1;
        while (s >= 0 && m[static_cast<std::size_t>(s)] == 2) m[static_cast<std::size_t>(s--)] = 0;
        if (s < 0) break;
        ++m[static_cast<std::size_t>(s)];
    }
    return out;
}

ScalarForm chern_simons(const LieValuedForm& a, const InvariantTensor& t, const LieAlgebra& l, const ScalarExpr& kappa) {
    return kappa * transgression(a, LieValuedForm(l.dim(), 1), t, l);
}

ScalarForm subspace_separation(const std::vector<LieValuedForm>& chain, const InvariantTensor& t, const LieAlgebra& l) {
    if (chain.size() < 2) throw std::invalid_argument("subspace separation needs at least two connections");
    ScalarForm out;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) out += transgression(chain[i], chain[i + 1], t, l);
    return out;
}

ExactnessResult exactness(const ScalarForm& f) {
    if (!f.coefficient({}).is_zero()) return {};
    if (!exterior_d(f).is_zero()) return {};
    ScalarForm primitive;
    int max_weight = 0;
    for (const auto& [m, c] : f.terms()) max_weight = std::max(max_weight, static_cast<int>(m.size()));
    for (int w = 1; w <= max_weight; ++w) {
        const ScalarForm part = f.weight_part(w);
        if (!part.is_zero()) primitive += ScalarExpr(ratio(1, w)) * homotopy(part);
    }
    if (!(exterior_d(primitive) == f)) return {};
    return {true, primitive};
}

}  // namespace liexp
