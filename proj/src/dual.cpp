#include "liexp/dual.hpp"

#include "liexp/expansion.hpp"
#include "liexp/forms.hpp"

#include <stdexcept>

namespace liexp {

std::string DualReport::summary() const {
    return std::string("dual constants ") + (doubled ? "equal" : "differ from") +
           " twice the H-reduced constants; rescaling witness T' = 2T " + (witness_ok ? "passes" : "fails");
}

DualReport dual_mc_check(int n, const LieAlgebra& g) {
    if (n < 1) throw std::invalid_argument("dual_mc_check needs n >= 1");
    const Semigroup z = make_cyclic(2 * n);
    const int d = g.dim();
    const int reduced = n * d;
    // w^(A,gamma) in terms of the surviving forms w^(A,i)
    auto mc = [&](int a, int gamma) {
        const int i = gamma % n;
        const ScalarExpr sign(gamma < n ? 1 : -1);
        return ScalarForm::symbol({Field::mc, static_cast<std::uint16_t>(i * d + a), 0, false}, sign);
    };
    std::vector<ScalarForm> omega(static_cast<std::size_t>(reduced));  // the 1/2 K C w w part of each equation
    const ScalarExpr half(ratio(1, 2));
    for (int alpha = 0; alpha < 2 * n; ++alpha)
        for (int beta = 0; beta < 2 * n; ++beta) {
            const int gamma = z.product(alpha, beta);
            if (gamma >= n) continue;  // only the equations for k = 0..n-1
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const auto& terms = g.bracket_of(a, b);
                    if (terms.empty()) continue;
                    const ScalarForm ww = wedge(mc(a, alpha), mc(b, beta));
                    for (const auto& t : terms)
                        omega[static_cast<std::size_t>(gamma * d + t.target)] += (half * ScalarExpr(t.value)) * ww;
                }
        }
    // 1/2 D_xy^z w^x w^y = sum_{x<y} D_xy^z w^x w^y
    std::vector<StructureConstant> constants;
    for (int zi = 0; zi < reduced; ++zi)
        for (const auto& [m, c] : omega[static_cast<std::size_t>(zi)].terms()) {
            if (m.size() != 2) throw std::logic_error("Maurer-Cartan system is not quadratic");
            const auto value = c.as_constant();
            if (!value) throw std::logic_error("non-numeric Maurer-Cartan coefficient");
            constants.push_back({m[0].i, m[1].i, zi, *value});
        }
    const LieAlgebra reference = h_reduce(n, g);
    DualReport rep;
    rep.dual = LieAlgebra("dual(" + reference.name() + ")", reference.labels(), constants, reference.origin());
    std::vector<StructureConstant> doubled;
    for (const auto& k : reference.constants()) doubled.push_back({k.a, k.b, k.c, k.value * QSqrt2(2)});
    rep.doubled = rep.dual.same_constants(LieAlgebra("2C", reference.labels(), doubled));
    rep.witness_ok = change_basis(reference, scalar_matrix(reference.dim(), QSqrt2(2))).same_constants(rep.dual);
    return rep;
}

}  // namespace liexp
