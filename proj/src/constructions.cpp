#include "liexp/constructions.hpp"

#include "liexp/target.hpp"

#include <stdexcept>

namespace liexp {

LieAlgebra rename_tagged(const LieAlgebra& l, const std::vector<TagRename>& rules) {
    std::vector<Label> labels = l.labels();
    for (auto& lab : labels) {
        if (lab.tags.empty()) continue;
        for (const auto& r : rules)
            if (lab.base == r.base && lab.tags.back() == r.tag) {
                lab.base = r.renamed;
                lab.tags.pop_back();
                break;
            }
    }
    return l.relabeled(std::move(labels));
}

Matrix translation_rotation(const LieAlgebra& l) {
    Matrix m = identity_matrix(l.dim());
    const QSqrt2 s = QSqrt2(Rational(0), ratio(1, 2));  // 1/sqrt2
    for (int i = 0; i < l.dim(); ++i) {
        const Label& lab = l.label(i);
        if (lab.base != "P" || lab.indices.size() != 1) continue;
        const int z = l.find("Z", lab.indices);
        if (z < 0) throw std::invalid_argument("no Z partner for " + lab.str());
        auto& rp = m[static_cast<std::size_t>(i)];
        auto& rz = m[static_cast<std::size_t>(z)];
        rp[static_cast<std::size_t>(i)] = s;
        rp[static_cast<std::size_t>(z)] = s;
        rz[static_cast<std::size_t>(i)] = s;
        rz[static_cast<std::size_t>(z)] = -s;
    }
    return m;
}

CAlgebra make_c_algebra(int d) {
    const LieAlgebra ads = make_ads(d);
    const InvariantTensor eps = epsilon_tensor(ads);
    CAlgebra c{d,
               rename_tagged(h_reduce(2, ads), {{"J", 0, "J"}, {"J", 1, "Z"}, {"P", 0, "P"}, {"P", 1, "Z"}})
                   .renamed("C" + std::to_string(d)),
               lift_h(2, eps, alpha_symbols(4)),
               {},
               {},
               InvariantTensor(eps.rank(), 1)};
    c.rotation = translation_rotation(c.reduced);
    c.rotated = change_basis(c.reduced, c.rotation).renamed("C" + std::to_string(d));
    c.rotated_tensor = rotate_tensor(c.lifted, c.rotation).scaled(ScalarExpr(QSqrt2::sqrt2()));
    return c;
}

LovelockDictionary lovelock_dictionary(const ScalarForm& q_a2a1) {
    const TargetExpression families = parse_target(
        "@dim 5\n"
        "1 | eps(a,b,c,d,e) R(a,b) R(c,d) e(e)\n"
        "1 | eps(a,b,c,d,e) R(a,b) e(c) e(d) e(e)\n"
        "1 | eps(a,b,c,d,e) e(a) e(b) e(c) e(d) e(e)\n");
    const ScalarExpr scale = ScalarExpr::ell(1, ratio(2, 3));
    std::vector<ScalarExpr> beta;
    for (const auto& term : families.terms) {
        const ScalarForm unit = expand_term(term, families.dimension);
        const auto& [m, c] = *unit.terms().begin();
        beta.push_back(scale * q_a2a1.coefficient(m) * c.inverse());
    }
    return {beta[0], beta[1], beta[2]};
}

}  // namespace liexp
