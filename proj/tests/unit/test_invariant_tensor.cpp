#include "liexp/constructions.hpp"
#include "liexp/expansion.hpp"
#include "liexp/invariant_tensor.hpp"

#include <doctest.h>

using namespace liexp;

namespace {

// <J_i J_j> = delta_ij on so3
InvariantTensor so3_delta() {
    InvariantTensor t(2, 3);
    for (int i = 0; i < 3; ++i) t.add({i, i}, ScalarExpr(1));
    return t;
}

}  // namespace

TEST_CASE("tensor storage is symmetric") {
    InvariantTensor t(3, 4);
    t.add({2, 0, 1}, ScalarExpr(3));
    CHECK(t.at({0, 1, 2}) == ScalarExpr(3));
    CHECK(t.at({1, 2, 0}) == ScalarExpr(3));
    t.add({1, 0, 2}, ScalarExpr(-3));
    CHECK(t.is_zero());
}

TEST_CASE("permutation signs") {
    const std::vector<int> id = {0, 1, 2, 3}, swap = {1, 0, 2, 3}, cyc = {1, 2, 0}, rep = {0, 0, 1};
    CHECK(permutation_sign(id) == 1);
    CHECK(permutation_sign(swap) == -1);
    CHECK(permutation_sign(cyc) == 1);
    CHECK(permutation_sign(rep) == 0);
}

TEST_CASE("epsilon tensors of AdS are invariant") {
    for (int d : {3, 5}) {
        const LieAlgebra l = make_ads(d);
        const InvariantTensor eps = epsilon_tensor(l);
        CHECK(eps.rank() == (d + 1) / 2);
        CHECK(verify_invariance(l, eps).ok);
    }
}

TEST_CASE("verify_invariance rejects a non-invariant form") {
    InvariantTensor t(2, 3);
    t.add({0, 0}, ScalarExpr(1));
    CHECK_FALSE(verify_invariance(make_named("so3"), t).ok);
}

TEST_CASE("lift_h with n = 1 is alpha0 times the tensor") {
    const LieAlgebra l = make_ads(3);
    const InvariantTensor eps = epsilon_tensor(l);
    const auto a = alpha_symbols(2);
    CHECK(lift_h(1, eps, a) == eps.scaled(a[0]));
}

TEST_CASE("lift_h(2) on so3 against the so(3,1) invariant forms") {
    // Invariant symmetric bilinear forms of so(3,1) are spanned by J.J - K.K and J.K.
    // With J_i -> (J_i, 0), K_i -> (J_i, 1) the lifted entries are <JJ> = alpha0,
    // <JK> = alpha1, <KK> = alpha2, so invariance needs alpha2 = -alpha0.
    const LieAlgebra so31 = h_reduce(2, make_named("so3"));
    const auto a = alpha_symbols(4);
    const InvariantTensor free = lift_h(2, so3_delta(), a);
    CHECK(free.at({0, 0}) == a[0]);
    CHECK(free.at({0, 3}) == a[1]);
    CHECK(free.at({3, 3}) == a[2]);
    CHECK_FALSE(verify_invariance(so31, free).ok);

    const std::vector<ScalarExpr> constrained = {a[0], a[1], -a[0], -a[1]};
    const InvariantTensor inv = lift_h(2, so3_delta(), constrained);
    CHECK(verify_invariance(so31, inv).ok);
    CHECK(inv.at({0, 0}) == -inv.at({3, 3}));
    CHECK(inv.at({0, 1}).is_zero());
}

TEST_CASE("rotation commutes with invariance") {
    const LieAlgebra l = make_ads(3);
    const InvariantTensor eps = epsilon_tensor(l);
    Matrix m = identity_matrix(l.dim());
    m[0][4] = QSqrt2(ratio(1, 2));
    m[5][1] = QSqrt2::sqrt2();
    const LieAlgebra rotated = change_basis(l, m);
    const InvariantTensor rt = rotate_tensor(eps, m);
    CHECK(verify_invariance(rotated, rt).ok);
    CHECK(rotate_tensor(rt, *inverse(m)) == eps);
}

TEST_CASE("lift_0s on the B5 layout is invariant") {
    const LieAlgebra g = make_ads(5);
    const Semigroup s = make_se(3);
    ResonanceSpec spec;
    for (int a = 0; a < g.dim(); ++a) spec.partition.push_back(g.label(a).base == "J" ? 0 : 1);
    spec.subsets = {{0, 2, 4}, {1, 3, 4}};
    const LieAlgebra b5 = zero_reduce(resonant_subalgebra(s_expand(s, g), g, s, spec), s);
    const InvariantTensor t = lift_0s(s, epsilon_tensor(g), b5, alpha_symbols(5));
    CHECK(verify_invariance(b5, t).ok);
    CHECK(t.rank() == 3);
    CHECK(t.dim() == 30);
}

TEST_CASE("C3 tables") {
    const CAlgebra c = make_c_algebra(3);
    const auto rows = tensor_table(c.reduced, c.lifted);
    REQUIRE_FALSE(rows.empty());
    for (const auto& r : rows) CHECK(r.eps_coefficient);
    CHECK(rows.front().str() == "<J_2, P_1> = (alpha0) eps");
}
