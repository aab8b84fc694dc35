#include "liexp/lie_algebra.hpp"

#include <doctest.h>

using namespace liexp;

TEST_CASE("named fixtures satisfy the axioms") {
    for (const char* name : {"so3", "so31", "so4", "ads3", "ads5"}) {
        CAPTURE(name);
        CHECK(check_axioms(make_named(name)).ok);
    }
    CHECK(make_named("ads5").dim() == 15);
    CHECK(make_named("ads3").dim() == 6);
}

TEST_CASE("axiom checker finds Jacobi and antisymmetry defects") {
    // [x, y] = x, [y, z] = y, [x, z] = y breaks Jacobi
    const std::vector<Label> labels = {{"x", {}, {}}, {"y", {}, {}}, {"z", {}, {}}};
    const LieAlgebra bad("bad", labels, {{0, 1, 0, QSqrt2(1)}, {1, 2, 1, QSqrt2(1)}, {0, 2, 1, QSqrt2(1)}});
    const AxiomReport r = check_axioms(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.violation);
    const LieAlgebra diag("diag", labels, {{1, 1, 0, QSqrt2(1)}});
    CHECK_FALSE(check_axioms(diag).ok);
}

TEST_CASE("so3 Killing form is -2 delta") {
    const Matrix k = killing_form(make_named("so3"));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k[i][j] == QSqrt2(i == j ? -2 : 0));
}

TEST_CASE("Killing profiles") {
    const KillingProfile so4 = killing_profile(make_named("so4"));
    const KillingProfile so31 = killing_profile(make_named("so31"));
    CHECK(so4.signature.negative == 6);
    CHECK(so31.signature.positive == 3);
    CHECK(so31.signature.negative == 3);
    CHECK(so4.derived_dim == 6);
    CHECK(so31.center_dim == 0);
    const KillingProfile heis = killing_profile(make_random_algebra(6, true, 3));
    CHECK(heis.signature.zero == 6);
    CHECK(heis.center_dim > 0);
}

TEST_CASE("random algebras are Lie algebras of the requested dimension") {
    for (std::uint32_t seed = 1; seed <= 6; ++seed) {
        for (bool nilpotent : {true, false}) {
            const LieAlgebra l = make_random_algebra(6, nilpotent, seed);
            CHECK(l.dim() == 6);
            CHECK(check_axioms(l).ok);
        }
    }
}

TEST_CASE("basis change preserves the axioms and the Killing profile") {
    const LieAlgebra l = make_named("ads3");
    Matrix m = identity_matrix(l.dim());
    m[0][1] = QSqrt2(2);
    m[3][5] = QSqrt2::sqrt2();
    m[5][0] = QSqrt2(ratio(-1, 3));
    const LieAlgebra c = change_basis(l, m);
    CHECK(check_axioms(c).ok);
    CHECK(killing_profile(c) == killing_profile(l));
    // back again
    const LieAlgebra back = change_basis(c, *inverse(m), l.labels());
    CHECK(back.same_constants(l));
    Matrix singular = identity_matrix(l.dim());
    singular[1] = singular[0];
    CHECK_THROWS_AS(change_basis(l, singular), std::invalid_argument);
}

TEST_CASE("bracket helper and lookup") {
    const LieAlgebra l = make_named("so3");
    Vector x(3), y(3);
    x[0] = QSqrt2(1);
    y[1] = QSqrt2(1);
    const Vector z = bracket(l, x, y);
    CHECK(z[2] == QSqrt2(1));
    CHECK(l.find("J", {2}) == 1);
    CHECK(l.find("K", {2}) == -1);
    CHECK(l.label(0).str() == "J1");
}
