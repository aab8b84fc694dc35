#include "liexp/scalar_expr.hpp"

#include <doctest.h>

#include <random>

using namespace liexp;

TEST_CASE("ratio canonicalizes") {
    CHECK(ratio(2, 4) == Rational(1, 2));
    CHECK(ratio(-6, -3) == Rational(2));
    CHECK(ratio(3, -9).get_den() == 3);
    CHECK(to_string(ratio(6, 4)) == "3/2");
    CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("QSqrt2 field arithmetic") {
    const QSqrt2 s = QSqrt2::sqrt2();
    CHECK(s * s == QSqrt2(2));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const QSqrt2 x(Rational(d(rng)), Rational(d(rng)));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == QSqrt2(1));
        // norm a^2 - 2b^2 computed by hand
        const Rational norm = x.rational_part() * x.rational_part() - 2 * x.sqrt2_part() * x.sqrt2_part();
        CHECK(x * QSqrt2(x.rational_part(), -x.sqrt2_part()) == QSqrt2(norm));
        CHECK(QSqrt2::parse(x.str()) == x);
    }
}

TEST_CASE("ScalarExpr arithmetic and parsing") {
    const ScalarExpr a0 = ScalarExpr::alpha(0), a1 = ScalarExpr::alpha(1);
    const ScalarExpr x = ScalarExpr::parse("3/4 * ell^-1 * (alpha0 + alpha1)");
    CHECK(x == ScalarExpr::ell(-1, QSqrt2(ratio(3, 4))) * (a0 + a1));
    CHECK(x.alpha_component(1) == ScalarExpr::ell(-1, QSqrt2(ratio(3, 4))));
    CHECK(x.alpha_component(2).is_zero());
    CHECK(ScalarExpr::parse(x.str()) == x);
    CHECK(ScalarExpr::parse("-alpha0") == -a0);
    CHECK((x - x).is_zero());

    const ScalarExpr u = ScalarExpr::ell(3, QSqrt2(ratio(-4, 3)));
    CHECK(u.is_unit_monomial());
    CHECK(u * u.inverse() == ScalarExpr(1));
    CHECK_THROWS_AS((a0 + 1).inverse(), std::domain_error);
    CHECK_THROWS(ScalarExpr::parse("alpha0 +"));

    const std::vector<ScalarExpr> sub = {ScalarExpr(2), ScalarExpr::ell(1)};
    CHECK(x.substitute_alphas(sub) == ScalarExpr::ell(-1, QSqrt2(ratio(3, 2))) + ScalarExpr(QSqrt2(ratio(3, 4))));
}
