#include "liexp/target.hpp"

#include <doctest.h>

using namespace liexp;

namespace {

FormSymbol sym(Field f, int i, int j = 0, bool d = false) {
    return FormSymbol{f, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), d};
}

}  // namespace

TEST_CASE("parse errors carry line and column") {
    try {
        parse_target("@dim 3\nalpha0 | eps(a,b,c) R(a,b) e(c)\n1 | eps(a,b,c) Q(a,b) e(c)\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 16);
    }
    CHECK_THROWS_AS(parse_target("@dim 3\nalpha0 eps(a,b,c)\n"), ParseError);
    CHECK_THROWS_AS(parse_target("@dim 4\n1 | e(a)\n"), ParseError);
}

TEST_CASE("expand_term contracts eps indices") {
    const TargetExpression t = parse_target("@dim 3\n1/3 | eps(a,b,c) e(a) e(b) e(c)\n");
    REQUIRE(t.terms.size() == 1);
    // six permutations, each equal to e0 e1 e2 with the permutation sign squared
    const ScalarForm f = expand_target(t);
    REQUIRE(f.size() == 1);
    CHECK(f.coefficient({sym(Field::e, 0), sym(Field::e, 1), sym(Field::e, 2)}) == ScalarExpr(2));
}

TEST_CASE("free index pairs contract with eta") {
    const TargetExpression t = parse_target("@dim 3\n1 | eps(a,b,c) w(a,d) w(d,b) e(c)\n");
    const ScalarForm f = expand_target(t);
    // d = 0 carries eta = -1: eps(1,2,0) w(1,0) w(0,2) e(0) and eps(2,1,0) w(2,0) w(0,1) e(0)
    const Monomial m = {sym(Field::omega, 0, 1), sym(Field::omega, 0, 2), sym(Field::e, 0)};
    CHECK(f.coefficient(m) == ScalarExpr(2));
}

TEST_CASE("comparison finds a global scalar and lists mismatches") {
    const TargetExpression t = parse_target("@dim 3\n1 | eps(a,b,c) R(a,b) e(c)\n1/3 * ell^-2 | eps(a,b,c) e(a) e(b) e(c)\n");
    const ScalarForm target = expand_target(t);
    ComparisonOptions opt;
    opt.global_scalar = true;
    const ComparisonReport same = compare_to_target(ScalarExpr::ell(2, QSqrt2(5)) * target, t, opt);
    CHECK(same.match);
    REQUIRE(same.scalar);
    CHECK(*same.scalar == ScalarExpr::ell(-2, QSqrt2(ratio(1, 5))));

    const TargetExpression off = parse_target("@dim 3\n1 | eps(a,b,c) R(a,b) e(c)\n2/3 * ell^-2 | eps(a,b,c) e(a) e(b) e(c)\n");
    const ComparisonReport bad = compare_to_target(target, off, {});
    CHECK_FALSE(bad.match);
    REQUIRE(bad.terms.size() == 2);
    CHECK(bad.terms[0].agrees);
    CHECK_FALSE(bad.terms[1].agrees);
    CHECK(bad.render().find("MISMATCH") != std::string::npos);
}

TEST_CASE("comparison modulo exact forms") {
    const TargetExpression t = parse_target("@dim 3\n1 | eps(a,b,c) R(a,b) e(c)\n");
    const ScalarForm target = expand_target(t);
    const ScalarForm shifted = target + exterior_d(ScalarForm::monomial({sym(Field::omega, 0, 1), sym(Field::e, 2)}));
    CHECK_FALSE(compare_to_target(shifted, t, {}).match);
    ComparisonOptions opt;
    opt.modulo_exact = true;
    CHECK(compare_to_target(shifted, t, opt).match);
    // a non-exact extra term is still caught
    CHECK_FALSE(compare_to_target(shifted + ScalarForm::monomial({sym(Field::e, 0), sym(Field::e, 1), sym(Field::e, 2)}), t, opt).match);
}

TEST_CASE("sector restriction applies to both sides") {
    const TargetExpression t = parse_target("@dim 3\n1 | eps(a,b,c) R(a,b) e(c)\n1 | eps(a,b,c) R(a,b) h(c)\n");
    ComparisonOptions opt;
    opt.zero_fields = {Field::h};
    const TargetExpression only_e = parse_target("@dim 3\n1 | eps(a,b,c) R(a,b) e(c)\n");
    CHECK(compare_to_target(expand_target(only_e), t, opt).match);
}
