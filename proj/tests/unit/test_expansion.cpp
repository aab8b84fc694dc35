#include "liexp/expansion.hpp"

#include <doctest.h>

using namespace liexp;

namespace {

std::vector<LieAlgebra> fixtures() {
    return {make_named("so3"), make_named("ads3"), make_named("ads5"), make_random_algebra(6, true, 11),
            make_random_algebra(5, false, 4)};
}

}  // namespace

TEST_CASE("s_expand dimension and axioms") {
    const LieAlgebra g = make_named("so3");
    for (const Semigroup& s : {make_cyclic(3), make_se(2), make_klein()}) {
        const LieAlgebra e = s_expand(s, g);
        CHECK(e.dim() == s.order() * g.dim());
        CHECK(check_axioms(e).ok);
        // constants are K * C, checked entrywise
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int x = 0; x < s.order(); ++x)
                        for (int y = 0; y < s.order(); ++y)
                            CHECK(e.constant(x * 3 + a, y * 3 + b, s.product(x, y) * 3 + c) == g.constant(a, b, c));
    }
}

TEST_CASE("Z1 expansion and h_reduce(1) are the identity") {
    for (const LieAlgebra& g : fixtures()) {
        CHECK(s_expand(make_cyclic(1), g).same_constants(g));
        CHECK(h_reduce(1, g).same_constants(g));
    }
}

TEST_CASE("h_reduce dimension law and axioms") {
    for (const LieAlgebra& g : fixtures())
        for (int n = 1; n <= 4; ++n) {
            const LieAlgebra h = h_reduce(n, g);
            CHECK(h.dim() == n * g.dim());
            CHECK(check_axioms(h).ok);
        }
}

TEST_CASE("h_reduce(2, so3) is so(3,1)") {
    CHECK(h_reduce(2, make_named("so3")).same_constants(make_named("so31")));
    CHECK(s_expand(make_cyclic(2), make_named("so3")).same_constants(make_named("so4")));
}

TEST_CASE("sign identification on Z_2n reproduces h_reduce") {
    for (const LieAlgebra& g : {make_named("so3"), make_named("ads3")})
        for (int n = 1; n <= 3; ++n) {
            const Semigroup z = make_cyclic(2 * n);
            const LieAlgebra q = impose_sign_identification(s_expand(z, g), z, h_pairing(n));
            CHECK(q.same_constants(h_reduce(n, g)));
        }
}

TEST_CASE("greater interval representatives") {
    for (int n = 1; n <= 3; ++n) CHECK(greater_interval_algebra(n, make_named("ads3")).witness_ok);
}

TEST_CASE("bad pairings are rejected") {
    const Semigroup z = make_cyclic(4);
    const LieAlgebra e = s_expand(z, make_named("so3"));
    CHECK_THROWS_AS(impose_sign_identification(e, z, {{0, 1}, {1, 0}, {2, 2}, {3, 3}}), std::invalid_argument);
    // 0 <-> 1, 2 <-> 3 is an involution but lambda_1 * lambda_1 = lambda_2 ~ -lambda_3 is not consistent
    CHECK_THROWS_AS(impose_sign_identification(e, z, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}), std::invalid_argument);
}

TEST_CASE("resonant subalgebra and zero reduction for B5") {
    const LieAlgebra g = make_named("ads5");
    const Semigroup s = make_se(3);
    ResonanceSpec spec;
    for (int a = 0; a < g.dim(); ++a) spec.partition.push_back(g.label(a).base == "J" ? 0 : 1);
    spec.subsets = {{0, 2, 4}, {1, 3, 4}};
    CHECK_FALSE(find_resonance_violation(g, s, spec));
    const LieAlgebra r = resonant_subalgebra(s_expand(s, g), g, s, spec);
    CHECK(r.dim() == 10 * 3 + 5 * 3);
    CHECK(check_axioms(r).ok);
    const LieAlgebra b5 = zero_reduce(r, s);
    CHECK(b5.dim() == 30);
    CHECK(check_axioms(b5).ok);

    ResonanceSpec bad = spec;
    bad.subsets = {{0, 1, 4}, {2, 3, 4}};
    const auto v = find_resonance_violation(g, s, bad);
    REQUIRE(v);
    CHECK_THROWS_AS(resonant_subalgebra(s_expand(s, g), g, s, bad), std::invalid_argument);
}
