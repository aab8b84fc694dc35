#include "liexp/semigroup.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace liexp;

TEST_CASE("cyclic groups are addition mod n") {
    for (int n = 1; n <= 8; ++n) {
        const Semigroup z = make_cyclic(n);
        CHECK(z.check_axioms().ok);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) CHECK(z.product(a, b) == (a + b) % n);
    }
}

TEST_CASE("S_E semigroups saturate at the zero") {
    for (int n = 1; n <= 5; ++n) {
        const Semigroup s = make_se(n);
        REQUIRE(s.order() == n + 2);
        REQUIRE(s.zero() == n + 1);
        CHECK(s.check_axioms().ok);
        for (int a = 0; a < s.order(); ++a)
            for (int b = 0; b < s.order(); ++b) CHECK(s.product(a, b) == std::min(a + b, n + 1));
    }
}

TEST_CASE("axiom checker rejects bad tables") {
    // 0*1 = 1 but 1*0 = 0
    CHECK_FALSE(Semigroup("noncomm", {{0, 1}, {0, 1}}).check_axioms().ok);
    // commutative but (1*1)*2 = 2 != 1*(1*2) = 0
    const Semigroup nonassoc("nonassoc", {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}});
    CHECK_FALSE(nonassoc.check_axioms().ok);
    // declared zero that does not absorb
    CHECK_FALSE(Semigroup("badzero", {{0, 1}, {1, 0}}, 1).check_axioms().ok);
    CHECK_THROWS(Semigroup("open", {{0, 2}, {2, 0}}));
}

TEST_CASE("klein group and isomorphisms") {
    const Semigroup k = make_klein();
    const Semigroup z2z2 = direct_product(make_cyclic(2), make_cyclic(2));
    const auto iso = find_isomorphism(k, z2z2);
    REQUIRE(iso);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK((*iso)[static_cast<std::size_t>(k.product(a, b))] == z2z2.product((*iso)[a], (*iso)[b]));
    CHECK_FALSE(find_isomorphism(k, make_cyclic(4)));
    CHECK(find_isomorphism(make_cyclic(6), direct_product(make_cyclic(2), make_cyclic(3))));
    CHECK_FALSE(find_isomorphism(make_cyclic(3), make_se(1)));
}

TEST_CASE("selector is the indicator of the chain product") {
    const Semigroup z = make_cyclic(6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c) {
                CHECK(selector(z, a, b, c) == ((a + b) % 6 == c ? 1 : 0));
                CHECK(selector(z, SelectorQuery{{a, b, c}, 0}) == ((a + b + c) % 6 == 0 ? 1 : 0));
            }
}

TEST_CASE("even cyclic selector identities") {
    for (int n = 1; n <= 8; ++n) CHECK(check_even_cyclic_identities(n).ok);
    // independent recount of the h-reduced selector K_ij^k - K_ij^(k+n) on 0..n-1:
    // it is +1 when i + j = k and -1 when i + j = k + n
    for (int n = 1; n <= 6; ++n) {
        const Semigroup z = make_cyclic(2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const int h = selector(z, i, j, k) - selector(z, i, j, k + n);
                    CHECK(h == (i + j == k ? 1 : i + j == k + n ? -1 : 0));
                }
    }
}
