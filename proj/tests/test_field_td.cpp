#include "doctest.h"
#include "ssdd/field.hpp"
#include "ssdd/td.hpp"
#include "ssdd/verify.hpp"

using namespace ssdd;

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        FiniteField f = field_build(q);
        // commutativity + identities
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
            }
        }
        // every nonzero element invertible
        for (int a = 1; a < q; ++a) {
            bool inv = false;
            for (int b = 1; b < q; ++b) inv = inv || f.mul(a, b) == 1;
            CHECK(inv);
        }
        // distributivity
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c)
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("unsupported field orders") {
    CHECK_FALSE(field_order_supported(6));
    CHECK_FALSE(field_order_supported(1));
    CHECK(field_order_supported(32));
    CHECK_THROWS_AS(field_build(6), UnsupportedOrder);
    CHECK_THROWS_AS(field_build(33), UnsupportedOrder);
}

TEST_CASE("td_build: shape and validity") {
    GroupedDesign td = td_build({4, 3});
    CHECK(td.design.blocks.size() == 9);
    CHECK(td.groups.size() == 4);
    CHECK_FALSE(td.directed);
    CHECK(td.design.params.lambda == 1);
    CHECK(check_td(td).pass);
    CHECK(full_report_td(td).pass);

    GroupedDesign big = td_build({8, 7});
    CHECK(big.design.blocks.size() == 49);
    CHECK(check_td(big).pass);
}

TEST_CASE("td_build: k = n+1 uses the infinity group") {
    GroupedDesign td = td_build({5, 4});
    CHECK(td.groups.size() == 5);
    CHECK(td.design.blocks.size() == 16);
    CHECK(check_td(td).pass);
    // infinity group occupies the last n labels
    CHECK(td.groups[4] == std::vector<int>{16, 17, 18, 19});
}

TEST_CASE("td_build: degenerate TD(k,1)") {
    GroupedDesign td = td_build({4, 1});
    CHECK(td.design.blocks.size() == 1);
    CHECK(td.design.blocks[0] == Block{0, 1, 2, 3});
    CHECK(check_td(td).pass);
}

TEST_CASE("td_build: error cases") {
    CHECK_THROWS_AS(td_build({9, 7}), KTooLarge);       // k > n+1
    CHECK_THROWS_AS(td_build({1, 7}), KTooLarge);       // k < 2
    CHECK_THROWS_AS(td_build({4, 6}), UnsupportedOrder);  // 6 not a prime power
}
