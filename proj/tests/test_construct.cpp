#include <map>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ssdd/construct.hpp"
#include "ssdd/model.hpp"
#include "ssdd/td.hpp"
#include "ssdd/trades.hpp"
#include "ssdd/verify.hpp"

using namespace ssdd;

TEST_CASE("inflate: 4^4 DGDD x TD(4,3) gives a verified 12^4 DGDD") {
    GroupedDesign base = sst::dev_g("dgdd-4pow4");
    GroupedDesign td = td_build({4, 3});
    GroupedDesign out = inflate_by_td(base.design, &base.groups, td);
    CHECK(out.design.blocks.size() == 576);  // 64 * 9
    CHECK(out.design.params.v == 48);
    CHECK(out.groups.size() == 4);
    for (const auto& cell : out.groups) CHECK(cell.size() == 12);
    CHECK(full_report_dgdd(out).pass);
}

TEST_CASE("inflate by TD(k,1) is the identity") {
    GroupedDesign base = sst::dev_g("dgdd-4pow4");
    GroupedDesign out = inflate_by_td(base.design, &base.groups, td_build({4, 1}));
    CHECK(out.design.blocks == base.design.blocks);
    CHECK(out.groups == base.groups);
}

TEST_CASE("inflate: counts hold even for a defective master (3^7 x TD(4,5))") {
    GroupedDesign base = sst::dev_g("dgdd-3pow7");
    GroupedDesign out = inflate_by_td(base.design, &base.groups, td_build({4, 5}));
    CHECK(out.design.blocks.size() == 3150);  // 126 * 25
    CHECK(out.groups.size() == 7);
    for (const auto& cell : out.groups) CHECK(cell.size() == 15);
}

TEST_CASE("inflate: a plain DD inflates with point fibers as groups") {
    DirectedDesign dd = sst::dev_dd("dd-13");
    GroupedDesign out = inflate_by_td(dd, nullptr, td_build({4, 3}));
    CHECK(out.design.blocks.size() == 468);
    CHECK(out.groups.size() == 13);
    CHECK(full_report_dgdd(out).pass);  // a verified (4,2)-DGDD of type 3^13
}

TEST_CASE("inflate error taxonomy") {
    DirectedDesign dd = sst::dev_dd("dd-13");
    CHECK_THROWS_AS(inflate_by_td(dd, nullptr, td_build({5, 4})), ArityMismatch);

    DirectedDesign mixed = dd;
    mixed.blocks.push_back({0, 1, 2, 3, 4});
    CHECK_THROWS_AS(inflate_by_td(mixed, nullptr, td_build({4, 3})), ArityMismatch);

    GroupedDesign broken = td_build({4, 3});
    broken.design.blocks[0][0] = broken.design.blocks[1][0];  // duplicate cross pair
    CHECK_THROWS_AS(inflate_by_td(dd, nullptr, broken), TdNotVerified);
}

TEST_CASE("weight: 2^7 master, uniform weight 5, ingredient 5^4") {
    GroupedDesign master = sst::dev_g("gdd-2pow7");
    GroupedDesign ing = sst::dev_g("dgdd-5pow4");
    std::map<int, const GroupedDesign*> ingredients = {{4, &ing}};
    GroupedDesign out = weight_and_replace(master, 5, ingredients);
    CHECK(out.design.blocks.size() == 1400);  // 14 * 100
    CHECK(out.design.params.v == 70);
    CHECK(out.design.params.lambda == 2);
    CHECK(out.groups.size() == 7);
    for (const auto& cell : out.groups) CHECK(cell.size() == 10);
    CHECK(full_report_dgdd(out).pass);  // type 10^7, Lemma 14's object
}

TEST_CASE("weight error taxonomy") {
    GroupedDesign master = sst::dev_g("gdd-2pow7");
    GroupedDesign ing = sst::dev_g("dgdd-5pow4");

    std::map<int, const GroupedDesign*> none;
    CHECK_THROWS_AS(weight_and_replace(master, 5, none), MissingIngredient);

    std::map<int, const GroupedDesign*> ings = {{4, &ing}};
    GroupedDesign directed_master = sst::dev_g("dgdd-4pow4");
    CHECK_THROWS_AS(weight_and_replace(directed_master, 5, ings), AlignmentError);

    GroupedDesign lam2 = master;
    lam2.design.params.lambda = 2;
    CHECK_THROWS_AS(weight_and_replace(lam2, 5, ings), AlignmentError);

    // ingredient group size != w
    CHECK_THROWS_AS(weight_and_replace(master, 6, ings), AlignmentError);
}

TEST_CASE("fill: 12^4 inflated design + dd-13 copies, eta=1 -> (49,4,2)DD") {
    GroupedDesign base = sst::dev_g("dgdd-4pow4");
    GroupedDesign big = inflate_by_td(base.design, &base.groups, td_build({4, 3}));
    DirectedDesign f13 = sst::dev_dd("dd-13");
    DirectedDesign out = fill_groups(big, {1}, {{12, &f13}});
    CHECK(out.params.v == 49);
    CHECK(out.blocks.size() == 784);  // 576 + 4*52
    VerificationReport rep = full_report_dd(out);
    CHECK(rep.pass);
    CHECK(rep.expected_blocks == 784);
}

TEST_CASE("fill: eta=0 count bookkeeping on the defective 22^4 + dd-22") {
    GroupedDesign g = sst::dev_g("dgdd-22pow4");
    DirectedDesign f22 = sst::dev_dd("dd-22");
    DirectedDesign out = fill_groups(g, {0}, {{22, &f22}});
    CHECK(out.params.v == 88);
    CHECK(out.blocks.size() == 2552);  // 1936 + 4*154; ingredients defective, count still exact
    CHECK_FALSE(full_report_dd(out).pass);
}

TEST_CASE("fill error taxonomy") {
    GroupedDesign g = sst::dev_g("dgdd-3pow6");
    DirectedDesign f13 = sst::dev_dd("dd-13");
    std::map<int, const DirectedDesign*> none;
    CHECK_THROWS_AS(fill_groups(g, {1}, none), MissingFiller);  // no (4,4,2)DD for size 3
    CHECK_THROWS_AS(fill_groups(g, {1}, {{3, &f13}}), SizeMismatch);  // v=13 != 3+1
    CHECK_THROWS_AS(fill_groups(g, {2}, none), SizeMismatch);         // eta outside {0,1}
    GroupedDesign und = td_build({4, 3});
    CHECK_THROWS_AS(fill_groups(und, {1}, none), SizeMismatch);  // undirected master
}

TEST_CASE("delete_points: TD(5,4) minus one point of the last group") {
    GroupedDesign td = td_build({5, 4});
    GroupedDesign out = delete_points(td, {{4, 1}});
    CHECK(out.design.params.v == 19);
    GroupType t = group_type_of(out.groups);
    REQUIRE(t.size() == 2);
    CHECK(t[0].size == 4);
    CHECK(t[0].count == 4);
    CHECK(t[1].size == 3);
    CHECK(t[1].count == 1);
    int four = 0, five = 0;
    for (const Block& b : out.design.blocks) (b.size() == 4 ? four : five) += 1;
    CHECK(four == 4);
    CHECK(five == 12);
    CHECK(full_report_dgdd(out).pass);  // still a lambda=1 {4,5}-GDD
}

TEST_CASE("delete_points: TD(5,5) minus three points -> type 5^4 2^1") {
    GroupedDesign out = delete_points(td_build({5, 5}), {{4, 3}});
    GroupType t = group_type_of(out.groups);
    REQUIRE(t.size() == 2);
    CHECK(t[0].size == 5);
    CHECK(t[1].size == 2);
    CHECK(full_report_dgdd(out).pass);
}

TEST_CASE("delete_points: truncating TD(8,7) to type 7^6 3^1") {
    GroupedDesign out = delete_points(td_build({8, 7}), {{6, 4}, {7, 7}});
    CHECK(out.groups.size() == 7);  // emptied group dropped
    GroupType t = group_type_of(out.groups);
    CHECK(t[0].size == 7);
    CHECK(t[0].count == 6);
    CHECK(t[1].size == 3);
    CHECK(out.design.params.v == 45);
    CHECK(full_report_dgdd(out).pass);
}

TEST_CASE("delete_points error taxonomy") {
    CHECK_THROWS_AS(delete_points(td_build({4, 3}), {{3, 1}}), BlockTooSmall);
    CHECK_THROWS_AS(delete_points(td_build({5, 4}), {{9, 1}}), EntryOutOfRange);
    CHECK_THROWS_AS(delete_points(td_build({5, 4}), {{4, 9}}), EntryOutOfRange);
    CHECK_THROWS_AS(delete_points(td_build({5, 4}), {{4, 1}, {4, 1}}), EntryOutOfRange);
}

TEST_CASE("compose_fill_certificate shifts blocks and relabels swap points") {
    GroupedDesign base = sst::dev_g("dgdd-4pow4");
    GroupedDesign big = inflate_by_td(base.design, &base.groups, td_build({4, 3}));
    DirectedDesign f13 = sst::dev_dd("dd-13");
    DirectedDesign out = fill_groups(big, {1}, {{12, &f13}});

    BoundCertificate master_cert = generic_bound(big.design);
    BoundCertificate f_cert = orbit_trade_scan(catalog_get("dd-13"));
    REQUIRE(f_cert.bound == 26);
    std::vector<BoundCertificate> fillers(4, f_cert);

    BoundCertificate whole = compose_fill_certificate(big, {1}, master_cert, fillers);
    CHECK(whole.total_blocks == 784);
    CHECK(whole.bound == master_cert.bound + 4 * 26);
    // every edge and cycle must revalidate against the filled design
    bool half = certify_half(out, whole);
    CHECK(half == (whole.bound >= 392));

    std::vector<BoundCertificate> short_list(3, f_cert);
    CHECK_THROWS_AS(compose_fill_certificate(big, {1}, master_cert, short_list), SizeMismatch);

    BoundCertificate wrong = master_cert;
    wrong.total_blocks = 1;
    CHECK_THROWS_AS(compose_fill_certificate(big, {1}, wrong, fillers), InvalidCertificate);
}
