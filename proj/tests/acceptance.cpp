// Standalone acceptance runner: eight numbered checks covering block counts,
// verification, bounds, trade soundness, recursive builds, TDs, and
// determinism. Prints PASS/FAIL per criterion with analysis; exit code is the
// number of failures. Two failures are expected and documented inline: the
// printed v=34 defining-set bound exceeds the exhaustive packing maximum, and
// the v=88 build depends on defective ingredients.

#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ssdd/catalog.hpp"
#include "ssdd/construct.hpp"
#include "ssdd/io.hpp"
#include "ssdd/recipe.hpp"
#include "ssdd/td.hpp"
#include "ssdd/trades.hpp"
#include "ssdd/verify.hpp"

using namespace ssdd;

namespace {

int failures = 0;

void criterion(int n, const std::string& title, bool ok, const std::string& detail) {
    std::cout << "CRITERION " << n << " (" << title << "): " << (ok ? "PASS" : "FAIL") << "\n";
    if (!detail.empty()) {
        std::istringstream in(detail);
        std::string line;
        while (std::getline(in, line)) std::cout << "  " << line << "\n";
    }
    if (!ok) ++failures;
}

bool brute_trade(const Block& b1, const Block& b2, int x, int y) {
    auto has = [](const Block& b, int p) { return std::find(b.begin(), b.end(), p) != b.end(); };
    if (!has(b1, x) || !has(b1, y) || !has(b2, x) || !has(b2, y)) return false;
    auto swap_b = [&](Block b) {
        for (int& p : b) p = p == x ? y : (p == y ? x : p);
        return b;
    };
    Block c1 = swap_b(b1), c2 = swap_b(b2);
    if (c1 == b1 || c1 == b2 || c2 == b1 || c2 == b2) return false;
    auto pairs = [](const Block& a, const Block& b) {
        std::vector<std::pair<int, int>> ps;
        for (const Block* blk : {&a, &b})
            for (std::size_t i = 0; i < blk->size(); ++i)
                for (std::size_t j = i + 1; j < blk->size(); ++j)
                    ps.emplace_back((*blk)[i], (*blk)[j]);
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    return pairs(b1, b2) == pairs(c1, c2);
}

const char* kRecipeV49 =
    "let base = catalog dgdd-4pow4\n"
    "let t3 = td 4 3\n"
    "let big = inflate base by t3\n"
    "let f13 = catalog dd-13\n"
    "let out = fill big eta=1 using f13\n"
    "output out\n";

const char* kRecipeV88 =
    "let m = catalog dgdd-22pow4\n"
    "let f = catalog dd-22\n"
    "let out = fill m eta=0 using f\n"
    "output out\n";

}  // namespace

int main() {
    const std::vector<std::pair<std::string, long long>> dd_counts = {
        {"dd-10", 30},  {"dd-13", 52},   {"dd-16", 80},   {"dd-19", 114},
        {"dd-22", 154}, {"dd-25", 200},  {"dd-28", 252},  {"dd-31", 310},
        {"dd-34", 374}, {"dd-40", 520},  {"dd-43", 602},  {"dd-58", 1102},
        {"dd-67", 1474}, {"dd-79", 2054}, {"dd-94", 2914}, {"dd-103", 3502},
    };

    // 1. Printed block counts reproduced by cyclic development.
    {
        std::string bad;
        for (const auto& [id, want] : dd_counts) {
            long long got = static_cast<long long>(catalog_build(id).plain->blocks.size());
            if (got != want) bad += id + ": " + std::to_string(got) + " != " + std::to_string(want) + "\n";
        }
        criterion(1, "printed DD block counts", bad.empty(), bad);
    }

    // 2. Machine verification of the direct DD constructions; the worked
    //    v=13 example passes outright; failures carry concrete witnesses,
    //    including the three documented table inconsistencies.
    {
        std::string detail;
        bool ok = true;
        DirectedDesign d13 = *catalog_build("dd-13").plain;
        if (!(check_directed_balance(d13).pass && check_simple(d13).pass &&
              check_super_simple(d13).pass)) {
            ok = false;
            detail += "v=13 worked example failed a check\n";
        }
        for (const auto& [id, want] : dd_counts) {
            VerificationReport rep = full_report_dd(*catalog_build(id).plain);
            if (rep.pass) continue;
            bool witnessed = false;
            for (const auto& c : rep.checks)
                if (!c.pass && !c.witness.empty()) {
                    witnessed = true;
                    detail += id + " flagged: " + c.witness + "\n";
                    break;
                }
            if (!witnessed) {
                ok = false;
                detail += id + " failed without a witness\n";
            }
        }
        auto witness_of = [](const std::string& id, const std::string& check) {
            VerificationReport rep = full_report_dgdd(*catalog_build(id).grouped);
            for (const auto& c : rep.checks)
                if (c.name == check && !c.pass) return c.witness;
            return std::string();
        };
        const std::string w9 = witness_of("dgdd-9pow4", "block-count");
        const std::string w13 = witness_of("dgdd-13pow4", "block-count");
        const std::string w19 = witness_of("dgdd-19pow4", "simple");
        auto have = [](const std::string& w, const char* a, const char* b) {
            return w.find(a) != std::string::npos && w.find(b) != std::string::npos;
        };
        if (!have(w9, "288", "324")) { ok = false; detail += "missing 9^4 count witness\n"; }
        else detail += "9^4 erratum: " + w9 + "\n";
        if (!have(w13, "520", "676")) { ok = false; detail += "missing 13^4 count witness\n"; }
        else detail += "13^4 erratum: " + w13 + "\n";
        if (!have(w19, "(0,1,11,26)", "share")) { ok = false; detail += "missing 19^4 duplicate witness\n"; }
        else detail += "19^4 erratum: " + w19 + "\n";
        criterion(2, "DD verification + documented errata witnesses", ok, detail);
    }

    // 3. DGDD counts match the lemma texts; every entry verifies or is flagged.
    {
        const std::vector<std::pair<std::string, long long>> want = {
            {"dgdd-3pow6", 90},  {"dgdd-3pow7", 126}, {"dgdd-3pow8", 168},
            {"dgdd-3pow9", 216}, {"dgdd-3pow13", 468}, {"dgdd-4pow4", 64},
            {"dgdd-5pow4", 100}, {"dgdd-6pow4", 144}, {"dgdd-22pow4", 1936},
            {"dgdd-9pow5", 540}, {"dgdd-6pow5", 240},
        };
        std::string bad;
        for (const auto& [id, count] : want) {
            GroupedDesign g = *catalog_build(id).grouped;
            if (static_cast<long long>(g.design.blocks.size()) != count)
                bad += id + ": developed " + std::to_string(g.design.blocks.size()) + " != " +
                       std::to_string(count) + "\n";
            VerificationReport rep = full_report_dgdd(g);
            if (!rep.pass) {
                bool witnessed = false;
                for (const auto& c : rep.checks) witnessed = witnessed || (!c.pass && !c.witness.empty());
                if (!witnessed) bad += id + " failed without a witness\n";
            }
        }
        criterion(3, "DGDD counts and verdicts", bad.empty(), bad);
    }

    // 4. Defining-set certification for every verifying DD entry. The v=34
    //    printed bound 204 ("102+102=204") is NOT reachable: the exhaustive
    //    packing over recomputed orbit structures (pairings, loop cycles, odd
    //    orbit cycles) maxes out at 188. The half property itself still
    //    holds: 188 >= ceil(374/2) = 187. Honest failure, kept visible.
    {
        std::string detail;
        bool ok = true;
        for (const auto& [id, want] : dd_counts) {
            (void)want;
            const CatalogEntry& e = catalog_get(id);
            DirectedDesign d = *catalog_build(id).plain;
            if (!full_report_dd(d).pass) continue;
            BoundCertificate cert = orbit_trade_scan(e);
            const bool half = certify_half(d, cert);
            if (cert.bound >= e.claimed_bound && half) continue;
            ok = false;
            detail += id + ": computed " + std::to_string(cert.bound) + " vs printed " +
                      std::to_string(e.claimed_bound) + (half ? " (d >= 1/2 still certified)" : "") +
                      "\n";
        }
        criterion(4, "orbit certificates reach printed bounds", ok, detail);
    }

    // 5. Trade soundness: 10,000 seeded transposition probes, recounted
    //    independently. Zero tolerance.
    {
        std::vector<DirectedDesign> pool;
        for (const auto& e : catalog_list()) {
            DesignFile f = catalog_build(e.id);
            pool.push_back(f.plain ? *f.plain : f.grouped->design);
        }
        std::mt19937 rng(20260815u);
        long long accepted = 0, rejected = 0, violations = 0;
        for (int probe = 0; probe < 10000; ++probe) {
            const DirectedDesign& d = pool[rng() % pool.size()];
            const std::size_t i = rng() % d.blocks.size();
            const std::size_t j = rng() % d.blocks.size();
            if (i == j) { --probe; continue; }
            const Block& bi = d.blocks[i];
            int x = bi[rng() % bi.size()];
            int y = bi[rng() % bi.size()];
            if (x == y) { --probe; continue; }
            const bool got = is_volume2_trade(d.blocks[i], d.blocks[j], x, y);
            const bool want = brute_trade(d.blocks[i], d.blocks[j], x, y);
            if (got != want) ++violations;
            (got ? accepted : rejected) += 1;
        }
        criterion(5, "10000 transposition probes", violations == 0,
                  "accepted " + std::to_string(accepted) + ", rejected " + std::to_string(rejected) +
                      ", violations " + std::to_string(violations));
    }

    // 6. End-to-end recursive builds. v=49 must fully verify. The v=88 route
    //    fills the 22^4 table with dd-22 copies; BOTH ingredients fail
    //    machine verification (22^4 has a block meeting a group twice; dd-22
    //    over-covers (0,3) and repeats a triple), so the 2552-block claim is
    //    unreachable from the printed tables. Honest failure with the
    //    step-level witness.
    {
        std::string detail;
        bool ok49 = false;
        try {
            RecipeResult res = run_recipe(parse_recipe(kRecipeV49));
            ok49 = res.output.plain && res.output.plain->blocks.size() == 784 &&
                   full_report_dd(*res.output.plain).pass;
            detail += "v=49: 784 blocks, fully verified\n";
        } catch (const Error& e) {
            detail += std::string("v=49 failed: ") + e.what() + "\n";
        }
        bool ok88 = false;
        try {
            RecipeResult res = run_recipe(parse_recipe(kRecipeV88));
            ok88 = res.output.plain && res.output.plain->blocks.size() == 2552 &&
                   full_report_dd(*res.output.plain).pass;
        } catch (const Error& e) {
            detail += std::string("v=88: ") + e.what() + "\n";
        }
        criterion(6, "recursive builds v=49 and v=88", ok49 && ok88, detail);
    }

    // 7. TD oracle equivalence, exhaustive over supported orders <= 19.
    {
        std::string bad;
        for (int n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19})
            for (int k = 2; k <= std::min(8, n + 1); ++k) {
                GroupedDesign td = td_build({k, n});
                if (static_cast<int>(td.design.blocks.size()) != n * n || !check_td(td).pass)
                    bad += "TD(" + std::to_string(k) + "," + std::to_string(n) + ") failed\n";
            }
        criterion(7, "td_build passes check_td exhaustively", bad.empty(), bad);
    }

    // 8. Determinism: repeated builds, reports, and certificates are
    //    byte-identical.
    {
        bool ok = true;
        for (const char* id : {"dd-13", "dgdd-3pow6"}) {
            DesignFile a = catalog_build(id), b = catalog_build(id);
            std::string ta = a.plain ? write_design_file(*a.plain) : write_design_file(*a.grouped);
            std::string tb = b.plain ? write_design_file(*b.plain) : write_design_file(*b.grouped);
            ok = ok && ta == tb;
            VerificationReport ra = a.plain ? full_report_dd(*a.plain) : full_report_dgdd(*a.grouped);
            VerificationReport rb = b.plain ? full_report_dd(*b.plain) : full_report_dgdd(*b.grouped);
            ok = ok && ra.render_text() == rb.render_text();
        }
        BoundCertificate c1 = orbit_trade_scan(catalog_get("dd-19"));
        BoundCertificate c2 = orbit_trade_scan(catalog_get("dd-19"));
        DirectedDesign d19 = *catalog_build("dd-19").plain;
        auto order = sorted_order(d19.blocks);
        ok = ok && certificate_comments(c1, order) == certificate_comments(c2, order);
        DirectedDesign d22 = *catalog_build("dd-22").plain;
        ok = ok && generic_bound(d22).bound == generic_bound(d22).bound;
        criterion(8, "byte-identical reruns", ok, "");
    }

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed (see analysis above)")
              << "\n";
    return failures;
}
