// ssdd: catalog, verification, trade certification, and recursive
// construction of super-simple (v,4,2) directed designs.
// Exit codes: 0 success/verified, 1 verification or certification failure,
// 2 usage, parse, or unsupported-input errors. Output files are byte-stable.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssdd/catalog.hpp"
#include "ssdd/construct.hpp"
#include "ssdd/io.hpp"
#include "ssdd/model.hpp"
#include "ssdd/recipe.hpp"
#include "ssdd/td.hpp"
#include "ssdd/trades.hpp"
#include "ssdd/verify.hpp"

namespace {

using namespace ssdd;

std::string entry_shape(const CatalogEntry& e) {
    if (e.group_size > 0)
        return std::to_string(e.group_size) + "^" + std::to_string(e.group_count);
    return "v=" + std::to_string(e.modulus);
}

std::string block_str(const Block& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

const std::vector<Block>& file_blocks(const DesignFile& f) {
    return f.plain ? f.plain->blocks : f.grouped->design.blocks;
}

int run_catalog_list() {
    std::cout << std::left << std::setw(14) << "id" << std::setw(12) << "kind" << std::setw(8)
              << "shape" << std::right << std::setw(7) << "blocks" << std::setw(7) << "bound"
              << "  source\n";
    for (const CatalogEntry& e : catalog_list()) {
        std::cout << std::left << std::setw(14) << e.id << std::setw(12) << e.kind << std::setw(8)
                  << entry_shape(e) << std::right << std::setw(7) << e.claimed_blocks
                  << std::setw(7) << (e.claimed_bound >= 0 ? std::to_string(e.claimed_bound) : "-")
                  << "  " << e.provenance << "\n";
    }
    return 0;
}

int run_catalog_show(const std::string& id) {
    const CatalogEntry& e = catalog_get(id);
    std::cout << "id: " << e.id << "\n";
    std::cout << "kind: " << e.kind << (e.directed ? " (directed)" : " (undirected)") << "\n";
    std::cout << "shape: " << entry_shape(e) << ", development mod " << e.modulus << "\n";
    std::cout << "lambda: " << e.lambda << "\n";
    if (!e.group_rule.empty()) std::cout << "groups: " << e.group_rule << "\n";
    std::cout << "claimed blocks: " << e.claimed_blocks << "\n";
    std::cout << "claimed bound: "
              << (e.claimed_bound >= 0 ? std::to_string(e.claimed_bound) : "(none)") << "\n";
    if (!e.claimed_layout.empty()) std::cout << "claimed layout: " << e.claimed_layout << "\n";
    std::cout << "source: " << e.provenance << "\n";
    std::cout << "base blocks (" << e.base_blocks.size() << ", columns";
    for (int c : e.column_sizes) std::cout << " " << c;
    std::cout << "):\n";
    for (const Block& b : e.base_blocks) std::cout << "  " << block_str(b) << "\n";
    return 0;
}

int run_catalog_build(const std::string& id, const std::string& out) {
    DesignFile f = catalog_build(id);
    const CatalogEntry& e = catalog_get(id);
    std::vector<std::string> comments = {"%CATALOG " + e.id, "%SOURCE " + e.provenance};
    std::string text = f.plain ? write_design_file(*f.plain, comments)
                               : write_design_file(*f.grouped, comments);
    save_design_file(out, text);
    std::cout << "wrote " << out << " (" << file_blocks(f).size() << " blocks)\n";
    return 0;
}

int run_verify(const std::string& path, const std::string& kind, const std::string& report_path) {
    DesignFile f = load_design_file(path);
    VerificationReport rep = full_report(f, kind);
    std::string text = rep.render_text();
    std::cout << text;
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw ParseError("cannot write report '" + report_path + "'");
        out << text;
    }
    return rep.pass ? 0 : 1;
}

int run_trades(const std::string& path, const std::string& catalog_id,
               const std::string& cert_out, bool check_half) {
    DesignFile f = load_design_file(path);
    const DirectedDesign& d = f.plain ? *f.plain : f.grouped->design;

    BoundCertificate cert;
    if (!catalog_id.empty()) {
        const CatalogEntry& e = catalog_get(catalog_id);
        DesignFile dev = catalog_build(catalog_id);
        const std::vector<Block>& devb = file_blocks(dev);
        if (d.blocks.size() != devb.size())
            throw ParseError("'" + path + "' does not match catalog entry " + catalog_id + " (" +
                             std::to_string(d.blocks.size()) + " vs " +
                             std::to_string(devb.size()) + " blocks)");
        std::vector<std::size_t> order = sorted_order(devb);  // written pos -> dev index
        std::vector<int> devpos(devb.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            if (d.blocks[pos] != devb[order[pos]])
                throw ParseError("'" + path + "' does not match catalog entry " + catalog_id +
                                 " at block " + std::to_string(pos) +
                                 " (expected sorted development order)");
            devpos[order[pos]] = static_cast<int>(pos);
        }
        cert = orbit_trade_scan(e);
        for (TradePair& t : cert.edges) {
            t.i = devpos[t.i];
            t.j = devpos[t.j];
        }
        for (CyclicalTrade& c : cert.cycles)
            for (int& b : c.blocks) b = devpos[b];
    } else {
        cert = generic_bound(d);
    }

    std::cout << "bound " << cert.bound << "/" << cert.total_blocks << " (edges "
              << cert.edges.size() << ", cycles " << cert.cycles.size() << ")\n";

    if (!cert_out.empty()) {
        std::vector<std::size_t> order = sorted_order(d.blocks);
        std::vector<std::string> comments = certificate_comments(cert, order);
        std::string text = f.plain ? write_design_file(*f.plain, comments)
                                   : write_design_file(*f.grouped, comments);
        save_design_file(cert_out, text);
        std::cout << "wrote " << cert_out << "\n";
    }

    if (check_half) {
        const long long need = (static_cast<long long>(d.blocks.size()) + 1) / 2;
        bool ok = certify_half(d, cert);
        std::cout << "half: " << (ok ? "ok" : "FAIL") << " (bound " << cert.bound
                  << (ok ? " >= " : " < ") << need << ")\n";
        return ok ? 0 : 1;
    }
    return 0;
}

int run_construct(const std::string& recipe_path, const std::string& out) {
    Recipe r = load_recipe(recipe_path);
    RecipeResult res = run_recipe(r);
    for (const StepRecord& rec : res.trail)
        std::cout << "step " << rec.detail << " | " << rec.report.summary() << "\n";
    std::string stem = std::filesystem::path(recipe_path).stem().string();
    std::vector<std::string> comments = res.trail_comments(stem);
    std::string text = res.output.plain ? write_design_file(*res.output.plain, comments)
                                        : write_design_file(*res.output.grouped, comments);
    save_design_file(out, text);
    std::cout << "wrote " << out << " (" << file_blocks(res.output).size() << " blocks)\n";
    return 0;
}

int run_td(int k, int n, const std::string& out) {
    GroupedDesign td = td_build(TdSpec{k, n});
    VerificationReport rep = full_report_td(td);
    std::cout << "TD(" << k << "," << n << "): " << rep.summary() << "\n";
    if (!out.empty()) {
        std::vector<std::string> comments = {"%TD k=" + std::to_string(k) +
                                             " n=" + std::to_string(n)};
        save_design_file(out, write_design_file(td, comments));
        std::cout << "wrote " << out << "\n";
    }
    return rep.pass ? 0 : 1;
}

int run_errata() {
    long long confirmed = 0, refuted = 0;
    auto row = [&](const std::string& id, const std::string& claim, const std::string& printed,
                   const std::string& computed, bool ok, const std::string& why) {
        (ok ? confirmed : refuted) += 1;
        std::cout << std::left << std::setw(14) << id << std::setw(28) << claim << std::setw(12)
                  << printed << std::setw(12) << computed << (ok ? "confirmed" : "REFUTED");
        if (!why.empty()) std::cout << ": " << why;
        std::cout << "\n";
    };

    std::cout << std::left << std::setw(14) << "entry" << std::setw(28) << "claim" << std::setw(12)
              << "printed" << std::setw(12) << "computed" << "verdict\n";
    for (const CatalogEntry& e : catalog_list()) {
        DesignFile f = catalog_build(e.id);
        const long long developed = static_cast<long long>(file_blocks(f).size());
        row(e.id, "blocks", std::to_string(e.claimed_blocks), std::to_string(developed),
            developed == e.claimed_blocks, "");

        VerificationReport rep =
            f.plain ? full_report_dd(*f.plain) : full_report_dgdd(*f.grouped);
        if (rep.pass) {
            row(e.id, "verifies", "yes", "yes", true, "");
        } else {
            for (const CheckItem& c : rep.checks)
                if (!c.pass) row(e.id, "verifies: " + c.name, "yes", "no", false, c.witness);
        }

        if (e.claimed_bound >= 0) {
            BoundCertificate cert = orbit_trade_scan(e);
            row(e.id, "defining-set bound", std::to_string(e.claimed_bound),
                std::to_string(cert.bound), cert.bound >= e.claimed_bound, "");
        }
    }
    std::cout << confirmed << " claims confirmed, " << refuted << " refuted\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"super-simple (v,4,2) directed designs: catalog, verification, trades, constructions"};
    app.require_subcommand(1);
    int rc = 0;

    auto* cat = app.add_subcommand("catalog", "embedded base-block catalog");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list every entry with its claims")->callback([&] {
        rc = run_catalog_list();
    });
    std::string show_id;
    auto* show = cat->add_subcommand("show", "print one entry in full");
    show->add_option("id", show_id, "catalog id")->required();
    show->callback([&] { rc = run_catalog_show(show_id); });
    std::string build_id, build_out;
    auto* build = cat->add_subcommand("build", "develop an entry and write the design file");
    build->add_option("id", build_id, "catalog id")->required();
    build->add_option("-o,--output", build_out, "output path")->required();
    build->callback([&] { rc = run_catalog_build(build_id, build_out); });

    std::string v_path, v_kind, v_report;
    auto* ver = app.add_subcommand("verify", "machine-check a design file");
    ver->add_option("path", v_path, "design file")->required();
    ver->add_option("--kind", v_kind, "dd, dgdd, or td")
        ->required()
        ->check(CLI::IsMember({"dd", "dgdd", "td"}));
    ver->add_option("--report", v_report, "also write the report here");
    ver->callback([&] { rc = run_verify(v_path, v_kind, v_report); });

    std::string t_path, t_catalog, t_cert;
    bool t_half = false;
    auto* tr = app.add_subcommand("trades", "defining-set lower-bound certificate");
    tr->add_option("path", t_path, "design file")->required();
    tr->add_option("--catalog-id", t_catalog, "use the orbit scan of this catalog entry");
    tr->add_option("--cert-out", t_cert, "write the design with %CERT comments");
    tr->add_flag("--check-half", t_half, "exit 0 iff bound >= ceil(blocks/2)");
    tr->callback([&] { rc = run_trades(t_path, t_catalog, t_cert, t_half); });

    std::string c_path, c_out;
    auto* con = app.add_subcommand("construct", "run a recipe, verifying every step");
    con->add_option("recipe", c_path, "recipe file")->required();
    con->add_option("-o,--output", c_out, "output path")->required();
    con->callback([&] { rc = run_construct(c_path, c_out); });

    int td_k = 0, td_n = 0;
    std::string td_out;
    auto* td = app.add_subcommand("td", "build a transversal design TD(k,n)");
    td->add_option("k", td_k, "groups")->required();
    td->add_option("n", td_n, "group size (prime power)")->required();
    td->add_option("-o,--output", td_out, "output path");
    td->callback([&] { rc = run_td(td_k, td_n, td_out); });

    app.add_subcommand("errata", "check every catalog claim and print verdicts")->callback([&] {
        rc = run_errata();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ssdd::StepVerificationFailed& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const ssdd::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return rc;
}
