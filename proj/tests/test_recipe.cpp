#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "ssdd/io.hpp"
#include "ssdd/recipe.hpp"
#include "ssdd/verify.hpp"

using namespace ssdd;

namespace {

const char* kLemma12V49 =
    "% Lemma 12, t=4: (12t+1) = 49\n"
    "let base = catalog dgdd-4pow4\n"
    "let t3 = td 4 3\n"
    "let big = inflate base by t3\n"
    "let f13 = catalog dd-13\n"
    "let out = fill big eta=1 using f13\n"
    "output out\n";

}  // namespace

TEST_CASE("parse_recipe: steps, ops, and output") {
    Recipe r = parse_recipe(kLemma12V49);
    REQUIRE(r.steps.size() == 5);
    CHECK(r.steps[0].op == RecipeStep::Op::Catalog);
    CHECK(r.steps[0].arg == "dgdd-4pow4");
    CHECK(r.steps[1].op == RecipeStep::Op::Td);
    CHECK(r.steps[1].k == 4);
    CHECK(r.steps[1].n == 3);
    CHECK(r.steps[2].op == RecipeStep::Op::Inflate);
    CHECK(r.steps[2].src == "base");
    CHECK(r.steps[2].td_name == "t3");
    CHECK(r.steps[4].op == RecipeStep::Op::Fill);
    CHECK(r.steps[4].eta == 1);
    CHECK(r.steps[4].using_names == std::vector<std::string>{"f13"});
    CHECK(r.output == "out");
}

TEST_CASE("parse_recipe: reference and grammar errors surface before execution") {
    CHECK_THROWS_AS(parse_recipe("let a = inflate b by c\noutput a\n"), ParseError);  // b undefined
    CHECK_THROWS_AS(parse_recipe("let a = td 4 3\nlet a = td 4 3\noutput a\n"), ParseError);
    CHECK_THROWS_AS(parse_recipe("let a = td 4 3\n"), ParseError);            // no output
    CHECK_THROWS_AS(parse_recipe("let a = td 4 3\noutput a\noutput a\n"), ParseError);
    CHECK_THROWS_AS(parse_recipe("let a = frobnicate x\noutput a\n"), ParseError);
    CHECK_THROWS_AS(parse_recipe("let a = td 4 3\nlet b = delete a group4:count=1\noutput b\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_recipe("output a\n"), ParseError);  // output before definition
    CHECK_THROWS_AS(parse_recipe("let a = td four 3\noutput a\n"), ParseError);
    // weight/fill lists: empty element
    CHECK_THROWS_AS(
        parse_recipe("let a = td 4 3\nlet b = fill a eta=1 using ,\noutput b\n"), ParseError);
}

TEST_CASE("run_recipe: lemma12-v49 end to end") {
    RecipeResult res = run_recipe(parse_recipe(kLemma12V49));
    REQUIRE(res.output.plain.has_value());
    CHECK(res.output.plain->params.v == 49);
    CHECK(res.output.plain->blocks.size() == 784);
    REQUIRE(res.trail.size() == 5);
    for (const auto& rec : res.trail) CHECK(rec.report.pass);
    std::vector<std::string> comments = res.trail_comments("lemma12-v49");
    REQUIRE(comments.size() == 6);
    CHECK(comments[0] == "%RECIPE lemma12-v49");
    CHECK(comments[1].rfind("%STEP let base = catalog dgdd-4pow4", 0) == 0);
}

TEST_CASE("run_recipe: defective ingredient fails its own step") {
    const char* text =
        "let m = catalog dgdd-13pow4\n"
        "let f = catalog dd-13\n"
        "let out = fill m eta=0 using f\n"
        "output out\n";
    try {
        run_recipe(parse_recipe(text));
        FAIL("expected StepVerificationFailed");
    } catch (const StepVerificationFailed& e) {
        std::string msg = e.what();
        CHECK(msg.find("'m'") != std::string::npos);
        CHECK(msg.find("520") != std::string::npos);  // the 13^4 count erratum
    }
}

TEST_CASE("run_recipe: file steps resolve relative to the recipe") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ssdd-recipe-test";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "thirteen.dd", std::ios::binary);
        out << write_design_file(sst::dev_dd("dd-13"));
    }
    {
        std::ofstream out(dir / "use.recipe", std::ios::binary);
        out << "let a = file thirteen.dd\noutput a\n";
    }
    Recipe r = load_recipe((dir / "use.recipe").string());
    RecipeResult res = run_recipe(r);
    CHECK(res.output.plain->blocks.size() == 52);
    fs::remove_all(dir);
}

TEST_CASE("run_recipe: delete + weight pipeline (Lemma 16 shape)") {
    const char* text =
        "let t = td 5 4\n"
        "let cut = delete t group=4:count=1\n"
        "let w4 = catalog dgdd-6pow4\n"
        "let w5 = catalog dgdd-6pow5\n"
        "let big = weight cut w=6 using w4,w5\n"
        "output big\n";
    // dgdd-6pow5 is defective (unordered pair deficit): the recipe must stop there
    CHECK_THROWS_AS(run_recipe(parse_recipe(text)), StepVerificationFailed);
}

// Every shipped recipe either builds a fully verified design of the expected
// size or stops (StepVerificationFailed) at the defective printed table the
// file documents.
TEST_CASE("shipped recipes: green set builds, red set names its defect") {
    const std::map<std::string, std::size_t> green = {
        {"lemma12-v49", 784},   {"lemma12-v61", 1220}, {"lemma12-v73", 1752},
        {"lemma12-v97", 3104},  {"lemma12-v121", 4840}, {"lemma13-v64", 1344},
        {"lemma13-v100", 3300}, {"lemma13-v112", 4144}, {"lemma15-v109", 3924},
        {"maintheorem-v91", 2730},
    };
    const std::map<std::string, std::string> red = {
        {"lemma11-v37", "dgdd-9pow4"},  {"lemma11-v46", "dd-10"},
        {"lemma11-v52", "dgdd-13pow4"}, {"lemma11-v76", "dgdd-19pow4"},
        {"lemma11-v88", "dgdd-22pow4"}, {"lemma14-v70", "dd-10"},
        {"lemma14-v127", "dgdd-9pow4"}, {"lemma15-v55", "dd-10"},
        {"lemma15-v82", "dd-10"},       {"lemma15-v85", "dgdd-3pow7"},
        {"lemma15-v106", "dgdd-3pow7"}, {"lemma15-v118", "dgdd-3pow13"},
        {"lemma16-v115", "dgdd-6pow5"}, {"lemma16-v133", "dgdd-6pow5"},
        {"lemma18-v136", "dgdd-3pow7"}, {"lemma18-v139", "dgdd-3pow7"},
        {"lemma21-v277", "dgdd-3pow8"}, {"lemma21-v301", "dgdd-3pow7"},
    };
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(SSDD_RECIPES_DIR)) {
        if (entry.path().extension() != ".recipe") continue;
        ++seen;
        const std::string name = entry.path().stem().string();
        CAPTURE(name);
        Recipe r = load_recipe(entry.path().string());
        auto g = green.find(name);
        if (g != green.end()) {
            RecipeResult res = run_recipe(r);
            REQUIRE(res.output.plain);
            CHECK(res.output.plain->blocks.size() == g->second);
            CHECK(full_report_dd(*res.output.plain).pass);
        } else {
            REQUIRE(red.count(name));
            try {
                run_recipe(r);
                FAIL_CHECK("expected StepVerificationFailed for ", name);
            } catch (const StepVerificationFailed& e) {
                CHECK(std::string(e.what()).find(red.at(name)) != std::string::npos);
            }
        }
    }
    CHECK(seen == green.size() + red.size());
}
