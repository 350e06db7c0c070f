#pragma once
// Declarative build plans chaining catalog loads, TD builds, truncation,
// inflation, weighting, and filling. Line grammar ('%' starts a comment):
//   let <name> = catalog <id>
//   let <name> = file <path>
//   let <name> = td <k> <n>
//   let <name> = delete <src> group=<g>:count=<c> ...
//   let <name> = inflate <src> by <tdname>
//   let <name> = weight <src> w=<int> using <a>[,<b>...]
//   let <name> = fill <src> eta=<0|1> using <a>[,<b>...]
//   output <name>
// Names must be defined before use; redefinition, unknown references, or a
// missing/duplicate output line fail at parse time, before execution.

#include <string>
#include <utility>
#include <vector>

#include "ssdd/io.hpp"
#include "ssdd/verify.hpp"

namespace ssdd {

struct RecipeStep {
    enum class Op { Catalog, File, Td, Delete, Inflate, Weight, Fill };
    Op op = Op::Catalog;
    std::string name;
    std::string arg;  // catalog id / file path
    int k = 0, n = 0;
    std::string src;
    std::vector<std::pair<int, int>> deletions;  // (group index, count)
    std::string td_name;
    int w = 0;
    int eta = 0;
    std::vector<std::string> using_names;
    int line = 0;
    std::string text;  // the source line, trimmed
};

struct Recipe {
    std::vector<RecipeStep> steps;  // dependency order (definition order)
    std::string output;
    std::string dir;  // directory of the recipe file, for relative paths
};

// Throws ParseError on any grammar or reference violation.
Recipe parse_recipe(const std::string& text, const std::string& source_path = "");
Recipe load_recipe(const std::string& path);

struct StepRecord {
    std::string name;
    std::string detail;         // "<name> = <op line>"
    VerificationReport report;  // the gate that admitted this step's value
};

struct RecipeResult {
    DesignFile output;
    std::vector<StepRecord> trail;  // one record per executed step

    // '%' provenance lines suitable for write_design_file extra_comments.
    std::vector<std::string> trail_comments(const std::string& recipe_name) const;
};

// Executes steps in order, verifying every intermediate (DD, DGDD, or TD
// check by shape) before later steps may use it. A failed report raises
// StepVerificationFailed naming the step and the first failing check.
RecipeResult run_recipe(const Recipe& r);

}  // namespace ssdd
