#pragma once
// Bit-exact, line-oriented design file format shared by every tool:
//   % comment
//   #DD v=13 k=4 lambda=2            (or #DGDD ... directed=<0|1>)
//   G: 0 3 6                          (DGDD group lines, before blocks)
//   6 5 0 2                           (one block per line)
// Decimal numbers without leading zeros, single spaces, LF endings. Blocks
// are written sorted lexicographically so output is deterministic.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ssdd/model.hpp"

namespace ssdd {

struct DesignFile {
    // Exactly one of these is set, depending on the header kind.
    std::optional<DirectedDesign> plain;
    std::optional<GroupedDesign> grouped;
    std::vector<std::string> comments;  // raw '%' lines, in file order
};

DesignFile parse_design_file(const std::string& text);
DesignFile load_design_file(const std::string& path);

// extra_comments are emitted verbatim (each must already start with '%')
// after the block lines; used for certificates and provenance trails.
std::string write_design_file(const DirectedDesign& d,
                              const std::vector<std::string>& extra_comments = {});
std::string write_design_file(const GroupedDesign& g,
                              const std::vector<std::string>& extra_comments = {});
void save_design_file(const std::string& path, const std::string& content);

// Permutation mapping written position -> original block index (stable
// lexicographic order). Lets callers remap block indices to file order.
std::vector<std::size_t> sorted_order(const std::vector<Block>& blocks);

}  // namespace ssdd
