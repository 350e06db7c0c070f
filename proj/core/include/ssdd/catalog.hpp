#pragma once
// Embedded base-block catalog: every direct-construction table of the source
// article, transcribed verbatim (typos included — flagging them is the point),
// with the printed block counts, defining-set bounds, and trade layouts.

#include <string>
#include <vector>

#include "ssdd/io.hpp"
#include "ssdd/model.hpp"

namespace ssdd {

struct CatalogEntry {
    std::string id;    // "dd-13", "dgdd-3pow7", "gdd-2pow7"
    std::string kind;  // "DD", "DGDD", "GDD-master"
    int modulus = 0;   // development modulus n
    int group_size = 0;   // g (0 for plain DDs)
    int group_count = 0;  // u (0 for plain DDs)
    bool directed = true;
    int lambda = 2;
    std::vector<Block> base_blocks;  // column-major, blank cells skipped
    std::vector<int> column_sizes;   // bases per printed column
    long long claimed_blocks = 0;
    long long claimed_bound = -1;  // -1: no printed bound
    std::string group_rule;        // human description, empty for DDs
    std::string provenance;        // table location in the source article
    std::string claimed_layout;    // printed per-column trade annotation
};

// All 31 entries in fixed order: 16 DDs, 14 DGDDs, one undirected 4-GDD master.
const std::vector<CatalogEntry>& catalog_list();

// nullptr when id is absent.
const CatalogEntry* catalog_find(const std::string& id);

// Throws UnknownId.
const CatalogEntry& catalog_get(const std::string& id);

// Develops base blocks mod n and attaches groups per the entry's group rule.
// Does NOT verify; verification is a separate, reportable step.
DesignFile catalog_build(const std::string& id);

// Groups {i, i+u, ..., i+(g-1)u} for 0 <= i < u on Z_{g*u}.
std::vector<std::vector<int>> coset_groups(int g, int u);

}  // namespace ssdd
