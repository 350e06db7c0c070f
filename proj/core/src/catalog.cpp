#include "ssdd/catalog.hpp"

#include "ssdd/develop.hpp"

namespace ssdd {

const CatalogEntry* catalog_find(const std::string& id) {
    for (const auto& e : catalog_list())
        if (e.id == id) return &e;
    return nullptr;
}

const CatalogEntry& catalog_get(const std::string& id) {
    const CatalogEntry* e = catalog_find(id);
    if (!e) throw UnknownId("no catalog entry '" + id + "'");
    return *e;
}

std::vector<std::vector<int>> coset_groups(int g, int u) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(u));
    for (int i = 0; i < u; ++i) {
        groups[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(g));
        for (int m = 0; m < g; ++m) groups[static_cast<std::size_t>(i)].push_back(i + u * m);
    }
    return groups;
}

DesignFile catalog_build(const std::string& id) {
    const CatalogEntry& e = catalog_get(id);
    DirectedDesign d;
    d.params.v = e.modulus;
    d.params.k = 4;
    d.params.lambda = e.lambda;
    d.blocks = develop(e.base_blocks, e.modulus);
    DesignFile out;
    if (e.group_size == 0) {
        out.plain = std::move(d);
    } else {
        GroupedDesign g;
        g.design = std::move(d);
        g.groups = coset_groups(e.group_size, e.group_count);
        g.directed = e.directed;
        out.grouped = std::move(g);
    }
    return out;
}

}  // namespace ssdd
