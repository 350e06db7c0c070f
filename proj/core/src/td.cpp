#include "ssdd/td.hpp"

#include <numeric>

#include "ssdd/field.hpp"

namespace ssdd {

GroupedDesign td_build(const TdSpec& spec) {
    const int k = spec.k, n = spec.n;
    if (k < 2) throw KTooLarge("TD needs k >= 2, got " + std::to_string(k));
    if (n == 1) {  // degenerate TD(k,1): one transversal of singleton groups
        GroupedDesign td;
        td.directed = false;
        td.design.params = {k, k, 1, 2};
        Block blk(k);
        std::iota(blk.begin(), blk.end(), 0);
        td.design.blocks.push_back(std::move(blk));
        td.groups.resize(k);
        for (int g = 0; g < k; ++g) td.groups[g] = {g};
        return td;
    }
    const FiniteField f = field_build(n);  // throws UnsupportedOrder
    if (k > n + 1)
        throw KTooLarge("TD(" + std::to_string(k) + "," + std::to_string(n) + "): k > n+1");

    GroupedDesign td;
    td.directed = false;
    td.design.params = {k * n, k, 1, 2};
    td.design.blocks.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Block blk(k);
            for (int g = 0; g < k; ++g) {
                if (g == n)  // infinity row (only reachable when k == n+1)
                    blk[g] = n * n + a;
                else
                    blk[g] = g * n + f.add(f.mul(a, g), b);
            }
            td.design.blocks.push_back(std::move(blk));
        }
    td.groups.resize(k);
    for (int g = 0; g < k; ++g) {
        td.groups[g].resize(n);
        std::iota(td.groups[g].begin(), td.groups[g].end(), g * n);
    }
    return td;
}

}  // namespace ssdd
