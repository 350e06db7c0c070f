#include "ssdd/construct.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssdd/verify.hpp"

namespace ssdd {

namespace {

std::vector<int> sorted_cell(const std::vector<int>& cell) {
    std::vector<int> s = cell;
    std::sort(s.begin(), s.end());
    return s;
}

// gid[q] = group of point q, pos[q] = rank of q inside its sorted cell.
struct PointMap {
    std::vector<int> gid, pos;
};

PointMap point_map(const std::vector<std::vector<int>>& groups, int v) {
    PointMap m;
    m.gid.assign(v, -1);
    m.pos.assign(v, -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::vector<int> cell = sorted_cell(groups[g]);
        for (std::size_t i = 0; i < cell.size(); ++i) {
            m.gid[cell[i]] = static_cast<int>(g);
            m.pos[cell[i]] = static_cast<int>(i);
        }
    }
    return m;
}

}  // namespace

GroupedDesign inflate_by_td(const DirectedDesign& master,
                            const std::vector<std::vector<int>>* master_groups,
                            const GroupedDesign& td) {
    if (master.blocks.empty()) throw ArityMismatch("inflate: master has no blocks");
    const std::size_t k = master.blocks.front().size();
    for (const Block& b : master.blocks)
        if (b.size() != k) throw ArityMismatch("inflate: master blocks have mixed arity");

    CheckItem td_ok = check_td(td);
    if (!td_ok.pass) throw TdNotVerified("inflate: " + td_ok.witness);
    if (td.groups.size() != k)
        throw ArityMismatch("inflate: master arity " + std::to_string(k) + " != TD group count " +
                            std::to_string(td.groups.size()));
    const std::size_t alpha = td.groups.front().size();
    if (alpha == 0) throw TdNotVerified("inflate: TD has an empty group");
    for (const auto& cell : td.groups)
        if (cell.size() != alpha) throw TdNotVerified("inflate: TD groups are not uniform");

    const PointMap tm = point_map(td.groups, td.design.params.v);

    GroupedDesign out;
    out.directed = true;
    out.design.params.v = master.params.v * static_cast<int>(alpha);
    out.design.params.k = static_cast<int>(k);
    out.design.params.lambda = master.params.lambda;
    out.design.blocks.reserve(master.blocks.size() * td.design.blocks.size());

    // Position g of each TD transversal inherits tuple position g of the
    // master block; point (x, i) is labeled x*alpha + i.
    std::vector<int> sel(k);
    for (const Block& mb : master.blocks) {
        for (const Block& tb : td.design.blocks) {
            std::fill(sel.begin(), sel.end(), -1);
            for (int q : tb) sel[tm.gid[q]] = tm.pos[q];
            Block nb(k);
            for (std::size_t g = 0; g < k; ++g)
                nb[g] = mb[g] * static_cast<int>(alpha) + sel[g];
            out.design.blocks.push_back(std::move(nb));
        }
    }

    if (master_groups) {
        for (const auto& cell : *master_groups) {
            std::vector<int> ng;
            ng.reserve(cell.size() * alpha);
            for (int x : cell)
                for (std::size_t i = 0; i < alpha; ++i)
                    ng.push_back(x * static_cast<int>(alpha) + static_cast<int>(i));
            std::sort(ng.begin(), ng.end());
            out.groups.push_back(std::move(ng));
        }
    } else {
        for (int x = 0; x < master.params.v; ++x) {
            std::vector<int> ng(alpha);
            for (std::size_t i = 0; i < alpha; ++i)
                ng[i] = x * static_cast<int>(alpha) + static_cast<int>(i);
            out.groups.push_back(std::move(ng));
        }
    }
    return out;
}

GroupedDesign weight_and_replace(const GroupedDesign& master, int w,
                                 const std::map<int, const GroupedDesign*>& ingredients) {
    if (master.directed) throw AlignmentError("weight: master must be undirected");
    if (master.design.params.lambda != 1) throw AlignmentError("weight: master index must be 1");
    if (w < 1) throw AlignmentError("weight: weight must be positive");
    if (master.design.blocks.empty()) throw AlignmentError("weight: master has no blocks");

    struct Prepared {
        const GroupedDesign* ing = nullptr;
        PointMap pm;
    };
    std::map<int, Prepared> cache;
    int ing_lambda = -1, ing_k = -1;

    GroupedDesign out;
    out.directed = true;
    for (const Block& B : master.design.blocks) {
        const int u = static_cast<int>(B.size());
        auto cit = cache.find(u);
        if (cit == cache.end()) {
            auto iit = ingredients.find(u);
            if (iit == ingredients.end() || iit->second == nullptr)
                throw MissingIngredient("weight: no ingredient of type " + std::to_string(w) + "^" +
                                        std::to_string(u));
            const GroupedDesign& ing = *iit->second;
            if (!ing.directed)
                throw AlignmentError("weight: ingredient for arity " + std::to_string(u) +
                                     " must be directed");
            if (static_cast<int>(ing.groups.size()) != u)
                throw AlignmentError("weight: ingredient has " + std::to_string(ing.groups.size()) +
                                     " groups, block arity is " + std::to_string(u));
            for (const auto& cell : ing.groups)
                if (static_cast<int>(cell.size()) != w)
                    throw AlignmentError("weight: ingredient group type is not " + std::to_string(w) +
                                         "^" + std::to_string(u));
            if (ing_lambda == -1) {
                ing_lambda = ing.design.params.lambda;
                ing_k = ing.design.params.k;
            } else if (ing.design.params.lambda != ing_lambda || ing.design.params.k != ing_k) {
                throw AlignmentError("weight: ingredients disagree on index or block size");
            }
            Prepared p;
            p.ing = &ing;
            p.pm = point_map(ing.groups, ing.design.params.v);
            cit = cache.emplace(u, std::move(p)).first;
        }
        const Prepared& p = cit->second;
        // Ingredient group j lands on master point B[j]; point x expands to
        // [x*w, x*w + w).
        for (const Block& ib : p.ing->design.blocks) {
            Block nb;
            nb.reserve(ib.size());
            for (int q : ib) nb.push_back(B[p.pm.gid[q]] * w + p.pm.pos[q]);
            out.design.blocks.push_back(std::move(nb));
        }
    }

    out.design.params.v = master.design.params.v * w;
    out.design.params.k = ing_k;
    out.design.params.lambda = master.design.params.lambda * ing_lambda;
    for (const auto& cell : master.groups) {
        std::vector<int> ng;
        ng.reserve(cell.size() * w);
        for (int x : cell)
            for (int i = 0; i < w; ++i) ng.push_back(x * w + i);
        std::sort(ng.begin(), ng.end());
        out.groups.push_back(std::move(ng));
    }
    return out;
}

DirectedDesign fill_groups(const GroupedDesign& g, const FillSpec& eta,
                           const std::map<int, const DirectedDesign*>& fillers) {
    if (eta.eta != 0 && eta.eta != 1) throw SizeMismatch("fill: eta must be 0 or 1");
    if (!g.directed) throw SizeMismatch("fill: master must be a directed DGDD");

    const int vout = g.design.params.v + eta.eta;
    const int inf = vout - 1;

    DirectedDesign out;
    out.params.v = vout;
    out.params.k = 4;
    out.params.lambda = g.design.params.lambda;
    out.blocks = g.design.blocks;

    for (const auto& cell : g.groups) {
        const int s = static_cast<int>(cell.size());
        auto it = fillers.find(s);
        if (it == fillers.end() || it->second == nullptr)
            throw MissingFiller("fill: no (" + std::to_string(s + eta.eta) +
                                ",4,2)DD filler for group size " + std::to_string(s));
        const DirectedDesign& f = *it->second;
        if (f.params.v != s + eta.eta)
            throw SizeMismatch("fill: filler for group size " + std::to_string(s) + " has v=" +
                               std::to_string(f.params.v) + ", need " + std::to_string(s + eta.eta));
        if (f.params.k != 4 || f.params.lambda != g.design.params.lambda)
            throw SizeMismatch("fill: filler for group size " + std::to_string(s) +
                               " is not a (v,4," + std::to_string(g.design.params.lambda) + ")DD");
        const std::vector<int> m = sorted_cell(cell);
        // Filler point i < s lands on the i-th smallest point of the group;
        // point s is the shared infinity.
        for (const Block& fb : f.blocks) {
            Block nb;
            nb.reserve(fb.size());
            for (int q : fb) {
                if (q >= 0 && q < s)
                    nb.push_back(m[q]);
                else if (q == s && eta.eta == 1)
                    nb.push_back(inf);
                else
                    throw SizeMismatch("fill: filler point " + std::to_string(q) +
                                       " outside group of size " + std::to_string(s));
            }
            out.blocks.push_back(std::move(nb));
        }
    }
    return out;
}

GroupedDesign delete_points(const GroupedDesign& td,
                            const std::vector<std::pair<int, int>>& deletions) {
    const int v = td.design.params.v;
    std::vector<char> removed(v, 0);
    std::vector<char> seen(td.groups.size(), 0);
    for (const auto& [gi, cnt] : deletions) {
        if (gi < 0 || gi >= static_cast<int>(td.groups.size()))
            throw EntryOutOfRange("delete: group index " + std::to_string(gi) + " out of range");
        if (seen[gi]) throw EntryOutOfRange("delete: group " + std::to_string(gi) + " listed twice");
        seen[gi] = 1;
        const std::vector<int> cell = sorted_cell(td.groups[gi]);
        if (cnt < 0 || cnt > static_cast<int>(cell.size()))
            throw EntryOutOfRange("delete: count " + std::to_string(cnt) + " exceeds group size " +
                                  std::to_string(cell.size()));
        for (int t = 0; t < cnt; ++t) removed[cell[cell.size() - 1 - t]] = 1;
    }

    std::vector<int> newlabel(v, -1);
    int nv = 0;
    for (int p = 0; p < v; ++p)
        if (!removed[p]) newlabel[p] = nv++;

    GroupedDesign out;
    out.directed = td.directed;
    out.design.params.lambda = td.design.params.lambda;
    out.design.params.v = nv;
    int maxk = 0;
    for (const Block& b : td.design.blocks) {
        Block nb;
        nb.reserve(b.size());
        for (int q : b)
            if (!removed[q]) nb.push_back(newlabel[q]);
        if (nb.size() < 4) {
            std::string bs;
            for (int q : b) bs += (bs.empty() ? "" : ",") + std::to_string(q);
            throw BlockTooSmall("delete: block (" + bs + ") falls to size " +
                                std::to_string(nb.size()));
        }
        maxk = std::max(maxk, static_cast<int>(nb.size()));
        out.design.blocks.push_back(std::move(nb));
    }
    out.design.params.k = maxk > 0 ? maxk : td.design.params.k;
    for (const auto& cell : td.groups) {
        std::vector<int> nc;
        for (int q : cell)
            if (!removed[q]) nc.push_back(newlabel[q]);
        if (nc.empty()) continue;
        std::sort(nc.begin(), nc.end());
        out.groups.push_back(std::move(nc));
    }
    return out;
}

BoundCertificate compose_fill_certificate(const GroupedDesign& g, const FillSpec& eta,
                                          const BoundCertificate& master_cert,
                                          const std::vector<BoundCertificate>& filler_certs) {
    if (eta.eta != 0 && eta.eta != 1) throw SizeMismatch("compose: eta must be 0 or 1");
    if (filler_certs.size() != g.groups.size())
        throw SizeMismatch("compose: " + std::to_string(filler_certs.size()) +
                           " filler certificates for " + std::to_string(g.groups.size()) + " groups");
    const long long master_blocks = static_cast<long long>(g.design.blocks.size());
    if (master_cert.total_blocks != master_blocks)
        throw InvalidCertificate("compose: master certificate covers " +
                                 std::to_string(master_cert.total_blocks) + " blocks, design has " +
                                 std::to_string(master_blocks));

    BoundCertificate out;
    out.edges = master_cert.edges;
    out.cycles = master_cert.cycles;
    const int inf = g.design.params.v + eta.eta - 1;
    long long off = master_blocks;
    for (std::size_t t = 0; t < filler_certs.size(); ++t) {
        const BoundCertificate& fc = filler_certs[t];
        const std::vector<int> m = sorted_cell(g.groups[t]);
        const int s = static_cast<int>(m.size());
        auto mapped = [&](int p) -> int {
            if (p >= 0 && p < s) return m[p];
            if (p == s && eta.eta == 1) return inf;
            throw InvalidCertificate("compose: swap point " + std::to_string(p) +
                                     " outside filler range for group " + std::to_string(t));
        };
        for (const TradePair& e : fc.edges)
            out.edges.push_back({static_cast<int>(e.i + off), static_cast<int>(e.j + off),
                                 mapped(e.x), mapped(e.y)});
        for (CyclicalTrade c : fc.cycles) {
            for (int& b : c.blocks) b = static_cast<int>(b + off);
            out.cycles.push_back(std::move(c));
        }
        off += fc.total_blocks;
    }
    out.total_blocks = off;
    out.bound = certificate_bound(out);
    return out;
}

}  // namespace ssdd
