#include "ssdd/trades.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ssdd/develop.hpp"
#include "ssdd/io.hpp"

namespace ssdd {

namespace {

bool contains(const Block& b, int p) { return std::find(b.begin(), b.end(), p) != b.end(); }

Block transpose(const Block& b, int x, int y) {
    Block t = b;
    for (int& p : t) {
        if (p == x)
            p = y;
        else if (p == y)
            p = x;
    }
    return t;
}

void append_ordered_pairs(const Block& b, std::vector<std::pair<int, int>>& out) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) out.emplace_back(b[i], b[j]);
}

// Common points of two blocks, ascending.
std::vector<int> common_points(const Block& a, const Block& b) {
    std::vector<int> out;
    for (int p : a)
        if (contains(b, p)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

// First swap pair {x<y} certifying a trade between b1 and b2, or nullopt.
std::optional<std::pair<int, int>> find_swap(const Block& b1, const Block& b2) {
    std::vector<int> common = common_points(b1, b2);
    for (std::size_t a = 0; a < common.size(); ++a)
        for (std::size_t b = a + 1; b < common.size(); ++b)
            if (is_volume2_trade(b1, b2, common[a], common[b]))
                return std::make_pair(common[a], common[b]);
    return std::nullopt;
}

}  // namespace

bool is_volume2_trade(const Block& b1, const Block& b2, int x, int y) {
    if (x == y || b1 == b2) return false;
    if (!contains(b1, x) || !contains(b1, y) || !contains(b2, x) || !contains(b2, y)) return false;
    Block t1 = transpose(b1, x, y);
    Block t2 = transpose(b2, x, y);
    if (t1 == b1 || t1 == b2 || t2 == b1 || t2 == b2) return false;
    std::vector<std::pair<int, int>> before, after;
    append_ordered_pairs(b1, before);
    append_ordered_pairs(b2, before);
    append_ordered_pairs(t1, after);
    append_ordered_pairs(t2, after);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    return before == after;
}

TradeGraph find_block_trades(const DirectedDesign& d) {
    TradeGraph g;
    g.block_count = d.blocks.size();
    // Bucket blocks by the unordered pairs they cover; only blocks sharing a
    // pair can share >= 2 points.
    const long long v = std::max(1, d.params.v);
    std::unordered_map<long long, std::vector<int>> buckets;
    buckets.reserve(d.blocks.size() * 6);
    for (std::size_t idx = 0; idx < d.blocks.size(); ++idx) {
        const Block& b = d.blocks[idx];
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                long long x = std::min(b[i], b[j]), y = std::max(b[i], b[j]);
                buckets[x * v + y].push_back(static_cast<int>(idx));
            }
    }
    std::vector<std::pair<int, int>> candidates;
    for (const auto& [key, ids] : buckets) {
        (void)key;
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                candidates.emplace_back(std::min(ids[a], ids[b]), std::max(ids[a], ids[b]));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto [i, j] : candidates) {
        auto swap = find_swap(d.blocks[static_cast<std::size_t>(i)],
                              d.blocks[static_cast<std::size_t>(j)]);
        if (swap) g.edges.push_back({i, j, swap->first, swap->second});
    }
    return g;
}

// ---------------------------------------------------------------------------
// Orbit-level scan: exact deterministic packing of pairings, loops, and odd
// orbit-cycles. All contributions are doubled so shares stay integral.
// ---------------------------------------------------------------------------

namespace {

struct OrbitStructures {
    int m = 0;  // orbit count
    int n = 0;  // modulus
    // (i<j) -> offsets s with (B_i, B_j + s) a trade.
    std::map<std::pair<int, int>, std::vector<int>> pair_offsets;
    // i -> offsets s != 0 with (B_i, B_i + s) a trade.
    std::map<int, std::vector<int>> loop_offsets;
};

OrbitStructures scan_orbit_edges(const std::vector<Block>& bases, int n) {
    OrbitStructures os;
    os.m = static_cast<int>(bases.size());
    os.n = n;
    for (int i = 0; i < os.m; ++i)
        for (int j = i; j < os.m; ++j) {
            std::vector<int> offs;
            for (int s = 0; s < n; ++s) {
                if (i == j && s == 0) continue;
                Block b2 = shift(bases[static_cast<std::size_t>(j)], s, n);
                if (find_swap(bases[static_cast<std::size_t>(i)], b2)) offs.push_back(s);
            }
            if (offs.empty()) continue;
            if (i == j)
                os.loop_offsets[i] = std::move(offs);
            else
                os.pair_offsets[{i, j}] = std::move(offs);
        }
    return os;
}

long long loop_contrib(int n, const std::vector<int>& offs, int* best_s = nullptr) {
    long long best = 0;
    for (int s : offs) {
        int g = std::gcd(n, s);
        long long c = 1LL * g * ((n / g + 1) / 2);
        if (c > best) {
            best = c;
            if (best_s) *best_s = s;
        }
    }
    return best;
}

// Directed offset sets along a cycle's edges.
std::vector<std::vector<int>> cycle_offset_sets(const OrbitStructures& os,
                                                const std::vector<int>& cyc) {
    const int k = static_cast<int>(cyc.size());
    std::vector<std::vector<int>> sets;
    for (int t = 0; t < k; ++t) {
        int a = cyc[static_cast<std::size_t>(t)], b = cyc[static_cast<std::size_t>((t + 1) % k)];
        if (a < b) {
            sets.push_back(os.pair_offsets.at({a, b}));
        } else {
            std::vector<int> neg;
            for (int s : os.pair_offsets.at({b, a})) neg.push_back((os.n - s) % os.n);
            std::sort(neg.begin(), neg.end());
            sets.push_back(std::move(neg));
        }
    }
    return sets;
}

long long cycle_metric(int n, int k, int S) {
    int g = (S == 0) ? n : std::gcd(n, S);
    long long vol = 1LL * k * n / g;
    return g * ((vol + 1) / 2);
}

// Best doubled... no: best (undoubled) contribution of a k-cycle, plus the
// offset-sum S achieving it (smallest such S).
long long cycle_contrib(int n, const std::vector<std::vector<int>>& sets, int* best_S = nullptr) {
    const int k = static_cast<int>(sets.size());
    std::vector<char> reach(static_cast<std::size_t>(n), 0);
    reach[0] = 1;
    for (const auto& offs : sets) {
        std::vector<char> next(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a)
            if (reach[static_cast<std::size_t>(a)])
                for (int s : offs) next[static_cast<std::size_t>((a + s) % n)] = 1;
        reach = std::move(next);
    }
    long long best = 1LL * k * n / 2;
    if (best_S) *best_S = -1;
    for (int S = 0; S < n; ++S) {
        if (!reach[static_cast<std::size_t>(S)]) continue;
        long long c = cycle_metric(n, k, S);
        if (c > best) {
            best = c;
            if (best_S) *best_S = S;
        }
    }
    return best;
}

// Canonical simple odd cycles (length 3..maxlen) in the orbit adjacency.
std::vector<std::vector<int>> find_odd_cycles(const OrbitStructures& os, int maxlen) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(os.m));
    for (const auto& [ij, offs] : os.pair_offsets) {
        (void)offs;
        adj[static_cast<std::size_t>(ij.first)].push_back(ij.second);
        adj[static_cast<std::size_t>(ij.second)].push_back(ij.first);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::set<std::vector<int>> cycles;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (u == start && path.size() >= 3 && path.size() % 2 == 1) {
                std::vector<int> rev;
                rev.push_back(path[0]);
                for (std::size_t t = path.size(); t > 1; --t) rev.push_back(path[t - 1]);
                cycles.insert(std::min(path, rev));
            } else if (u > start && std::find(path.begin(), path.end(), u) == path.end() &&
                       static_cast<int>(path.size()) < maxlen) {
                path.push_back(u);
                self(self, start, u);
                path.pop_back();
            }
        }
    };
    for (int v = 0; v < os.m; ++v) {
        path.assign(1, v);
        dfs(dfs, v, v);
    }
    return {cycles.begin(), cycles.end()};
}

struct PackOption {
    char type = 'P';          // 'P' pairing, 'C' odd cycle, 'L' loop
    std::vector<int> orbits;  // P: {i,j}; C: cycle list; L: {i}
    long long contrib2 = 0;   // doubled bound contribution
};

struct Packer {
    const OrbitStructures& os;
    std::vector<PackOption> cycles;                      // bonus-bearing odd cycles
    std::map<int, std::vector<std::size_t>> cycles_via;  // min orbit -> cycle idx
    std::map<int, long long> loop2;                      // orbit -> doubled loop contribution
    long long opt2_share = 0;                            // max doubled share per orbit
    std::unordered_map<unsigned long long, long long> memo;
    long long best = 0;
    std::vector<PackOption> best_struct, cur;

    explicit Packer(const OrbitStructures& s) : os(s) {}

    void search(unsigned long long consumed, long long acc2) {
        int rem = os.m - __builtin_popcountll(consumed);
        if (acc2 + rem * opt2_share <= best) return;
        auto it = memo.find(consumed);
        if (it != memo.end() && acc2 <= it->second) return;
        memo[consumed] = acc2;
        int v = -1;
        for (int x = 0; x < os.m; ++x)
            if (!(consumed >> x & 1)) {
                v = x;
                break;
            }
        if (v < 0) {
            if (acc2 > best) {
                best = acc2;
                best_struct = cur;
            }
            return;
        }
        for (const auto& [ij, offs] : os.pair_offsets) {
            (void)offs;
            if (ij.first != v || (consumed >> ij.second & 1)) continue;
            cur.push_back({'P', {v, ij.second}, 2LL * os.n});
            search(consumed | 1ULL << v | 1ULL << ij.second, acc2 + 2LL * os.n);
            cur.pop_back();
        }
        auto cit = cycles_via.find(v);
        if (cit != cycles_via.end())
            for (std::size_t ci : cit->second) {
                const PackOption& opt = cycles[ci];
                unsigned long long mask = consumed;
                bool free = true;
                for (int u : opt.orbits) {
                    if (consumed >> u & 1) free = false;
                    mask |= 1ULL << u;
                }
                if (!free) continue;
                cur.push_back(opt);
                search(mask, acc2 + opt.contrib2);
                cur.pop_back();
            }
        auto lit = loop2.find(v);
        if (lit != loop2.end()) {
            cur.push_back({'L', {v}, lit->second});
            search(consumed | 1ULL << v, acc2 + lit->second);
            cur.pop_back();
        }
        search(consumed | 1ULL << v, acc2);  // leave orbit unused
    }
};

// Reconstruct a concrete offset vector for a cycle achieving sum S (or any
// vector when S < 0), choosing lexicographically smallest offsets.
std::vector<int> pick_cycle_offsets(int n, const std::vector<std::vector<int>>& sets, int S) {
    const int k = static_cast<int>(sets.size());
    // suffix_reach[t][a]: stages t..k-1 can add a (mod n).
    std::vector<std::vector<char>> suffix(static_cast<std::size_t>(k + 1),
                                          std::vector<char>(static_cast<std::size_t>(n), 0));
    suffix[static_cast<std::size_t>(k)][0] = 1;
    for (int t = k - 1; t >= 0; --t)
        for (int a = 0; a < n; ++a)
            if (suffix[static_cast<std::size_t>(t + 1)][static_cast<std::size_t>(a)])
                for (int s : sets[static_cast<std::size_t>(t)])
                    suffix[static_cast<std::size_t>(t)][static_cast<std::size_t>((a + s) % n)] = 1;
    int target = S;
    if (target < 0) {
        // No bonus sum required: take the smallest reachable total.
        for (int a = 0; a < n; ++a)
            if (suffix[0][static_cast<std::size_t>(a)]) {
                target = a;
                break;
            }
    }
    std::vector<int> chosen;
    int cur = target;
    for (int t = 0; t < k; ++t) {
        for (int s : sets[static_cast<std::size_t>(t)]) {
            int rest = ((cur - s) % n + n) % n;
            if (suffix[static_cast<std::size_t>(t + 1)][static_cast<std::size_t>(rest)]) {
                chosen.push_back(s);
                cur = rest;
                break;
            }
        }
    }
    return chosen;
}

}  // namespace

BoundCertificate orbit_trade_scan(const CatalogEntry& entry) {
    if (entry.modulus <= 0) throw NotDeveloped("entry '" + entry.id + "' has no modulus");
    const int n = entry.modulus;
    const std::vector<Block>& bases = entry.base_blocks;
    const int m = static_cast<int>(bases.size());

    OrbitStructures os = scan_orbit_edges(bases, n);
    Packer packer(os);
    for (const auto& [i, offs] : os.loop_offsets) packer.loop2[i] = 2 * loop_contrib(n, offs);
    for (const auto& cyc : find_odd_cycles(os, 7)) {
        auto sets = cycle_offset_sets(os, cyc);
        long long c = cycle_contrib(n, sets);
        if (2 * c > 1LL * static_cast<long long>(cyc.size()) * n)
            packer.cycles.push_back({'C', cyc, 2 * c});
    }
    for (std::size_t ci = 0; ci < packer.cycles.size(); ++ci)
        packer.cycles_via[packer.cycles[ci].orbits.front()].push_back(ci);

    packer.opt2_share = 0;
    if (!os.pair_offsets.empty()) packer.opt2_share = n;
    for (const auto& [i, c2] : packer.loop2) {
        (void)i;
        packer.opt2_share = std::max(packer.opt2_share, c2);
    }
    for (const auto& opt : packer.cycles)
        packer.opt2_share =
            std::max(packer.opt2_share, opt.contrib2 / static_cast<long long>(opt.orbits.size()));

    packer.search(0, 0);

    // Materialize the chosen structures as block-level edges and cycles.
    // Block index = base*n + shift (development order).
    BoundCertificate cert;
    cert.total_blocks = 1LL * m * n;
    for (const PackOption& opt : packer.best_struct) {
        if (opt.type == 'P') {
            int i = opt.orbits[0], j = opt.orbits[1];
            const auto& offs = os.pair_offsets.at({i, j});
            int s = offs.front();
            Block shifted = shift(bases[static_cast<std::size_t>(j)], s, n);
            auto swap = find_swap(bases[static_cast<std::size_t>(i)], shifted);
            for (int r = 0; r < n; ++r)
                cert.edges.push_back({i * n + r, j * n + (r + s) % n, (swap->first + r) % n,
                                      (swap->second + r) % n});
        } else if (opt.type == 'L') {
            int i = opt.orbits[0];
            int s = 0;
            loop_contrib(n, os.loop_offsets.at(i), &s);
            int g = std::gcd(n, s);
            for (int c = 0; c < g; ++c) {
                CyclicalTrade cyc;
                for (int t = 0; t < n / g; ++t) cyc.blocks.push_back(i * n + (c + t * s) % n);
                cert.cycles.push_back(std::move(cyc));
            }
        } else {
            const std::vector<int>& orbits = opt.orbits;
            const int k = static_cast<int>(orbits.size());
            auto sets = cycle_offset_sets(os, orbits);
            int S = -1;
            cycle_contrib(n, sets, &S);
            std::vector<int> offs = pick_cycle_offsets(n, sets, S);
            int sum = 0;
            for (int s : offs) sum = (sum + s) % n;
            int g = (sum == 0) ? n : std::gcd(n, sum);
            int vol = k * n / g;
            for (int c = 0; c < g; ++c) {
                CyclicalTrade cyc;
                int r = c;
                for (int t = 0; t < vol; ++t) {
                    cyc.blocks.push_back(orbits[static_cast<std::size_t>(t % k)] * n + r);
                    r = (r + offs[static_cast<std::size_t>(t % k)]) % n;
                }
                cert.cycles.push_back(std::move(cyc));
            }
        }
    }
    cert.bound = certificate_bound(cert);
    return cert;
}

long long certificate_bound(const BoundCertificate& cert) {
    long long bound = static_cast<long long>(cert.edges.size());
    for (const auto& c : cert.cycles) bound += (static_cast<long long>(c.blocks.size()) + 1) / 2;
    return bound;
}

bool certify_half(const DirectedDesign& d, const BoundCertificate& cert) {
    const long long total = static_cast<long long>(d.blocks.size());
    std::set<int> used;
    auto claim = [&](int idx, const std::string& where) {
        if (idx < 0 || idx >= total)
            throw InvalidCertificate(where + ": block index " + std::to_string(idx) +
                                     " outside [0," + std::to_string(total) + ")");
        if (!used.insert(idx).second)
            throw InvalidCertificate(where + ": block " + std::to_string(idx) + " used twice");
    };
    for (std::size_t e = 0; e < cert.edges.size(); ++e) {
        const TradePair& tp = cert.edges[e];
        const std::string where = "edge " + std::to_string(e);
        claim(tp.i, where);
        claim(tp.j, where);
        if (!is_volume2_trade(d.blocks[static_cast<std::size_t>(tp.i)],
                              d.blocks[static_cast<std::size_t>(tp.j)], tp.x, tp.y))
            throw InvalidCertificate(where + ": blocks " + std::to_string(tp.i) + "," +
                                     std::to_string(tp.j) + " do not trade on {" +
                                     std::to_string(tp.x) + "," + std::to_string(tp.y) + "}");
    }
    for (std::size_t c = 0; c < cert.cycles.size(); ++c) {
        const auto& blocks = cert.cycles[c].blocks;
        const std::string where = "cycle " + std::to_string(c);
        if (blocks.size() < 2) throw InvalidCertificate(where + ": volume < 2");
        for (int idx : blocks) claim(idx, where);
        for (std::size_t t = 0; t < blocks.size(); ++t) {
            int a = blocks[t], b = blocks[(t + 1) % blocks.size()];
            if (!find_swap(d.blocks[static_cast<std::size_t>(a)],
                           d.blocks[static_cast<std::size_t>(b)]))
                throw InvalidCertificate(where + ": consecutive blocks " + std::to_string(a) +
                                         "," + std::to_string(b) + " do not trade");
        }
    }
    return certificate_bound(cert) >= (total + 1) / 2;
}

// ---------------------------------------------------------------------------
// Generic fallback: exact on edge/path/cycle components, greedy-augmented
// matching elsewhere.
// ---------------------------------------------------------------------------

namespace {

// Kuhn-style augmentation without blossom contraction; may miss augmenting
// paths through odd cycles, never produces an invalid matching. Every vertex
// touched in either role is marked visited, so the alternating path stays
// vertex-disjoint and the mate array stays an involution.
bool augment_from(int v, const std::vector<std::vector<int>>& adj, std::vector<int>& mate,
                  std::vector<char>& visited) {
    visited[static_cast<std::size_t>(v)] = 1;
    for (int u : adj[static_cast<std::size_t>(v)]) {
        if (visited[static_cast<std::size_t>(u)]) continue;
        visited[static_cast<std::size_t>(u)] = 1;
        int w = mate[static_cast<std::size_t>(u)];
        if (w == -1 || (!visited[static_cast<std::size_t>(w)] && augment_from(w, adj, mate, visited))) {
            mate[static_cast<std::size_t>(v)] = u;
            mate[static_cast<std::size_t>(u)] = v;
            return true;
        }
    }
    return false;
}

}  // namespace

BoundCertificate generic_bound(const DirectedDesign& d) {
    TradeGraph graph = find_block_trades(d);
    const std::size_t b = graph.block_count;
    std::vector<std::vector<int>> adj(b);
    std::map<std::pair<int, int>, std::pair<int, int>> swap_of;
    for (const auto& e : graph.edges) {
        adj[static_cast<std::size_t>(e.i)].push_back(e.j);
        adj[static_cast<std::size_t>(e.j)].push_back(e.i);
        swap_of[{e.i, e.j}] = {e.x, e.y};
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    BoundCertificate cert;
    cert.total_blocks = static_cast<long long>(b);
    std::vector<char> visited(b, 0);
    std::vector<int> other_vertices;  // non-path/cycle components pooled for matching

    auto emit_edge = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        auto [x, y] = swap_of.at({i, j});
        cert.edges.push_back({i, j, x, y});
    };

    for (std::size_t start = 0; start < b; ++start) {
        if (visited[start]) continue;
        // BFS component.
        std::vector<int> comp{static_cast<int>(start)};
        visited[start] = 1;
        for (std::size_t q = 0; q < comp.size(); ++q)
            for (int u : adj[static_cast<std::size_t>(comp[q])])
                if (!visited[static_cast<std::size_t>(u)]) {
                    visited[static_cast<std::size_t>(u)] = 1;
                    comp.push_back(u);
                }
        if (comp.size() == 1) continue;
        std::size_t edge_count = 0;
        int max_deg = 0;
        for (int v : comp) {
            edge_count += adj[static_cast<std::size_t>(v)].size();
            max_deg = std::max(max_deg, static_cast<int>(adj[static_cast<std::size_t>(v)].size()));
        }
        edge_count /= 2;
        std::sort(comp.begin(), comp.end());
        if (max_deg <= 2 && edge_count == comp.size() - 1) {
            // Path: walk from the smallest endpoint, take alternating edges.
            int end = -1;
            for (int v : comp)
                if (adj[static_cast<std::size_t>(v)].size() <= 1) {
                    end = v;
                    break;
                }
            std::vector<int> order{end};
            int prev = -1, cur = end;
            while (order.size() < comp.size()) {
                for (int u : adj[static_cast<std::size_t>(cur)])
                    if (u != prev) {
                        order.push_back(u);
                        prev = cur;
                        cur = u;
                        break;
                    }
            }
            for (std::size_t t = 0; t + 1 < order.size(); t += 2) emit_edge(order[t], order[t + 1]);
        } else if (max_deg == 2 && edge_count == comp.size()) {
            // Cycle: orient from the smallest vertex toward its smaller neighbor.
            int startv = comp.front();
            CyclicalTrade cyc;
            cyc.blocks.push_back(startv);
            int prev = startv, cur = adj[static_cast<std::size_t>(startv)].front();
            while (cur != startv) {
                cyc.blocks.push_back(cur);
                for (int u : adj[static_cast<std::size_t>(cur)])
                    if (u != prev) {
                        prev = cur;
                        cur = u;
                        break;
                    }
            }
            cert.cycles.push_back(std::move(cyc));
        } else {
            for (int v : comp) other_vertices.push_back(v);
        }
    }

    if (!other_vertices.empty()) {
        std::vector<int> mate(b, -1);
        // Greedy seed over sorted edges, then augmentation passes.
        std::sort(other_vertices.begin(), other_vertices.end());
        std::set<int> pool(other_vertices.begin(), other_vertices.end());
        for (const auto& e : graph.edges)
            if (pool.count(e.i) && pool.count(e.j) && mate[static_cast<std::size_t>(e.i)] == -1 &&
                mate[static_cast<std::size_t>(e.j)] == -1) {
                mate[static_cast<std::size_t>(e.i)] = e.j;
                mate[static_cast<std::size_t>(e.j)] = e.i;
            }
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v : other_vertices)
                if (mate[static_cast<std::size_t>(v)] == -1) {
                    std::vector<char> visited(b, 0);
                    if (augment_from(v, adj, mate, visited)) improved = true;
                }
        }
        for (int v : other_vertices)
            if (mate[static_cast<std::size_t>(v)] > v)
                emit_edge(v, mate[static_cast<std::size_t>(v)]);
    }

    std::sort(cert.edges.begin(), cert.edges.end(),
              [](const TradePair& a, const TradePair& b2) {
                  return std::tie(a.i, a.j) < std::tie(b2.i, b2.j);
              });
    cert.bound = certificate_bound(cert);
    return cert;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::vector<std::string> certificate_comments(const BoundCertificate& cert,
                                              const std::vector<std::size_t>& order_map) {
    std::vector<std::size_t> inv(order_map.size());
    for (std::size_t pos = 0; pos < order_map.size(); ++pos) inv[order_map[pos]] = pos;
    auto remap = [&](int idx) -> long long {
        return static_cast<long long>(inv[static_cast<std::size_t>(idx)]);
    };
    std::vector<std::string> out{"%CERT"};
    std::vector<std::array<long long, 4>> edges;
    for (const auto& e : cert.edges) {
        long long i = remap(e.i), j = remap(e.j);
        if (i > j) std::swap(i, j);
        edges.push_back({i, j, std::min(e.x, e.y), std::max(e.x, e.y)});
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges)
        out.push_back("%E " + std::to_string(e[0]) + " " + std::to_string(e[1]) + " " +
                      std::to_string(e[2]) + " " + std::to_string(e[3]));
    std::vector<std::vector<long long>> cycles;
    for (const auto& c : cert.cycles) {
        std::vector<long long> ids;
        for (int idx : c.blocks) ids.push_back(remap(idx));
        // Canonical rotation: smallest id first, lexicographically smaller direction.
        std::size_t s = ids.size();
        std::size_t at = static_cast<std::size_t>(
            std::min_element(ids.begin(), ids.end()) - ids.begin());
        std::vector<long long> fwd, rev;
        for (std::size_t t = 0; t < s; ++t) fwd.push_back(ids[(at + t) % s]);
        for (std::size_t t = 0; t < s; ++t) rev.push_back(ids[(at + s - t) % s]);
        cycles.push_back(std::min(fwd, rev));
    }
    std::sort(cycles.begin(), cycles.end());
    for (const auto& c : cycles) {
        std::string line = "%C";
        for (long long idx : c) line += " " + std::to_string(idx);
        out.push_back(line);
    }
    out.push_back("%BOUND " + std::to_string(certificate_bound(cert)));
    return out;
}

BoundCertificate parse_certificate(const std::vector<std::string>& comments) {
    BoundCertificate cert;
    bool in_cert = false, closed = false;
    for (const auto& line : comments) {
        if (line == "%CERT") {
            if (in_cert || closed) throw ParseError("duplicate %CERT block");
            in_cert = true;
            continue;
        }
        if (!in_cert) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "%E") {
            TradePair e;
            if (!(ss >> e.i >> e.j >> e.x >> e.y)) throw ParseError("bad %E line: " + line);
            std::string rest;
            if (ss >> rest) throw ParseError("trailing data on %E line: " + line);
            cert.edges.push_back(e);
        } else if (tag == "%C") {
            CyclicalTrade c;
            int idx;
            while (ss >> idx) c.blocks.push_back(idx);
            if (c.blocks.size() < 2) throw ParseError("bad %C line: " + line);
            cert.cycles.push_back(std::move(c));
        } else if (tag == "%BOUND") {
            if (!(ss >> cert.bound)) throw ParseError("bad %BOUND line: " + line);
            in_cert = false;
            closed = true;
        }
        // Other comment lines inside the block are ignored.
    }
    if (in_cert) throw ParseError("%CERT block missing %BOUND terminator");
    if (!closed) throw ParseError("no %CERT block found");
    return cert;
}

}  // namespace ssdd
