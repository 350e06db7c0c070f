#pragma once
// Volume-2 directed trades, the block-level trade graph, and verifiable
// defining-set lower-bound certificates (the d >= 1/2 arguments).
//
// A certificate packs block-disjoint structures: each TradePair forces 1
// block into any defining set, each CyclicalTrade of volume s forces
// ceil(s/2). Certificates are re-validated from scratch by certify_half.

#include <cstddef>
#include <string>
#include <vector>

#include "ssdd/catalog.hpp"
#include "ssdd/model.hpp"

namespace ssdd {

struct TradePair {
    int i = 0, j = 0;  // block indices
    int x = 0, y = 0;  // swap pair certifying the trade
};

struct CyclicalTrade {
    std::vector<int> blocks;  // cyclic order; consecutive blocks (wrapping) trade
};

struct BoundCertificate {
    std::vector<TradePair> edges;      // pairwise block-disjoint
    std::vector<CyclicalTrade> cycles;  // block-disjoint from each other and the edges
    long long bound = 0;               // |edges| + sum ceil(s/2)
    long long total_blocks = 0;        // for the d ratio bound/total
};

// True iff x,y occur in both tuples and transposing x<->y in both yields two
// blocks with the same 12-ordered-pair multiset, disjoint (as tuples) from
// the originals.
bool is_volume2_trade(const Block& b1, const Block& b2, int x, int y);

struct TradeGraph {
    std::size_t block_count = 0;
    std::vector<TradePair> edges;  // i < j, sorted, one witness per edge
};

// Edge (i,j) iff some swap pair {x,y} certifies a trade; candidates share
// >= 2 points. The witnessing {x,y} is the lexicographically first.
TradeGraph find_block_trades(const DirectedDesign& d);

// Base-block-level scan of a cyclically developed entry: pairings between
// orbits (n disjoint edges each), self-loop offsets (gcd(n,s) cycles of
// volume n/gcd), and odd orbit-cycles (bonus +gcd/2 when the block cycles
// have odd volume). Deterministic exact packing over these structures.
// Block indices refer to development order (base-major: base*n + shift).
BoundCertificate orbit_trade_scan(const CatalogEntry& entry);

// Revalidates every edge and cycle against d's blocks, recomputes the bound,
// and returns true iff bound >= ceil(|blocks|/2). Throws InvalidCertificate
// on structural violations (bad index, reused block, non-trade).
bool certify_half(const DirectedDesign& d, const BoundCertificate& cert);

// Fallback for designs without cyclic structure: exact on path/cycle/edge
// components of the trade graph, greedy-augmented matching elsewhere.
BoundCertificate generic_bound(const DirectedDesign& d);

// Serialization as '%' comment lines: %CERT, %E i j x y, %C i1 ... is,
// %BOUND n. order_map[written_pos] = in-memory index (as from sorted_order);
// indices in the emitted lines refer to written positions.
std::vector<std::string> certificate_comments(const BoundCertificate& cert,
                                              const std::vector<std::size_t>& order_map);

// Parses %CERT comment lines (as produced above). total_blocks is left 0.
BoundCertificate parse_certificate(const std::vector<std::string>& comments);

// bound = |edges| + sum ceil(volume/2); no validation.
long long certificate_bound(const BoundCertificate& cert);

}  // namespace ssdd
