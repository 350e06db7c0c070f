#pragma once
// Recursive constructions: TD inflation, weighting (block replacement),
// group filling, and point deletion. Outputs are never trusted — callers
// re-verify every result.

#include <map>
#include <utility>
#include <vector>

#include "ssdd/model.hpp"
#include "ssdd/trades.hpp"

namespace ssdd {

// Replaces each master point x by alpha points x*alpha..x*alpha+alpha-1; each
// master block crosses each TD transversal, position g of the TD inheriting
// tuple position g of the master block. Master may be a plain DD (then each
// point becomes its own group) or a directed DGDD (groups inflate cellwise).
// td must be a verified TD(k, alpha) with k = master block size.
GroupedDesign inflate_by_td(const DirectedDesign& master,
                            const std::vector<std::vector<int>>* master_groups,
                            const GroupedDesign& td);

// Uniform-weight Wilson construction: master is an undirected lambda=1 GDD
// with blocks of mixed arity; each block B of arity u is replaced by a copy
// of ingredients[u], a directed (4,2)-DGDD of group type w^u whose group j
// lands on master point B[j] (point x expands to [x*w, x*w + w)).
GroupedDesign weight_and_replace(const GroupedDesign& master, int w,
                                 const std::map<int, const GroupedDesign*>& ingredients);

// Fills each group G (plus a shared new point infinity = v_out - 1 when
// eta = 1) with a copy of fillers[|G|], a super-simple (|G|+eta,4,2)DD:
// filler point i < |G| maps to the i-th smallest point of G, filler point |G|
// maps to infinity. Output blocks = DGDD blocks then filler copies in group
// order.
DirectedDesign fill_groups(const GroupedDesign& g, const FillSpec& eta,
                           const std::map<int, const DirectedDesign*>& fillers);

// Removes the `count` highest points of each selected group, drops them from
// every block, drops empty groups, and compacts labels ascending. Blocks must
// keep size >= 4.
GroupedDesign delete_points(const GroupedDesign& td,
                            const std::vector<std::pair<int, int>>& deletions);

// Union of a filled design's certificates: the master DGDD's certificate plus
// one certificate per group in group order (the fill_groups layout). Block
// indices shift onto each copy's range; edge swap points relabel through the
// same point maps fill_groups uses. Valid whenever the inputs were: block
// ranges are disjoint by construction.
BoundCertificate compose_fill_certificate(const GroupedDesign& g, const FillSpec& eta,
                                          const BoundCertificate& master_cert,
                                          const std::vector<BoundCertificate>& filler_certs);

}  // namespace ssdd
