// Routers: edge-disjoint cycles that pairwise share a vertex. Includes the
// cross-column threading that certifies one inside a tall wall.
#pragma once

#include <string>
#include <vector>

#include "eedp/wall.hpp"

namespace eedp {

struct Router {
    std::vector<Path> cycles;
    std::vector<VertexId> branching;  // optional; b_i on cycle i when present
    int order() const { return static_cast<int>(cycles.size()); }
};

// Closed trails, pairwise edge-disjoint, pairwise sharing a vertex, and a
// branching set (if any) of distinct vertices b_i on C_i. Empty when valid.
std::string check_router(const IncidenceDigraph& g, const Router& r);
bool verify_router(const IncidenceDigraph& g, const Router& r);

// Distinct b_i on C_i avoiding `exclude`, lowest ids preferred (bipartite
// matching); empty if none exists.
std::vector<VertexId> choose_branching(const IncidenceDigraph& g, const Router& r,
                                       const std::vector<VertexId>& exclude = {});

// Strand patterns: a permutation of 1..t with 0 standing for the gap.
using Pattern = std::vector<int>;
Pattern initial_pattern(int t);  // (1, .., t-1, gap, t)
// (.., c_l, gap, c_{l+1}, ..) -> (.., gap, c_{l+1}, c_l, ..); needs l >= 1.
Pattern shift_pattern(const Pattern& pi);
// (gap, a_1, .., a_t) -> (a_1, .., a_{t-1}, gap, a_t).
Pattern reset_pattern(const Pattern& pi);
// Pattern at the start of blocks 1..t^2, then the final one (== initial).
std::vector<Pattern> router_patterns(int t);

// Wall with 2t columns and 2t^3 rows plus t^2 crossing paths, P_j from
// x^-_{t+1, 2t(j-1)+1} to x^+_{t, 2tj}, each through `inner` fresh vertices.
struct CrossColumn {
    IncidenceDigraph g;
    Wall wall;
    int t = 0;
    std::vector<Path> paths;
};
CrossColumn cross_column_config(int t, int inner = 1);
std::string check_cross_column(const IncidenceDigraph& g, const Wall& wall,
                               const std::vector<Path>& paths);

// Threads t strands through the blocks; block j uses P_j to let the bubbled
// strand overtake its neighbour. Throws std::invalid_argument on malformed P.
Router router_from_cross_column(const IncidenceDigraph& g, const Wall& wall,
                                const std::vector<Path>& paths);

}  // namespace eedp
