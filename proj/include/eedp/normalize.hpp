// Degree normalization and small-cut reductions.
#pragma once

#include <optional>
#include <vector>

#include "eedp/graph.hpp"

namespace eedp {

// Non-terminals end with degree 4, terminals with degree 2 (supply+demands),
// and no vertex carries two demand incidences. Edge ids of rewired edges are
// kept; new vertices get fresh ids.
Instance normalize_degrees(const Instance& inst);
bool is_normal(const Instance& inst);

// Both throw std::invalid_argument when the preconditions fail.
Instance reduce_two_cut(const Instance& inst, const std::vector<VertexId>& X);
Instance reduce_four_cut(const Instance& inst, const std::vector<VertexId>& X);

struct SmallCut {
    int kind = 0;  // 2 or 4
    std::vector<VertexId> X;
};
std::optional<SmallCut> find_small_cut(const Instance& inst);
// Applies the matching reduction.
Instance apply_small_cut(const Instance& inst, const SmallCut& c);

struct SplitEdgeResult {
    Instance inst;
    VertexId ue = kNone;  // new head of (u, u_e)
    VertexId ve = kNone;  // new tail of (v_e, v)
};
// e = (u,v) becomes (u,u_e),(v_e,v); the original demands stay and (u_e, v_e)
// is added (sound whenever some solution avoids e).
SplitEdgeResult split_edge(const Instance& inst, EdgeId e);
// Demand i (whose path is meant to use e) is replaced by (u_e, s_i), (t_i, v_e).
SplitEdgeResult split_edge(const Instance& inst, EdgeId e, int demandIndex);

}  // namespace eedp
