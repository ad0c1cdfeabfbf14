// Swirls: concentric edge-disjoint cycles of alternating orientation, the
// canonical swirl of an up-path tile, distances, jumps and flatness.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eedp/cross.hpp"
#include "eedp/oracle.hpp"
#include "eedp/wall.hpp"

namespace eedp {

struct Swirl {
    std::vector<Path> cycles;      // S_1 (inner) .. S_s (outer), closed trails
    std::vector<int> orientation;  // +1 / -1 per cycle
    std::optional<Tile> tile;      // tile whose corners sit on the outer cycle
    int order() const { return static_cast<int>(cycles.size()); }
};

struct CanonicalSwirl {
    Swirl grasped;  // simple rings
    Swirl induced;  // rings plus digons; contains the inner t-tile
    Tile outer;     // columns i0..i0+t; corners on the outer ring
    Tile inner;     // columns i0+1..i0+t
};

// Tile columns i0..i0+t and rows top..top+2t-1 (top odd, no wrap-around,
// column i0+t interior). Every coordinate of the tile must carry its
// up-path; throws std::invalid_argument otherwise (including any jump).
CanonicalSwirl canonical_swirl(const MatchedWall& mw, int i0, int top, int t);

// Rotation system of the wall plus all up-path matching edges of mw.
RotationSystem matched_rotation(const MatchedWall& mw);

// Closed trails, pairwise edge-disjoint, S_i and S_j vertex-disjoint when
// |i-j| > 1, nonzero alternating orientation. Empty when valid.
std::string check_swirl(const IncidenceDigraph& g, const Swirl& s, const RotationSystem& rot);
bool verify_swirl(const IncidenceDigraph& g, const Swirl& s, const RotationSystem& rot);
// The line graph of the swirl's edges carries each S_i as a cycle, pairwise
// vertex-disjoint. Empty when valid.
std::string check_line_graph_swirl(const IncidenceDigraph& g, const Swirl& s);

// Wall edges of a tile after dropping its degree-one corner vertices;
// optionally also the matching edges with both ends in it.
std::vector<EdgeId> tile_edges(const MatchedWall& mw, const Tile& t, bool withMatching = false);

// Chebyshev distance of two coordinate vertices on the swirl's tile.
int swirl_distance(const Wall& wall, const Swirl& s, VertexId x, VertexId y);
enum class SwirlJump { Short, Long };
const char* to_string(SwirlJump j);
// path must be an S-path: ends on S, no inner vertex on S, no edge of S.
SwirlJump classify_swirl_jump(const IncidenceDigraph& g, const Wall& wall, const Swirl& s, const Path& path);

// S[g]: the component of g - V(S_s) holding S_1, with every edge touching
// it, plus the outer cycle. Edge ids of g.
std::vector<EdgeId> attachment_extension(const IncidenceDigraph& g, const Swirl& s);
// Subgraph of g with the given edges (vertex ids kept).
IncidenceDigraph edge_subgraph(const IncidenceDigraph& g, const std::vector<EdgeId>& edges);
// No edge-disjoint diagonal pair between the corners of s.tile inside S[g].
// nullopt on oracle timeout.
std::optional<bool> swirl_is_flat(const IncidenceDigraph& g, const Wall& wall, const Swirl& s,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace eedp
