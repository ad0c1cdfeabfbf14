// Wall-local usable crosses induced by jumps and short jump-sequences.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eedp/wall.hpp"

namespace eedp {

// Columns L..R, rows top..bottom (no wrap-around).
struct Tile {
    int L = 0, R = 0, top = 0, bottom = 0;
    bool operator==(const Tile&) const = default;
};

struct TileCorners {
    VertexId tl = kNone, tr = kNone, bl = kNone, br = kNone;
};
// Top corners sit on x^+ when x^- has no in-edge inside the tile; bottom
// corners are always x^-.
TileCorners tile_corners(const Wall& wall, const Tile& t);

struct Cross {
    Tile tile;
    Path p1;  // top-left -> bottom-right
    Path p2;  // top-right -> bottom-left
    std::string route;
};

struct CrossResult {
    std::optional<Cross> cross;
    std::string error;
};

// Logical identity of an edge of a matched wall.
struct WallEdgeKey {
    enum Kind { Split, Down, Side, Match } kind = Split;
    int i = 0, p = 0;  // cell; for Match, i holds the matching index
};
std::vector<std::optional<WallEdgeKey>> wall_edge_keys(const MatchedWall& mw);

bool type0_in_margin(const Wall& wall, const JumpRecord& r);
// Tail of a Type I/II jump placed so that the sequence tile fits.
bool sequence_in_margin(const Wall& wall, const JumpRecord& r);

// Cross for a Type 0 jump in the interior margins.
CrossResult cross_from_jump(const MatchedWall& mw, int index);
// Cross for a Type I/II jump whose length-3 jump-sequence exists; delegates to
// the first Type 0 jump of the sequence when there is one.
CrossResult cross_from_sequence(const MatchedWall& mw, int start);

// Edge-disjoint trails, exact tile corners, every wall and matching edge
// inside the tile. Empty string when valid.
std::string validate_cross(const MatchedWall& mw, const Cross& c);

}  // namespace eedp
