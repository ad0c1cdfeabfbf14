// Cylindrical grids and walls: coordinates, rotation system, coordinate
// matchings, Eulerian closure and jumps.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eedp/graph.hpp"

namespace eedp {

enum class Sign { Minus, Plus };

struct Coord {
    int i = 0;  // column (cycle W_i)
    int p = 0;  // row (path H_p)
    Sign s = Sign::Minus;
    auto operator<=>(const Coord&) const = default;
};
std::string to_string(const Coord& c);

// Cylindrical grid G_k: k cycles of length 2k joined by 2k rows.
struct Grid {
    IncidenceDigraph g;
    int k = 0;
    std::vector<VertexId> at;  // at[(i-1)*2k + (p-1)]
    std::vector<Path> cycles;  // W_1..W_k, each starting at row 1
    std::vector<Path> rows;    // H_1..H_2k as vertex-disjoint paths
    VertexId vertex(int i, int p) const { return at.at((i - 1) * 2 * k + (p - 1)); }
};
Grid build_elementary_grid(int k);

// Wall with nc columns W_1..W_nc (directed by increasing row) and nh rows
// H_1..H_nh (nh even; odd rows run W_1 -> W_nc, even rows back). Interior
// cells are split into x^- -> x^+; the two boundary columns keep a single
// vertex per cell. Every logical wall edge is a path in the host graph (one
// edge for an elementary wall).
struct Wall {
    int nc = 0;
    int nh = 0;
    std::vector<VertexId> in, out;  // by cell; equal on boundary columns
    std::vector<std::vector<EdgeId>> split;  // in(i,p) -> out(i,p); empty on boundary
    std::vector<std::vector<EdgeId>> down;   // out(i,p) -> in(i,p+1)
    std::vector<std::vector<EdgeId>> side;   // row p between columns i and i+1

    int row(int p) const { return ((p - 1) % nh + nh) % nh + 1; }
    int cell(int i, int p) const { return (i - 1) * nh + (row(p) - 1); }
    bool interior(int i) const { return i > 1 && i < nc; }
    bool valid_column(int i) const { return i >= 1 && i <= nc; }
    VertexId in_vertex(int i, int p) const { return in.at(cell(i, p)); }
    VertexId out_vertex(int i, int p) const { return out.at(cell(i, p)); }
    // Whether (i,p) carries an in-coordinate / out-coordinate.
    bool has_in(int i, int p) const;
    bool has_out(int i, int p) const;
    VertexId vertex(const Coord& c) const;  // kNone if the coordinate is absent
    std::optional<Coord> coord_of(VertexId v) const;
    std::vector<Coord> in_coords() const;
    std::vector<Coord> out_coords() const;
    std::vector<EdgeId> edges() const;
    std::vector<VertexId> vertices(const IncidenceDigraph& g) const;
    bool elementary() const;
    void reindex();

private:
    std::map<VertexId, Coord> index_;
};

struct WallGraph {
    IncidenceDigraph g;
    Wall wall;
};
// Adds a fresh wall to g.
Wall add_wall(IncidenceDigraph& g, int nc, int nh);
WallGraph build_wall(int nc, int nh);
// The elementary cylindrical wall of order k: G_k with degree-4 vertices split.
WallGraph build_elementary_wall(int k);
// Replaces every logical wall edge by a path with 0..maxExtra inner vertices.
void subdivide_wall(IncidenceDigraph& g, Wall& wall, std::uint64_t seed, int maxExtra);

// Topological embedding of H into G: vertex map plus internally disjoint
// edge paths. Empty string when valid.
struct TopologicalEmbedding {
    std::vector<VertexId> vmap;           // by vertex of H
    std::map<EdgeId, std::vector<EdgeId>> emap;
};
std::string check_topological_embedding(const IncidenceDigraph& h, const IncidenceDigraph& g,
                                        const TopologicalEmbedding& emb);
// The elementary wall of order k/2 inside G_k (k even, k >= 4).
TopologicalEmbedding embed_half_wall(const Grid& grid, const WallGraph& half);

// --- rotation system --------------------------------------------------------

struct Dart {
    EdgeId e = kNone;
    bool out = true;  // leaves the vertex along e
    auto operator<=>(const Dart&) const = default;
};

// Counterclockwise dart order per vertex plus a dart whose left face is the
// outer face.
struct RotationSystem {
    std::map<VertexId, std::vector<Dart>> ccw;
    Dart outer;
};
// Embedding of an elementary wall drawn on an annulus (W_1 innermost), plus
// extra up-path edges drawn alongside their wall edge.
RotationSystem wall_rotation(const IncidenceDigraph& g, const Wall& wall,
                             const std::vector<EdgeId>& upPaths = {});
// Faces as dart cycles; face_of maps each dart to its face index.
struct Faces {
    std::vector<std::vector<Dart>> faces;
    std::map<Dart, int> face_of;
};
Faces trace_faces(const IncidenceDigraph& g, const RotationSystem& rot);
// +1 counterclockwise, -1 clockwise, 0 if undecidable. Closed walks with
// repeated vertices are judged by their longest simple sub-cycle.
int cycle_orientation(const IncidenceDigraph& g, const RotationSystem& rot, const Path& cycle);

// --- coordinate matchings ---------------------------------------------------

struct CoordinateMatching {
    std::vector<std::pair<Coord, Coord>> edges;  // (x^-, x^+)
    bool complete(const Wall& wall) const;
    // Index of the edge with the given tail cell, or -1.
    int by_tail(int i, int p) const;
};

// Edge-disjoint off-wall trails, one from every in-coordinate, each ending at
// a distinct out-coordinate (greedy walk, lowest edge id first).
std::vector<Path> complete_coordinate_paths(const IncidenceDigraph& g, const Wall& wall);
CoordinateMatching matching_of(const IncidenceDigraph& g, const Wall& wall,
                               const std::vector<Path>& paths);

// Elementary wall plus one edge per matching pair.
struct MatchedWall {
    IncidenceDigraph g;
    Wall wall;
    CoordinateMatching matching;
    std::vector<EdgeId> medge;  // edge id of matching pair k
};
MatchedWall build_matched_wall(int nc, int nh, const CoordinateMatching& m);

struct Closure {
    MatchedWall skeleton;
    // Every skeleton edge mapped to the host edges it replaces.
    std::map<EdgeId, std::vector<EdgeId>> provenance;
};
Closure eulerian_closure(const IncidenceDigraph& g, const Wall& wall, const std::vector<Path>& paths);
// Host edges behind a set of skeleton edges (sorted).
std::vector<EdgeId> expand(const Closure& c, const std::vector<EdgeId>& skeletonEdges);

// --- jumps -------------------------------------------------------------------

enum class JumpType { UpPath, Type0, TypeI, TypeII };
const char* to_string(JumpType t);

struct JumpRecord {
    int index = -1;  // matching edge
    Coord tail, head;
    JumpType type = JumpType::Type0;
};
JumpRecord classify_jump(const Wall& wall, const CoordinateMatching& m, int index);
JumpType classify_pair(const Wall& wall, const Coord& tail, const Coord& head);
std::vector<JumpRecord> classify_all(const Wall& wall, const CoordinateMatching& m);

// Matching indices of the unique jump-sequence of length l, if it exists.
std::optional<std::vector<int>> jump_sequence(const Wall& wall, const CoordinateMatching& m,
                                              int start, int l);
struct JumpCycle {
    std::vector<int> jumps;  // distinct matching edges in order
    Path cycle;              // closed walk in the matched wall
};
// Requires the sequence to return to start; nullopt otherwise.
std::optional<JumpCycle> jump_cycle(const MatchedWall& mw, int start);

// Random complete matching: each in-coordinate independently prefers an
// up-path / Type I / Type II partner with the given weights when still free.
CoordinateMatching random_matching(const Wall& wall, std::uint64_t seed, double upPath,
                                   double typeI = 0.0, double typeII = 0.0);
// All up-paths; complete only where every tail has its up-path partner.
CoordinateMatching up_path_matching(const Wall& wall);

}  // namespace eedp
