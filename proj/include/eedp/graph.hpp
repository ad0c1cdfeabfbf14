// Incidence-style multidigraph, instances, paths and cuts.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eedp {

using VertexId = int;
using EdgeId = int;
inline constexpr int kNone = -1;

// Edges are first-class: each carries an optional tail and head. Edge ids are
// handed out monotonically and never reused, even after deletion.
class IncidenceDigraph {
public:
    IncidenceDigraph() = default;
    explicit IncidenceDigraph(int n);

    VertexId add_vertex();
    void ensure_vertex(VertexId v);
    EdgeId add_edge(VertexId tail, VertexId head);
    // Either endpoint may be kNone (half-edge).
    EdgeId add_partial_edge(VertexId tail, VertexId head);
    // Reuse a specific id; it must not be in use. Later ids continue above it.
    EdgeId add_edge_with_id(EdgeId id, VertexId tail, VertexId head);
    void remove_edge(EdgeId e);
    void remove_vertex(VertexId v);  // also removes incident edges

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < static_cast<int>(alive_.size()) && alive_[v];
    }
    bool has_edge(EdgeId e) const {
        return e >= 0 && e < static_cast<int>(recs_.size()) && recs_[e].alive;
    }
    VertexId tail(EdgeId e) const { return recs_.at(e).tail; }
    VertexId head(EdgeId e) const { return recs_.at(e).head; }

    // Sorted by edge id. A loop appears in both lists of its vertex.
    const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(v); }
    const std::vector<EdgeId>& in_edges(VertexId v) const { return in_.at(v); }
    int outdeg(VertexId v) const { return static_cast<int>(out_.at(v).size()); }
    int indeg(VertexId v) const { return static_cast<int>(in_.at(v).size()); }
    int degree(VertexId v) const { return indeg(v) + outdeg(v); }

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;
    int num_vertices() const { return nv_; }
    int num_edges() const { return ne_; }
    // Exclusive upper bounds on ids ever used; handy for dense arrays.
    int vertex_bound() const { return static_cast<int>(alive_.size()); }
    int edge_bound() const { return static_cast<int>(recs_.size()); }

    bool proper() const;

private:
    struct Rec {
        VertexId tail = kNone;
        VertexId head = kNone;
        bool alive = false;
    };
    static void insert_sorted(std::vector<EdgeId>& v, EdgeId e);
    static void erase_value(std::vector<EdgeId>& v, EdgeId e);

    std::vector<char> alive_;
    std::vector<std::vector<EdgeId>> out_, in_;
    std::vector<Rec> recs_;
    int nv_ = 0;
    int ne_ = 0;
};

// A demand edge (t, s) asks for a path from s to t.
struct Demand {
    VertexId t = kNone;
    VertexId s = kNone;
    bool operator==(const Demand&) const = default;
};

struct Instance {
    IncidenceDigraph supply;
    std::vector<Demand> demands;
};

// Edge sequence. origin pins down the start vertex of an empty path.
struct Path {
    std::vector<EdgeId> edges;
    VertexId origin = kNone;
    bool cycle = false;
};

struct Linkage {
    std::vector<Path> paths;
};

struct Cut {
    std::vector<VertexId> X;
    std::vector<EdgeId> plus;   // tail in X, head outside
    std::vector<EdgeId> minus;  // head in X, tail outside
    int order() const { return static_cast<int>(plus.size() + minus.size()); }
};

// --- predicates ------------------------------------------------------------

bool is_eulerian(const IncidenceDigraph& g,
                 const std::vector<std::pair<VertexId, VertexId>>& extra = {});
bool is_eulerian(const Instance& inst);
// First vertex where supply+demands is unbalanced, if any.
std::optional<VertexId> first_unbalanced(const Instance& inst);
std::vector<std::pair<VertexId, VertexId>> demand_pairs(const Instance& inst);
// Vertices incident to some demand edge, sorted.
std::vector<VertexId> terminals(const Instance& inst);

VertexId path_start(const IncidenceDigraph& g, const Path& p);
VertexId path_end(const IncidenceDigraph& g, const Path& p);
// Empty string when p is a well-formed trail (or closed trail) in g.
std::string check_path(const IncidenceDigraph& g, const Path& p);
bool edge_disjoint(const std::vector<Path>& paths);
// Path i must run s_i -> t_i using supply edges only, all edge-disjoint.
std::string validate_linkage(const Instance& inst, const Linkage& l);

// --- operations ------------------------------------------------------------

// Replaces the 2-path (eIn, eOut) by a shortcut edge; isolated vertices vanish.
IncidenceDigraph split_off(const IncidenceDigraph& g, EdgeId eIn, EdgeId eOut);
// In-place variant; returns the new edge id.
EdgeId split_off_inplace(IncidenceDigraph& g, EdgeId eIn, EdgeId eOut);

Cut induced_cut(const IncidenceDigraph& g, const std::vector<VertexId>& X);

struct FlowResult {
    int count = 0;
    Linkage linkage;                   // count edge-disjoint S->T trails
    std::vector<VertexId> source_side; // canonical maximal min-cut side
};
FlowResult max_edge_disjoint_paths(const IncidenceDigraph& g,
                                   const std::vector<VertexId>& S,
                                   const std::vector<VertexId>& T);

struct Restriction {
    Instance inst;  // G[X] plus pendant vertices and pendant demands
    // (original cut edge, pendant vertex) in edge-id order
    std::vector<std::pair<EdgeId, VertexId>> pendants;
};
// Keeps vertex ids of X and edge ids of all kept edges (cut edges keep theirs).
Restriction euler_restriction(const Instance& inst, const std::vector<VertexId>& X);

// Vertices are the edge ids of g.
IncidenceDigraph line_graph(const IncidenceDigraph& g);

// Partition into simple cycles.
std::vector<Path> euler_decompose(const IncidenceDigraph& g);

// Stable 64-bit fingerprint of an instance (FNV-1a over the canonical text).
std::uint64_t fingerprint(const Instance& inst);

}  // namespace eedp
