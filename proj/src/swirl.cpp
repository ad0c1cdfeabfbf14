#include "eedp/swirl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "wall_walker.hpp"

namespace eedp {

namespace {

using detail::Walker;

std::set<VertexId> vertex_set(const IncidenceDigraph& g, const Path& p) {
    std::set<VertexId> s;
    if (p.edges.empty() && p.origin != kNone) s.insert(p.origin);
    for (EdgeId e : p.edges) {
        s.insert(g.tail(e));
        s.insert(g.head(e));
    }
    return s;
}

bool is_up_path(const Wall& w, const std::pair<Coord, Coord>& m) {
    return classify_pair(w, m.first, m.second) == JumpType::UpPath;
}

bool in_tile(const Tile& t, const Coord& c) {
    return c.i >= t.L && c.i <= t.R && c.p >= t.top && c.p <= t.bottom;
}

// Inserts a closed detour through v into the closed walk c.
bool splice(const IncidenceDigraph& g, Path& c, VertexId v, const std::vector<EdgeId>& detour) {
    if (path_start(g, c) == v) {
        c.edges.insert(c.edges.end(), detour.begin(), detour.end());
        return true;
    }
    for (std::size_t k = 0; k < c.edges.size(); ++k)
        if (g.head(c.edges[k]) == v) {
            c.edges.insert(c.edges.begin() + static_cast<long>(k) + 1, detour.begin(), detour.end());
            return true;
        }
    return false;
}

}  // namespace

RotationSystem matched_rotation(const MatchedWall& mw) {
    std::vector<EdgeId> ups;
    for (std::size_t k = 0; k < mw.medge.size(); ++k)
        if (is_up_path(mw.wall, mw.matching.edges[k])) ups.push_back(mw.medge[k]);
    return wall_rotation(mw.g, mw.wall, ups);
}

CanonicalSwirl canonical_swirl(const MatchedWall& mw, int i0, int top, int t) {
    const Wall& w = mw.wall;
    if (t < 2) throw std::invalid_argument("swirl needs t >= 2");
    if (top % 2 == 0 || top < 1 || top + 2 * t - 1 > w.nh) throw std::invalid_argument("tile rows out of range");
    if (i0 < 1 || i0 + t > w.nc - 1) throw std::invalid_argument("tile columns out of range");
    const Tile outer{i0, i0 + t, top, top + 2 * t - 1};
    for (const auto& m : mw.matching.edges)
        if ((in_tile(outer, m.first) || in_tile(outer, m.second)) && !is_up_path(w, m))
            throw std::invalid_argument("tile holds a jump " + to_string(m.first) + " -> " + to_string(m.second));
    for (int i = outer.L; i <= outer.R; ++i)
        for (int p = outer.top; p <= outer.bottom; ++p)
            if (w.has_in(i, p) && mw.matching.by_tail(i, p) < 0)
                throw std::invalid_argument("coordinate " + to_string(Coord{i, p, Sign::Minus}) + " is unmatched");

    auto G = [&](int c) { return i0 + c; };
    auto R = [&](int r) { return top + r - 1; };
    // Rings k = 1 (outermost) .. t on rows k and 2t+1-k.
    std::vector<Path> rings;
    for (int k = 1; k <= t; ++k) {
        const int m = k / 2;
        if (k % 2 == 1) {
            Walker a(mw, G(m), R(k), true);
            a.horiz(G(t - m)).down(R(2 * t + 1 - k)).horiz(G(m));
            for (;;) {
                a.jump();
                if (a.row() == R(k)) break;
                a.horiz(a.row() % 2 == 1 ? G(m + 1) : G(m));
            }
            rings.push_back(a.path());
        } else {
            Walker a(mw, G(m), R(k), false);
            a.down(R(2 * t + 1 - k)).horiz(G(t + 1 - m));
            for (;;) {
                a.jump();
                if (a.row() == R(k)) break;
                a.horiz(a.row() % 2 == 1 ? G(t + 1 - m) : G(t - m));
            }
            a.horiz(G(m));
            rings.push_back(a.path());
        }
        rings.back().cycle = true;
    }

    CanonicalSwirl out;
    out.outer = outer;
    out.inner = Tile{i0 + 1, i0 + t, outer.top, outer.bottom};
    const RotationSystem rot = matched_rotation(mw);
    auto as_swirl = [&](const std::vector<Path>& rs, const Tile& tile) {
        Swirl s;
        for (int k = t; k >= 1; --k) {
            s.cycles.push_back(rs[k - 1]);
            s.orientation.push_back(cycle_orientation(mw.g, rot, rs[k - 1]));
        }
        s.tile = tile;
        return s;
    };
    out.grasped = as_swirl(rings, outer);

    // Digons down W_i and back along the up-path wherever the ring misses
    // the W_i edge (inner columns only).
    std::set<EdgeId> used;
    for (const Path& r : rings) used.insert(r.edges.begin(), r.edges.end());
    std::vector<Path> ext = rings;
    for (int c = 1; c <= t; ++c)
        for (int r = 1; r < 2 * t; ++r) {
            const auto& down = w.down[w.cell(G(c), R(r))];
            if (std::all_of(down.begin(), down.end(), [&](EdgeId e) { return used.count(e) > 0; })) continue;
            const int k = mw.matching.by_tail(G(c), R(r + 1));
            const EdgeId up = mw.medge.at(k);
            if (used.count(up)) throw std::logic_error("up-path already on a ring");
            const VertexId xp = w.out_vertex(G(c), R(r)), xm = w.in_vertex(G(c), R(r + 1));
            std::vector<EdgeId> viaPlus(down.begin(), down.end());
            viaPlus.push_back(up);
            std::vector<EdgeId> viaMinus{up};
            viaMinus.insert(viaMinus.end(), down.begin(), down.end());
            const int pref = std::min(r, 2 * t + 1 - r);
            std::vector<int> order{pref};
            for (int q = 1; q <= t; ++q)
                if (q != pref) order.push_back(q);
            bool done = false;
            for (int q : order) {
                const auto vs = vertex_set(mw.g, ext[q - 1]);
                if (vs.count(xp)) done = splice(mw.g, ext[q - 1], xp, viaPlus);
                else if (vs.count(xm)) done = splice(mw.g, ext[q - 1], xm, viaMinus);
                if (done) break;
            }
            if (!done) throw std::logic_error("digon touches no ring");
            used.insert(down.begin(), down.end());
            used.insert(up);
        }
    out.induced = as_swirl(ext, outer);
    return out;
}

std::string check_swirl(const IncidenceDigraph& g, const Swirl& s, const RotationSystem& rot) {
    if (s.order() < 2) return "swirl needs at least two cycles";
    std::vector<std::set<VertexId>> vs;
    for (int i = 0; i < s.order(); ++i) {
        const Path& c = s.cycles[i];
        const std::string tag = "S_" + std::to_string(i + 1);
        if (c.edges.empty()) return tag + " is empty";
        if (auto err = check_path(g, c); !err.empty()) return tag + ": " + err;
        if (path_start(g, c) != path_end(g, c)) return tag + " is not closed";
        vs.push_back(vertex_set(g, c));
    }
    if (!edge_disjoint(s.cycles)) return "swirl cycles share an edge";
    for (int i = 0; i < s.order(); ++i)
        for (int j = i + 2; j < s.order(); ++j)
            for (VertexId v : vs[i])
                if (vs[j].count(v))
                    return "S_" + std::to_string(i + 1) + " and S_" + std::to_string(j + 1) + " meet at " +
                           std::to_string(v);
    std::vector<int> o;
    for (const Path& c : s.cycles) o.push_back(cycle_orientation(g, rot, c));
    for (int i = 0; i < s.order(); ++i) {
        if (o[i] == 0) return "S_" + std::to_string(i + 1) + " has no orientation";
        if (i + 1 < s.order() && o[i] == o[i + 1])
            return "S_" + std::to_string(i + 1) + " and S_" + std::to_string(i + 2) + " have the same orientation";
        if (i < static_cast<int>(s.orientation.size()) && s.orientation[i] != o[i])
            return "stored orientation of S_" + std::to_string(i + 1) + " is wrong";
    }
    return {};
}

bool verify_swirl(const IncidenceDigraph& g, const Swirl& s, const RotationSystem& rot) {
    return check_swirl(g, s, rot).empty();
}

std::string check_line_graph_swirl(const IncidenceDigraph& g, const Swirl& s) {
    std::vector<EdgeId> all;
    for (const Path& c : s.cycles) all.insert(all.end(), c.edges.begin(), c.edges.end());
    const IncidenceDigraph lg = line_graph(edge_subgraph(g, all));
    std::set<VertexId> seen;
    for (int i = 0; i < s.order(); ++i) {
        const auto& es = s.cycles[i].edges;
        for (std::size_t k = 0; k < es.size(); ++k) {
            const EdgeId a = es[k], b = es[(k + 1) % es.size()];
            if (!seen.insert(a).second) return "line-graph cycles share vertex " + std::to_string(a);
            const auto& outs = lg.out_edges(a);
            const bool linked = std::any_of(outs.begin(), outs.end(), [&](EdgeId f) { return lg.head(f) == b; });
            if (!linked) return "line graph misses " + std::to_string(a) + " -> " + std::to_string(b);
        }
    }
    return {};
}

std::vector<EdgeId> tile_edges(const MatchedWall& mw, const Tile& t, bool withMatching) {
    const Wall& w = mw.wall;
    std::vector<EdgeId> cand;
    for (int i = t.L; i <= t.R; ++i)
        for (int p = t.top; p <= t.bottom; ++p) {
            const int c = w.cell(i, p);
            cand.insert(cand.end(), w.split[c].begin(), w.split[c].end());
            if (p < t.bottom) cand.insert(cand.end(), w.down[c].begin(), w.down[c].end());
            if (i < t.R) cand.insert(cand.end(), w.side[c].begin(), w.side[c].end());
        }
    for (std::size_t k = 0; withMatching && k < mw.medge.size(); ++k) {
        const auto& [a, b] = mw.matching.edges[k];
        if (in_tile(t, a) && in_tile(t, b)) cand.push_back(mw.medge[k]);
    }
    std::map<VertexId, int> deg;
    for (EdgeId e : cand) {
        ++deg[mw.g.tail(e)];
        ++deg[mw.g.head(e)];
    }
    std::vector<EdgeId> out;
    for (EdgeId e : cand)
        if (deg[mw.g.tail(e)] > 1 && deg[mw.g.head(e)] > 1) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

int swirl_distance(const Wall& wall, const Swirl& s, VertexId x, VertexId y) {
    const auto a = wall.coord_of(x), b = wall.coord_of(y);
    if (!a || !b) throw std::invalid_argument("not a coordinate vertex");
    if (s.tile && (!in_tile(*s.tile, *a) || !in_tile(*s.tile, *b)))
        throw std::invalid_argument("coordinate outside the swirl's tile");
    return std::max(std::abs(a->i - b->i), std::abs(a->p - b->p));
}

const char* to_string(SwirlJump j) { return j == SwirlJump::Long ? "long" : "short"; }

SwirlJump classify_swirl_jump(const IncidenceDigraph& g, const Wall& wall, const Swirl& s, const Path& path) {
    if (path.edges.empty()) throw std::invalid_argument("empty jump");
    if (auto err = check_path(g, path); !err.empty()) throw std::invalid_argument(err);
    std::set<VertexId> sv;
    std::set<EdgeId> se;
    for (const Path& c : s.cycles) {
        auto v = vertex_set(g, c);
        sv.insert(v.begin(), v.end());
        se.insert(c.edges.begin(), c.edges.end());
    }
    const VertexId x = path_start(g, path), y = path_end(g, path);
    if (!sv.count(x) || !sv.count(y)) throw std::invalid_argument("jump must end on the swirl");
    for (std::size_t k = 0; k < path.edges.size(); ++k) {
        if (se.count(path.edges[k])) throw std::invalid_argument("jump uses a swirl edge");
        if (k + 1 < path.edges.size() && sv.count(g.head(path.edges[k])))
            throw std::invalid_argument("jump touches the swirl inside");
    }
    return swirl_distance(wall, s, x, y) >= 3 ? SwirlJump::Long : SwirlJump::Short;
}

IncidenceDigraph edge_subgraph(const IncidenceDigraph& g, const std::vector<EdgeId>& edges) {
    IncidenceDigraph h(g.vertex_bound());
    std::vector<EdgeId> es = edges;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (EdgeId e : es) h.add_edge_with_id(e, g.tail(e), g.head(e));
    return h;
}

std::vector<EdgeId> attachment_extension(const IncidenceDigraph& g, const Swirl& s) {
    if (s.order() < 1) return {};
    const auto outerV = vertex_set(g, s.cycles.back());
    std::vector<char> comp(g.vertex_bound(), 0);
    std::deque<VertexId> q;
    for (VertexId v : vertex_set(g, s.cycles.front()))
        if (!outerV.count(v) && !comp[v]) {
            comp[v] = 1;
            q.push_back(v);
        }
    while (!q.empty()) {
        const VertexId v = q.front();
        q.pop_front();
        auto visit = [&](VertexId u) {
            if (u != kNone && !outerV.count(u) && !comp[u]) {
                comp[u] = 1;
                q.push_back(u);
            }
        };
        for (EdgeId e : g.out_edges(v)) visit(g.head(e));
        for (EdgeId e : g.in_edges(v)) visit(g.tail(e));
    }
    std::set<EdgeId> out;
    for (EdgeId e : g.edges()) {
        const VertexId a = g.tail(e), b = g.head(e);
        if ((a != kNone && comp[a]) || (b != kNone && comp[b])) out.insert(e);
    }
    for (const Path& c : s.cycles) out.insert(c.edges.begin(), c.edges.end());
    return {out.begin(), out.end()};
}

std::optional<bool> swirl_is_flat(const IncidenceDigraph& g, const Wall& wall, const Swirl& s,
                                  std::uint64_t budget) {
    if (!s.tile) throw std::invalid_argument("swirl has no tile");
    const TileCorners c = tile_corners(wall, *s.tile);
    const IncidenceDigraph sub = edge_subgraph(g, attachment_extension(g, s));
    auto cross = has_unordered_cross(sub, c.tl, c.br, c.tr, c.bl, budget);
    if (!cross) return std::nullopt;
    return !*cross;
}

}  // namespace eedp
