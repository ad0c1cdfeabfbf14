#include "eedp/wall.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace eedp {

std::string to_string(const Coord& c) {
    return std::string(c.s == Sign::Minus ? "x-" : "x+") + "(" + std::to_string(c.i) + "," +
           std::to_string(c.p) + ")";
}

// --- grid --------------------------------------------------------------------

Grid build_elementary_grid(int k) {
    if (k < 2) throw std::invalid_argument("grid order must be at least 2");
    Grid gr;
    gr.k = k;
    const int n = 2 * k;
    gr.g = IncidenceDigraph(k * n);
    gr.at.resize(k * n);
    for (int i = 1; i <= k; ++i)
        for (int p = 1; p <= n; ++p) gr.at[(i - 1) * n + (p - 1)] = (i - 1) * n + (p - 1);
    for (int i = 1; i <= k; ++i) {
        Path c;
        c.cycle = true;
        c.origin = gr.vertex(i, 1);
        for (int p = 1; p <= n; ++p)
            c.edges.push_back(gr.g.add_edge(gr.vertex(i, p), gr.vertex(i, p % n + 1)));
        gr.cycles.push_back(c);
    }
    for (int p = 1; p <= n; ++p) {
        Path h;
        if (p % 2 == 1) {
            h.origin = gr.vertex(1, p);
            for (int i = 1; i < k; ++i) h.edges.push_back(gr.g.add_edge(gr.vertex(i, p), gr.vertex(i + 1, p)));
        } else {
            h.origin = gr.vertex(k, p);
            for (int i = k; i > 1; --i) h.edges.push_back(gr.g.add_edge(gr.vertex(i, p), gr.vertex(i - 1, p)));
        }
        gr.rows.push_back(h);
    }
    return gr;
}

// --- wall ----------------------------------------------------------------------

bool Wall::has_in(int i, int p) const {
    if (interior(i)) return true;
    const bool odd = row(p) % 2 == 1;
    return i == 1 ? !odd : odd;
}

bool Wall::has_out(int i, int p) const {
    if (interior(i)) return true;
    const bool odd = row(p) % 2 == 1;
    return i == 1 ? odd : !odd;
}

VertexId Wall::vertex(const Coord& c) const {
    if (!valid_column(c.i)) return kNone;
    if (c.s == Sign::Minus) return has_in(c.i, c.p) ? in_vertex(c.i, c.p) : kNone;
    return has_out(c.i, c.p) ? out_vertex(c.i, c.p) : kNone;
}

std::optional<Coord> Wall::coord_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Coord> Wall::in_coords() const {
    std::vector<Coord> r;
    for (int i = 1; i <= nc; ++i)
        for (int p = 1; p <= nh; ++p)
            if (has_in(i, p)) r.push_back({i, p, Sign::Minus});
    return r;
}

std::vector<Coord> Wall::out_coords() const {
    std::vector<Coord> r;
    for (int i = 1; i <= nc; ++i)
        for (int p = 1; p <= nh; ++p)
            if (has_out(i, p)) r.push_back({i, p, Sign::Plus});
    return r;
}

std::vector<EdgeId> Wall::edges() const {
    std::vector<EdgeId> r;
    for (const auto* segs : {&split, &down, &side})
        for (const auto& s : *segs) r.insert(r.end(), s.begin(), s.end());
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<VertexId> Wall::vertices(const IncidenceDigraph& g) const {
    std::set<VertexId> vs(in.begin(), in.end());
    vs.insert(out.begin(), out.end());
    for (EdgeId e : edges()) {
        vs.insert(g.tail(e));
        vs.insert(g.head(e));
    }
    return {vs.begin(), vs.end()};
}

bool Wall::elementary() const {
    for (const auto* segs : {&split, &down, &side})
        for (const auto& s : *segs)
            if (s.size() > 1) return false;
    return true;
}

void Wall::reindex() {
    index_.clear();
    for (const Coord& c : in_coords()) index_[vertex(c)] = c;
    for (const Coord& c : out_coords()) index_[vertex(c)] = c;
}

Wall add_wall(IncidenceDigraph& g, int nc, int nh) {
    if (nc < 2 || nh < 2 || nh % 2 != 0)
        throw std::invalid_argument("wall needs at least 2 columns and an even number of rows");
    Wall w;
    w.nc = nc;
    w.nh = nh;
    const int cells = nc * nh;
    w.in.assign(cells, kNone);
    w.out.assign(cells, kNone);
    w.split.assign(cells, {});
    w.down.assign(cells, {});
    w.side.assign(cells, {});
    for (int i = 1; i <= nc; ++i)
        for (int p = 1; p <= nh; ++p) {
            const int c = w.cell(i, p);
            w.in[c] = g.add_vertex();
            w.out[c] = w.interior(i) ? g.add_vertex() : w.in[c];
        }
    for (int i = 2; i < nc; ++i)
        for (int p = 1; p <= nh; ++p) {
            const int c = w.cell(i, p);
            w.split[c] = {g.add_edge(w.in[c], w.out[c])};
        }
    for (int i = 1; i <= nc; ++i)
        for (int p = 1; p <= nh; ++p)
            w.down[w.cell(i, p)] = {g.add_edge(w.out_vertex(i, p), w.in_vertex(i, p + 1))};
    for (int p = 1; p <= nh; ++p)
        for (int i = 1; i < nc; ++i) {
            const EdgeId e = p % 2 == 1 ? g.add_edge(w.out_vertex(i, p), w.in_vertex(i + 1, p))
                                        : g.add_edge(w.out_vertex(i + 1, p), w.in_vertex(i, p));
            w.side[w.cell(i, p)] = {e};
        }
    w.reindex();
    return w;
}

WallGraph build_wall(int nc, int nh) {
    WallGraph wg;
    wg.wall = add_wall(wg.g, nc, nh);
    return wg;
}

WallGraph build_elementary_wall(int k) {
    if (k < 2) throw std::invalid_argument("wall order must be at least 2");
    return build_wall(k, 2 * k);
}

void subdivide_wall(IncidenceDigraph& g, Wall& wall, std::uint64_t seed, int maxExtra) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> extra(0, std::max(0, maxExtra));
    for (auto* segs : {&wall.split, &wall.down, &wall.side})
        for (auto& s : *segs) {
            std::vector<EdgeId> out;
            for (EdgeId e : s) {
                const int k = extra(rng);
                VertexId a = g.tail(e);
                const VertexId b = g.head(e);
                if (k == 0) {
                    out.push_back(e);
                    continue;
                }
                g.remove_edge(e);
                for (int t = 0; t < k; ++t) {
                    const VertexId v = g.add_vertex();
                    out.push_back(g.add_edge(a, v));
                    a = v;
                }
                out.push_back(g.add_edge(a, b));
            }
            s = std::move(out);
        }
}

// --- topological embeddings ----------------------------------------------------

std::string check_topological_embedding(const IncidenceDigraph& h, const IncidenceDigraph& g,
                                        const TopologicalEmbedding& emb) {
    std::set<VertexId> images;
    for (VertexId v : h.vertices()) {
        if (v >= static_cast<int>(emb.vmap.size()) || !g.has_vertex(emb.vmap[v]))
            return "vertex " + std::to_string(v) + " unmapped";
        if (!images.insert(emb.vmap[v]).second) return "vertex map not injective";
    }
    std::set<EdgeId> used;
    std::set<VertexId> internal;
    for (EdgeId e : h.edges()) {
        auto it = emb.emap.find(e);
        if (it == emb.emap.end() || it->second.empty()) return "edge " + std::to_string(e) + " unmapped";
        Path p{it->second, kNone, false};
        if (!check_path(g, p).empty()) return "edge " + std::to_string(e) + ": " + check_path(g, p);
        if (path_start(g, p) != emb.vmap[h.tail(e)] || path_end(g, p) != emb.vmap[h.head(e)])
            return "edge " + std::to_string(e) + " has wrong ends";
        for (std::size_t k = 0; k < p.edges.size(); ++k) {
            if (!used.insert(p.edges[k]).second) return "edge paths share an edge";
            if (k + 1 < p.edges.size()) {
                const VertexId x = g.head(p.edges[k]);
                if (images.count(x)) return "edge path passes a branch vertex";
                if (!internal.insert(x).second) return "edge paths share an internal vertex";
            }
        }
    }
    return {};
}

TopologicalEmbedding embed_half_wall(const Grid& grid, const WallGraph& half) {
    const Wall& w = half.wall;
    const int k = grid.k;
    const int n = 2 * k;
    if (k % 2 != 0 || k < 4 || w.nc != k / 2 || w.nh != k)
        throw std::invalid_argument("expects G_k and the elementary wall of order k/2");
    const int m = w.nc;
    auto r = [](int p) { return p % 2 == 1 ? 2 * p - 1 : 2 * p - 2; };
    auto col = [&](int i, int p, bool plus) {
        if (i == 1) return 1;
        if (i == m) return 2 * m - 2;
        const bool odd = p % 2 == 1;
        return (odd == plus) ? 2 * i - 1 : 2 * i - 2;
    };
    TopologicalEmbedding emb;
    emb.vmap.assign(half.g.vertex_bound(), kNone);
    for (int i = 1; i <= m; ++i)
        for (int p = 1; p <= w.nh; ++p) {
            emb.vmap[w.in_vertex(i, p)] = grid.vertex(col(i, p, false), r(p));
            emb.vmap[w.out_vertex(i, p)] = grid.vertex(col(i, p, true), r(p));
        }
    auto gridEdge = [&](VertexId a, VertexId b) {
        for (EdgeId e : grid.g.out_edges(a))
            if (grid.g.head(e) == b) return e;
        throw std::logic_error("no grid edge");
    };
    for (EdgeId e : half.g.edges()) {
        VertexId a = emb.vmap[half.g.tail(e)];
        const VertexId b = emb.vmap[half.g.head(e)];
        std::vector<EdgeId> path;
        // Grid vertex ids are (column-1)*n + (row-1).
        const int ca = a / n + 1, cb = b / n + 1;
        if (ca != cb) {
            path.push_back(gridEdge(a, b));
        } else {
            while (a != b) {
                const int ra = a % n + 1;
                const VertexId nx = grid.vertex(ca, ra % n + 1);
                path.push_back(gridEdge(a, nx));
                a = nx;
            }
        }
        emb.emap[e] = path;
    }
    return emb;
}

// --- rotation system ---------------------------------------------------------

RotationSystem wall_rotation(const IncidenceDigraph& g, const Wall& wall,
                             const std::vector<EdgeId>& upPaths) {
    if (!wall.elementary()) throw std::invalid_argument("rotation system needs an elementary wall");
    std::map<VertexId, std::vector<std::pair<int, Dart>>> byAngle;
    auto put = [&](EdgeId e, int tailAngle, int headAngle) {
        byAngle[g.tail(e)].push_back({tailAngle, Dart{e, true}});
        byAngle[g.head(e)].push_back({headAngle, Dart{e, false}});
    };
    // East 0, north 90 (towards smaller rows), west 180, south 270.
    for (int i = 1; i <= wall.nc; ++i)
        for (int p = 1; p <= wall.nh; ++p) {
            const int c = wall.cell(i, p);
            for (EdgeId e : wall.split[c]) put(e, 270, 90);
            for (EdgeId e : wall.down[c]) put(e, 270, 90);
            if (i < wall.nc)
                for (EdgeId e : wall.side[c]) {
                    const bool right = wall.row(p) % 2 == 1;
                    put(e, right ? 0 : 180, right ? 180 : 0);
                }
        }
    for (EdgeId e : upPaths) {
        auto a = wall.coord_of(g.tail(e));
        auto b = wall.coord_of(g.head(e));
        if (!a || !b || classify_pair(wall, *a, *b) != JumpType::UpPath)
            throw std::invalid_argument("extra edge is not an up-path");
        put(e, 80, 280);
    }
    RotationSystem rot;
    for (auto& [v, list] : byAngle) {
        std::stable_sort(list.begin(), list.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        auto& out = rot.ccw[v];
        for (auto& [a, d] : list) out.push_back(d);
    }
    rot.outer = Dart{wall.down[wall.cell(wall.nc, 1)].at(0), true};
    return rot;
}

Faces trace_faces(const IncidenceDigraph& g, const RotationSystem& rot) {
    Faces f;
    auto at = [&](const Dart& d) { return d.out ? g.tail(d.e) : g.head(d.e); };
    for (const auto& [v, darts] : rot.ccw)
        for (const Dart& d0 : darts) {
            if (f.face_of.count(d0)) continue;
            const int id = static_cast<int>(f.faces.size());
            f.faces.emplace_back();
            Dart d = d0;
            while (!f.face_of.count(d)) {
                f.face_of[d] = id;
                f.faces[id].push_back(d);
                const Dart rev{d.e, !d.out};
                const auto& list = rot.ccw.at(at(rev));
                const auto it = std::find(list.begin(), list.end(), rev);
                const std::size_t idx = static_cast<std::size_t>(it - list.begin());
                d = list[(idx + list.size() - 1) % list.size()];
            }
        }
    return f;
}

namespace {

// Splits a closed walk at repeated vertices into simple cycles.
std::vector<std::vector<EdgeId>> simple_parts(const IncidenceDigraph& g, const Path& walk) {
    std::vector<std::vector<EdgeId>> parts;
    std::vector<VertexId> vstack;
    std::vector<EdgeId> estack;
    if (walk.edges.empty()) return parts;
    vstack.push_back(g.tail(walk.edges.front()));
    for (EdgeId e : walk.edges) {
        const VertexId h = g.head(e);
        estack.push_back(e);
        auto it = std::find(vstack.begin(), vstack.end(), h);
        if (it != vstack.end()) {
            const std::size_t k = static_cast<std::size_t>(it - vstack.begin());
            parts.emplace_back(estack.begin() + static_cast<long>(k), estack.end());
            estack.resize(k);
            vstack.resize(k + 1);
        } else {
            vstack.push_back(h);
        }
    }
    return parts;
}

}  // namespace

int cycle_orientation(const IncidenceDigraph& g, const RotationSystem& rot, const Path& cycle) {
    auto parts = simple_parts(g, cycle);
    if (parts.empty()) return 0;
    const auto& main = *std::max_element(parts.begin(), parts.end(),
                                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const Faces faces = trace_faces(g, rot);
    std::set<EdgeId> onC(main.begin(), main.end());
    auto reach = [&](bool left) {
        std::vector<char> seen(faces.faces.size(), 0);
        std::deque<int> q;
        for (EdgeId e : main) {
            auto it = faces.face_of.find(Dart{e, left});
            if (it == faces.face_of.end()) return -1;
            if (!seen[it->second]) {
                seen[it->second] = 1;
                q.push_back(it->second);
            }
        }
        while (!q.empty()) {
            const int f = q.front();
            q.pop_front();
            for (const Dart& d : faces.faces[f]) {
                if (onC.count(d.e)) continue;
                const int nf = faces.face_of.at(Dart{d.e, !d.out});
                if (!seen[nf]) {
                    seen[nf] = 1;
                    q.push_back(nf);
                }
            }
        }
        auto oit = faces.face_of.find(rot.outer);
        if (oit == faces.face_of.end()) return -1;
        return static_cast<int>(seen[oit->second]);
    };
    // The dart (e, true) traverses e forwards; its face lies on the left.
    const int leftOuter = reach(true);
    const int rightOuter = reach(false);
    if (leftOuter < 0 || rightOuter < 0 || leftOuter == rightOuter) return 0;
    return leftOuter ? -1 : +1;
}

// --- matchings ---------------------------------------------------------------

bool CoordinateMatching::complete(const Wall& wall) const {
    std::set<Coord> tails, heads;
    for (const auto& [a, b] : edges) {
        if (a.s != Sign::Minus || b.s != Sign::Plus) return false;
        if (wall.vertex(a) == kNone || wall.vertex(b) == kNone) return false;
        if (!tails.insert({a.i, wall.row(a.p), a.s}).second) return false;
        if (!heads.insert({b.i, wall.row(b.p), b.s}).second) return false;
    }
    return tails.size() == wall.in_coords().size() && heads.size() == wall.out_coords().size();
}

int CoordinateMatching::by_tail(int i, int p) const {
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (edges[k].first.i == i && edges[k].first.p == p) return static_cast<int>(k);
    return -1;
}

std::vector<Path> complete_coordinate_paths(const IncidenceDigraph& g, const Wall& wall) {
    const auto wallEdges = wall.edges();
    std::vector<char> blocked(g.edge_bound(), 0);
    for (EdgeId e : wallEdges) blocked[e] = 1;
    std::set<VertexId> openHeads;
    for (const Coord& c : wall.out_coords()) openHeads.insert(wall.vertex(c));
    std::vector<Path> paths;
    for (const Coord& c : wall.in_coords()) {
        Path p;
        p.origin = wall.vertex(c);
        VertexId cur = p.origin;
        for (;;) {
            EdgeId next = kNone;
            for (EdgeId e : g.out_edges(cur))
                if (!blocked[e]) {
                    next = e;
                    break;
                }
            if (next == kNone)
                throw std::runtime_error("coordinate path stuck at vertex " + std::to_string(cur) +
                                         ": host is not Eulerian away from the wall");
            blocked[next] = 1;
            p.edges.push_back(next);
            cur = g.head(next);
            if (openHeads.erase(cur)) break;
        }
        paths.push_back(std::move(p));
    }
    return paths;
}

CoordinateMatching matching_of(const IncidenceDigraph& g, const Wall& wall, const std::vector<Path>& paths) {
    CoordinateMatching m;
    for (const Path& p : paths) {
        auto a = wall.coord_of(path_start(g, p));
        auto b = wall.coord_of(path_end(g, p));
        if (!a || !b || a->s != Sign::Minus || b->s != Sign::Plus)
            throw std::invalid_argument("path does not join an in- to an out-coordinate");
        m.edges.push_back({*a, *b});
    }
    return m;
}

MatchedWall build_matched_wall(int nc, int nh, const CoordinateMatching& m) {
    MatchedWall mw;
    mw.wall = add_wall(mw.g, nc, nh);
    mw.matching = m;
    for (const auto& [a, b] : m.edges) {
        const VertexId x = mw.wall.vertex(a), y = mw.wall.vertex(b);
        if (x == kNone || y == kNone || a.s != Sign::Minus || b.s != Sign::Plus)
            throw std::invalid_argument("matching edge between non-coordinates");
        mw.medge.push_back(mw.g.add_edge(x, y));
    }
    return mw;
}

Closure eulerian_closure(const IncidenceDigraph& g, const Wall& wall, const std::vector<Path>& paths) {
    Closure c;
    c.skeleton = build_matched_wall(wall.nc, wall.nh, matching_of(g, wall, paths));
    const Wall& sw = c.skeleton.wall;
    for (int cell = 0; cell < wall.nc * wall.nh; ++cell) {
        auto link = [&](const std::vector<EdgeId>& s, const std::vector<EdgeId>& h) {
            if (s.size() != (h.empty() ? 0u : 1u)) throw std::logic_error("wall shape mismatch");
            if (!s.empty()) c.provenance[s[0]] = h;
        };
        link(sw.split[cell], wall.split[cell]);
        link(sw.down[cell], wall.down[cell]);
        link(sw.side[cell], wall.side[cell]);
    }
    for (std::size_t k = 0; k < paths.size(); ++k) c.provenance[c.skeleton.medge[k]] = paths[k].edges;
    return c;
}

std::vector<EdgeId> expand(const Closure& c, const std::vector<EdgeId>& skeletonEdges) {
    std::vector<EdgeId> r;
    for (EdgeId e : skeletonEdges) {
        const auto& h = c.provenance.at(e);
        r.insert(r.end(), h.begin(), h.end());
    }
    std::sort(r.begin(), r.end());
    return r;
}

// --- jumps -------------------------------------------------------------------

const char* to_string(JumpType t) {
    switch (t) {
        case JumpType::UpPath: return "up-path";
        case JumpType::Type0: return "type0";
        case JumpType::TypeI: return "typeI";
        case JumpType::TypeII: return "typeII";
    }
    return "?";
}

JumpType classify_pair(const Wall& wall, const Coord& tail, const Coord& head) {
    const int up = ((tail.p - head.p) % wall.nh + wall.nh) % wall.nh;
    const bool odd = wall.row(tail.p) % 2 == 1;
    if (head.i == tail.i && up == 1) return JumpType::UpPath;
    if (up == 2 && head.i == tail.i + (odd ? -1 : 1)) return JumpType::TypeI;
    if (head.i == tail.i && up == 3) return JumpType::TypeII;
    return JumpType::Type0;
}

JumpRecord classify_jump(const Wall& wall, const CoordinateMatching& m, int index) {
    JumpRecord r;
    r.index = index;
    r.tail = m.edges.at(index).first;
    r.head = m.edges.at(index).second;
    r.type = classify_pair(wall, r.tail, r.head);
    return r;
}

std::vector<JumpRecord> classify_all(const Wall& wall, const CoordinateMatching& m) {
    std::vector<JumpRecord> r;
    for (std::size_t k = 0; k < m.edges.size(); ++k) r.push_back(classify_jump(wall, m, static_cast<int>(k)));
    return r;
}

std::optional<std::vector<int>> jump_sequence(const Wall& wall, const CoordinateMatching& m, int start,
                                              int l) {
    std::vector<int> seq{start};
    int cur = start;
    while (static_cast<int>(seq.size()) < l) {
        const Coord& h = m.edges.at(cur).second;
        cur = m.by_tail(h.i, wall.row(h.p + 1));
        if (cur < 0) return std::nullopt;
        seq.push_back(cur);
    }
    return seq;
}

std::optional<JumpCycle> jump_cycle(const MatchedWall& mw, int start) {
    const auto& m = mw.matching;
    JumpCycle jc;
    jc.cycle.cycle = true;
    jc.cycle.origin = mw.wall.vertex(m.edges.at(start).first);
    int cur = start;
    for (std::size_t steps = 0; steps <= m.edges.size(); ++steps) {
        jc.jumps.push_back(cur);
        const Coord& h = m.edges[cur].second;
        jc.cycle.edges.push_back(mw.medge[cur]);
        const auto& d = mw.wall.down[mw.wall.cell(h.i, h.p)];
        jc.cycle.edges.insert(jc.cycle.edges.end(), d.begin(), d.end());
        cur = m.by_tail(h.i, mw.wall.row(h.p + 1));
        if (cur < 0) return std::nullopt;
        if (cur == start) return jc;
    }
    return std::nullopt;
}

CoordinateMatching random_matching(const Wall& wall, std::uint64_t seed, double upPath, double typeI,
                                   double typeII) {
    std::mt19937_64 rng(seed);
    auto tails = wall.in_coords();
    std::shuffle(tails.begin(), tails.end(), rng);
    std::set<Coord> freeHeads;
    for (const Coord& c : wall.out_coords()) freeHeads.insert(c);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CoordinateMatching m;
    for (const Coord& t : tails) {
        const double roll = unit(rng);
        const bool odd = wall.row(t.p) % 2 == 1;
        std::optional<Coord> want;
        if (roll < upPath)
            want = Coord{t.i, wall.row(t.p - 1), Sign::Plus};
        else if (roll < upPath + typeI)
            want = Coord{t.i + (odd ? -1 : 1), wall.row(t.p - 2), Sign::Plus};
        else if (roll < upPath + typeI + typeII)
            want = Coord{t.i, wall.row(t.p - 3), Sign::Plus};
        Coord h;
        if (want && freeHeads.count(*want)) {
            h = *want;
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, freeHeads.size() - 1);
            h = *std::next(freeHeads.begin(), static_cast<long>(pick(rng)));
        }
        freeHeads.erase(h);
        m.edges.push_back({t, h});
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

CoordinateMatching up_path_matching(const Wall& wall) {
    CoordinateMatching m;
    for (const Coord& t : wall.in_coords()) m.edges.push_back({t, Coord{t.i, wall.row(t.p - 1), Sign::Plus}});
    return m;
}

}  // namespace eedp
