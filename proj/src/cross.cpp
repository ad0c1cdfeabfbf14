#include "eedp/cross.hpp"

#include "wall_walker.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace eedp {

TileCorners tile_corners(const Wall& wall, const Tile& t) {
    const bool topOdd = wall.row(t.top) % 2 == 1;
    TileCorners c;
    c.tl = topOdd ? wall.out_vertex(t.L, t.top) : wall.in_vertex(t.L, t.top);
    c.tr = topOdd ? wall.in_vertex(t.R, t.top) : wall.out_vertex(t.R, t.top);
    c.bl = wall.in_vertex(t.L, t.bottom);
    c.br = wall.in_vertex(t.R, t.bottom);
    return c;
}

std::vector<std::optional<WallEdgeKey>> wall_edge_keys(const MatchedWall& mw) {
    std::vector<std::optional<WallEdgeKey>> keys(mw.g.edge_bound());
    const Wall& w = mw.wall;
    for (int i = 1; i <= w.nc; ++i)
        for (int p = 1; p <= w.nh; ++p) {
            const int c = w.cell(i, p);
            for (EdgeId e : w.split[c]) keys[e] = WallEdgeKey{WallEdgeKey::Split, i, p};
            for (EdgeId e : w.down[c]) keys[e] = WallEdgeKey{WallEdgeKey::Down, i, p};
            for (EdgeId e : w.side[c]) keys[e] = WallEdgeKey{WallEdgeKey::Side, i, p};
        }
    for (std::size_t k = 0; k < mw.medge.size(); ++k)
        keys[mw.medge[k]] = WallEdgeKey{WallEdgeKey::Match, static_cast<int>(k), 0};
    return keys;
}

namespace {

using detail::Walker;

int largest_odd_at_most(int x) { return (x % 2 != 0) ? x : x - 1; }
int smallest_even_at_least(int x) { return (x % 2 == 0) ? x : x + 1; }
bool odd(int x) { return x % 2 != 0; }

// Paths given as (TL->BR, TR->BL) or the other way round; sorted by start.
Cross make_cross(const Wall& w, const Tile& t, Path a, Path b, const IncidenceDigraph& g, std::string name) {
    const TileCorners c = tile_corners(w, t);
    Cross x;
    x.tile = t;
    x.route = std::move(name);
    if (path_start(g, a) == c.tl) {
        x.p1 = std::move(a);
        x.p2 = std::move(b);
    } else {
        x.p1 = std::move(b);
        x.p2 = std::move(a);
    }
    return x;
}

Tile type0_tile(const JumpRecord& r) {
    const int i = r.tail.i, p = r.tail.p, j = r.head.i, q = r.head.p;
    return Tile{std::min(i, j) - 2, std::max(i, j) + 2, largest_odd_at_most(std::min(p, q) - 4),
                smallest_even_at_least(std::max(p, q) + 4)};
}

// Routes in the original frame; nullopt when the case is handled by the
// row-reversal symmetry instead.
std::optional<Cross> type0_direct(const MatchedWall& mw, const JumpRecord& r) {
    const Wall& w = mw.wall;
    const int i = r.tail.i, p = r.tail.p, j = r.head.i, q = r.head.p;
    const Tile t = type0_tile(r);
    const int L = t.L, R = t.R, top = t.top, bot = t.bottom;
    auto tl = [&] { return Walker(mw, L, top, true); };
    auto tr = [&] { return Walker(mw, R, top, false); };
    if (p <= q) {
        const int rOdd = odd(p) ? p : p + 1;
        if (rOdd <= q) {
            Walker a = tr();
            a.down(top + 1).horiz(i).down(p).jump().down(bot).horiz(L);
            Walker b = tl();
            b.down(rOdd).horiz(R).down(bot);
            return make_cross(w, t, a.path(), b.path(), mw.g, "level-or-down/odd-row");
        }
        // p == q, both even.
        const int r1 = largest_odd_at_most(p - 1);
        const int r2 = q + 1;
        Walker a = tl();
        a.down(r1).horiz(i).down(p).jump().down(r2).horiz(R).down(bot);
        Walker b = tr();
        b.down(p).horiz(L).down(bot);
        return make_cross(w, t, a.path(), b.path(), mw.g, "level/even-row");
    }
    // Upward jump.
    if (i < j - 1) {
        Walker a = tl();
        a.horiz(i).down(p).jump().down(bot - 1).horiz(R).down(bot);
        Walker b = tr();
        b.down(top + 1).horiz(i + 1).down(bot).horiz(L);
        return make_cross(w, t, a.path(), b.path(), mw.g, "up/apart");
    }
    if (i == j - 1) {
        if (odd(p)) {
            Walker a = tl();
            a.down(p).horiz(i).jump().down(bot - 1).horiz(R).down(bot);
            Walker b = tr();
            b.down(top + 1).horiz(i).down(bot).horiz(L);
            return make_cross(w, t, a.path(), b.path(), mw.g, "up/adjacent/odd");
        }
        if (odd(q)) {
            Walker a = tl();
            a.horiz(i).down(p).jump().horiz(R).down(bot);
            Walker b = tr();
            b.down(top + 1).horiz(j).down(bot).horiz(L);
            return make_cross(w, t, a.path(), b.path(), mw.g, "up/adjacent/even-odd");
        }
        Walker a = tl();
        a.horiz(j + 1).down(p - 2).horiz(i - 1).down(bot - 1).horiz(R).down(bot);
        Walker b = tr();
        b.down(p).horiz(i).jump().horiz(L).down(bot);
        return make_cross(w, t, a.path(), b.path(), mw.g, "up/adjacent/even-even");
    }
    if (i != j) return std::nullopt;
    if (odd(p) && odd(q)) {
        Walker a = tl();
        a.horiz(i - 1).down(p).horiz(i).jump().horiz(i + 1).down(bot - 1).horiz(R).down(bot);
        Walker b = tr();
        b.down(top + 1).horiz(i).down(bot).horiz(L);
        return make_cross(w, t, a.path(), b.path(), mw.g, "up/same-column/odd-odd");
    }
    if (odd(p) && !odd(q)) {
        Walker a = tl();
        a.down(p).horiz(i).jump().down(q + 1).horiz(R).down(bot);
        Walker b = tr();
        b.down(top + 1).horiz(i - 1).down(p - 2).horiz(i).down(bot).horiz(L);
        return make_cross(w, t, a.path(), b.path(), mw.g, "up/same-column/odd-even");
    }
    if (!odd(p) && odd(q)) {
        Walker a = tr();
        a.down(p).horiz(i).jump().down(q + 1).horiz(L).down(bot);
        Walker b = tl();
        b.horiz(i + 1).down(p - 2).horiz(i).down(bot - 1).horiz(R).down(bot);
        return make_cross(w, t, a.path(), b.path(), mw.g, "up/same-column/even-odd");
    }
    return std::nullopt;  // even-even: reflect
}

// Maps the edge with key k of the reflected frame back to the original wall.
EdgeId reflect_back(const MatchedWall& mw, const WallEdgeKey& k, EdgeId jumpEdge) {
    const Wall& w = mw.wall;
    const int n = w.nh;
    auto one = [](const std::vector<EdgeId>& s) {
        if (s.size() != 1) throw std::logic_error("reflection needs an elementary wall");
        return s[0];
    };
    switch (k.kind) {
        case WallEdgeKey::Split: return one(w.split[w.cell(k.i, n + 1 - k.p)]);
        case WallEdgeKey::Down: return one(w.down[w.cell(k.i, n - k.p)]);
        case WallEdgeKey::Side: return one(w.side[w.cell(k.i, n + 1 - k.p)]);
        case WallEdgeKey::Match: return jumpEdge;
    }
    return kNone;
}

// Adjusts a reflected path so it starts and ends on the tile's corner
// vertices (a top corner may be x^- while the reflected start is x^+, and
// vice versa at the bottom).
Path fit_corners(const MatchedWall& mw, const Tile& t, Path p) {
    const Wall& w = mw.wall;
    const TileCorners c = tile_corners(w, t);
    const VertexId s = path_start(mw.g, p);
    for (int col : {t.L, t.R}) {
        const int cell = w.cell(col, t.top);
        const VertexId corner = col == t.L ? c.tl : c.tr;
        if (s == w.out[cell] && corner == w.in[cell] && !w.split[cell].empty()) {
            p.edges.insert(p.edges.begin(), w.split[cell].begin(), w.split[cell].end());
            p.origin = corner;
        }
    }
    const VertexId e = path_end(mw.g, p);
    for (int col : {t.L, t.R}) {
        const int cell = w.cell(col, t.bottom);
        if (e == w.out[cell] && !w.split[cell].empty() && !p.edges.empty() &&
            p.edges.back() == w.split[cell].back())
            p.edges.pop_back();
    }
    return p;
}

std::optional<Cross> type0_reflected(const MatchedWall& mw, const JumpRecord& r) {
    const Wall& w = mw.wall;
    const int n = w.nh;
    CoordinateMatching m;
    m.edges.push_back({Coord{r.head.i, n + 1 - r.head.p, Sign::Minus},
                       Coord{r.tail.i, n + 1 - r.tail.p, Sign::Plus}});
    const MatchedWall ref = build_matched_wall(w.nc, n, m);
    JumpRecord rr = classify_jump(ref.wall, ref.matching, 0);
    auto c = type0_direct(ref, rr);
    if (!c) return std::nullopt;
    const auto keys = wall_edge_keys(ref);
    auto mapPath = [&](const Path& src) {
        Path out;
        for (auto it = src.edges.rbegin(); it != src.edges.rend(); ++it)
            out.edges.push_back(reflect_back(mw, *keys.at(*it), mw.medge[r.index]));
        out.origin = out.edges.empty() ? kNone : mw.g.tail(out.edges.front());
        return out;
    };
    const Tile t{c->tile.L, c->tile.R, n + 1 - c->tile.bottom, n + 1 - c->tile.top};
    Path a = fit_corners(mw, t, mapPath(c->p1));
    Path b = fit_corners(mw, t, mapPath(c->p2));
    return make_cross(w, t, a, b, mw.g, "reflected:" + c->route);
}

}  // namespace

bool type0_in_margin(const Wall& w, const JumpRecord& r) {
    auto colOk = [&](int c) { return c >= 3 && c <= w.nc - 3; };
    auto rowOk = [&](int x) { return x >= 5 && x <= w.nh - 5; };
    return colOk(r.tail.i) && colOk(r.head.i) && rowOk(r.tail.p) && rowOk(r.head.p);
}

bool sequence_in_margin(const Wall& w, const JumpRecord& r) {
    return r.tail.i >= 4 && r.tail.i <= w.nc - 3 && r.tail.p >= 9 && r.tail.p <= w.nh - 4;
}

CrossResult cross_from_jump(const MatchedWall& mw, int index) {
    CrossResult res;
    const JumpRecord r = classify_jump(mw.wall, mw.matching, index);
    if (r.type != JumpType::Type0) {
        res.error = std::string("not a type 0 jump (") + to_string(r.type) + ")";
        return res;
    }
    if (!type0_in_margin(mw.wall, r)) {
        res.error = "jump outside the interior margins";
        return res;
    }
    try {
        auto c = type0_direct(mw, r);
        if (!c) c = type0_reflected(mw, r);
        if (!c) throw std::logic_error("no route for this case");
        if (auto err = validate_cross(mw, *c); !err.empty()) throw std::logic_error(err);
        res.cross = std::move(c);
    } catch (const std::exception& ex) {
        res.error = std::string("route failed: ") + ex.what();
    }
    return res;
}

CrossResult cross_from_sequence(const MatchedWall& mw, int start) {
    CrossResult res;
    const Wall& w = mw.wall;
    const JumpRecord r1 = classify_jump(w, mw.matching, start);
    if (r1.type == JumpType::Type0) return cross_from_jump(mw, start);
    if (r1.type == JumpType::UpPath) {
        res.error = "up-paths induce no cross";
        return res;
    }
    const auto seq = jump_sequence(w, mw.matching, start, 3);
    if (!seq) {
        res.error = "jump is not 3-saturated";
        return res;
    }
    for (int k = 1; k < 3; ++k) {
        const JumpRecord rk = classify_jump(w, mw.matching, (*seq)[k]);
        if (rk.type == JumpType::Type0) {
            if (!type0_in_margin(w, rk)) {
                res.error = "type 0 jump of the sequence outside the interior margins";
                return res;
            }
            return cross_from_jump(mw, (*seq)[k]);
        }
    }
    if (!sequence_in_margin(w, r1)) {
        res.error = "sequence outside the interior margins";
        return res;
    }
    const int i = r1.tail.i, p = r1.tail.p;
    const int s = odd(p) ? 1 : -1;  // even rows mirror the columns
    auto c = [&](int d) { return i + s * d; };
    const Tile t{std::min(c(-3), c(3)), std::max(c(-3), c(3)), p - 8, p + 4};
    try {
        // Jump-path: stop once it lands on (i - s, p - 4), else take all three.
        Walker a(mw, c(-3), p - 8, true);
        a.down(p).horiz(i);
        for (int k = 0; k < 3; ++k) {
            if (k > 0) a.down(a.row() + 1);
            a.jump();
            if (a.col() == c(-1) && a.row() == w.row(p - 4)) break;
        }
        const bool forward = (a.row() % 2 == 1) == (s == 1);
        if (!forward) a.down(a.row() + 1);
        a.horiz(c(3)).down(p + 4);
        Walker b(mw, c(3), p - 8, false);
        b.down(p - 7).horiz(c(-2)).down(p - 2).horiz(c(1)).down(p + 3).horiz(c(-3)).down(p + 4);
        Cross x = make_cross(w, t, a.path(), b.path(), mw.g, "sequence");
        if (auto err = validate_cross(mw, x); !err.empty()) throw std::logic_error(err);
        res.cross = std::move(x);
    } catch (const std::exception& ex) {
        res.error = std::string("route failed: ") + ex.what();
    }
    return res;
}

std::string validate_cross(const MatchedWall& mw, const Cross& c) {
    const Wall& w = mw.wall;
    const Tile& t = c.tile;
    if (t.L < 1 || t.R > w.nc || t.L >= t.R || t.top < 1 || t.bottom > w.nh || t.top >= t.bottom)
        return "tile out of range";
    for (const Path* p : {&c.p1, &c.p2})
        if (auto err = check_path(mw.g, *p); !err.empty()) return err;
    if (!edge_disjoint({c.p1, c.p2})) return "paths share an edge";
    const TileCorners k = tile_corners(w, t);
    if (path_start(mw.g, c.p1) != k.tl || path_end(mw.g, c.p1) != k.br) return "first path misses its corners";
    if (path_start(mw.g, c.p2) != k.tr || path_end(mw.g, c.p2) != k.bl) return "second path misses its corners";
    const auto keys = wall_edge_keys(mw);
    auto inCols = [&](int i) { return i >= t.L && i <= t.R; };
    auto inRows = [&](int p) { return p >= t.top && p <= t.bottom; };
    for (const Path* p : {&c.p1, &c.p2})
        for (EdgeId e : p->edges) {
            const auto& key = keys.at(e);
            if (!key) return "edge " + std::to_string(e) + " is not a wall or matching edge";
            bool ok = false;
            switch (key->kind) {
                case WallEdgeKey::Split: ok = inCols(key->i) && inRows(key->p); break;
                case WallEdgeKey::Down: ok = inCols(key->i) && inRows(key->p) && key->p < t.bottom; break;
                case WallEdgeKey::Side: ok = key->i >= t.L && key->i < t.R && inRows(key->p); break;
                case WallEdgeKey::Match: {
                    const auto& [a, b] = mw.matching.edges[key->i];
                    ok = inCols(a.i) && inRows(a.p) && inCols(b.i) && inRows(b.p);
                    break;
                }
            }
            if (!ok) return "edge " + std::to_string(e) + " leaves the tile";
        }
    return {};
}

}  // namespace eedp
