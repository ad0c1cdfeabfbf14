#include "eedp/router.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "eedp/flow.hpp"
#include "wall_walker.hpp"

namespace eedp {

namespace {

std::set<VertexId> vertex_set(const IncidenceDigraph& g, const Path& p) {
    std::set<VertexId> s;
    for (EdgeId e : p.edges) {
        s.insert(g.tail(e));
        s.insert(g.head(e));
    }
    return s;
}

bool intersects(const std::set<VertexId>& a, const std::set<VertexId>& b) {
    for (VertexId v : a)
        if (b.count(v)) return true;
    return false;
}

}  // namespace

std::string check_router(const IncidenceDigraph& g, const Router& r) {
    std::vector<std::set<VertexId>> vs;
    for (std::size_t i = 0; i < r.cycles.size(); ++i) {
        const Path& c = r.cycles[i];
        if (c.edges.empty()) return "cycle " + std::to_string(i) + " is empty";
        if (auto err = check_path(g, c); !err.empty()) return "cycle " + std::to_string(i) + ": " + err;
        if (path_start(g, c) != path_end(g, c)) return "cycle " + std::to_string(i) + " is not closed";
        vs.push_back(vertex_set(g, c));
    }
    if (!edge_disjoint(r.cycles)) return "cycles share an edge";
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!intersects(vs[i], vs[j]))
                return "cycles " + std::to_string(i) + " and " + std::to_string(j) + " are vertex-disjoint";
    if (!r.branching.empty()) {
        if (r.branching.size() != r.cycles.size()) return "branching set has the wrong size";
        std::set<VertexId> seen;
        for (std::size_t i = 0; i < r.branching.size(); ++i) {
            if (!seen.insert(r.branching[i]).second) return "branching vertices repeat";
            if (!vs[i].count(r.branching[i])) return "b_" + std::to_string(i) + " is not on its cycle";
        }
    }
    return {};
}

bool verify_router(const IncidenceDigraph& g, const Router& r) { return check_router(g, r).empty(); }

std::vector<VertexId> choose_branching(const IncidenceDigraph& g, const Router& r,
                                       const std::vector<VertexId>& exclude) {
    const std::set<VertexId> ex(exclude.begin(), exclude.end());
    const int n = r.order();
    FlowNetwork net(n + 2);
    const int s = n, t = n + 1;
    std::map<VertexId, int> node;
    std::vector<std::vector<std::pair<int, VertexId>>> arcs(n);
    for (int i = 0; i < n; ++i) net.add_arc(s, i, 1);
    for (int i = 0; i < n; ++i)
        for (VertexId v : vertex_set(g, r.cycles[i])) {
            if (ex.count(v)) continue;
            auto [it, fresh] = node.emplace(v, 0);
            if (fresh) {
                it->second = net.add_node();
                net.add_arc(it->second, t, 1);
            }
            arcs[i].push_back({net.add_arc(i, it->second, 1), v});
        }
    if (net.max_flow(s, t) < n) return {};
    std::vector<VertexId> b(n, kNone);
    for (int i = 0; i < n; ++i)
        for (auto [a, v] : arcs[i])
            if (net.flow(a) > 0) b[i] = v;
    return b;
}

// --- patterns ----------------------------------------------------------------

namespace {

int gap_index(const Pattern& pi) {
    const auto it = std::find(pi.begin(), pi.end(), 0);
    if (it == pi.end()) throw std::invalid_argument("pattern without gap");
    return static_cast<int>(it - pi.begin());
}

}  // namespace

Pattern initial_pattern(int t) {
    Pattern pi;
    for (int k = 1; k < t; ++k) pi.push_back(k);
    pi.push_back(0);
    pi.push_back(t);
    return pi;
}

Pattern shift_pattern(const Pattern& pi) {
    const int l = gap_index(pi);
    if (l < 1 || l + 1 >= static_cast<int>(pi.size())) throw std::invalid_argument("shift needs l >= 1");
    Pattern out = pi;
    out[l - 1] = 0;
    out[l] = pi[l + 1];
    out[l + 1] = pi[l - 1];
    return out;
}

Pattern reset_pattern(const Pattern& pi) {
    if (gap_index(pi) != 0) throw std::invalid_argument("reset needs the gap in front");
    Pattern out(pi.begin() + 1, pi.end());
    out.insert(out.end() - 1, 0);
    return out;
}

std::vector<Pattern> router_patterns(int t) {
    std::vector<Pattern> out{initial_pattern(t)};
    for (int j = 1; j <= t * t; ++j)
        out.push_back(j % t == 0 ? reset_pattern(out.back()) : shift_pattern(out.back()));
    return out;
}

// --- cross column --------------------------------------------------------------

CrossColumn cross_column_config(int t, int inner) {
    if (t < 2) throw std::invalid_argument("cross column needs t >= 2");
    CrossColumn cc;
    cc.t = t;
    cc.wall = add_wall(cc.g, 2 * t, 2 * t * t * t);
    for (int j = 1; j <= t * t; ++j) {
        const int top = 2 * t * (j - 1) + 1, bot = 2 * t * j;
        Path p;
        p.origin = cc.wall.in_vertex(t + 1, top);
        VertexId cur = p.origin;
        for (int k = 0; k < inner; ++k) {
            const VertexId v = cc.g.add_vertex();
            p.edges.push_back(cc.g.add_edge(cur, v));
            cur = v;
        }
        p.edges.push_back(cc.g.add_edge(cur, cc.wall.out_vertex(t, bot)));
        cc.paths.push_back(p);
    }
    cc.wall.reindex();
    return cc;
}

std::string check_cross_column(const IncidenceDigraph& g, const Wall& wall, const std::vector<Path>& paths) {
    if (wall.nc % 2 != 0 || wall.nc < 4) return "wall needs 2t columns with t >= 2";
    const int t = wall.nc / 2;
    if (wall.nh != 2 * t * t * t) return "wall needs 2t^3 rows";
    if (static_cast<int>(paths.size()) != t * t) return "need t^2 crossing paths";
    std::set<EdgeId> wallEdges;
    for (EdgeId e : wall.edges()) wallEdges.insert(e);
    for (int j = 1; j <= t * t; ++j) {
        const Path& p = paths[j - 1];
        const std::string tag = "P_" + std::to_string(j);
        if (p.edges.empty()) return tag + " is empty";
        if (auto err = check_path(g, p); !err.empty()) return tag + ": " + err;
        const int top = 2 * t * (j - 1) + 1, bot = 2 * t * j;
        if (path_start(g, p) != wall.in_vertex(t + 1, top)) return tag + " starts at the wrong coordinate";
        if (path_end(g, p) != wall.out_vertex(t, bot)) return tag + " ends at the wrong coordinate";
        for (EdgeId e : p.edges)
            if (wallEdges.count(e)) return tag + " uses a wall edge";
    }
    if (!edge_disjoint(paths)) return "crossing paths share an edge";
    return {};
}

Router router_from_cross_column(const IncidenceDigraph& g, const Wall& wall, const std::vector<Path>& paths) {
    if (auto err = check_cross_column(g, wall, paths); !err.empty()) throw std::invalid_argument(err);
    const int t = wall.nc / 2;
    // Physical column of pattern position idx: strands sit right to left in
    // pattern order, the one after the gap on W_t.
    auto column = [t](int l, int idx) { return t + l + (idx > l ? 1 : 0) - idx; };

    Pattern pi = initial_pattern(t);
    std::vector<detail::Walker> strand;
    std::vector<int> startCol(t + 1);
    {
        const int l = gap_index(pi);
        for (int k = 1; k <= t; ++k) {
            const int idx = static_cast<int>(std::find(pi.begin(), pi.end(), k) - pi.begin());
            startCol[k] = column(l, idx);
        }
        for (int k = 1; k <= t; ++k) strand.emplace_back(wall, startCol[k], 1, false);
    }
    auto at = [&](int who) -> detail::Walker& { return strand[who - 1]; };

    for (int j = 1; j <= t * t; ++j) {
        const int top = 2 * t * (j - 1) + 1, bot = 2 * t * j;
        const int l = gap_index(pi);
        if (l >= 1) {
            // The strand after the gap takes H_top onto W_{t+1}, then P_j.
            at(pi[l + 1]).horiz(t + 1).follow(paths[j - 1].edges, Coord{t, bot, Sign::Plus}).down(bot + 1);
            // Its left neighbour on W_{t+1} steps over to W_t and leaves on H_bot.
            at(pi[l - 1]).down(top + 1).horiz(t).down(bot).horiz(t - 1).down(bot + 1);
            // The rest of the right group moves one column left, leftmost first.
            for (int k = 1; k <= l - 1; ++k)
                at(pi[l - 1 - k]).down(top + 2 * k + 1).horiz(t + k).down(bot + 1);
            // The left group moves one column left, leftmost first.
            for (int idx = l + 2; idx <= t; ++idx) {
                const int col = column(l, idx);
                const int k = col - l;
                at(pi[idx]).down(top + 2 * k - 1).horiz(col - 1).down(bot + 1);
            }
            pi = shift_pattern(pi);
        } else {
            // Reset: every strand moves right by t-1, rightmost first.
            for (int m = 0; m < t; ++m)
                at(pi[m + 1]).down(top + 2 * m).horiz(2 * t - 1 - m).down(bot + 1);
            pi = reset_pattern(pi);
        }
    }
    Router r;
    for (int k = 1; k <= t; ++k) {
        if (at(k).col() != startCol[k] || at(k).row() != 1) throw std::logic_error("strand did not close up");
        Path c = at(k).path();
        c.cycle = true;
        r.cycles.push_back(std::move(c));
    }
    return r;
}

}  // namespace eedp
