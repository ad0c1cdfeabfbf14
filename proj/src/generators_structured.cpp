#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "eedp/generators.hpp"

namespace eedp {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Cyclic distance from position a forward to position b on a cycle of length n.
int forward(int a, int b, int n) { return ((b - a) % n + n) % n; }

}  // namespace

WallHost random_wall_host(int k, std::uint64_t seed, const WallHostOptions& opt) {
    Rng rng(seed);
    WallHost h;
    h.wall = add_wall(h.g, k, 2 * k);
    h.planted = random_matching(h.wall, seed, opt.upPath, opt.typeI, opt.typeII);
    std::vector<VertexId> pool;
    for (int i = 0; i < opt.pool; ++i) pool.push_back(h.g.add_vertex());
    for (const auto& [a, b] : h.planted.edges) {
        Path p;
        p.origin = h.wall.vertex(a);
        VertexId cur = p.origin;
        const int inner = pool.empty() ? 0 : uniform(rng, 0, opt.maxInner);
        for (int s = 0; s < inner; ++s) {
            VertexId v = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
            p.edges.push_back(h.g.add_edge(cur, v));
            cur = v;
        }
        p.edges.push_back(h.g.add_edge(cur, h.wall.vertex(b)));
        h.paths.push_back(p);
    }
    for (int c = 0; c < opt.extraCycles && pool.size() >= 2; ++c) {
        std::vector<VertexId> vs = pool;
        std::shuffle(vs.begin(), vs.end(), rng);
        vs.resize(uniform(rng, 2, static_cast<int>(pool.size())));
        for (std::size_t i = 0; i < vs.size(); ++i) h.g.add_edge(vs[i], vs[(i + 1) % vs.size()]);
    }
    if (opt.maxSubdiv > 0) subdivide_wall(h.g, h.wall, seed ^ 0x9e3779b97f4a7c15ULL, opt.maxSubdiv);
    h.wall.reindex();
    return h;
}

Flower flower_graph(int h, int p, std::uint64_t seed, int extraChords) {
    if (h < 1 || p < 1) throw std::invalid_argument("flower needs h >= 1 and p >= 1");
    Rng rng(seed);
    Flower f;
    f.h = h;
    IncidenceDigraph& g = f.inst.supply;
    std::vector<std::vector<VertexId>> ring;
    for (int j = 0; j <= 2 * h; ++j) {
        const int len = j == 2 * h ? std::max(4 + 2 * h, 4 * p + 4) : 3 + j;
        std::vector<VertexId> vs;
        for (int i = 0; i < len; ++i) vs.push_back(g.add_vertex());
        const int dir = j % 2 == 0 ? 1 : -1;
        Path c;
        c.origin = vs[0];
        c.cycle = true;
        for (int i = 0; i < len; ++i) {
            const int a = dir > 0 ? i : (len - i) % len;
            const int b = dir > 0 ? (i + 1) % len : (len - i - 1) % len;
            c.edges.push_back(g.add_edge(vs[a], vs[b]));
        }
        f.cycles.push_back(c);
        f.direction.push_back(dir);
        ring.push_back(vs);
    }
    // Outer positions in the cycle's own traversal order.
    const Path& outer = f.cycles.back();
    std::vector<VertexId> order;
    for (EdgeId e : outer.edges) order.push_back(g.tail(e));
    const int n = static_cast<int>(order.size());
    auto chord = [&](int a, int b) { g.add_edge(order[a], order[b]); };
    // Demand i: s_i -> a_i, chord a_i -> b_i two steps ahead, b_i -> t_i.
    for (int i = 0; i < p; ++i) {
        const int a = 4 * i, b = (4 * i + 2) % n;
        const VertexId s = g.add_vertex(), t = g.add_vertex();
        g.add_edge(s, order[a]);
        chord(a, b);
        g.add_edge(order[b], t);
        f.inst.demands.push_back(Demand{t, s});
    }
    // Extra chord digons, each direction skipping at least one vertex.
    for (int c = 0; c < extraChords; ++c) {
        const int a = uniform(rng, 0, n - 1);
        const int d = uniform(rng, 2, n - 2);
        chord(a, (a + d) % n);
        chord((a + d) % n, a);
    }
    return f;
}

std::string check_flower(const Flower& f) {
    const auto& g = f.inst.supply;
    if (static_cast<int>(f.cycles.size()) != 2 * f.h + 1) return "expected 2h+1 cycles";
    std::map<VertexId, int> owner;
    std::set<EdgeId> cycleEdges;
    for (std::size_t j = 0; j < f.cycles.size(); ++j) {
        const Path& c = f.cycles[j];
        if (auto err = check_path(g, c); !err.empty()) return "C_" + std::to_string(j) + ": " + err;
        if (c.edges.empty() || path_start(g, c) != path_end(g, c)) return "C_" + std::to_string(j) + " not closed";
        std::set<VertexId> seen;
        for (EdgeId e : c.edges) {
            if (!seen.insert(g.tail(e)).second) return "C_" + std::to_string(j) + " is not simple";
            auto [it, fresh] = owner.emplace(g.tail(e), static_cast<int>(j));
            if (!fresh) return "cycles share a vertex";
            cycleEdges.insert(e);
        }
        if (j + 1 < f.cycles.size() && f.direction[j] == f.direction[j + 1]) return "directions do not alternate";
    }
    const int outerIdx = 2 * f.h;
    std::map<VertexId, int> pos;
    for (std::size_t k = 0; k < f.cycles.back().edges.size(); ++k)
        pos[g.tail(f.cycles.back().edges[k])] = static_cast<int>(k);
    const int n = static_cast<int>(pos.size());
    const auto terms = terminals(f.inst);
    const std::set<VertexId> term(terms.begin(), terms.end());
    for (EdgeId e : g.edges()) {
        if (cycleEdges.count(e)) continue;
        const VertexId a = g.tail(e), b = g.head(e);
        const bool ao = owner.count(a) && owner[a] == outerIdx, bo = owner.count(b) && owner[b] == outerIdx;
        if (ao && bo) {
            if (forward(pos[a], pos[b], n) < 2) return "chord " + std::to_string(e) + " skips no vertex";
        } else if (!((ao && term.count(b)) || (bo && term.count(a)))) {
            return "edge " + std::to_string(e) + " is neither a chord nor a terminal edge";
        }
    }
    for (VertexId v : g.vertices())
        if (!owner.count(v) && !term.count(v)) return "vertex " + std::to_string(v) + " off the flower";
    if (!is_eulerian(f.inst)) return "supply plus demands is not Eulerian";
    return {};
}

PlantedRouter planted_router_instance(int order, int p, std::uint64_t seed, int background) {
    if (order < 2 || p < 0) throw std::invalid_argument("router order >= 2 and p >= 0");
    Rng rng(seed);
    PlantedRouter out;
    IncidenceDigraph& g = out.inst.supply;
    std::map<std::pair<int, int>, VertexId> shared;
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b) shared[{a, b}] = g.add_vertex();
    for (int a = 0; a < order; ++a) {
        std::vector<VertexId> vs;
        for (int b = 0; b < order; ++b)
            if (b != a) vs.push_back(shared[{std::min(a, b), std::max(a, b)}]);
        Path c;
        c.origin = vs[0];
        c.cycle = true;
        for (std::size_t i = 0; i < vs.size(); ++i) c.edges.push_back(g.add_edge(vs[i], vs[(i + 1) % vs.size()]));
        out.router.cycles.push_back(c);
    }
    // Background cycles over router vertices and a few fresh ones; demands are
    // cut out of them so supply plus demands stays Eulerian.
    std::vector<VertexId> anchors = g.vertices();
    const int fresh = 2 + p;
    for (int i = 0; i < fresh; ++i) anchors.push_back(g.add_vertex());
    std::vector<EdgeId> bg;
    const int cycles = std::max(background, p);
    for (int c = 0; c < cycles; ++c) {
        std::vector<VertexId> vs = anchors;
        std::shuffle(vs.begin(), vs.end(), rng);
        vs.resize(uniform(rng, 2, std::min<int>(5, static_cast<int>(vs.size()))));
        for (std::size_t i = 0; i < vs.size(); ++i) bg.push_back(g.add_edge(vs[i], vs[(i + 1) % vs.size()]));
    }
    std::shuffle(bg.begin(), bg.end(), rng);
    bg.resize(std::min<std::size_t>(p, bg.size()));
    std::sort(bg.begin(), bg.end());
    for (EdgeId e : bg) {
        out.inst.demands.push_back(Demand{g.tail(e), g.head(e)});
        g.remove_edge(e);
    }
    return out;
}

}  // namespace eedp
