#include "eedp/twostar.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "eedp/flow.hpp"

namespace eedp {

std::vector<Demand> TwoStarDemand::demands() const {
    std::vector<Demand> d;
    for (VertexId s : sources) d.push_back(Demand{center, s});
    for (VertexId t : sinks) d.push_back(Demand{t, center});
    return d;
}

namespace {

void require_eulerian(const IncidenceDigraph& g, const TwoStarDemand& dem) {
    if (dem.sources.size() != dem.sinks.size())
        throw std::invalid_argument("two-star demand: sources and sinks differ in number");
    if (!g.has_vertex(dem.center)) throw std::invalid_argument("two-star demand: unknown center");
    Instance inst{g, dem.demands()};
    if (!is_eulerian(inst)) throw std::invalid_argument("two-star demand: union not Eulerian");
}

// max number of edge-disjoint paths from the multiset `from` into `to` (or from
// `to` out to the multiset when reverse is set), each terminal used once.
int star_flow(const IncidenceDigraph& g, VertexId center, const std::vector<VertexId>& ends,
              bool intoCenter) {
    const int nb = g.vertex_bound();
    FlowNetwork net(nb + 1);
    const int aux = nb;
    for (EdgeId e : g.edges()) net.add_arc(g.tail(e), g.head(e), 1);
    for (VertexId x : ends) {
        if (intoCenter)
            net.add_arc(aux, x, 1);
        else
            net.add_arc(x, aux, 1);
    }
    return intoCenter ? net.max_flow(aux, center) : net.max_flow(center, aux);
}

bool criterion_fast(const IncidenceDigraph& g, const TwoStarDemand& dem) {
    int p = dem.p();
    return star_flow(g, dem.center, dem.sources, true) >= p &&
           star_flow(g, dem.center, dem.sinks, false) >= p;
}

}  // namespace

bool cut_criterion_holds(const IncidenceDigraph& g, const TwoStarDemand& dem) {
    require_eulerian(g, dem);
    return criterion_fast(g, dem);
}

bool cut_criterion_exhaustive(const IncidenceDigraph& g, const TwoStarDemand& dem) {
    require_eulerian(g, dem);
    std::vector<VertexId> vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    if (n > 20) throw std::invalid_argument("exhaustive criterion limited to 20 vertices");
    std::vector<int> bit(g.vertex_bound(), -1);
    for (int i = 0; i < n; ++i) bit[vs[i]] = i;
    std::vector<std::pair<VertexId, VertexId>> dedges;
    for (const Demand& d : dem.demands()) dedges.emplace_back(d.t, d.s);
    auto in = [&](unsigned mask, VertexId v) { return (mask >> bit[v]) & 1U; };
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        int gin = 0, dout = 0;
        for (EdgeId e : g.edges())
            if (in(mask, g.head(e)) && !in(mask, g.tail(e))) ++gin;
        for (auto [a, b] : dedges)
            if (in(mask, a) && !in(mask, b)) ++dout;
        if (gin < dout) return false;
    }
    return true;
}

TwoStarResult solve_two_star(const IncidenceDigraph& g, const TwoStarDemand& dem, bool fallback,
                             std::uint64_t budget) {
    require_eulerian(g, dem);
    TwoStarResult res;
    if (!criterion_fast(g, dem)) return res;

    auto use_oracle = [&]() {
        OracleResult o = solve_exact(dem.instance(g), budget);
        res.usedFallback = true;
        if (o.verdict == Verdict::Feasible) res.linkage = o.linkage;
        return res;
    };

    IncidenceDigraph h = g;
    std::map<EdgeId, std::pair<EdgeId, EdgeId>> made;  // split edge -> (eIn, eOut)
    const VertexId v = dem.center;
    std::vector<int> nSrc(g.vertex_bound(), 0), nSnk(g.vertex_bound(), 0);
    for (VertexId s : dem.sources) ++nSrc[s];
    for (VertexId t : dem.sinks) ++nSnk[t];

    auto drop_loops = [&](VertexId u) {
        std::vector<EdgeId> loops;
        for (EdgeId e : h.out_edges(u))
            if (h.head(e) == u) loops.push_back(e);
        for (EdgeId e : loops) h.remove_edge(e);
        if (h.has_vertex(u) && h.degree(u) == 0 && u != v && nSrc[u] == 0 && nSnk[u] == 0)
            h.remove_vertex(u);
    };
    for (VertexId u : h.vertices()) drop_loops(u);

    bool progress = true;
    while (progress) {
        progress = false;
        for (VertexId u : h.vertices()) {
            if (u == v || !h.has_vertex(u)) continue;
            while (h.has_vertex(u) && h.indeg(u) > nSnk[u]) {
                bool found = false;
                std::vector<EdgeId> ins = h.in_edges(u), outs = h.out_edges(u);
                for (EdgeId a : ins) {
                    for (EdgeId b : outs) {
                        if (a == b) continue;
                        VertexId ta = h.tail(a), hb = h.head(b);
                        IncidenceDigraph trial = h;
                        EdgeId ne = split_off_inplace(trial, a, b);
                        if (!criterion_fast(trial, dem)) continue;
                        h = std::move(trial);
                        made[ne] = {a, b};
                        ++res.splits;
                        if (ta == hb) {
                            h.remove_edge(ne);
                            if (h.has_vertex(ta) && h.degree(ta) == 0 && ta != v &&
                                nSrc[ta] == 0 && nSnk[ta] == 0)
                                h.remove_vertex(ta);
                        }
                        found = true;
                        break;
                    }
                    if (found) break;
                }
                if (!found) {
                    if (fallback) return use_oracle();
                    throw std::logic_error("solve_two_star: no admissible pair at vertex " +
                                           std::to_string(u));
                }
                progress = true;
            }
        }
    }

    // Residual must now be a star around v.
    std::function<void(EdgeId, std::vector<EdgeId>&)> expand = [&](EdgeId e,
                                                                   std::vector<EdgeId>& out) {
        auto it = made.find(e);
        if (it == made.end()) {
            out.push_back(e);
            return;
        }
        expand(it->second.first, out);
        expand(it->second.second, out);
    };
    std::vector<char> taken(h.edge_bound(), 0);
    Linkage l;
    for (VertexId s : dem.sources) {
        Path p;
        p.origin = s;
        if (s != v) {
            EdgeId pick = kNone;
            for (EdgeId e : h.out_edges(s))
                if (!taken[e] && h.head(e) == v) {
                    pick = e;
                    break;
                }
            if (pick == kNone) {
                if (fallback) return use_oracle();
                throw std::logic_error("solve_two_star: residual is not a star");
            }
            taken[pick] = 1;
            expand(pick, p.edges);
        }
        l.paths.push_back(std::move(p));
    }
    for (VertexId t : dem.sinks) {
        Path p;
        p.origin = v;
        if (t != v) {
            EdgeId pick = kNone;
            for (EdgeId e : h.in_edges(t))
                if (!taken[e] && h.tail(e) == v) {
                    pick = e;
                    break;
                }
            if (pick == kNone) {
                if (fallback) return use_oracle();
                throw std::logic_error("solve_two_star: residual is not a star");
            }
            taken[pick] = 1;
            expand(pick, p.edges);
        }
        l.paths.push_back(std::move(p));
    }
    res.linkage = std::move(l);
    return res;
}

}  // namespace eedp
