#include <algorithm>
#include <stdexcept>

#include "eedp/generators.hpp"

namespace eedp {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void add_random_cycle(IncidenceDigraph& g, int n, int len, Rng& rng, VertexId through) {
    std::vector<VertexId> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(len);
    if (through != kNone && std::find(vs.begin(), vs.end(), through) == vs.end()) vs[0] = through;
    for (int i = 0; i < len; ++i) g.add_edge(vs[i], vs[(i + 1) % len]);
}

}  // namespace

IncidenceDigraph random_eulerian(int n, int r, Rng& rng, int maxLen, bool allowLoops) {
    if (n < 1 || r < 0) throw std::invalid_argument("random_eulerian: bad parameters");
    if (maxLen <= 0 || maxLen > n) maxLen = n;
    IncidenceDigraph g(n);
    int minLen = allowLoops ? 1 : std::min(2, n);
    for (int i = 0; i < r; ++i) add_random_cycle(g, n, uniform(rng, minLen, maxLen), rng, kNone);
    return g;
}

Instance random_instance(int n, int m, int p, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_instance: n >= 2");
    Instance inst;
    inst.supply = IncidenceDigraph(n);
    while (inst.supply.num_edges() < m + p) {
        int len = uniform(rng, 2, std::min(n, 5));
        add_random_cycle(inst.supply, n, len, rng, kNone);
    }
    std::vector<EdgeId> es = inst.supply.edges();
    std::shuffle(es.begin(), es.end(), rng);
    es.resize(std::min<std::size_t>(p, es.size()));
    std::sort(es.begin(), es.end());
    for (EdgeId e : es) {
        inst.demands.push_back(Demand{inst.supply.tail(e), inst.supply.head(e)});
        inst.supply.remove_edge(e);
    }
    return inst;
}

TwoStarInstance random_two_star(int n, int m, int p, Rng& rng) {
    if (n < 2 || p < 1) throw std::invalid_argument("random_two_star: bad parameters");
    TwoStarInstance out;
    IncidenceDigraph& g = out.g;
    g = IncidenceDigraph(n);
    const VertexId v = 0;
    for (int i = 0; i < p; ++i) add_random_cycle(g, n, uniform(rng, 2, std::min(n, 5)), rng, v);
    while (g.num_edges() < m + 2 * p) add_random_cycle(g, n, uniform(rng, 2, std::min(n, 5)), rng, kNone);
    std::vector<EdgeId> ins = g.in_edges(v), outs = g.out_edges(v);
    std::shuffle(ins.begin(), ins.end(), rng);
    std::shuffle(outs.begin(), outs.end(), rng);
    out.dem.center = v;
    for (int i = 0; i < p; ++i) {
        out.dem.sinks.push_back(g.tail(ins[i]));
        out.dem.sources.push_back(g.head(outs[i]));
    }
    for (int i = 0; i < p; ++i) {
        g.remove_edge(ins[i]);
        g.remove_edge(outs[i]);
    }
    return out;
}

}  // namespace eedp
