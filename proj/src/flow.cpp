#include "eedp/flow.hpp"

#include <algorithm>
#include <unordered_map>

#include "eedp/graph.hpp"

namespace eedp {

int FlowNetwork::add_arc(int u, int v, int cap) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({v, cap});
    arcs_.push_back({u, 0});
    adj_[u].push_back(id);
    adj_[v].push_back(id + 1);
    return id;
}

bool FlowNetwork::augment(int s, int t) {
    // iterative DFS; parent arc per node
    std::vector<int> par(adj_.size(), -2);
    std::vector<std::size_t> it(adj_.size(), 0);
    std::vector<int> stack{s};
    par[s] = -1;
    while (!stack.empty()) {
        int u = stack.back();
        if (u == t) break;
        if (it[u] == adj_[u].size()) {
            stack.pop_back();
            continue;
        }
        int a = adj_[u][it[u]++];
        int v = arcs_[a].to;
        if (arcs_[a].cap > 0 && par[v] == -2) {
            par[v] = a;
            stack.push_back(v);
        }
    }
    if (par[t] == -2) return false;
    for (int v = t; v != s;) {
        int a = par[v];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        v = arcs_[a ^ 1].to;
    }
    return true;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
    int f = 0;
    while (f < limit && augment(s, t)) ++f;
    return f;
}

std::vector<char> FlowNetwork::reaches(int t) const {
    std::vector<char> r(adj_.size(), 0);
    std::vector<int> q{t};
    r[t] = 1;
    while (!q.empty()) {
        int v = q.back();
        q.pop_back();
        // u reaches v if the arc u->v has residual capacity; arc twin of a in adj_[v]
        for (int a : adj_[v]) {
            int u = arcs_[a].to;
            if (!r[u] && arcs_[a ^ 1].cap > 0) {
                r[u] = 1;
                q.push_back(u);
            }
        }
    }
    return r;
}

FlowResult max_edge_disjoint_paths(const IncidenceDigraph& g,
                                   const std::vector<VertexId>& S,
                                   const std::vector<VertexId>& T) {
    const int nb = g.vertex_bound();
    FlowNetwork net(nb + 2);
    const int sigma = nb, tau = nb + 1;
    std::vector<char> inS(nb, 0), inT(nb, 0);
    for (VertexId v : S)
        if (g.has_vertex(v)) inS[v] = 1;
    for (VertexId v : T)
        if (g.has_vertex(v)) inT[v] = 1;
    // vertices in both sets get a separate in-copy so trivial paths do not count
    std::vector<int> inNode(nb);
    for (int v = 0; v < nb; ++v) inNode[v] = v;
    const int big = g.num_edges() + 1;
    for (int v = 0; v < nb; ++v)
        if (inS[v] && inT[v]) inNode[v] = net.add_node();
    std::vector<int> edgeArc(g.edge_bound(), -1);
    for (EdgeId e : g.edges()) {
        VertexId t = g.tail(e), h = g.head(e);
        if (t == kNone || h == kNone) continue;
        edgeArc[e] = net.add_arc(t, inNode[h], 1);
    }
    for (int v = 0; v < nb; ++v) {
        if (inS[v]) net.add_arc(sigma, v, big);
        if (inT[v]) net.add_arc(inNode[v], tau, big);
        if (inNode[v] != v) net.add_arc(inNode[v], v, big);
    }
    FlowResult res;
    res.count = net.max_flow(sigma, tau);

    // decompose into trails: follow flow-carrying edge arcs, stop at a sink
    std::unordered_map<int, EdgeId> arcEdge;
    for (EdgeId e : g.edges())
        if (edgeArc[e] >= 0) arcEdge[edgeArc[e]] = e;
    std::unordered_map<int, int> remaining;
    auto flowLeft = [&](int a) {
        auto it = remaining.find(a);
        return it == remaining.end() ? net.flow(a) : it->second;
    };
    auto consume = [&](int a) { remaining[a] = flowLeft(a) - 1; };
    for (int a : net.arcs_from(sigma)) {
        if (!net.is_forward(a)) continue;
        while (flowLeft(a) > 0) {
            consume(a);
            Path p;
            int u = net.head(a);
            p.origin = u;
            while (true) {
                int sinkArc = -1, next = -1, via = -1;
                for (int b : net.arcs_from(u)) {
                    if (!net.is_forward(b) || flowLeft(b) <= 0) continue;
                    if (net.head(b) == tau) {
                        sinkArc = b;
                        break;
                    }
                    if (next < 0) {
                        next = net.head(b);
                        via = b;
                    }
                }
                if (sinkArc >= 0) {
                    consume(sinkArc);
                    break;
                }
                consume(via);
                auto it = arcEdge.find(via);
                if (it != arcEdge.end()) p.edges.push_back(it->second);
                u = next;
            }
            res.linkage.paths.push_back(std::move(p));
        }
    }
    std::vector<char> r = net.reaches(tau);
    for (VertexId v : g.vertices())
        if (!r[v]) res.source_side.push_back(v);
    return res;
}

}  // namespace eedp
