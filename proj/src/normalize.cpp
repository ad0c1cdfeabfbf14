#include "eedp/normalize.hpp"

#include <algorithm>
#include <stdexcept>

#include "eedp/flow.hpp"

namespace eedp {

namespace {

std::vector<int> demand_incidence(const Instance& inst) {
    std::vector<int> c(inst.supply.vertex_bound(), 0);
    for (const Demand& d : inst.demands) {
        ++c[d.t];
        ++c[d.s];
    }
    return c;
}

void rewire(IncidenceDigraph& g, EdgeId e, VertexId t, VertexId h) {
    g.remove_edge(e);
    g.add_edge_with_id(e, t, h);
}

// W_k gadget: rows i = 1..k are k-cycles, column edges go row i -> row i+1.
void expand_gadget(IncidenceDigraph& g, VertexId v) {
    const int k = g.indeg(v);
    std::vector<EdgeId> ins = g.in_edges(v), outs = g.out_edges(v);
    std::vector<std::vector<VertexId>> x(k, std::vector<VertexId>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) x[i][j] = g.add_vertex();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.add_edge(x[i][j], x[i][(j + 1) % k]);
    for (int i = 0; i + 1 < k; ++i)
        for (int j = 0; j < k; ++j) g.add_edge(x[i][j], x[i + 1][j]);
    std::vector<VertexId> newTail(g.edge_bound(), kNone), newHead(g.edge_bound(), kNone);
    for (int j = 0; j < k; ++j) newHead[ins[j]] = x[0][j];
    for (int j = 0; j < k; ++j) newTail[outs[j]] = x[k - 1][j];
    std::vector<EdgeId> touched = ins;
    touched.insert(touched.end(), outs.begin(), outs.end());
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (EdgeId e : touched) {
        VertexId t = newTail[e] != kNone ? newTail[e] : g.tail(e);
        VertexId h = newHead[e] != kNone ? newHead[e] : g.head(e);
        rewire(g, e, t, h);
    }
    g.remove_vertex(v);
}

}  // namespace

Instance normalize_degrees(const Instance& in) {
    Instance inst = in;
    IncidenceDigraph& g = inst.supply;
    std::vector<int> inc = demand_incidence(inst);
    auto deg2 = [&](VertexId v) { return g.degree(v) + inc[v]; };

    // terminals: the (t, t', s', s) subdivision trick where needed
    for (Demand& d : inst.demands) {
        bool ok = d.t != d.s && inc[d.t] == 1 && inc[d.s] == 1 && deg2(d.t) == 2 && deg2(d.s) == 2;
        if (ok) continue;
        VertexId tp = g.add_vertex(), sp = g.add_vertex();
        inc.resize(g.vertex_bound(), 0);
        g.add_edge(d.t, tp);
        g.add_edge(sp, d.s);
        --inc[d.t];
        --inc[d.s];
        d = Demand{tp, sp};
        inc[tp] = inc[sp] = 1;
    }

    // non-terminals: drop isolated ones, dissolve degree 2, expand degree >= 6
    for (VertexId v : g.vertices()) {
        if (!g.has_vertex(v) || inc[v] > 0) continue;
        if (g.degree(v) == 0) {
            g.remove_vertex(v);
        } else if (g.degree(v) == 2) {
            EdgeId a = g.in_edges(v).front(), b = g.out_edges(v).front();
            if (a == b)
                g.remove_vertex(v);  // lone loop
            else
                split_off_inplace(g, a, b);
        }
    }
    for (VertexId v : g.vertices()) {
        if (!g.has_vertex(v) || v >= static_cast<int>(inc.size()) || inc[v] > 0) continue;
        if (g.degree(v) >= 6) expand_gadget(g, v);
    }
    return inst;
}

bool is_normal(const Instance& inst) {
    const auto& g = inst.supply;
    std::vector<int> inc = demand_incidence(inst);
    for (VertexId v : g.vertices()) {
        if (inc[v] > 1) return false;
        int d = g.degree(v) + inc[v];
        if (inc[v] == 1 && d != 2) return false;
        if (inc[v] == 0 && d != 4) return false;
    }
    for (const Demand& d : inst.demands)
        if (d.t == d.s) return false;
    return is_eulerian(inst);
}

namespace {

std::vector<VertexId> checked_set(const Instance& inst, const std::vector<VertexId>& X) {
    std::vector<VertexId> s = X;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw std::invalid_argument("empty vertex set");
    for (VertexId v : s)
        if (!inst.supply.has_vertex(v)) throw std::invalid_argument("unknown vertex in X");
    for (VertexId t : terminals(inst))
        if (std::binary_search(s.begin(), s.end(), t))
            throw std::invalid_argument("X contains a terminal");
    return s;
}

bool weakly_connected(const IncidenceDigraph& g, const std::vector<VertexId>& X) {
    std::vector<char> in(g.vertex_bound(), 0), seen(g.vertex_bound(), 0);
    for (VertexId v : X) in[v] = 1;
    std::vector<VertexId> st{X.front()};
    seen[X.front()] = 1;
    std::size_t cnt = 1;
    while (!st.empty()) {
        VertexId v = st.back();
        st.pop_back();
        auto visit = [&](VertexId w) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++cnt;
                st.push_back(w);
            }
        };
        for (EdgeId e : g.out_edges(v)) visit(g.head(e));
        for (EdgeId e : g.in_edges(v)) visit(g.tail(e));
    }
    return cnt == X.size();
}

}  // namespace

Instance reduce_two_cut(const Instance& in, const std::vector<VertexId>& Xin) {
    std::vector<VertexId> X = checked_set(in, Xin);
    Cut c = induced_cut(in.supply, X);
    if (c.plus.size() != 1 || c.minus.size() != 1)
        throw std::invalid_argument("X does not induce a 2-cut");
    Instance out = in;
    VertexId u = in.supply.tail(c.minus.front());
    VertexId v = in.supply.head(c.plus.front());
    for (VertexId x : X) out.supply.remove_vertex(x);
    if (u != v) out.supply.add_edge(u, v);
    return out;
}

Instance reduce_four_cut(const Instance& in, const std::vector<VertexId>& Xin) {
    std::vector<VertexId> X = checked_set(in, Xin);
    if (X.size() < 2) throw std::invalid_argument("4-cut reduction needs |X| >= 2");
    Cut c = induced_cut(in.supply, X);
    if (c.plus.size() != 2 || c.minus.size() != 2)
        throw std::invalid_argument("X does not induce a 4-cut");
    if (!weakly_connected(in.supply, X)) throw std::invalid_argument("G[X] is not connected");
    Instance out = in;
    IncidenceDigraph& g = out.supply;
    VertexId z = g.add_vertex();
    for (EdgeId e : c.plus) rewire(g, e, z, g.head(e));
    for (EdgeId e : c.minus) rewire(g, e, g.tail(e), z);
    for (VertexId x : X) g.remove_vertex(x);
    return out;
}

std::optional<SmallCut> find_small_cut(const Instance& inst) {
    const auto& g = inst.supply;
    std::vector<VertexId> vs = g.vertices();
    std::vector<char> term(g.vertex_bound(), 0);
    for (VertexId t : terminals(inst)) term[t] = 1;
    std::optional<SmallCut> best;
    auto better = [](const SmallCut& a, const SmallCut& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.X.size() != b.X.size()) return a.X.size() < b.X.size();
        return a.X < b.X;
    };
    auto consider = [&](std::vector<VertexId> X) {
        if (X.empty() || X.size() == vs.size()) return;
        for (VertexId v : X)
            if (term[v]) return;
        Cut c = induced_cut(g, X);
        SmallCut cand;
        cand.X = std::move(X);
        if (c.plus.size() == 1 && c.minus.size() == 1) {
            cand.kind = 2;
        } else if (c.plus.size() == 2 && c.minus.size() == 2 && cand.X.size() >= 2 &&
                   weakly_connected(g, cand.X)) {
            cand.kind = 4;
        } else {
            return;
        }
        if (!best || better(cand, *best)) best = std::move(cand);
    };
    // A pass-through vertex is a 2-cut that nothing can beat.
    for (VertexId a : vs) {
        consider({a});
        if (best) return best;
    }
    // Sources: single vertices (2-cuts) and both ends of an edge (a connected
    // 4-cut side contains an edge, and its minimal source side then has >= 2 vertices).
    std::vector<std::vector<VertexId>> sources;
    for (VertexId a : vs)
        if (!term[a]) sources.push_back({a});
    for (EdgeId e : g.edges()) {
        VertexId a = g.tail(e), b = g.head(e);
        if (a != b && !term[a] && !term[b]) sources.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    const int nb = g.vertex_bound();
    for (const auto& A : sources) {
        for (VertexId b : vs) {
            if (std::find(A.begin(), A.end(), b) != A.end()) continue;
            FlowNetwork net(nb + 1);
            for (EdgeId e : g.edges()) net.add_arc(g.tail(e), g.head(e), 1);
            const int src = nb;
            for (VertexId a : A) net.add_arc(src, a, 1 << 20);
            int f = net.max_flow(src, b, 3);
            if (f > 2) continue;
            // minimal source side: reachable from the sources in the residual
            std::vector<char> fromA(nb + 1, 0);
            std::vector<int> st{src};
            fromA[src] = 1;
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int arc : net.arcs_from(x)) {
                    int y = net.head(arc);
                    bool residual = net.residual(arc) > 0;
                    if (!fromA[y] && residual) {
                        fromA[y] = 1;
                        st.push_back(y);
                    }
                }
            }
            std::vector<char> toB = net.reaches(b);
            std::vector<VertexId> minSide, maxSide;
            for (VertexId v : vs) {
                if (fromA[v]) minSide.push_back(v);
                if (!toB[v]) maxSide.push_back(v);
            }
            consider(std::move(minSide));
            consider(std::move(maxSide));
        }
    }
    return best;
}

Instance apply_small_cut(const Instance& inst, const SmallCut& c) {
    return c.kind == 2 ? reduce_two_cut(inst, c.X) : reduce_four_cut(inst, c.X);
}

namespace {

SplitEdgeResult split_common(const Instance& inst, EdgeId e) {
    if (!inst.supply.has_edge(e)) throw std::invalid_argument("split_edge: unknown edge");
    SplitEdgeResult r{inst, kNone, kNone};
    IncidenceDigraph& g = r.inst.supply;
    VertexId u = g.tail(e), v = g.head(e);
    g.remove_edge(e);
    r.ue = g.add_vertex();
    r.ve = g.add_vertex();
    g.add_edge(u, r.ue);
    g.add_edge(r.ve, v);
    return r;
}

}  // namespace

SplitEdgeResult split_edge(const Instance& inst, EdgeId e) {
    SplitEdgeResult r = split_common(inst, e);
    r.inst.demands.push_back(Demand{r.ue, r.ve});
    return r;
}

SplitEdgeResult split_edge(const Instance& inst, EdgeId e, int i) {
    if (i < 0 || i >= static_cast<int>(inst.demands.size()))
        throw std::invalid_argument("split_edge: demand index out of range");
    SplitEdgeResult r = split_common(inst, e);
    Demand d = inst.demands[i];
    r.inst.demands.erase(r.inst.demands.begin() + i);
    r.inst.demands.insert(r.inst.demands.begin() + i, Demand{d.t, r.ve});
    r.inst.demands.insert(r.inst.demands.begin() + i, Demand{r.ue, d.s});
    return r;
}

}  // namespace eedp
