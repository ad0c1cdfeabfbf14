#include "eedp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace eedp {

IncidenceDigraph::IncidenceDigraph(int n) {
    for (int i = 0; i < n; ++i) add_vertex();
}

VertexId IncidenceDigraph::add_vertex() {
    alive_.push_back(1);
    out_.emplace_back();
    in_.emplace_back();
    ++nv_;
    return static_cast<VertexId>(alive_.size()) - 1;
}

void IncidenceDigraph::ensure_vertex(VertexId v) {
    if (v < 0) throw std::invalid_argument("negative vertex id");
    while (static_cast<int>(alive_.size()) <= v) {
        alive_.push_back(0);
        out_.emplace_back();
        in_.emplace_back();
    }
    if (!alive_[v]) {
        alive_[v] = 1;
        ++nv_;
    }
}

void IncidenceDigraph::insert_sorted(std::vector<EdgeId>& v, EdgeId e) {
    v.insert(std::upper_bound(v.begin(), v.end(), e), e);
}

void IncidenceDigraph::erase_value(std::vector<EdgeId>& v, EdgeId e) {
    auto it = std::lower_bound(v.begin(), v.end(), e);
    if (it != v.end() && *it == e) v.erase(it);
}

EdgeId IncidenceDigraph::add_partial_edge(VertexId t, VertexId h) {
    return add_edge_with_id(static_cast<EdgeId>(recs_.size()), t, h);
}

EdgeId IncidenceDigraph::add_edge(VertexId t, VertexId h) {
    if (!has_vertex(t) || !has_vertex(h)) throw std::invalid_argument("add_edge: unknown endpoint");
    return add_partial_edge(t, h);
}

EdgeId IncidenceDigraph::add_edge_with_id(EdgeId id, VertexId t, VertexId h) {
    if (id < 0) throw std::invalid_argument("negative edge id");
    if (has_edge(id)) throw std::invalid_argument("edge id in use");
    if ((t != kNone && !has_vertex(t)) || (h != kNone && !has_vertex(h)))
        throw std::invalid_argument("edge endpoint is not a vertex");
    if (static_cast<int>(recs_.size()) <= id) recs_.resize(id + 1);
    recs_[id] = Rec{t, h, true};
    if (t != kNone) insert_sorted(out_[t], id);
    if (h != kNone) insert_sorted(in_[h], id);
    ++ne_;
    return id;
}

void IncidenceDigraph::remove_edge(EdgeId e) {
    if (!has_edge(e)) throw std::invalid_argument("remove_edge: no such edge");
    Rec& r = recs_[e];
    if (r.tail != kNone) erase_value(out_[r.tail], e);
    if (r.head != kNone) erase_value(in_[r.head], e);
    r.alive = false;
    --ne_;
}

void IncidenceDigraph::remove_vertex(VertexId v) {
    if (!has_vertex(v)) throw std::invalid_argument("remove_vertex: no such vertex");
    while (!out_[v].empty()) remove_edge(out_[v].back());
    while (!in_[v].empty()) remove_edge(in_[v].back());
    alive_[v] = 0;
    --nv_;
}

std::vector<VertexId> IncidenceDigraph::vertices() const {
    std::vector<VertexId> r;
    r.reserve(nv_);
    for (int v = 0; v < static_cast<int>(alive_.size()); ++v)
        if (alive_[v]) r.push_back(v);
    return r;
}

std::vector<EdgeId> IncidenceDigraph::edges() const {
    std::vector<EdgeId> r;
    r.reserve(ne_);
    for (int e = 0; e < static_cast<int>(recs_.size()); ++e)
        if (recs_[e].alive) r.push_back(e);
    return r;
}

bool IncidenceDigraph::proper() const {
    for (const Rec& r : recs_)
        if (r.alive && (r.tail == kNone || r.head == kNone)) return false;
    return true;
}

// ---------------------------------------------------------------------------

bool is_eulerian(const IncidenceDigraph& g,
                 const std::vector<std::pair<VertexId, VertexId>>& extra) {
    std::vector<int> bal(g.vertex_bound(), 0);
    for (VertexId v : g.vertices()) bal[v] = g.outdeg(v) - g.indeg(v);
    for (auto [t, h] : extra) {
        if (!g.has_vertex(t) || !g.has_vertex(h)) return false;
        ++bal[t];
        --bal[h];
    }
    return std::all_of(bal.begin(), bal.end(), [](int b) { return b == 0; });
}

std::vector<std::pair<VertexId, VertexId>> demand_pairs(const Instance& inst) {
    std::vector<std::pair<VertexId, VertexId>> r;
    for (const Demand& d : inst.demands) r.emplace_back(d.t, d.s);
    return r;
}

bool is_eulerian(const Instance& inst) { return is_eulerian(inst.supply, demand_pairs(inst)); }

std::optional<VertexId> first_unbalanced(const Instance& inst) {
    const auto& g = inst.supply;
    std::vector<int> bal(g.vertex_bound(), 0);
    for (VertexId v : g.vertices()) bal[v] = g.outdeg(v) - g.indeg(v);
    for (const Demand& d : inst.demands) {
        if (!g.has_vertex(d.t)) return d.t;
        if (!g.has_vertex(d.s)) return d.s;
        ++bal[d.t];
        --bal[d.s];
    }
    for (VertexId v = 0; v < static_cast<int>(bal.size()); ++v)
        if (bal[v] != 0) return v;
    return std::nullopt;
}

std::vector<VertexId> terminals(const Instance& inst) {
    std::vector<VertexId> r;
    for (const Demand& d : inst.demands) {
        r.push_back(d.t);
        r.push_back(d.s);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

VertexId path_start(const IncidenceDigraph& g, const Path& p) {
    return p.edges.empty() ? p.origin : g.tail(p.edges.front());
}

VertexId path_end(const IncidenceDigraph& g, const Path& p) {
    return p.edges.empty() ? p.origin : g.head(p.edges.back());
}

std::string check_path(const IncidenceDigraph& g, const Path& p) {
    std::unordered_set<EdgeId> seen;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        EdgeId e = p.edges[i];
        if (!g.has_edge(e)) return "edge " + std::to_string(e) + " not in graph";
        if (g.tail(e) == kNone || g.head(e) == kNone) return "half-edge in path";
        if (!seen.insert(e).second) return "edge " + std::to_string(e) + " repeated";
        if (i > 0 && g.head(p.edges[i - 1]) != g.tail(e))
            return "edges " + std::to_string(p.edges[i - 1]) + "," + std::to_string(e) +
                   " not consecutive";
    }
    if (p.edges.empty() && !g.has_vertex(p.origin) && !p.cycle) return "empty path without origin";
    if (p.cycle && !p.edges.empty() && g.head(p.edges.back()) != g.tail(p.edges.front()))
        return "cycle does not close";
    if (!p.edges.empty() && p.origin != kNone && p.origin != g.tail(p.edges.front()))
        return "origin does not match first edge";
    return {};
}

bool edge_disjoint(const std::vector<Path>& paths) {
    std::unordered_set<EdgeId> seen;
    for (const Path& p : paths)
        for (EdgeId e : p.edges)
            if (!seen.insert(e).second) return false;
    return true;
}

std::string validate_linkage(const Instance& inst, const Linkage& l) {
    if (l.paths.size() != inst.demands.size()) return "wrong number of paths";
    for (std::size_t i = 0; i < l.paths.size(); ++i) {
        const Path& p = l.paths[i];
        if (p.cycle) return "path " + std::to_string(i) + " marked as cycle";
        std::string err = check_path(inst.supply, p);
        if (!err.empty()) return "path " + std::to_string(i) + ": " + err;
        if (path_start(inst.supply, p) != inst.demands[i].s ||
            path_end(inst.supply, p) != inst.demands[i].t)
            return "path " + std::to_string(i) + " has wrong endpoints";
    }
    if (!edge_disjoint(l.paths)) return "paths share an edge";
    return {};
}

// ---------------------------------------------------------------------------

EdgeId split_off_inplace(IncidenceDigraph& g, EdgeId eIn, EdgeId eOut) {
    if (!g.has_edge(eIn) || !g.has_edge(eOut)) throw std::invalid_argument("split_off: unknown edge");
    if (eIn == eOut) throw std::invalid_argument("split_off: edges must differ");
    VertexId u = g.head(eIn);
    if (u == kNone || u != g.tail(eOut))
        throw std::invalid_argument("split_off: edges do not share the middle vertex");
    VertexId a = g.tail(eIn), b = g.head(eOut);
    if (a == kNone || b == kNone) throw std::invalid_argument("split_off: half-edge");
    g.remove_edge(eIn);
    g.remove_edge(eOut);
    EdgeId ne = g.add_edge(a, b);
    if (g.degree(u) == 0) g.remove_vertex(u);
    return ne;
}

IncidenceDigraph split_off(const IncidenceDigraph& g, EdgeId eIn, EdgeId eOut) {
    IncidenceDigraph h = g;
    split_off_inplace(h, eIn, eOut);
    return h;
}

Cut induced_cut(const IncidenceDigraph& g, const std::vector<VertexId>& X) {
    Cut c;
    c.X = X;
    std::sort(c.X.begin(), c.X.end());
    c.X.erase(std::unique(c.X.begin(), c.X.end()), c.X.end());
    std::vector<char> in(g.vertex_bound(), 0);
    for (VertexId v : c.X) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_cut: unknown vertex");
        in[v] = 1;
    }
    for (EdgeId e : g.edges()) {
        VertexId t = g.tail(e), h = g.head(e);
        bool ti = t != kNone && in[t], hi = h != kNone && in[h];
        if (ti && !hi) c.plus.push_back(e);
        if (hi && !ti) c.minus.push_back(e);
    }
    return c;
}

Restriction euler_restriction(const Instance& inst, const std::vector<VertexId>& X) {
    const auto& g = inst.supply;
    std::vector<char> in(g.vertex_bound(), 0);
    for (VertexId v : X) {
        if (!g.has_vertex(v)) throw std::invalid_argument("euler_restriction: unknown vertex");
        in[v] = 1;
    }
    for (VertexId t : terminals(inst))
        if (t < static_cast<int>(in.size()) && in[t])
            throw std::invalid_argument("euler_restriction: X contains a terminal");
    Restriction r;
    IncidenceDigraph& h = r.inst.supply;
    for (VertexId v : X) h.ensure_vertex(v);
    int next = g.vertex_bound();
    std::vector<VertexId> outs, ins;  // pendant sinks t_e, pendant sources s_e
    for (EdgeId e : g.edges()) {
        VertexId t = g.tail(e), hd = g.head(e);
        bool ti = in[t], hi = in[hd];
        if (ti && hi) {
            h.add_edge_with_id(e, t, hd);
        } else if (ti) {
            h.ensure_vertex(next);
            h.add_edge_with_id(e, t, next);
            r.pendants.emplace_back(e, next);
            outs.push_back(next++);
        } else if (hi) {
            h.ensure_vertex(next);
            h.add_edge_with_id(e, next, hd);
            r.pendants.emplace_back(e, next);
            ins.push_back(next++);
        }
    }
    // i-th outgoing pendant paired with the i-th incoming one (edge-id order)
    for (std::size_t i = 0; i < std::min(outs.size(), ins.size()); ++i)
        r.inst.demands.push_back(Demand{outs[i], ins[i]});
    return r;
}

IncidenceDigraph line_graph(const IncidenceDigraph& g) {
    IncidenceDigraph l;
    for (EdgeId e : g.edges()) l.ensure_vertex(e);
    for (EdgeId e1 : g.edges()) {
        VertexId h = g.head(e1);
        if (h == kNone) continue;
        for (EdgeId e2 : g.out_edges(h)) l.add_edge(e1, e2);
    }
    return l;
}

std::vector<Path> euler_decompose(const IncidenceDigraph& g) {
    if (!g.proper()) throw std::invalid_argument("euler_decompose: graph not proper");
    if (!is_eulerian(g)) throw std::invalid_argument("euler_decompose: graph not Eulerian");
    std::vector<char> used(g.edge_bound(), 0);
    std::vector<std::size_t> ptr(g.vertex_bound(), 0);
    std::vector<Path> out;
    for (EdgeId start : g.edges()) {
        if (used[start]) continue;
        // walk until we return to the start vertex, peeling simple cycles off
        std::vector<EdgeId> stack;
        std::vector<int> pos(g.vertex_bound(), -1);  // vertex -> index in stack of its out-edge
        VertexId v = g.tail(start);
        EdgeId e = start;
        while (true) {
            used[e] = 1;
            pos[v] = static_cast<int>(stack.size());
            stack.push_back(e);
            VertexId w = g.head(e);
            if (pos[w] >= 0) {
                Path c;
                c.cycle = true;
                c.origin = w;
                c.edges.assign(stack.begin() + pos[w], stack.end());
                for (EdgeId f : c.edges) pos[g.tail(f)] = -1;
                stack.resize(stack.size() - c.edges.size());
                out.push_back(std::move(c));
                if (stack.empty()) break;
            }
            v = w;
            const auto& oe = g.out_edges(v);
            while (ptr[v] < oe.size() && used[oe[ptr[v]]]) ++ptr[v];
            if (ptr[v] == oe.size()) throw std::logic_error("euler_decompose: stuck");
            e = oe[ptr[v]];
        }
    }
    return out;
}

}  // namespace eedp
