#include "eedp/reducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eedp/io.hpp"
#include "eedp/normalize.hpp"

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

std::string join(const std::vector<int>& ids) {
    if (ids.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s;
}

std::vector<int> split_ids(const std::string& s) {
    std::vector<int> out;
    if (s == "-") return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

long size_of(const Instance& inst) { return inst.supply.num_vertices() + inst.supply.num_edges(); }

std::string hash_of(const Instance& inst) { return hex64(fingerprint(inst)); }

// Shortest directed cycle through e (BFS from head(e) back to tail(e) without
// e; lowest edge ids first). Empty when e lies on no cycle.
Path shortest_cycle_through(const IncidenceDigraph& g, EdgeId e, const std::set<VertexId>& avoid = {}) {
    const VertexId a = g.tail(e), b = g.head(e);
    Path p;
    p.cycle = true;
    p.origin = a;
    if (avoid.count(a) || avoid.count(b)) return {};
    if (a == b) {
        p.edges = {e};
        return p;
    }
    std::vector<EdgeId> pred(g.vertex_bound(), kNone);
    std::vector<char> seen(g.vertex_bound(), 0);
    std::deque<VertexId> q{b};
    seen[b] = 1;
    while (!q.empty() && !seen[a]) {
        const VertexId u = q.front();
        q.pop_front();
        for (EdgeId f : g.out_edges(u)) {
            if (f == e) continue;
            const VertexId w = g.head(f);
            if (seen[w] || avoid.count(w)) continue;
            seen[w] = 1;
            pred[w] = f;
            q.push_back(w);
        }
    }
    if (!seen[a]) return {};
    std::vector<EdgeId> back;
    for (VertexId w = a; w != b; w = g.tail(pred[w])) back.push_back(pred[w]);
    p.edges.push_back(e);
    p.edges.insert(p.edges.end(), back.rbegin(), back.rend());
    return p;
}

// Distinct shortest cycles, shortest first, ties by sorted edge ids.
std::vector<Path> short_cycles(const IncidenceDigraph& g, const std::set<VertexId>& avoid = {}) {
    std::map<std::pair<std::size_t, std::vector<EdgeId>>, Path> byKey;
    for (EdgeId e : g.edges()) {
        Path c = shortest_cycle_through(g, e, avoid);
        if (c.edges.empty()) continue;
        std::vector<EdgeId> key = c.edges;
        std::sort(key.begin(), key.end());
        byKey.emplace(std::make_pair(key.size(), key), std::move(c));
    }
    std::vector<Path> out;
    for (auto& [k, c] : byKey) out.push_back(std::move(c));
    return out;
}

bool inside(const std::set<VertexId>& vs, const std::vector<char>& mask) {
    for (VertexId v : vs)
        if (!mask[v]) return false;
    return true;
}

}  // namespace

const char* to_string(CycleStatus s) {
    switch (s) {
        case CycleStatus::Found: return "found";
        case CycleStatus::NoCandidate: return "no-candidate";
        case CycleStatus::Unverified: return "unverified";
    }
    return "?";
}

GvInstance build_gv(const Instance& inst, const Router& router, const std::vector<VertexId>& branching) {
    Router r = router;
    r.branching = branching;
    if (branching.size() != router.cycles.size()) throw std::invalid_argument("branching set has the wrong size");
    if (auto err = check_router(inst.supply, r); !err.empty()) throw std::invalid_argument(err);
    const auto term = terminals(inst);
    for (VertexId b : branching)
        if (std::find(term.begin(), term.end(), b) != term.end())
            throw std::invalid_argument("branching vertex is a terminal");
    GvInstance gv;
    gv.g = inst.supply;
    gv.v = gv.g.add_vertex();
    for (VertexId b : branching) {
        gv.g.add_edge(b, gv.v);
        gv.g.add_edge(gv.v, b);
    }
    gv.dem.center = gv.v;
    for (const Demand& d : inst.demands) {
        gv.dem.sources.push_back(d.s);
        gv.dem.sinks.push_back(d.t);
    }
    return gv;
}

std::optional<PushedCut> pushed_router_cut(const Instance& inst, const Router& router) {
    const auto& g = inst.supply;
    const auto term = terminals(inst);
    const std::set<VertexId> termSet(term.begin(), term.end());
    std::optional<PushedCut> best;
    for (int i = 0; i < router.order(); ++i) {
        const auto vs = vertex_set(g, router.cycles[i]);
        if (intersects(vs, termSet)) continue;
        const FlowResult f = max_edge_disjoint_paths(g, term, std::vector<VertexId>(vs.begin(), vs.end()));
        PushedCut pc;
        pc.X = f.source_side;
        std::sort(pc.X.begin(), pc.X.end());
        pc.order = induced_cut(g, pc.X).order();
        pc.outsideCycle = i;
        if (!best || pc.order < best->order || (pc.order == best->order && pc.X.size() > best->X.size()))
            best = std::move(pc);
    }
    return best;
}

int min_router_cut_exhaustive(const Instance& inst, const Router& router) {
    const auto& g = inst.supply;
    const auto term = terminals(inst);
    const std::set<VertexId> termSet(term.begin(), term.end());
    std::vector<VertexId> free;
    for (VertexId v : g.vertices())
        if (!termSet.count(v)) free.push_back(v);
    if (free.size() > 20) throw std::invalid_argument("min_router_cut_exhaustive: too many vertices");
    std::vector<std::set<VertexId>> vs;
    for (const Path& c : router.cycles) vs.push_back(vertex_set(g, c));
    int best = -1;
    std::vector<char> outMask(g.vertex_bound(), 0);
    for (std::uint32_t m = 1; m < (1u << free.size()); ++m) {
        std::fill(outMask.begin(), outMask.end(), 0);
        for (std::size_t k = 0; k < free.size(); ++k)
            if (m >> k & 1u) outMask[free[k]] = 1;
        bool hasCycle = false;
        for (const auto& s : vs) hasCycle = hasCycle || inside(s, outMask);
        if (!hasCycle) continue;
        std::vector<VertexId> X;
        for (VertexId v : g.vertices())
            if (!outMask[v]) X.push_back(v);
        const int ord = induced_cut(g, X).order();
        if (best < 0 || ord < best) best = ord;
    }
    return best;
}

Instance delete_cycle(const Instance& inst, const Path& cycle) {
    Instance out = inst;
    auto& g = out.supply;
    std::set<VertexId> touched;
    for (EdgeId e : cycle.edges) {
        touched.insert(g.tail(e));
        touched.insert(g.head(e));
        g.remove_edge(e);
    }
    const auto term = terminals(inst);
    for (VertexId v : touched)
        if (g.degree(v) == 0 && std::find(term.begin(), term.end(), v) == term.end()) g.remove_vertex(v);
    return out;
}

IrrelevantCycle find_irrelevant_router_cycle(const Instance& inst, const Router& router,
                                             const IrrelevantOptions& opt) {
    const auto& g = inst.supply;
    if (auto err = check_router(g, router); !err.empty()) throw std::invalid_argument(err);
    IrrelevantCycle res;
    if (router.order() < opt.minOrder) {
        res.note = "router below the working threshold";
        return res;
    }
    const auto pc = pushed_router_cut(inst, router);
    std::vector<int> firstTier;
    std::set<int> visited;
    if (pc) {
        // Restrict to the far side of the pushed cut; its cut edges become
        // stub terminals.
        std::vector<char> inX(g.vertex_bound(), 0);
        for (VertexId x : pc->X) inX[x] = 1;
        std::vector<VertexId> Y;
        std::vector<char> inY(g.vertex_bound(), 0);
        for (VertexId v : g.vertices())
            if (!inX[v]) {
                Y.push_back(v);
                inY[v] = 1;
            }
        std::vector<int> local;
        for (int i = 0; i < router.order(); ++i)
            if (inside(vertex_set(g, router.cycles[i]), inY)) local.push_back(i);
        const Restriction rs = euler_restriction(inst, Y);
        const int q = static_cast<int>(rs.inst.demands.size());
        const int group = std::max(q, 1);
        // Route the stubs through disjoint groups of router cycles in turn;
        // a cycle never used by any routing is the preferred candidate.
        for (std::size_t start = 0; q > 0 && start + group <= local.size(); start += group) {
            Router sub;
            for (int k = 0; k < group; ++k) sub.cycles.push_back(router.cycles[local[start + k]]);
            const auto b = choose_branching(rs.inst.supply, sub, terminals(rs.inst));
            if (b.empty()) continue;
            const GvInstance gv = build_gv(rs.inst, sub, b);
            const TwoStarResult tr = solve_two_star(gv.g, gv.dem, true, opt.budget);
            if (!tr.linkage) continue;
            std::set<EdgeId> used;
            for (const Path& p : tr.linkage->paths) used.insert(p.edges.begin(), p.edges.end());
            for (int i : local)
                for (EdgeId e : router.cycles[i].edges)
                    if (used.count(e)) {
                        visited.insert(i);
                        break;
                    }
        }
        for (int i : local)
            if (!visited.count(i)) firstTier.push_back(i);
        res.note = "pushed cut order " + std::to_string(pc->order);
    } else {
        res.note = "every router cycle touches a terminal";
    }
    res.visited.assign(visited.begin(), visited.end());

    std::vector<int> order = firstTier;
    for (int i = 0; i < router.order(); ++i)
        if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    bool sawTimeout = false;
    for (int i : order) {
        ++res.candidatesTried;
        const auto eq = equivalent(inst, delete_cycle(inst, router.cycles[i]), opt.budget);
        if (!eq) {
            sawTimeout = true;
            continue;
        }
        if (*eq) {
            res.status = CycleStatus::Found;
            res.index = i;
            res.cycle = router.cycles[i];
            const bool preferred = std::find(firstTier.begin(), firstTier.end(), i) != firstTier.end();
            res.note += preferred ? "; unvisited cycle" : "; fallback cycle";
            return res;
        }
    }
    res.status = sawTimeout ? CycleStatus::Unverified : CycleStatus::NoCandidate;
    return res;
}

Router find_router(const IncidenceDigraph& g, int maxOrder) {
    const std::vector<Path> cand = short_cycles(g);
    std::vector<std::set<VertexId>> vs;
    std::vector<std::set<EdgeId>> es;
    for (const Path& c : cand) {
        vs.push_back(vertex_set(g, c));
        es.emplace_back(c.edges.begin(), c.edges.end());
    }
    std::vector<int> best;
    const std::size_t seeds = std::min<std::size_t>(cand.size(), 64);
    for (std::size_t s = 0; s < seeds; ++s) {
        std::vector<int> fam{static_cast<int>(s)};
        std::set<EdgeId> used = es[s];
        for (std::size_t c = 0; c < cand.size() && static_cast<int>(fam.size()) < maxOrder; ++c) {
            if (c == s) continue;
            bool ok = true;
            for (EdgeId e : es[c]) ok = ok && !used.count(e);
            for (int f : fam) ok = ok && intersects(vs[c], vs[f]);
            if (!ok) continue;
            fam.push_back(static_cast<int>(c));
            used.insert(es[c].begin(), es[c].end());
        }
        if (fam.size() > best.size()) best = fam;
    }
    Router r;
    if (best.size() < 2) return r;
    for (int i : best) r.cycles.push_back(cand[i]);
    return r;
}

PipelineResult reduce_pipeline(const Instance& inst, const PipelineOptions& opt) {
    PipelineResult res;
    Instance cur = inst;
    auto commit = [&](Instance next, std::string op, std::string params) {
        if (opt.verify) {
            const auto eq = equivalent(cur, next, opt.budget);
            if (!eq) {
                res.timeout = true;
                return false;
            }
            if (!*eq) {
                res.error = op + " " + params + " changed the answer";
                return false;
            }
        }
        res.log.push_back({std::move(op), std::move(params), hash_of(next)});
        cur = std::move(next);
        return true;
    };

    bool ok = true;
    if (opt.normalize && !is_normal(cur)) ok = commit(normalize_degrees(cur), "normalize", "-");
    for (int step = 0; ok && step < opt.maxSteps; ++step) {
        std::optional<SmallCut> sc;
        if (cur.supply.num_edges() <= opt.smallCutMaxEdges) sc = find_small_cut(cur);
        if (sc) {
            Instance next = apply_small_cut(cur, *sc);
            if (size_of(next) < size_of(cur)) {
                ok = commit(std::move(next), sc->kind == 2 ? "reduce_two_cut" : "reduce_four_cut", join(sc->X));
                continue;
            }
        }
        const Router r = find_router(cur.supply);
        if (r.order() >= opt.minRouterOrder) {
            IrrelevantOptions io;
            io.minOrder = opt.minRouterOrder;
            io.budget = opt.budget;
            const IrrelevantCycle ic = find_irrelevant_router_cycle(cur, r, io);
            if (ic.status == CycleStatus::Found) {
                ok = commit(delete_cycle(cur, ic.cycle), "delete_router_cycle", join(ic.cycle.edges));
                continue;
            }
        }
        // Fallback: shortest verified-irrelevant cycle avoiding the terminals.
        const auto term = terminals(cur);
        const std::vector<Path> cand = short_cycles(cur.supply, std::set<VertexId>(term.begin(), term.end()));
        bool deleted = false;
        for (std::size_t k = 0; k < cand.size() && k < 8 && !deleted; ++k) {
            Instance next = delete_cycle(cur, cand[k]);
            const auto eq = equivalent(cur, next, opt.budget);
            if (eq && *eq) {
                ok = commit(std::move(next), "delete_cycle", join(cand[k].edges));
                deleted = true;
            }
        }
        if (!deleted) break;
    }
    res.reduced = cur;
    if (!res.error.empty()) {
        res.answer = Verdict::Timeout;
        return res;
    }
    const OracleResult fin = solve_exact(cur, opt.budget);
    res.answer = fin.verdict;
    if (fin.verdict == Verdict::Timeout) res.timeout = true;
    return res;
}

std::string format_log(const std::vector<ReductionStep>& log) {
    std::string s;
    for (const auto& st : log) s += st.line() + "\n";
    return s;
}

Instance replay_log(const Instance& inst, const std::string& log) {
    Instance cur = inst;
    std::istringstream in(log);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string op, params, hash;
        if (!(ls >> op >> params >> hash)) throw std::runtime_error("replay: malformed line " + std::to_string(lineNo));
        const std::vector<int> ids = split_ids(params);
        if (op == "normalize") {
            cur = normalize_degrees(cur);
        } else if (op == "reduce_two_cut") {
            cur = reduce_two_cut(cur, ids);
        } else if (op == "reduce_four_cut") {
            cur = reduce_four_cut(cur, ids);
        } else if (op == "delete_router_cycle" || op == "delete_cycle") {
            Path c;
            c.edges = ids;
            c.cycle = true;
            if (!ids.empty()) c.origin = cur.supply.tail(ids.front());
            if (auto err = check_path(cur.supply, c); !err.empty())
                throw std::runtime_error("replay: line " + std::to_string(lineNo) + ": " + err);
            cur = delete_cycle(cur, c);
        } else {
            throw std::runtime_error("replay: unknown operation '" + op + "'");
        }
        if (hash_of(cur) != hash) throw std::runtime_error("replay: hash mismatch on line " + std::to_string(lineNo));
    }
    return cur;
}

}  // namespace eedp
