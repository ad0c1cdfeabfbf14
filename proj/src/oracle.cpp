#include "eedp/oracle.hpp"

#include <stdexcept>

namespace eedp {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Feasible: return "yes";
        case Verdict::Infeasible: return "no";
        case Verdict::Timeout: return "timeout";
    }
    return "?";
}

namespace {

struct BudgetExceeded {};

class Search {
public:
    Search(const Instance& inst, std::uint64_t budget, bool trails, std::size_t cap)
        : g_(inst.supply), dem_(inst.demands), budget_(budget), trails_(trails), cap_(cap),
          used_(g_.edge_bound(), 0), mark_(g_.vertex_bound(), 0) {
        for (const Demand& d : dem_)
            if (!g_.has_vertex(d.s) || !g_.has_vertex(d.t))
                throw std::invalid_argument("demand endpoint is not a supply vertex");
        paths_.resize(dem_.size());
        if (!trails_) onPath_.assign(dem_.size(), std::vector<char>(g_.vertex_bound(), 0));
    }

    void run() {
        if (dem_.empty()) {
            found_.push_back(Linkage{});
            return;
        }
        if (!pendingReachable(0)) return;
        start(0);
    }

    std::uint64_t nodes = 0;
    std::vector<Linkage> found_;

private:
    bool done() const { return found_.size() >= cap_; }

    // blocked: vertices that may not be entered (current partial simple path)
    bool reaches(VertexId from, VertexId to, const std::vector<char>* blocked = nullptr) {
        if (from == to) return true;
        ++stamp_;
        if (stamp_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
        stack_.clear();
        stack_.push_back(from);
        mark_[from] = stamp_;
        while (!stack_.empty()) {
            VertexId v = stack_.back();
            stack_.pop_back();
            for (EdgeId e : g_.out_edges(v)) {
                if (used_[e]) continue;
                VertexId w = g_.head(e);
                if (w == to) return true;
                if (blocked && (*blocked)[w]) continue;
                if (mark_[w] != stamp_) {
                    mark_[w] = stamp_;
                    stack_.push_back(w);
                }
            }
        }
        return false;
    }

    // every demand j >= from still has an s_j -> t_j route in the residual
    bool pendingReachable(std::size_t from) {
        for (std::size_t j = from; j < dem_.size(); ++j)
            if (!reaches(dem_[j].s, dem_[j].t)) return false;
        return true;
    }

    void start(std::size_t i) {
        paths_[i].edges.clear();
        paths_[i].origin = dem_[i].s;
        if (!trails_) onPath_[i][dem_[i].s] = 1;
        extend(i, dem_[i].s);
        if (!trails_) onPath_[i][dem_[i].s] = 0;
    }

    void complete(std::size_t i) {
        if (i + 1 == dem_.size()) {
            found_.push_back(Linkage{paths_});
            return;
        }
        if (pendingReachable(i + 1)) start(i + 1);
    }

    void extend(std::size_t i, VertexId v) {
        if (v == dem_[i].t) {
            complete(i);
            if (!trails_ || done()) return;
        }
        for (EdgeId e : g_.out_edges(v)) {
            if (done()) return;
            if (used_[e]) continue;
            VertexId w = g_.head(e);
            if (!trails_ && onPath_[i][w]) continue;
            if (++nodes > budget_) throw BudgetExceeded{};
            used_[e] = 1;
            paths_[i].edges.push_back(e);
            if (!trails_) onPath_[i][w] = 1;
            if (reaches(w, dem_[i].t, trails_ ? nullptr : &onPath_[i]) && pendingReachable(i + 1))
                extend(i, w);
            if (!trails_) onPath_[i][w] = 0;
            paths_[i].edges.pop_back();
            used_[e] = 0;
        }
    }

    const IncidenceDigraph& g_;
    const std::vector<Demand>& dem_;
    std::uint64_t budget_;
    bool trails_;
    std::size_t cap_;
    std::vector<char> used_;
    std::vector<std::vector<char>> onPath_;  // per demand: vertices on its partial path
    std::vector<unsigned> mark_;
    unsigned stamp_ = 0;
    std::vector<VertexId> stack_;
    std::vector<Path> paths_;
};

}  // namespace

OracleResult solve_exact(const Instance& inst, std::uint64_t budget) {
    Search s(inst, budget, /*trails=*/false, 1);
    OracleResult r;
    try {
        s.run();
        if (s.found_.empty()) {
            r.verdict = Verdict::Infeasible;
        } else {
            r.verdict = Verdict::Feasible;
            r.linkage = s.found_.front();
        }
    } catch (const BudgetExceeded&) {
        r.verdict = Verdict::Timeout;
    }
    r.nodes = s.nodes;
    return r;
}

std::optional<bool> equivalent(const Instance& a, const Instance& b, std::uint64_t budget) {
    OracleResult ra = solve_exact(a, budget);
    if (ra.verdict == Verdict::Timeout) return std::nullopt;
    OracleResult rb = solve_exact(b, budget);
    if (rb.verdict == Verdict::Timeout) return std::nullopt;
    return ra.verdict == rb.verdict;
}

Enumeration enumerate_linkages(const Instance& inst, std::size_t cap, std::uint64_t budget) {
    Enumeration out;
    if (cap == 0) return out;
    Search s(inst, budget, /*trails=*/true, cap);
    try {
        s.run();
        out.exhausted = s.found_.size() < cap;
    } catch (const BudgetExceeded&) {
        out.timeout = true;
    }
    out.linkages = std::move(s.found_);
    return out;
}

std::optional<bool> is_rigid(const Instance& inst, std::uint64_t budget) {
    Enumeration en = enumerate_linkages(inst, 2, budget);
    if (en.timeout) return std::nullopt;
    if (en.linkages.size() != 1) return false;
    std::size_t used = 0;
    for (const Path& p : en.linkages.front().paths) used += p.edges.size();
    return used == static_cast<std::size_t>(inst.supply.num_edges());
}

std::optional<bool> has_unordered_cross(const IncidenceDigraph& g, VertexId s1, VertexId t1,
                                        VertexId s2, VertexId t2, std::uint64_t budget) {
    bool timedOut = false;
    for (int mask = 0; mask < 4; ++mask) {
        Instance inst{g, {}};
        inst.demands.push_back(mask & 1 ? Demand{s1, t1} : Demand{t1, s1});
        inst.demands.push_back(mask & 2 ? Demand{s2, t2} : Demand{t2, s2});
        OracleResult r = solve_exact(inst, budget);
        if (r.verdict == Verdict::Feasible) return true;
        if (r.verdict == Verdict::Timeout) timedOut = true;
    }
    if (timedOut) return std::nullopt;
    return false;
}

}  // namespace eedp
