// Two-star demands D^v = {(t_i, v), (v, s_i)}: directed cut criterion and
// splitting-off path extraction.
#pragma once

#include <optional>
#include <vector>

#include "eedp/graph.hpp"
#include "eedp/oracle.hpp"

namespace eedp {

struct TwoStarDemand {
    VertexId center = kNone;
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
    int p() const { return static_cast<int>(sources.size()); }
    // (v, s_1..s_p) first, then (t_1..t_p, v): paths s_i->v then v->t_i
    std::vector<Demand> demands() const;
    Instance instance(const IncidenceDigraph& g) const { return Instance{g, demands()}; }
};

// Two max-flow checks: sources -> v and v -> sinks must both reach p.
bool cut_criterion_holds(const IncidenceDigraph& g, const TwoStarDemand& dem);
// All-subsets check of delta_G^-(X) >= delta_D^+(X); |V| <= 20.
bool cut_criterion_exhaustive(const IncidenceDigraph& g, const TwoStarDemand& dem);

struct TwoStarResult {
    std::optional<Linkage> linkage;  // paths in TwoStarDemand::demands() order
    int splits = 0;
    bool usedFallback = false;
};
// With fallback=false a missing admissible pair throws std::logic_error.
TwoStarResult solve_two_star(const IncidenceDigraph& g, const TwoStarDemand& dem,
                             bool fallback = false, std::uint64_t budget = kDefaultBudget);

}  // namespace eedp
