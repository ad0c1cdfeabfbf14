// Router reduction: the G^v construction, pushed router-cuts, irrelevant
// router cycles and the end-to-end reduction loop.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eedp/graph.hpp"
#include "eedp/oracle.hpp"
#include "eedp/router.hpp"
#include "eedp/twostar.hpp"

namespace eedp {

// G plus a vertex v joined both ways to every branch vertex; the demands are
// replaced by the two-star D^v (sources s_i, sinks t_i, centre v).
struct GvInstance {
    IncidenceDigraph g;
    TwoStarDemand dem;
    VertexId v = kNone;
};
// Throws std::invalid_argument on an invalid branching set.
GvInstance build_gv(const Instance& inst, const Router& router, const std::vector<VertexId>& branching);

struct PushedCut {
    std::vector<VertexId> X;  // contains every terminal
    int order = 0;            // |delta^+(X)| + |delta^-(X)|
    int outsideCycle = -1;    // router cycle inside the complement
};
// Minimum over router cycles avoiding the terminals of the S u T -> V(C_i)
// cut, realised by its canonical maximal source side; nullopt when every
// cycle touches a terminal.
std::optional<PushedCut> pushed_router_cut(const Instance& inst, const Router& router);
// Smallest cut order over all X containing the terminals with some router
// cycle in the complement (|V| <= 20).
int min_router_cut_exhaustive(const Instance& inst, const Router& router);

enum class CycleStatus { Found, NoCandidate, Unverified };
const char* to_string(CycleStatus s);

struct IrrelevantCycle {
    CycleStatus status = CycleStatus::NoCandidate;
    int index = -1;                  // router cycle
    Path cycle;
    std::vector<int> visited;        // cycles used by the two-star linkages
    int candidatesTried = 0;
    std::string note;
};
struct IrrelevantOptions {
    int minOrder = 2;  // desk-scale working threshold
    std::uint64_t budget = kDefaultBudget;
};
// Candidates come from the pushed cut and two-star routings through
// disjoint sub-routers; every returned cycle is oracle-verified.
IrrelevantCycle find_irrelevant_router_cycle(const Instance& inst, const Router& router,
                                             const IrrelevantOptions& opt = {});

// Removes the cycle's edges and then isolated non-terminal vertices.
Instance delete_cycle(const Instance& inst, const Path& cycle);

// Edge-disjoint cycles that pairwise share a vertex, grown greedily from
// short cycles (lowest ids first). Empty router when none of order >= 2.
Router find_router(const IncidenceDigraph& g, int maxOrder = 16);

struct ReductionStep {
    std::string op;      // normalize, reduce_two_cut, reduce_four_cut, delete_router_cycle, delete_cycle
    std::string params;  // comma-separated ids or "-"
    std::string hash;    // fingerprint of the resulting instance
    std::string line() const { return op + " " + params + " " + hash; }
};
struct PipelineOptions {
    std::uint64_t budget = kDefaultBudget;
    bool verify = false;  // oracle-check every step
    bool normalize = true;
    int minRouterOrder = 2;
    int maxSteps = 200;
    // The small-cut search is cubic; above this many edges it is skipped and
    // cycle deletions shrink the instance first.
    int smallCutMaxEdges = 250;
};
struct PipelineResult {
    Instance reduced;
    std::vector<ReductionStep> log;
    Verdict answer = Verdict::Timeout;  // of the final instance
    bool timeout = false;
    std::string error;  // set when a verified step changed the answer
};
PipelineResult reduce_pipeline(const Instance& inst, const PipelineOptions& opt = {});
std::string format_log(const std::vector<ReductionStep>& log);
// Re-applies a log; throws std::runtime_error on a hash mismatch.
Instance replay_log(const Instance& inst, const std::string& log);

}  // namespace eedp
