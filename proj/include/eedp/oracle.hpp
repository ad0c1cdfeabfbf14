// Exhaustive edge-disjoint linkage search; ground truth at desk scale.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eedp/graph.hpp"

namespace eedp {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

enum class Verdict { Feasible, Infeasible, Timeout };
const char* to_string(Verdict v);

struct OracleResult {
    Verdict verdict = Verdict::Timeout;
    std::optional<Linkage> linkage;
    std::uint64_t nodes = 0;  // expansions spent
};

// Depth-first extension of demand paths (in demand order, lowest edge id
// first) with residual reachability pruning. Budget counts expansions.
OracleResult solve_exact(const Instance& inst, std::uint64_t budget = kDefaultBudget);

// nullopt on timeout of either side.
std::optional<bool> equivalent(const Instance& a, const Instance& b,
                               std::uint64_t budget = kDefaultBudget);

struct Enumeration {
    std::vector<Linkage> linkages;
    bool exhausted = false;  // search finished below cap and budget
    bool timeout = false;
};
// Distinct linkages whose paths are arbitrary trails.
Enumeration enumerate_linkages(const Instance& inst, std::size_t cap,
                               std::uint64_t budget = kDefaultBudget);
// Exactly one linkage exists and it uses every supply edge. nullopt on timeout.
std::optional<bool> is_rigid(const Instance& inst, std::uint64_t budget = kDefaultBudget);

// Edge-disjoint P1 joining {s1,t1} and P2 joining {s2,t2}, either direction each.
std::optional<bool> has_unordered_cross(const IncidenceDigraph& g, VertexId s1, VertexId t1,
                                        VertexId s2, VertexId t2,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace eedp
