#include <gtest/gtest.h>

#include <random>

#include "eedp/generators.hpp"
#include "eedp/io.hpp"
#include "eedp/normalize.hpp"
#include "eedp/reducer.hpp"

using namespace eedp;

namespace {

Path cycle_of(IncidenceDigraph& g, const std::vector<VertexId>& vs) {
    Path p;
    p.cycle = true;
    p.origin = vs.front();
    for (std::size_t i = 0; i < vs.size(); ++i) p.edges.push_back(g.add_edge(vs[i], vs[(i + 1) % vs.size()]));
    return p;
}

long size_of(const Instance& inst) { return inst.supply.num_vertices() + inst.supply.num_edges(); }

}  // namespace

TEST(Reducer, GvIsEulerianWithDoubledBranchDegrees) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PlantedRouter pr = planted_router_instance(4 + seed % 3, 2, seed);
        const auto b = choose_branching(pr.inst.supply, pr.router, terminals(pr.inst));
        ASSERT_EQ(static_cast<int>(b.size()), pr.router.order());
        GvInstance gv = build_gv(pr.inst, pr.router, b);
        EXPECT_EQ(gv.g.indeg(gv.v), pr.router.order());
        EXPECT_EQ(gv.g.outdeg(gv.v), pr.router.order());
        for (VertexId x : b) EXPECT_EQ(gv.g.degree(x), pr.inst.supply.degree(x) + 2);
        EXPECT_EQ(gv.dem.p(), static_cast<int>(pr.inst.demands.size()));
        EXPECT_TRUE(is_eulerian(gv.dem.instance(gv.g)));
    }
}

TEST(Reducer, GvRejectsBadBranching) {
    PlantedRouter pr = planted_router_instance(3, 1, 4);
    EXPECT_THROW(build_gv(pr.inst, pr.router, {}), std::invalid_argument);
    auto b = choose_branching(pr.inst.supply, pr.router);
    b[1] = b[0];
    EXPECT_THROW(build_gv(pr.inst, pr.router, b), std::invalid_argument);
}

TEST(Reducer, PushedCutMatchesExhaustiveMinimum) {
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 25 && seed < 400; ++seed) {
        PlantedRouter pr = planted_router_instance(2 + seed % 2, 1 + seed % 2, seed, 1);
        if (pr.inst.supply.num_vertices() > 12) continue;
        auto pc = pushed_router_cut(pr.inst, pr.router);
        if (!pc) continue;
        // X holds every terminal, the chosen cycle lies outside
        std::vector<char> inX(pr.inst.supply.vertex_bound(), 0);
        for (VertexId x : pc->X) inX[x] = 1;
        for (VertexId t : terminals(pr.inst)) EXPECT_TRUE(inX[t]);
        for (EdgeId e : pr.router.cycles[pc->outsideCycle].edges) {
            EXPECT_FALSE(inX[pr.inst.supply.tail(e)]);
            EXPECT_FALSE(inX[pr.inst.supply.head(e)]);
        }
        EXPECT_EQ(pc->order, induced_cut(pr.inst.supply, pc->X).order());
        EXPECT_EQ(pc->order, min_router_cut_exhaustive(pr.inst, pr.router)) << "seed=" << seed;
        // Eulerian: the cut is balanced
        const Cut c = induced_cut(pr.inst.supply, pc->X);
        EXPECT_EQ(c.plus.size(), c.minus.size());
        ++checked;
    }
    EXPECT_GE(checked, 10);
}

TEST(Reducer, NoPushedCutWhenEveryCycleTouchesATerminal) {
    IncidenceDigraph g(5);
    Router r;
    r.cycles.push_back(cycle_of(g, {0, 1, 2}));
    r.cycles.push_back(cycle_of(g, {0, 3, 4}));
    g.add_edge(1, 3);
    Instance inst{g, {Demand{3, 1}}};
    ASSERT_TRUE(is_eulerian(inst));
    EXPECT_FALSE(pushed_router_cut(inst, r).has_value());
}

TEST(Reducer, DeleteCycleDropsIsolatedVertices) {
    IncidenceDigraph g(5);
    Path a = cycle_of(g, {0, 1, 2});
    cycle_of(g, {0, 3, 4});
    Instance inst{g, {}};
    Instance out = delete_cycle(inst, a);
    EXPECT_EQ(out.supply.num_edges(), 3);
    EXPECT_EQ(out.supply.num_vertices(), 3);
    EXPECT_LT(size_of(out), size_of(inst));
}

TEST(Reducer, IrrelevantCycleOnPlantedRouters) {
    int found = 0;
    for (int i = 0; i < 20; ++i) {
        PlantedRouter pr = planted_router_instance(5 + i % 4, 1 + i % 2, 1000 + i);
        IrrelevantCycle ic = find_irrelevant_router_cycle(pr.inst, pr.router);
        if (ic.status != CycleStatus::Found) continue;
        ++found;
        auto eq = equivalent(pr.inst, delete_cycle(pr.inst, ic.cycle));
        ASSERT_TRUE(eq.has_value());
        EXPECT_TRUE(*eq);
        EXPECT_EQ(ic.cycle.edges, pr.router.cycles[ic.index].edges);
    }
    EXPECT_GE(found, 18);
}

TEST(Reducer, SmallRoutersAreBelowThreshold) {
    PlantedRouter pr = planted_router_instance(2, 1, 3);
    IrrelevantOptions opt;
    opt.minOrder = 3;
    EXPECT_EQ(find_irrelevant_router_cycle(pr.inst, pr.router, opt).status, CycleStatus::NoCandidate);
}

TEST(Reducer, FindRouterReturnsValidRouter) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PlantedRouter pr = planted_router_instance(4, 1, seed);
        Router r = find_router(pr.inst.supply);
        EXPECT_GE(r.order(), 2);
        EXPECT_EQ(check_router(pr.inst.supply, r), "");
    }
    IncidenceDigraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    EXPECT_EQ(find_router(path).order(), 0);
}

TEST(Reducer, PipelineIsDeterministicAndReplayable) {
    PlantedRouter pr = planted_router_instance(4, 1, 21, 2);
    PipelineOptions opt;
    opt.verify = true;
    PipelineResult a = reduce_pipeline(pr.inst, opt);
    PipelineResult b = reduce_pipeline(pr.inst, opt);
    EXPECT_EQ(a.error, "");
    EXPECT_EQ(format_log(a.log), format_log(b.log));
    EXPECT_EQ(fingerprint(a.reduced), fingerprint(b.reduced));
    Instance re = replay_log(pr.inst, format_log(a.log));
    EXPECT_EQ(fingerprint(re), fingerprint(a.reduced));
    const OracleResult orig = solve_exact(pr.inst);
    ASSERT_NE(orig.verdict, Verdict::Timeout);
    EXPECT_EQ(a.answer, orig.verdict);
    EXPECT_LE(size_of(a.reduced), size_of(normalize_degrees(pr.inst)));
}

TEST(Reducer, PipelineDeletionsShrink) {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        Instance inst = random_instance(7, 14, 2, rng);
        PipelineOptions opt;
        opt.verify = true;
        PipelineResult r = reduce_pipeline(inst, opt);
        EXPECT_EQ(r.error, "");
        Instance cur = inst;
        for (const ReductionStep& st : r.log) {
            Instance next = replay_log(cur, st.line());
            if (st.op.rfind("delete", 0) == 0 || st.op.rfind("reduce", 0) == 0) EXPECT_LT(size_of(next), size_of(cur));
            cur = next;
        }
        const OracleResult orig = solve_exact(inst);
        if (orig.verdict != Verdict::Timeout && !r.timeout) EXPECT_EQ(r.answer, orig.verdict);
    }
}

TEST(Reducer, ReplayRejectsWrongHash) {
    PlantedRouter pr = planted_router_instance(3, 1, 2, 1);
    PipelineResult r = reduce_pipeline(pr.inst);
    ASSERT_FALSE(r.log.empty());
    std::string log = format_log(r.log);
    log[log.size() - 2] = log[log.size() - 2] == '0' ? '1' : '0';
    EXPECT_THROW(replay_log(pr.inst, log), std::runtime_error);
    EXPECT_THROW(replay_log(pr.inst, "bogus 1 2\n"), std::runtime_error);
}
