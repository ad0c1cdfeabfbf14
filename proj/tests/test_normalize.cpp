#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "eedp/generators.hpp"
#include "eedp/io.hpp"
#include "eedp/normalize.hpp"
#include "eedp/oracle.hpp"

using namespace eedp;

namespace {

int size_of(const Instance& inst) { return inst.supply.num_vertices() + inst.supply.num_edges(); }

Instance make(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<Demand>& dem) {
    Instance inst{IncidenceDigraph(n), dem};
    for (auto [a, b] : edges) inst.supply.add_edge(a, b);
    return inst;
}

Verdict answer(const Instance& inst) {
    OracleResult r = solve_exact(inst);
    EXPECT_NE(r.verdict, Verdict::Timeout);
    return r.verdict;
}

std::vector<VertexId> brute_small_cut(const Instance& inst) {
    auto vs = inst.supply.vertices();
    auto term = terminals(inst);
    for (unsigned mask = 1; mask + 1 < (1U << vs.size()); ++mask) {
        std::vector<VertexId> X;
        bool bad = false;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (mask >> i & 1U) {
                X.push_back(vs[i]);
                bad = bad || std::binary_search(term.begin(), term.end(), vs[i]);
            }
        if (bad) continue;
        for (auto reduce : {reduce_two_cut, reduce_four_cut}) {
            try {
                reduce(inst, X);
                return X;
            } catch (const std::invalid_argument&) {
            }
        }
    }
    return {};
}

bool brute_small_cut_exists(const Instance& inst) { return !brute_small_cut(inst).empty(); }

std::string show(const std::vector<VertexId>& X) {
    std::string r;
    for (VertexId v : X) r += std::to_string(v) + " ";
    return r;
}

}  // namespace

TEST(Normalize, NormalInstanceUnchanged) {
    // vertex 2: in {0->2, 3->2}, out {2->3, 2->3}; vertex 3: in 2, out {3->2, 3->1}
    Instance inst = make(4, {{0, 2}, {2, 3}, {3, 2}, {2, 3}, {3, 1}}, {{1, 0}});
    ASSERT_TRUE(is_normal(inst));
    EXPECT_EQ(serialize_instance(normalize_degrees(inst)), serialize_instance(inst));
}

TEST(Normalize, DegreeSixVertexBecomesGadget) {
    // center 6; a_j = 0..2 feed it, b_j = 3..5 drain it
    std::vector<int> perm{0, 1, 2};
    do {
        Instance inst = make(7, {{0, 6}, {1, 6}, {2, 6}, {6, 3}, {6, 4}, {6, 5}}, {});
        for (int j = 0; j < 3; ++j) inst.demands.push_back({3 + perm[j], j});
        ASSERT_TRUE(is_eulerian(inst));
        Instance out = normalize_degrees(inst);
        ASSERT_TRUE(is_normal(out));
        EXPECT_FALSE(out.supply.has_vertex(6));
        EXPECT_EQ(out.supply.num_vertices(), 6 + 9);
        ASSERT_EQ(answer(out), Verdict::Feasible) << "matching " << perm[0] << perm[1] << perm[2];
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Normalize, HighDegreeTerminalIsSubdivided) {
    // terminal 0 also lies on the cycle 0->2->0
    Instance inst = make(3, {{0, 1}, {0, 2}, {2, 0}}, {{1, 0}});
    ASSERT_TRUE(is_eulerian(inst));
    Instance out = normalize_degrees(inst);
    ASSERT_TRUE(is_normal(out));
    ASSERT_EQ(out.demands.size(), 1u);
    EXPECT_NE(out.demands[0].s, 0);
    EXPECT_EQ(out.supply.degree(out.demands[0].s), 1);
    EXPECT_EQ(out.supply.degree(out.demands[0].t), 1);
    EXPECT_EQ(answer(out), answer(inst));
}

TEST(Normalize, SharedTerminalsAndLoopDemands) {
    Instance inst = make(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 0}});
    Instance out = normalize_degrees(inst);
    EXPECT_TRUE(is_normal(out));
    EXPECT_EQ(answer(out), Verdict::Feasible);
}

TEST(Normalize, RandomInstancesKeepAnswerAndProfile) {
    Rng rng(41);
    for (int it = 0; it < 200; ++it) {
        Instance inst = random_instance(3 + static_cast<int>(rng() % 7), 6 + static_cast<int>(rng() % 14),
                                        1 + static_cast<int>(rng() % 3), rng);
        Instance out = normalize_degrees(inst);
        ASSERT_TRUE(is_normal(out)) << serialize_instance(inst);
        ASSERT_EQ(answer(inst), answer(out)) << serialize_instance(inst);
    }
}

TEST(TwoCut, PendantBlobCollapses) {
    // 0 -> 2 -> [3 <-> 4] -> 5 -> 1
    Instance inst = make(6, {{0, 2}, {2, 3}, {3, 4}, {4, 3}, {3, 5}, {5, 1}}, {{1, 0}});
    Instance out = reduce_two_cut(inst, {3, 4});
    EXPECT_FALSE(out.supply.has_vertex(3));
    EXPECT_EQ(out.supply.num_edges(), 3);
    EXPECT_LT(size_of(out), size_of(inst));
    EXPECT_EQ(answer(out), answer(inst));
}

TEST(TwoCut, DigonChainBecomesOneEdge) {
    std::vector<std::pair<int, int>> es{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}};
    for (int i = 3; i < 6; ++i) {
        es.push_back({i, i + 1});
        es.push_back({i + 1, i});
    }
    Instance inst = make(8, es, {{1, 0}});
    ASSERT_TRUE(is_eulerian(inst));
    Instance out = reduce_two_cut(inst, {3, 4, 5, 6});
    EXPECT_EQ(out.supply.num_edges(), 3);
    EXPECT_EQ(answer(out), answer(inst));
}

TEST(TwoCut, RejectsTerminalsAndWrongOrder) {
    Instance inst = make(6, {{0, 2}, {2, 3}, {3, 4}, {4, 3}, {3, 5}, {5, 1}}, {{1, 0}});
    EXPECT_THROW(reduce_two_cut(inst, {0, 2}), std::invalid_argument);
    EXPECT_THROW(reduce_two_cut(inst, {}), std::invalid_argument);
}

TEST(FourCut, DigonPairContracts) {
    // X = {4,5}: 0->4, 4->2, 1->5, 5->3, digon 4<->5; outside closes up
    Instance inst = make(6, {{0, 4}, {4, 2}, {1, 5}, {5, 3}, {4, 5}, {5, 4}}, {{2, 0}, {3, 1}});
    ASSERT_TRUE(is_eulerian(inst));
    Instance out = reduce_four_cut(inst, {4, 5});
    EXPECT_EQ(out.supply.num_vertices(), 5);
    EXPECT_EQ(out.supply.num_edges(), 4);
    EXPECT_TRUE(is_eulerian(out));
    EXPECT_EQ(answer(out), answer(inst));
}

TEST(FourCut, RejectsDisconnectedSide) {
    Instance inst = make(6, {{0, 4}, {4, 2}, {1, 5}, {5, 3}}, {{2, 0}, {3, 1}});
    EXPECT_THROW(reduce_four_cut(inst, {4, 5}), std::invalid_argument);
}

TEST(SmallCut, EmptySupplyHasNone) {
    Instance inst{IncidenceDigraph(0), {}};
    EXPECT_FALSE(find_small_cut(inst));
}

TEST(SmallCut, AgreesWithExhaustiveSearchAndPreservesAnswers) {
    Rng rng(42);
    int found = 0, none = 0;
    for (int it = 0; it < 200; ++it) {
        Instance inst = random_instance(4 + static_cast<int>(rng() % 6), 8 + static_cast<int>(rng() % 14),
                                        1 + static_cast<int>(rng() % 2), rng);
        auto c = find_small_cut(inst);
        bool brute = brute_small_cut_exists(inst);
        ASSERT_EQ(c.has_value(), brute) << serialize_instance(inst) << "X=" << show(brute_small_cut(inst));
        if (!c) {
            ++none;
            continue;
        }
        ++found;
        Instance out = apply_small_cut(inst, *c);
        ASSERT_LT(size_of(out), size_of(inst));
        ASSERT_TRUE(is_eulerian(out));
        ASSERT_EQ(answer(out), answer(inst)) << serialize_instance(inst);
    }
    EXPECT_GT(found, 10);
    EXPECT_GT(none, 0);
}

TEST(SplitEdge, OnlyEdgeOfSingleDemand) {
    Instance inst = make(2, {{0, 1}}, {{1, 0}});
    SplitEdgeResult r = split_edge(inst, 0, 0);
    EXPECT_EQ(r.inst.demands.size(), 2u);
    EXPECT_TRUE(is_eulerian(r.inst));
    EXPECT_EQ(answer(r.inst), Verdict::Feasible);
}

TEST(SplitEdge, WitnessEdgesAndUnusedEdges) {
    Rng rng(43);
    for (int it = 0; it < 200; ++it) {
        Instance inst = random_instance(3 + static_cast<int>(rng() % 6), 6 + static_cast<int>(rng() % 12),
                                        1 + static_cast<int>(rng() % 2), rng);
        OracleResult o = solve_exact(inst);
        ASSERT_NE(o.verdict, Verdict::Timeout);
        auto es = inst.supply.edges();
        if (es.empty()) continue;
        if (o.verdict == Verdict::Feasible) {
            std::vector<char> used(inst.supply.edge_bound(), 0);
            for (std::size_t i = 0; i < o.linkage->paths.size(); ++i) {
                const Path& p = o.linkage->paths[i];
                for (EdgeId e : p.edges) used[e] = 1;
                if (p.edges.empty()) continue;
                SplitEdgeResult r = split_edge(inst, p.edges[rng() % p.edges.size()], static_cast<int>(i));
                ASSERT_EQ(r.inst.demands.size(), inst.demands.size() + 1);
                ASSERT_TRUE(is_eulerian(r.inst));
                ASSERT_EQ(answer(r.inst), Verdict::Feasible);
            }
            for (EdgeId e : es)
                if (!used[e]) {
                    ASSERT_EQ(answer(split_edge(inst, e).inst), Verdict::Feasible);
                    break;
                }
        } else {
            EdgeId e = es[rng() % es.size()];
            ASSERT_EQ(answer(split_edge(inst, e).inst), Verdict::Infeasible);
            for (int i = 0; i < static_cast<int>(inst.demands.size()); ++i)
                ASSERT_EQ(answer(split_edge(inst, e, i).inst), Verdict::Infeasible);
        }
    }
}
