#include <gtest/gtest.h>

#include "eedp/generators.hpp"
#include "eedp/io.hpp"

using namespace eedp;

TEST(Generators, FlowerShape) {
    for (int h = 1; h <= 3; ++h)
        for (int p = 1; p <= 3; ++p)
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                Flower f = flower_graph(h, p, seed);
                EXPECT_EQ(check_flower(f), "") << "h=" << h << " p=" << p;
                EXPECT_TRUE(is_eulerian(f.inst));
                EXPECT_EQ(static_cast<int>(f.cycles.size()), 2 * h + 1);
                EXPECT_EQ(static_cast<int>(f.inst.demands.size()), p);
                for (std::size_t k = 1; k < f.direction.size(); ++k)
                    EXPECT_EQ(f.direction[k], -f.direction[k - 1]);
            }
}

TEST(Generators, FlowerValidatorCatchesInnerTerminal) {
    Flower f = flower_graph(1, 1, 4);
    const VertexId inner = f.inst.supply.tail(f.cycles.front().edges.front());
    f.inst.demands.front().s = inner;
    EXPECT_NE(check_flower(f), "");
}

TEST(Generators, PlantedRouters) {
    for (int order = 2; order <= 8; ++order)
        for (int p = 0; p <= 2; ++p) {
            PlantedRouter pr = planted_router_instance(order, p, 100 + order * 3 + p);
            EXPECT_EQ(pr.router.order(), order);
            EXPECT_EQ(check_router(pr.inst.supply, pr.router), "");
            EXPECT_TRUE(is_eulerian(pr.inst));
            EXPECT_EQ(static_cast<int>(pr.inst.demands.size()), p);
        }
}

TEST(Generators, SameSeedSameOutput) {
    EXPECT_EQ(serialize_instance(planted_router_instance(5, 2, 9).inst),
              serialize_instance(planted_router_instance(5, 2, 9).inst));
    EXPECT_EQ(serialize_instance(flower_graph(2, 2, 3).inst), serialize_instance(flower_graph(2, 2, 3).inst));
    WallHost a = random_wall_host(4, 8), b = random_wall_host(4, 8);
    EXPECT_EQ(a.planted.edges, b.planted.edges);
    EXPECT_EQ(serialize_instance(Instance{a.g, {}}), serialize_instance(Instance{b.g, {}}));
}

TEST(Generators, WallHostWithSubdivision) {
    WallHostOptions opt;
    opt.maxSubdiv = 2;
    WallHost h = random_wall_host(4, 3, opt);
    EXPECT_TRUE(is_eulerian(h.g));
    EXPECT_TRUE(h.planted.complete(h.wall));
    EXPECT_TRUE(edge_disjoint(h.paths));
    for (const Path& p : h.paths) EXPECT_EQ(check_path(h.g, p), "");
}
