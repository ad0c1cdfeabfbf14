#include <gtest/gtest.h>

#include "eedp/generators.hpp"
#include "eedp/io.hpp"
#include "eedp/twostar.hpp"

using namespace eedp;

namespace {

TwoStarInstance bowtie() {
    // s1=0 s2=1 t1=2 t2=3 a=4 b=5 v=6
    TwoStarInstance x{IncidenceDigraph(7), {6, {0, 1}, {2, 3}}};
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 4}, {1, 5}, {5, 4}, {4, 6}, {4, 3}, {6, 2}})
        x.g.add_edge(a, b);
    return x;
}

TwoStarInstance parallel() {
    // s1=0 s2=1 t1=2 t2=3 a=4 v=5
    TwoStarInstance x{IncidenceDigraph(6), {5, {0, 1}, {2, 3}}};
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 4}, {1, 4}, {4, 5}, {4, 5}, {5, 2}, {5, 3}})
        x.g.add_edge(a, b);
    return x;
}

}  // namespace

TEST(TwoStar, SingleDirectPair) {
    TwoStarInstance x{IncidenceDigraph(3), {1, {0}, {2}}};
    x.g.add_edge(0, 1);
    x.g.add_edge(1, 2);
    EXPECT_TRUE(cut_criterion_holds(x.g, x.dem));
    TwoStarResult r = solve_two_star(x.g, x.dem);
    ASSERT_TRUE(r.linkage);
    EXPECT_EQ(r.linkage->paths[0].edges, std::vector<EdgeId>{0});
    EXPECT_EQ(r.linkage->paths[1].edges, std::vector<EdgeId>{1});
}

TEST(TwoStar, BowtieFailsCriterion) {
    TwoStarInstance x = bowtie();
    EXPECT_FALSE(cut_criterion_holds(x.g, x.dem));
    EXPECT_FALSE(cut_criterion_exhaustive(x.g, x.dem));
    // the violating set from the hand analysis
    Cut c = induced_cut(x.g, {6, 2});
    EXPECT_EQ(c.minus.size(), 1u);
    EXPECT_FALSE(solve_two_star(x.g, x.dem).linkage);
    EXPECT_EQ(solve_exact(x.dem.instance(x.g)).verdict, Verdict::Infeasible);
}

TEST(TwoStar, BowtieFixtureMatches) {
    Instance inst = read_instance_file(std::string(EEDP_FIXTURES) + "/bowtie.eedp");
    TwoStarInstance x = bowtie();
    EXPECT_EQ(serialize_instance(inst), serialize_instance(x.dem.instance(x.g)));
}

TEST(TwoStar, ParallelInstance) {
    TwoStarInstance x = parallel();
    EXPECT_TRUE(cut_criterion_holds(x.g, x.dem));
    TwoStarResult r = solve_two_star(x.g, x.dem);
    ASSERT_TRUE(r.linkage);
    EXPECT_EQ(validate_linkage(x.dem.instance(x.g), *r.linkage), "");
    EXPECT_FALSE(r.usedFallback);
    EXPECT_EQ(solve_exact(x.dem.instance(x.g)).verdict, Verdict::Feasible);
}

TEST(TwoStar, RejectsNonEulerianUnion) {
    TwoStarInstance x = parallel();
    x.g.add_edge(0, 1);
    EXPECT_THROW(cut_criterion_holds(x.g, x.dem), std::invalid_argument);
}

TEST(TwoStar, AgreesWithOracleAndExhaustiveCriterion) {
    Rng rng(31);
    int yes = 0, no = 0;
    for (int it = 0; it < 300; ++it) {
        int n = 3 + static_cast<int>(rng() % 8);
        int p = 1 + static_cast<int>(rng() % 3);
        TwoStarInstance x = random_two_star(n, 4 + static_cast<int>(rng() % 14), p, rng);
        bool fast = cut_criterion_holds(x.g, x.dem);
        ASSERT_EQ(fast, cut_criterion_exhaustive(x.g, x.dem));
        OracleResult o = solve_exact(x.dem.instance(x.g));
        ASSERT_NE(o.verdict, Verdict::Timeout);
        ASSERT_EQ(fast, o.verdict == Verdict::Feasible);
        TwoStarResult r = solve_two_star(x.g, x.dem);  // throws on a missing admissible pair
        ASSERT_EQ(r.linkage.has_value(), fast);
        if (r.linkage) ASSERT_EQ(validate_linkage(x.dem.instance(x.g), *r.linkage), "");
        (fast ? yes : no)++;
    }
    EXPECT_GT(yes, 20);
    EXPECT_GT(no, 20);
}
