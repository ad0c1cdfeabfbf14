#include <gtest/gtest.h>

#include <set>

#include "eedp/generators.hpp"
#include "eedp/wall.hpp"

using namespace eedp;

TEST(Grid, SizesAndCycleLengths) {
    for (int k = 2; k <= 8; ++k) {
        Grid gr = build_elementary_grid(k);
        EXPECT_EQ(gr.g.num_vertices(), 2 * k * k);
        ASSERT_EQ(static_cast<int>(gr.cycles.size()), k);
        for (const Path& c : gr.cycles) {
            EXPECT_EQ(static_cast<int>(c.edges.size()), 2 * k);
            EXPECT_EQ(check_path(gr.g, c), "");
            EXPECT_EQ(path_start(gr.g, c), path_end(gr.g, c));
        }
        EXPECT_EQ(static_cast<int>(gr.rows.size()), 2 * k);
        for (const Path& h : gr.rows) EXPECT_EQ(static_cast<int>(h.edges.size()), k - 1);
    }
}

TEST(Grid, DegreesAreAtMostFour) {
    for (int k = 2; k <= 6; ++k) {
        Grid gr = build_elementary_grid(k);
        for (VertexId v : gr.g.vertices()) {
            EXPECT_LE(gr.g.degree(v), 4);
            EXPECT_GE(gr.g.degree(v), 3);
        }
    }
}

TEST(Wall, DegreesAtMostThree) {
    for (int k = 2; k <= 6; ++k) {
        WallGraph w = build_elementary_wall(k);
        EXPECT_TRUE(w.wall.elementary());
        for (VertexId v : w.g.vertices()) EXPECT_LE(w.g.degree(v), 3);
        // one in- and one out-coordinate per interior cell, one per boundary cell
        const int cells = w.wall.nc * w.wall.nh;
        const int expected = (w.wall.nc - 2) * w.wall.nh + w.wall.nh;
        EXPECT_EQ(static_cast<int>(w.wall.in_coords().size()), expected);
        EXPECT_EQ(static_cast<int>(w.wall.out_coords().size()), expected);
        EXPECT_LE(expected, cells);
    }
}

TEST(Wall, CoordinatesRoundTrip) {
    WallGraph w = build_elementary_wall(5);
    for (const Coord& c : w.wall.in_coords()) {
        const VertexId v = w.wall.vertex(c);
        ASSERT_NE(v, kNone);
        auto back = w.wall.coord_of(v);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(w.wall.vertex(*back), v);
        EXPECT_EQ(w.g.indeg(v), w.g.outdeg(v) + 1) << to_string(c);  // short of one out-edge
    }
    for (const Coord& c : w.wall.out_coords()) {
        const VertexId v = w.wall.vertex(c);
        EXPECT_EQ(w.g.outdeg(v), w.g.indeg(v) + 1) << to_string(c);
    }
}

TEST(Wall, HalfWallEmbedsInGrid) {
    for (int k = 4; k <= 8; k += 2) {
        Grid gr = build_elementary_grid(k);
        WallGraph half = build_elementary_wall(k / 2);
        TopologicalEmbedding emb = embed_half_wall(gr, half);
        EXPECT_EQ(check_topological_embedding(half.g, gr.g, emb), "") << "k=" << k;
    }
}

TEST(Wall, CompleteMatchingMakesItEulerian) {
    for (int k = 2; k <= 6; ++k) {
        WallGraph w = build_elementary_wall(k);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            CoordinateMatching m = random_matching(w.wall, seed, 0.5, 0.2, 0.2);
            ASSERT_TRUE(m.complete(w.wall));
            MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, m);
            EXPECT_TRUE(is_eulerian(mw.g)) << "k=" << k << " seed=" << seed;
        }
        MatchedWall up = build_matched_wall(w.wall.nc, w.wall.nh, up_path_matching(w.wall));
        EXPECT_TRUE(is_eulerian(up.g));
    }
}

TEST(Wall, ClassifyPairs) {
    WallGraph w = build_elementary_wall(6);
    const Wall& wl = w.wall;
    // odd row: Type I goes one column left, even row one column right
    EXPECT_EQ(classify_pair(wl, Coord{3, 5, Sign::Minus}, Coord{3, 4, Sign::Plus}), JumpType::UpPath);
    EXPECT_EQ(classify_pair(wl, Coord{3, 5, Sign::Minus}, Coord{2, 3, Sign::Plus}), JumpType::TypeI);
    EXPECT_EQ(classify_pair(wl, Coord{3, 6, Sign::Minus}, Coord{4, 4, Sign::Plus}), JumpType::TypeI);
    EXPECT_EQ(classify_pair(wl, Coord{3, 5, Sign::Minus}, Coord{3, 2, Sign::Plus}), JumpType::TypeII);
    EXPECT_EQ(classify_pair(wl, Coord{3, 5, Sign::Minus}, Coord{5, 1, Sign::Plus}), JumpType::Type0);
    // rows are cyclic
    EXPECT_EQ(classify_pair(wl, Coord{3, 1, Sign::Minus}, Coord{3, 12, Sign::Plus}), JumpType::UpPath);
}

TEST(Wall, UpPathJumpCyclesFollowColumns) {
    WallGraph w = build_elementary_wall(4);
    MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, up_path_matching(w.wall));
    for (std::size_t k = 0; k < mw.matching.edges.size(); ++k) {
        auto jc = jump_cycle(mw, static_cast<int>(k));
        ASSERT_TRUE(jc.has_value());
        EXPECT_EQ(check_path(mw.g, jc->cycle), "");
        EXPECT_EQ(path_start(mw.g, jc->cycle), path_end(mw.g, jc->cycle));
        std::set<int> distinct(jc->jumps.begin(), jc->jumps.end());
        EXPECT_EQ(distinct.size(), jc->jumps.size());
        for (int j : jc->jumps) EXPECT_EQ(mw.matching.edges[j].first.i, mw.matching.edges[k].first.i);
    }
}

TEST(Wall, JumpSequenceIsUnique) {
    WallGraph w = build_elementary_wall(6);
    CoordinateMatching m = random_matching(w.wall, 7, 0.3, 0.3, 0.3);
    for (std::size_t k = 0; k < m.edges.size(); ++k) {
        auto a = jump_sequence(w.wall, m, static_cast<int>(k), 3);
        auto b = jump_sequence(w.wall, m, static_cast<int>(k), 3);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (!a) continue;
        EXPECT_EQ(*a, *b);
        for (std::size_t j = 1; j < a->size(); ++j) {
            const Coord& h = m.edges[(*a)[j - 1]].second;
            const Coord& t = m.edges[(*a)[j]].first;
            EXPECT_EQ(t.i, h.i);
            EXPECT_EQ(t.p, w.wall.row(h.p + 1));
        }
    }
}

TEST(Wall, HostPathsRealizePlantedMatching) {
    for (int k = 3; k <= 6; ++k)
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            WallHost h = random_wall_host(k, seed);
            EXPECT_TRUE(is_eulerian(h.g));
            auto paths = complete_coordinate_paths(h.g, h.wall);
            ASSERT_TRUE(edge_disjoint(paths));
            CoordinateMatching m = matching_of(h.g, h.wall, paths);
            EXPECT_TRUE(m.complete(h.wall));
            Closure c = eulerian_closure(h.g, h.wall, paths);
            EXPECT_TRUE(is_eulerian(c.skeleton.g));
            EXPECT_TRUE(c.skeleton.matching.complete(c.skeleton.wall));
            // every host edge is accounted for at most once
            std::set<EdgeId> seen;
            for (auto& [e, host] : c.provenance)
                for (EdgeId f : host) EXPECT_TRUE(seen.insert(f).second);
        }
}

TEST(Wall, SubdividedWallKeepsCoordinates) {
    WallGraph w = build_elementary_wall(4);
    subdivide_wall(w.g, w.wall, 3, 2);
    EXPECT_FALSE(w.wall.elementary());
    for (const Coord& c : w.wall.in_coords()) EXPECT_EQ(w.wall.coord_of(w.wall.vertex(c))->i, c.i);
    CoordinateMatching m = up_path_matching(w.wall);
    for (auto& [t, h] : m.edges) w.g.add_edge(w.wall.vertex(t), w.wall.vertex(h));
    EXPECT_TRUE(is_eulerian(w.g));
}

TEST(Wall, FacesSatisfyEulerFormula) {
    for (int k = 2; k <= 5; ++k) {
        WallGraph w = build_elementary_wall(k);
        RotationSystem rot = wall_rotation(w.g, w.wall);
        Faces f = trace_faces(w.g, rot);
        // drawn on a sphere: V - E + F = 2 (the annulus holes are faces)
        EXPECT_EQ(w.g.num_vertices() - w.g.num_edges() + static_cast<int>(f.faces.size()), 2) << "k=" << k;
    }
}

TEST(Wall, ColumnOrientationsAgree) {
    WallGraph w = build_elementary_wall(4);
    MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, up_path_matching(w.wall));
    std::vector<EdgeId> ups(mw.medge.begin(), mw.medge.end());
    RotationSystem rot = wall_rotation(mw.g, mw.wall, ups);
    int first = 0;
    for (std::size_t k = 0; k < mw.matching.edges.size(); ++k) {
        if (mw.matching.edges[k].first.p != 2) continue;
        auto jc = jump_cycle(mw, static_cast<int>(k));
        ASSERT_TRUE(jc.has_value());
        const int o = cycle_orientation(mw.g, rot, jc->cycle);
        EXPECT_NE(o, 0);
        if (first == 0) first = o;
        EXPECT_EQ(o, first);
    }
}
