// Seeded instance generators. Same seed, same output.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eedp/graph.hpp"
#include "eedp/router.hpp"
#include "eedp/twostar.hpp"
#include "eedp/wall.hpp"

namespace eedp {

using Rng = std::mt19937_64;

// Union of r random directed cycles (lengths 1..maxLen, loops allowed only if
// allowLoops) over vertices 0..n-1.
IncidenceDigraph random_eulerian(int n, int r, Rng& rng, int maxLen = 0, bool allowLoops = false);

// Random Eulerian graph on n vertices with about m edges, then p edges turned
// into demands. Every vertex id 0..n-1 exists (some may be isolated).
Instance random_instance(int n, int m, int p, Rng& rng);

struct TwoStarInstance {
    IncidenceDigraph g;
    TwoStarDemand dem;
};
// Center 0; p in-edges and p out-edges of the center become the demand star.
TwoStarInstance random_two_star(int n, int m, int p, Rng& rng);

// --- structured ------------------------------------------------------------

struct WallHostOptions {
    double upPath = 0.6, typeI = 0.1, typeII = 0.1;  // matching mix
    int pool = 6;         // shared off-wall vertices the paths run through
    int maxInner = 2;     // inner pool vertices per coordinate path
    int extraCycles = 4;  // random cycles over the pool
    int maxSubdiv = 0;    // extra inner vertices per wall edge
};
struct WallHost {
    IncidenceDigraph g;
    Wall wall;
    CoordinateMatching planted;  // matching realized by the off-wall paths
    std::vector<Path> paths;
};
// Elementary wall of order k embedded in an Eulerian host.
WallHost random_wall_host(int k, std::uint64_t seed, const WallHostOptions& opt = {});

// Vertex-disjoint cycles C_0..C_{2h} with alternating direction; chords and
// terminal edges only on C_{2h}, every chord skipping at least one vertex.
struct Flower {
    Instance inst;
    std::vector<Path> cycles;  // C_0 (inner) .. C_{2h} (outer)
    std::vector<int> direction;  // +1 / -1 around the common centre
    int h = 0;
};
Flower flower_graph(int h, int p, std::uint64_t seed, int extraChords = 2);
// Empty when the instance has the flower shape.
std::string check_flower(const Flower& f);

// Router of the given order (C_a visits one private vertex shared with each
// C_b) plus random Eulerian background through it and p demands cut out of
// the background.
struct PlantedRouter {
    Instance inst;
    Router router;
};
PlantedRouter planted_router_instance(int order, int p, std::uint64_t seed, int background = 4);

}  // namespace eedp
