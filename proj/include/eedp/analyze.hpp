// Jump census and structure search on a wall embedded at the front of a host
// graph (vertex and edge ids as laid down by build_wall).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eedp/cross.hpp"
#include "eedp/swirl.hpp"

namespace eedp {

// Wall with nc columns and nh rows whose vertex and edge ids match a fresh
// build_wall(nc, nh); throws std::invalid_argument when g does not carry it.
Wall wall_in_host(const IncidenceDigraph& g, int nc, int nh);
// Reads a "# wall <nc> <nh>" comment line; nullopt when absent.
std::optional<std::pair<int, int>> wall_header(const std::string& text);

struct WallCensus {
    int coordinates = 0;  // in-coordinates
    int matched = 0;      // pairs realized by off-wall trails
    bool complete = false;
    int upPath = 0, type0 = 0, typeI = 0, typeII = 0;
    int type0InMargin = 0, type0Crosses = 0;
    int saturated = 0, sequenceCrosses = 0;  // 3-saturated I/II jumps in margin
    // "cross", "swirl" or "inconclusive"
    std::string structure = "inconclusive";
    std::optional<Cross> cross;
    std::optional<CanonicalSwirl> swirl;
    std::string detail;
};
// Closes the host onto its wall, classifies every jump, and looks for a
// certified cross, else the largest up-path swirl.
WallCensus analyze_wall(const IncidenceDigraph& g, const Wall& wall);

}  // namespace eedp
