#include "eedp/analyze.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace eedp {

Wall wall_in_host(const IncidenceDigraph& g, int nc, int nh) {
    const WallGraph ref = build_wall(nc, nh);
    for (EdgeId e : ref.g.edges()) {
        if (e >= g.edge_bound() || !g.has_edge(e) || g.tail(e) != ref.g.tail(e) || g.head(e) != ref.g.head(e))
            throw std::invalid_argument("graph does not carry a " + std::to_string(nc) + "x" + std::to_string(nh) +
                                        " wall at edge " + std::to_string(e));
    }
    return ref.wall;
}

std::optional<std::pair<int, int>> wall_header(const std::string& text) {
    static const std::regex re(R"(^\s*#\s*wall\s+(\d+)\s+(\d+)\s*$)");
    std::istringstream in(text);
    std::string line;
    std::smatch m;
    while (std::getline(in, line))
        if (std::regex_match(line, m, re)) return std::make_pair(std::stoi(m[1]), std::stoi(m[2]));
    return std::nullopt;
}

WallCensus analyze_wall(const IncidenceDigraph& g, const Wall& wall) {
    WallCensus c;
    c.coordinates = static_cast<int>(wall.in_coords().size());
    const auto paths = complete_coordinate_paths(g, wall);
    const Closure cl = eulerian_closure(g, wall, paths);
    const MatchedWall& mw = cl.skeleton;
    c.matched = static_cast<int>(mw.matching.edges.size());
    c.complete = mw.matching.complete(mw.wall);
    for (const JumpRecord& r : classify_all(mw.wall, mw.matching)) {
        switch (r.type) {
            case JumpType::UpPath: ++c.upPath; break;
            case JumpType::Type0: ++c.type0; break;
            case JumpType::TypeI: ++c.typeI; break;
            case JumpType::TypeII: ++c.typeII; break;
        }
        if (r.type == JumpType::Type0 && type0_in_margin(mw.wall, r)) {
            ++c.type0InMargin;
            const CrossResult x = cross_from_jump(mw, r.index);
            if (x.cross) {
                ++c.type0Crosses;
                if (!c.cross) c.cross = x.cross;
            }
        }
        if ((r.type == JumpType::TypeI || r.type == JumpType::TypeII) && sequence_in_margin(mw.wall, r) &&
            jump_sequence(mw.wall, mw.matching, r.index, 3)) {
            ++c.saturated;
            const CrossResult x = cross_from_sequence(mw, r.index);
            if (x.cross) {
                ++c.sequenceCrosses;
                if (!c.cross) c.cross = x.cross;
            }
        }
    }
    if (c.cross) {
        c.structure = "cross";
        c.detail = "tile columns " + std::to_string(c.cross->tile.L) + ".." + std::to_string(c.cross->tile.R) +
                   " rows " + std::to_string(c.cross->tile.top) + ".." + std::to_string(c.cross->tile.bottom);
        return c;
    }
    // Largest up-path tile first, then leftmost, then topmost.
    for (int t = std::min(mw.wall.nc - 2, mw.wall.nh / 2); t >= 2; --t)
        for (int i0 = 1; i0 + t <= mw.wall.nc - 1; ++i0)
            for (int top = 1; top + 2 * t - 1 <= mw.wall.nh; top += 2) {
                try {
                    c.swirl = canonical_swirl(mw, i0, top, t);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                c.structure = "swirl";
                c.detail = "order " + std::to_string(t) + " at column " + std::to_string(i0) + " row " +
                           std::to_string(top);
                return c;
            }
    c.detail = c.complete ? "no in-margin cross and no up-path tile at this scale" : "matching is not complete";
    return c;
}

}  // namespace eedp
