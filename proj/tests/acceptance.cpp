// Acceptance harness: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>

#include "eedp/cross.hpp"
#include "eedp/generators.hpp"
#include "eedp/io.hpp"
#include "eedp/normalize.hpp"
#include "eedp/oracle.hpp"
#include "eedp/reducer.hpp"
#include "eedp/router.hpp"
#include "eedp/swirl.hpp"
#include "eedp/twostar.hpp"

using namespace eedp;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

long size_of(const Instance& inst) { return inst.supply.num_vertices() + inst.supply.num_edges(); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

// 1. Frank's criterion against the oracle on random two-star instances.
Outcome criterion1() {
    const auto t0 = Clock::now();
    Rng rng(1);
    int n = 0, agree = 0, timeouts = 0, feasible = 0;
    for (int it = 0; n < 1000 && it < 5000; ++it) {
        const int v = 4 + static_cast<int>(rng() % 7);   // 4..10
        const int m = 8 + static_cast<int>(rng() % 17);  // 8..24
        const int p = 1 + static_cast<int>(rng() % 3);   // 1..3
        TwoStarInstance ts = random_two_star(v, m, p, rng);
        if (ts.g.num_vertices() > 10 || ts.g.num_edges() > 24) continue;
        ++n;
        const OracleResult o = solve_exact(ts.dem.instance(ts.g));
        if (o.verdict == Verdict::Timeout) {
            ++timeouts;
            continue;
        }
        const bool holds = cut_criterion_holds(ts.g, ts.dem);
        feasible += o.verdict == Verdict::Feasible;
        agree += holds == (o.verdict == Verdict::Feasible);
    }
    const double s = seconds_since(t0);
    Outcome out;
    out.pass = n >= 1000 && agree == n && timeouts == 0 && s <= 300;
    out.detail = std::to_string(agree) + "/" + std::to_string(n) + " agree (" + std::to_string(feasible) +
                 " feasible), " + std::to_string(timeouts) + " timeouts, " + std::to_string(s) + " s";
    return out;
}

// 2. Two-max-flow check against the all-subsets cut criterion.
Outcome criterion2() {
    Rng rng(2);
    int n = 0, agree = 0;
    for (int it = 0; it < 200; ++it) {
        const int v = 3 + static_cast<int>(rng() % 10);  // 3..12
        const int m = 6 + static_cast<int>(rng() % 19);
        const int p = 1 + static_cast<int>(rng() % 3);
        TwoStarInstance ts = random_two_star(v, m, p, rng);
        if (ts.g.num_vertices() > 12) continue;
        ++n;
        agree += cut_criterion_holds(ts.g, ts.dem) == cut_criterion_exhaustive(ts.g, ts.dem);
    }
    return {n == 200 && agree == n, std::to_string(agree) + "/" + std::to_string(n) + " agree"};
}

// 3. Every reduction keeps the oracle answer.
Outcome criterion3() {
    Rng rng(3);
    int instances = 0, violations = 0, skipped = 0;
    int norm = 0, two = 0, four = 0, split = 0;
    auto answer = [&](const Instance& inst) { return solve_exact(inst).verdict; };
    for (int it = 0; it < 500; ++it) {
        Instance inst = random_instance(3 + static_cast<int>(rng() % 7), 6 + static_cast<int>(rng() % 14),
                                        1 + static_cast<int>(rng() % 2), rng);
        const OracleResult o = solve_exact(inst);
        if (o.verdict == Verdict::Timeout) {
            ++skipped;
            continue;
        }
        ++instances;
        auto check = [&](const Instance& out, Verdict want, int& counter) {
            const Verdict got = answer(out);
            if (got == Verdict::Timeout) {
                ++skipped;
                return;
            }
            ++counter;
            violations += got != want;
        };
        check(normalize_degrees(inst), o.verdict, norm);
        if (auto c = find_small_cut(inst)) check(apply_small_cut(inst, *c), o.verdict, c->kind == 2 ? two : four);
        const auto es = inst.supply.edges();
        if (es.empty()) continue;
        if (o.verdict == Verdict::Feasible) {
            // split an edge of demand i's path into a fresh pair of terminals
            for (std::size_t i = 0; i < o.linkage->paths.size(); ++i) {
                const Path& p = o.linkage->paths[i];
                if (p.edges.empty()) continue;
                check(split_edge(inst, p.edges[rng() % p.edges.size()], static_cast<int>(i)).inst,
                      Verdict::Feasible, split);
            }
        } else {
            check(split_edge(inst, es[rng() % es.size()]).inst, Verdict::Infeasible, split);
        }
    }
    Outcome out;
    out.pass = instances >= 500 && violations == 0 && two > 0 && four > 0 && split > 0;
    out.detail = std::to_string(instances) + " instances; normalize " + std::to_string(norm) + ", 2-cut " +
                 std::to_string(two) + ", 4-cut " + std::to_string(four) + ", split " + std::to_string(split) +
                 "; " + std::to_string(violations) + " violations, " + std::to_string(skipped) + " timeouts";
    return out;
}

// 4. Crosses from in-margin jumps in walls of order 12.
Outcome criterion4() {
    int type0 = 0, seqs = 0, bad = 0, handedOff = 0;
    std::string firstError;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        WallGraph w = build_elementary_wall(12);
        const double up = seed % 2 ? 0.0 : 0.4;
        MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, random_matching(w.wall, seed, up, 0.25, 0.25));
        for (int k = 0; k < static_cast<int>(mw.matching.edges.size()); ++k) {
            const JumpRecord r = classify_jump(mw.wall, mw.matching, k);
            CrossResult c;
            if (r.type == JumpType::Type0) {
                if (!type0_in_margin(mw.wall, r)) continue;
                c = cross_from_jump(mw, k);
                ++type0;
            } else if (r.type == JumpType::TypeI || r.type == JumpType::TypeII) {
                const auto seq = jump_sequence(mw.wall, mw.matching, k, 3);
                if (!sequence_in_margin(mw.wall, r) || !seq) continue;
                // the sequence hands off to its first Type 0 jump, whose own
                // tile must then fit the margins
                bool outside = false;
                for (int j = 1; j < 3; ++j) {
                    const JumpRecord rj = classify_jump(mw.wall, mw.matching, (*seq)[j]);
                    if (rj.type != JumpType::Type0) continue;
                    outside = !type0_in_margin(mw.wall, rj);
                    break;
                }
                if (outside) {
                    ++handedOff;
                    continue;
                }
                c = cross_from_sequence(mw, k);
                ++seqs;
            } else {
                continue;
            }
            std::string err = c.cross ? validate_cross(mw, *c.cross) : c.error;
            if (c.cross && err.empty()) {
                const TileCorners tc = tile_corners(mw.wall, c.cross->tile);
                if (path_start(mw.g, c.cross->p1) != tc.tl || path_end(mw.g, c.cross->p1) != tc.br ||
                    path_start(mw.g, c.cross->p2) != tc.tr || path_end(mw.g, c.cross->p2) != tc.bl)
                    err = "endpoints off the tile corners";
            }
            if (!err.empty()) {
                ++bad;
                if (firstError.empty()) firstError = to_string(r.tail) + ": " + err;
            }
        }
    }
    Outcome out;
    out.pass = bad == 0 && type0 > 0 && seqs > 0;
    out.detail = std::to_string(type0) + " type-0 jumps, " + std::to_string(seqs) + " saturated sequences, " +
                 std::to_string(bad) + " failures" + (firstError.empty() ? "" : " (" + firstError + ")") + "; " +
                 std::to_string(handedOff) + " sequences hand off to a border jump";
    return out;
}

// 5. Cross column to router.
Outcome criterion5() {
    Outcome out;
    for (int t = 2; t <= 3; ++t) {
        const auto t0 = Clock::now();
        CrossColumn cc = cross_column_config(t);
        Router r = router_from_cross_column(cc.g, cc.wall, cc.paths);
        const double s = seconds_since(t0);
        const std::string err = check_router(cc.g, r);
        const bool ok = err.empty() && verify_router(cc.g, r) && r.order() == t && s <= 30;
        out.pass = out.pass && ok;
        out.detail += "t=" + std::to_string(t) + " order " + std::to_string(r.order()) + (ok ? " ok " : " bad ") +
                      std::to_string(s) + " s" + (err.empty() ? "" : " (" + err + ")") + "; ";
    }
    return out;
}

// 6. Canonical swirl structure.
Outcome criterion6() {
    Outcome out;
    for (int t = 2; t <= 5; ++t) {
        WallGraph w = build_elementary_wall(t + 3);
        MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, up_path_matching(w.wall));
        CanonicalSwirl cs = canonical_swirl(mw, 2, 3, t);
        const RotationSystem rot = matched_rotation(mw);
        std::set<EdgeId> es;
        for (const Path& c : cs.induced.cycles) es.insert(c.edges.begin(), c.edges.end());
        int missing = 0;
        for (EdgeId e : tile_edges(mw, cs.inner)) missing += !es.count(e);
        const std::string sw = check_swirl(mw.g, cs.induced, rot);
        const std::string lg = check_line_graph_swirl(mw.g, cs.induced);
        const bool ok = sw.empty() && lg.empty() && missing == 0 && cs.induced.order() == t &&
                        verify_swirl(mw.g, cs.grasped, rot);
        out.pass = out.pass && ok;
        out.detail += "t=" + std::to_string(t) + (ok ? " ok" : " bad [" + sw + "|" + lg + "|missing " +
                                                            std::to_string(missing) + "]") + "; ";
    }
    return out;
}

// 7. Irrelevant router cycles on planted routers.
Outcome criterion7() {
    const auto t0 = Clock::now();
    int found = 0, wrong = 0, none = 0;
    for (int i = 0; i < 50; ++i) {
        PlantedRouter pr = planted_router_instance(5 + i % 4, i % 3, 7000 + i);
        const IrrelevantCycle ic = find_irrelevant_router_cycle(pr.inst, pr.router);
        if (ic.status != CycleStatus::Found) {
            ++none;
            continue;
        }
        const auto eq = equivalent(pr.inst, delete_cycle(pr.inst, ic.cycle));
        if (eq && *eq)
            ++found;
        else
            ++wrong;
    }
    const double s = seconds_since(t0);
    Outcome out;
    out.pass = found >= 45 && wrong == 0 && s <= 600;
    out.detail = std::to_string(found) + "/50 verified, " + std::to_string(none) + " no-candidate/unverified, " +
                 std::to_string(wrong) + " wrong, " + std::to_string(s) + " s";
    return out;
}

// 8. Verified pipeline on the fixture suite.
Outcome criterion8(const std::string& dir) {
    Outcome out;
    int files = 0, deletions = 0;
    std::vector<std::filesystem::path> paths;
    for (const auto& ent : std::filesystem::directory_iterator(dir))
        if (ent.path().extension() == ".eedp") paths.push_back(ent.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
        const Instance inst = read_instance_file(p.string());
        PipelineOptions opt;
        opt.verify = true;
        const PipelineResult r = reduce_pipeline(inst, opt);
        const OracleResult o = solve_exact(inst);
        std::string problem;
        if (!r.error.empty()) problem = r.error;
        if (o.verdict == Verdict::Timeout || r.timeout) problem = "oracle timeout";
        else if (r.answer != o.verdict) problem = "answer changed";
        Instance cur = inst;
        for (const ReductionStep& st : r.log) {
            Instance next = replay_log(cur, st.line());
            if (st.op.rfind("delete", 0) == 0) {
                ++deletions;
                if (size_of(next) >= size_of(cur)) problem = "deletion did not shrink";
            }
            cur = std::move(next);
        }
        ++files;
        if (!problem.empty()) {
            out.pass = false;
            out.detail += p.filename().string() + ": " + problem + "; ";
        }
    }
    out.pass = out.pass && files > 0;
    out.detail += std::to_string(files) + " fixtures, " + std::to_string(deletions) + " deletions";
    return out;
}

// 9. Exact sizes of grids and Eulerian walls plus matchings.
Outcome criterion9() {
    Outcome out;
    for (int k = 2; k <= 12; ++k) {
        Grid gr = build_elementary_grid(k);
        bool ok = gr.g.num_vertices() == 2 * k * k && static_cast<int>(gr.cycles.size()) == k;
        for (const Path& c : gr.cycles) ok = ok && static_cast<int>(c.edges.size()) == 2 * k;
        if (!ok) {
            out.pass = false;
            out.detail += "grid k=" + std::to_string(k) + " wrong; ";
        }
    }
    for (int k = 2; k <= 6; ++k) {
        WallGraph w = build_elementary_wall(k);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const CoordinateMatching m = random_matching(w.wall, seed, 0.5, 0.2, 0.2);
            MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, m);
            if (!m.complete(w.wall) || !is_eulerian(mw.g)) {
                out.pass = false;
                out.detail += "wall k=" + std::to_string(k) + " seed " + std::to_string(seed) + " not Eulerian; ";
            }
        }
    }
    if (out.pass) out.detail = "grids k=2..12 exact, walls k=2..6 Eulerian";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string fixtures = argc > 1 ? argv[1] : EEDP_FIXTURES;
    const std::vector<std::function<Outcome()>> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, [&] { return criterion8(fixtures); }, criterion9};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::printf("criterion %zu: %s - %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
