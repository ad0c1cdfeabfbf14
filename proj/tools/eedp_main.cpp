#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eedp/analyze.hpp"
#include "eedp/generators.hpp"
#include "eedp/io.hpp"
#include "eedp/normalize.hpp"
#include "eedp/oracle.hpp"
#include "eedp/reducer.hpp"
#include "eedp/twostar.hpp"

using namespace eedp;

namespace {

constexpr int kExitError = 1;
constexpr int kExitTimeout = 3;

struct Globals {
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 1;
    bool allowNonEuler = false;
    bool verify = false;
    std::string format = "text";
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void kv(const std::string& k, const std::string& v) { std::cout << k << ": " << v << "\n"; }
void kv(const std::string& k, long v) { kv(k, std::to_string(v)); }

std::string edges_of(const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.edges.size(); ++i) s += (i ? " " : "") + std::to_string(p.edges[i]);
    return s.empty() ? "-" : s;
}

void print_linkage(const Linkage& l) {
    for (std::size_t i = 0; i < l.paths.size(); ++i) kv("path " + std::to_string(i), edges_of(l.paths[i]));
}

int verdict_exit(Verdict v) { return v == Verdict::Timeout ? kExitTimeout : 0; }

// Two-star view of an instance: one vertex lies on every demand edge.
std::optional<TwoStarDemand> as_two_star(const Instance& inst) {
    if (inst.demands.empty()) return std::nullopt;
    for (VertexId c : {inst.demands.front().t, inst.demands.front().s}) {
        TwoStarDemand d;
        d.center = c;
        bool ok = true;
        for (const Demand& dm : inst.demands) {
            if (dm.t == c && dm.s != c)
                d.sources.push_back(dm.s);
            else if (dm.s == c && dm.t != c)
                d.sinks.push_back(dm.t);
            else
                ok = false;
        }
        if (ok && d.sources.size() == d.sinks.size()) return d;
    }
    return std::nullopt;
}

std::string with_wall_header(const std::string& text, int nc, int nh) {
    const auto nl = text.find('\n');
    return text.substr(0, nl + 1) + "# wall " + std::to_string(nc) + " " + std::to_string(nh) + "\n" +
           text.substr(nl + 1);
}

void emit(const Globals& gl, const Instance& inst, const std::string& text) {
    if (gl.format == "dot")
        std::cout << to_dot(inst);
    else
        std::cout << text;
}

int cmd_check(const Globals& gl, const std::string& file) {
    const Instance inst = parse_instance(slurp(file), gl.allowNonEuler);
    kv("valid", "yes");
    kv("vertices", inst.supply.num_vertices());
    kv("edges", inst.supply.num_edges());
    kv("demands", static_cast<long>(inst.demands.size()));
    kv("eulerian", is_eulerian(inst) ? "yes" : "no");
    if (auto v = first_unbalanced(inst)) kv("unbalanced", *v);
    kv("normal", is_normal(inst) ? "yes" : "no");
    kv("two-star", as_two_star(inst) ? "yes" : "no");
    kv("fingerprint", hex64(fingerprint(inst)));
    return 0;
}

int cmd_solve(const Globals& gl, const std::string& file, const std::string& method) {
    const Instance inst = parse_instance(slurp(file), gl.allowNonEuler);
    kv("method", method);
    if (method == "oracle") {
        const OracleResult r = solve_exact(inst, gl.budget);
        kv("feasible", to_string(r.verdict));
        kv("nodes", static_cast<long>(r.nodes));
        if (r.linkage) print_linkage(*r.linkage);
        return verdict_exit(r.verdict);
    }
    if (method == "frank") {
        const auto d = as_two_star(inst);
        if (!d) throw std::invalid_argument("demands do not form a two-star");
        kv("center", d->center);
        const bool holds = cut_criterion_holds(inst.supply, *d);
        kv("cut-criterion", holds ? "holds" : "fails");
        kv("feasible", holds ? "yes" : "no");
        if (holds) {
            const TwoStarResult r = solve_two_star(inst.supply, *d, false, gl.budget);
            if (r.linkage) print_linkage(*r.linkage);
        }
        return 0;
    }
    PipelineOptions opt;
    opt.budget = gl.budget;
    opt.verify = gl.verify;
    const PipelineResult r = reduce_pipeline(inst, opt);
    kv("steps", static_cast<long>(r.log.size()));
    kv("reduced-size", r.reduced.supply.num_vertices() + r.reduced.supply.num_edges());
    if (!r.error.empty()) {
        kv("error", r.error);
        return kExitError;
    }
    kv("feasible", to_string(r.answer));
    return r.timeout ? kExitTimeout : 0;
}

int cmd_analyze(const Globals&, const std::string& file, int nc, int nh) {
    const std::string text = slurp(file);
    if (nc <= 0 || nh <= 0) {
        const auto h = wall_header(text);
        if (!h) throw std::invalid_argument("no '# wall <nc> <nh>' line; pass --nc and --nh");
        nc = h->first;
        nh = h->second;
    }
    const Instance inst = parse_instance(text, true);
    const Wall wall = wall_in_host(inst.supply, nc, nh);
    const WallCensus c = analyze_wall(inst.supply, wall);
    kv("columns", nc);
    kv("rows", nh);
    kv("coordinates", c.coordinates);
    kv("matched", c.matched);
    kv("complete", c.complete ? "yes" : "no");
    kv("up-path", c.upPath);
    kv("type0", c.type0);
    kv("typeI", c.typeI);
    kv("typeII", c.typeII);
    kv("type0-in-margin", c.type0InMargin);
    kv("type0-crosses", c.type0Crosses);
    kv("saturated-sequences", c.saturated);
    kv("sequence-crosses", c.sequenceCrosses);
    kv("structure", c.structure);
    kv("detail", c.detail);
    return 0;
}

int cmd_reduce(const Globals& gl, const std::string& file, const std::string& logOut, const std::string& replay) {
    const Instance inst = parse_instance(slurp(file), gl.allowNonEuler);
    if (!replay.empty()) {
        const Instance out = replay_log(inst, slurp(replay));
        kv("replayed", "yes");
        kv("size", out.supply.num_vertices() + out.supply.num_edges());
        kv("fingerprint", hex64(fingerprint(out)));
        return 0;
    }
    PipelineOptions opt;
    opt.budget = gl.budget;
    opt.verify = gl.verify;
    const PipelineResult r = reduce_pipeline(inst, opt);
    for (const ReductionStep& s : r.log) kv("step", s.line());
    kv("size-before", inst.supply.num_vertices() + inst.supply.num_edges());
    kv("size-after", r.reduced.supply.num_vertices() + r.reduced.supply.num_edges());
    kv("fingerprint", hex64(fingerprint(r.reduced)));
    if (!logOut.empty()) std::ofstream(logOut) << format_log(r.log);
    if (!r.error.empty()) {
        kv("error", r.error);
        return kExitError;
    }
    kv("feasible", to_string(r.answer));
    return r.timeout ? kExitTimeout : 0;
}

struct GenParams {
    std::string kind;
    int k = 4, h = 2, p = 2, n = 8, r = 3, t = 3, order = 5;
    bool matched = false;
};

int cmd_gen(const Globals& gl, const GenParams& gp) {
    if (gp.kind == "grid") {
        Grid gr = build_elementary_grid(gp.k);
        Instance inst{gr.g, {}};
        emit(gl, inst, serialize_instance(inst));
    } else if (gp.kind == "wall") {
        if (gp.matched) {
            WallGraph w = build_elementary_wall(gp.k);
            MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, random_matching(w.wall, gl.seed, 0.6, 0.1, 0.1));
            Instance inst{mw.g, {}};
            emit(gl, inst, with_wall_header(serialize_instance(inst), mw.wall.nc, mw.wall.nh));
        } else {
            WallHost h = random_wall_host(gp.k, gl.seed);
            Instance inst{h.g, {}};
            emit(gl, inst, with_wall_header(serialize_instance(inst), h.wall.nc, h.wall.nh));
        }
    } else if (gp.kind == "swirl") {
        WallGraph w = build_elementary_wall(gp.t + 2);
        MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, up_path_matching(w.wall));
        Instance inst{mw.g, {}};
        emit(gl, inst, with_wall_header(serialize_instance(inst), mw.wall.nc, mw.wall.nh));
    } else if (gp.kind == "flower") {
        Flower f = flower_graph(gp.h, gp.p, gl.seed);
        emit(gl, f.inst, serialize_instance(f.inst));
    } else if (gp.kind == "randomEuler") {
        Rng rng(gl.seed);
        Instance inst{random_eulerian(gp.n, gp.r, rng), {}};
        emit(gl, inst, serialize_instance(inst));
    } else if (gp.kind == "router") {
        PlantedRouter pr = planted_router_instance(gp.order, gp.p, gl.seed);
        emit(gl, pr.inst, serialize_instance(pr.inst));
    } else {
        throw std::invalid_argument("unknown generator '" + gp.kind + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eulerian edge-disjoint paths toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    if (const char* env = std::getenv("EEDP_BUDGET")) gl.budget = std::strtoull(env, nullptr, 10);
    app.add_option("--budget", gl.budget, "oracle node budget (default from EEDP_BUDGET)");
    app.add_option("--seed", gl.seed, "generator seed");
    app.add_flag("--allow-noneuler", gl.allowNonEuler, "accept non-Eulerian instances");
    app.add_flag("--verify", gl.verify, "oracle-check every reduction step");
    app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"text", "dot"}));

    std::string file, method = "oracle", logOut, replay;
    int nc = 0, nh = 0;
    bool wallFlag = false;
    GenParams gp;

    auto* check = app.add_subcommand("check", "validate an instance file");
    check->add_option("file", file)->required();
    auto* solve = app.add_subcommand("solve", "decide feasibility");
    solve->add_option("file", file)->required();
    solve->add_option("--method", method)->check(CLI::IsMember({"oracle", "frank", "pipeline"}));
    auto* analyze = app.add_subcommand("analyze", "jump census of a wall host");
    analyze->add_option("file", file)->required();
    analyze->add_flag("--wall", wallFlag, "treat the file as a wall host");
    analyze->add_option("--nc", nc, "wall columns");
    analyze->add_option("--nh", nh, "wall rows");
    auto* reduce = app.add_subcommand("reduce", "run the reduction pipeline and print its log");
    reduce->add_option("file", file)->required();
    reduce->add_option("--log-out", logOut, "write the log to this file");
    reduce->add_option("--replay", replay, "replay a log instead of reducing");
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("kind", gp.kind)->required()->check(
        CLI::IsMember({"grid", "wall", "swirl", "flower", "randomEuler", "router"}));
    gen->add_option("-k", gp.k, "grid/wall order");
    gen->add_option("--height", gp.h, "flower height");
    gen->add_option("-p", gp.p, "number of demands");
    gen->add_option("-n", gp.n, "vertices");
    gen->add_option("-r", gp.r, "random cycles");
    gen->add_option("-t", gp.t, "swirl order");
    gen->add_option("--order", gp.order, "router order");
    gen->add_flag("--matched", gp.matched, "wall plus a random coordinate matching");
    auto* dot = app.add_subcommand("export-dot", "print the instance as a DOT digraph");
    dot->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*check) return cmd_check(gl, file);
        if (*solve) return cmd_solve(gl, file, method);
        if (*analyze) {
            if (!wallFlag) throw std::invalid_argument("analyze needs --wall");
            return cmd_analyze(gl, file, nc, nh);
        }
        if (*reduce) return cmd_reduce(gl, file, logOut, replay);
        if (*gen) return cmd_gen(gl, gp);
        if (*dot) {
            std::cout << to_dot(parse_instance(slurp(file), gl.allowNonEuler));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const NotEulerianError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
