#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eedp/analyze.hpp"
#include "eedp/generators.hpp"
#include "eedp/io.hpp"
#include "eedp/normalize.hpp"
#include "eedp/oracle.hpp"
#include "eedp/reducer.hpp"
#include "eedp/router.hpp"
#include "eedp/swirl.hpp"
#include "eedp/twostar.hpp"

namespace py = pybind11;
using namespace eedp;

namespace {

std::vector<std::vector<EdgeId>> path_edges(const std::vector<Path>& ps) {
    std::vector<std::vector<EdgeId>> out;
    for (const Path& p : ps) out.push_back(p.edges);
    return out;
}

Router router_of(const Instance& inst, const std::vector<std::vector<EdgeId>>& cycles) {
    Router r;
    for (const auto& es : cycles) {
        Path p;
        p.edges = es;
        p.cycle = true;
        if (!es.empty()) p.origin = inst.supply.tail(es.front());
        r.cycles.push_back(std::move(p));
    }
    return r;
}

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

}  // namespace

PYBIND11_MODULE(_eedp, m) {
    m.doc() = "Eulerian edge-disjoint paths: oracle, two-star solver, reductions and structures";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotEulerianError>(m, "NotEulerianError", PyExc_ValueError);

    py::class_<Instance>(m, "Instance")
        .def_static("parse", &parse_instance, py::arg("text"), py::arg("allow_noneuler") = false)
        .def("serialize", &serialize_instance)
        .def_property_readonly("num_vertices", [](const Instance& i) { return i.supply.num_vertices(); })
        .def_property_readonly("num_edges", [](const Instance& i) { return i.supply.num_edges(); })
        .def_property_readonly("edges",
                               [](const Instance& i) {
                                   std::vector<std::tuple<EdgeId, VertexId, VertexId>> out;
                                   for (EdgeId e : i.supply.edges())
                                       out.emplace_back(e, i.supply.tail(e), i.supply.head(e));
                                   return out;
                               })
        .def_property_readonly("demands",
                               [](const Instance& i) {
                                   std::vector<std::pair<VertexId, VertexId>> out;
                                   for (const Demand& d : i.demands) out.emplace_back(d.t, d.s);
                                   return out;
                               })
        .def("is_eulerian", [](const Instance& i) { return is_eulerian(i); })
        .def("is_normal", &is_normal)
        .def("fingerprint", [](const Instance& i) { return hex64(fingerprint(i)); })
        .def("to_dot", [](const Instance& i) { return to_dot(i); });

    m.def("solve", [](const Instance& inst, std::uint64_t budget) {
        const OracleResult r = solve_exact(inst, budget);
        py::dict d;
        d["verdict"] = to_string(r.verdict);
        d["nodes"] = r.nodes;
        d["paths"] = r.linkage ? py::cast(path_edges(r.linkage->paths)) : py::none();
        return d;
    }, py::arg("inst"), py::arg("budget") = kDefaultBudget);

    m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultBudget);

    m.def("two_star_feasible", [](const Instance& inst) {
        const auto d = as_two_star(inst);
        if (!d) throw std::invalid_argument("demands do not form a two-star");
        return cut_criterion_holds(inst.supply, *d);
    });

    m.def("normalize", &normalize_degrees);
    m.def("find_small_cut", [](const Instance& inst) -> std::optional<std::pair<int, std::vector<VertexId>>> {
        if (auto c = find_small_cut(inst)) return std::make_pair(c->kind, c->X);
        return std::nullopt;
    });
    m.def("reduce_two_cut", &reduce_two_cut);
    m.def("reduce_four_cut", &reduce_four_cut);

    m.def("reduce", [](const Instance& inst, bool verify, std::uint64_t budget) {
        PipelineOptions opt;
        opt.verify = verify;
        opt.budget = budget;
        const PipelineResult r = reduce_pipeline(inst, opt);
        py::dict d;
        d["reduced"] = r.reduced;
        d["log"] = format_log(r.log);
        d["answer"] = to_string(r.answer);
        d["timeout"] = r.timeout;
        d["error"] = r.error;
        return d;
    }, py::arg("inst"), py::arg("verify") = false, py::arg("budget") = kDefaultBudget);
    m.def("replay", &replay_log);

    m.def("irrelevant_cycle", [](const Instance& inst, const std::vector<std::vector<EdgeId>>& cycles) {
        const IrrelevantCycle ic = find_irrelevant_router_cycle(inst, router_of(inst, cycles));
        py::dict d;
        d["status"] = to_string(ic.status);
        d["index"] = ic.index;
        d["cycle"] = ic.cycle.edges;
        d["note"] = ic.note;
        return d;
    });
    m.def("find_router", [](const Instance& inst) { return path_edges(find_router(inst.supply).cycles); });
    m.def("delete_cycle", [](const Instance& inst, const std::vector<EdgeId>& edges) {
        return delete_cycle(inst, router_of(inst, {edges}).cycles.front());
    });

    m.def("random_instance", [](int n, int edges, int p, std::uint64_t seed) {
        Rng rng(seed);
        return random_instance(n, edges, p, rng);
    });
    m.def("flower", [](int h, int p, std::uint64_t seed) {
        Flower f = flower_graph(h, p, seed);
        if (auto err = check_flower(f); !err.empty()) throw std::logic_error(err);
        return std::make_pair(f.inst, path_edges(f.cycles));
    });
    m.def("planted_router", [](int order, int p, std::uint64_t seed) {
        PlantedRouter pr = planted_router_instance(order, p, seed);
        return std::make_pair(pr.inst, path_edges(pr.router.cycles));
    });

    m.def("cross_column_router", [](int t) {
        CrossColumn cc = cross_column_config(t);
        Router r = router_from_cross_column(cc.g, cc.wall, cc.paths);
        py::dict d;
        d["order"] = r.order();
        d["valid"] = verify_router(cc.g, r);
        d["cycles"] = path_edges(r.cycles);
        return d;
    });

    m.def("canonical_swirl", [](int t) {
        WallGraph w = build_elementary_wall(t + 3);
        MatchedWall mw = build_matched_wall(w.wall.nc, w.wall.nh, up_path_matching(w.wall));
        CanonicalSwirl cs = canonical_swirl(mw, 2, 3, t);
        const RotationSystem rot = matched_rotation(mw);
        py::dict d;
        d["order"] = cs.induced.order();
        d["valid"] = verify_swirl(mw.g, cs.induced, rot);
        d["line_graph"] = check_line_graph_swirl(mw.g, cs.induced).empty();
        d["orientation"] = cs.induced.orientation;
        return d;
    });

    m.def("wall_census", [](const std::string& text, int nc, int nh) {
        if (nc <= 0 || nh <= 0) {
            const auto h = wall_header(text);
            if (!h) throw std::invalid_argument("no '# wall <nc> <nh>' line");
            nc = h->first;
            nh = h->second;
        }
        const Instance inst = parse_instance(text, true);
        const WallCensus c = analyze_wall(inst.supply, wall_in_host(inst.supply, nc, nh));
        py::dict d;
        d["complete"] = c.complete;
        d["up_path"] = c.upPath;
        d["type0"] = c.type0;
        d["typeI"] = c.typeI;
        d["typeII"] = c.typeII;
        d["type0_crosses"] = c.type0Crosses;
        d["sequence_crosses"] = c.sequenceCrosses;
        d["structure"] = c.structure;
        return d;
    }, py::arg("text"), py::arg("nc") = 0, py::arg("nh") = 0);
}
