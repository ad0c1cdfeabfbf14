// Text format:
//   eedp 1
//   v <n>            vertices 0..n-1
//   e <tail> <head>  supply edge; order of e lines defines edge ids
//   d <t> <s>        demand edge (t,s): a path s -> t is requested
// '#' starts a comment.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "eedp/graph.hpp"

namespace eedp {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class NotEulerianError : public std::runtime_error {
public:
    explicit NotEulerianError(VertexId v)
        : std::runtime_error("supply+demands not Eulerian at vertex " + std::to_string(v)),
          vertex_(v) {}
    VertexId vertex() const { return vertex_; }

private:
    VertexId vertex_;
};

Instance parse_instance(const std::string& text, bool allowNonEulerian = false);
Instance read_instance_file(const std::string& path, bool allowNonEulerian = false);
// Vertices and edges are renumbered densely in id order.
std::string serialize_instance(const Instance& inst);

std::uint64_t fnv1a(const std::string& s);
std::string hex64(std::uint64_t h);

struct DotStyle {
    std::map<VertexId, std::string> vertexLabels;
    std::map<EdgeId, std::string> edgeColors;
    std::string name = "G";
};
std::string to_dot(const IncidenceDigraph& g, const DotStyle& style = {});
std::string to_dot(const Instance& inst);

}  // namespace eedp
